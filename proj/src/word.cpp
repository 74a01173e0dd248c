#include "fldt/word.hpp"

#include <algorithm>
#include <set>

namespace fldt {

Symbol sym(char base, bool marked) { return Symbol{base, marked}; }

std::string to_string(const Symbol& s) {
    std::string out;
    if (s.marked) out.push_back('~');
    out.push_back(s.base);
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "_";
    std::string out;
    for (const Symbol& s : w) out += to_string(s);
    return out;
}

Symbol parse_symbol(std::string_view token) {
    if (token.size() == 1 && token[0] != '~' && token[0] != '_')
        return Symbol{token[0], false};
    if (token.size() == 2 && token[0] == '~')
        return Symbol{token[1], true};
    throw ParseError("bad symbol token: '" + std::string(token) + "'");
}

Word parse_word(std::string_view text) {
    if (text == "_") return {};
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '~') {
            if (i + 1 >= text.size())
                throw ParseError("dangling '~' in word: '" + std::string(text) + "'");
            w.push_back(Symbol{text[i + 1], true});
            ++i;
        } else if (text[i] == '_') {
            throw ParseError("'_' only denotes the empty word on its own");
        } else {
            w.push_back(Symbol{text[i], false});
        }
    }
    return w;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        for (std::size_t j = i + 1; j < symbols_.size(); ++j)
            if (symbols_[i] == symbols_[j])
                throw ParseError("duplicate symbol in alphabet: " +
                                 to_string(symbols_[i]));
}

bool Alphabet::contains(const Symbol& s) const {
    return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

std::optional<std::size_t> Alphabet::index_of(const Symbol& s) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

bool Alphabet::contains_word(const Word& w) const {
    return std::all_of(w.begin(), w.end(),
                       [&](const Symbol& s) { return contains(s); });
}

bool Alphabet::closed_under_marking() const {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [&](const Symbol& s) { return contains(s.flipped()); });
}

Alphabet Alphabet::unmarked_part() const {
    std::vector<Symbol> out;
    for (const Symbol& s : symbols_)
        if (!s.marked) out.push_back(s);
    return Alphabet(std::move(out));
}

Alphabet Alphabet::with_marked() const {
    std::vector<Symbol> out = symbols_;
    for (const Symbol& s : symbols_) {
        Symbol m{s.base, true};
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return Alphabet(std::move(out));
}

Alphabet Alphabet::merged(const Alphabet& other) const {
    std::vector<Symbol> out = symbols_;
    for (const Symbol& s : other.symbols_)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return Alphabet(std::move(out));
}

Alphabet parse_alphabet(std::string_view text) {
    std::vector<Symbol> syms;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') { ++i; continue; }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
        syms.push_back(parse_symbol(text.substr(i, j - i)));
        i = j;
    }
    return Alphabet(std::move(syms));
}

std::string to_string(const Alphabet& a) {
    std::string out;
    for (const Symbol& s : a) {
        if (!out.empty()) out.push_back(' ');
        out += to_string(s);
    }
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word markall(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Symbol& s : w) {
        if (s.marked)
            throw PreconditionError("markall expects an unmarked word, got " +
                                    to_string(w));
        out.push_back(Symbol{s.base, true});
    }
    return out;
}

Word markflip(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Symbol& s : w) out.push_back(s.flipped());
    return out;
}

Word power(const Word& w, std::size_t n) {
    Word out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i)
        out.insert(out.end(), w.begin(), w.end());
    return out;
}

bool is_primitive(const Word& w) {
    if (w.empty())
        throw PreconditionError("primitivity is undefined for the empty word");
    // w is primitive iff w occurs in ww only at offsets 0 and |w|.
    Word ww = concat(w, w);
    for (std::size_t off = 1; off < w.size(); ++off)
        if (std::equal(w.begin(), w.end(), ww.begin() + off)) return false;
    return true;
}

bool word_less(const Word& a, const Word& b, const Alphabet& alphabet) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        auto ia = alphabet.index_of(a[i]);
        auto ib = alphabet.index_of(b[i]);
        if (ia && ib) return *ia < *ib;
        return a[i] < b[i];
    }
    return false;
}

namespace {

void shuffle_rec(const Word& u, const Word& v, std::size_t i, std::size_t j,
                 Word& cur, std::set<Word>& out) {
    if (i == u.size() && j == v.size()) {
        out.insert(cur);
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, v, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, v, i, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Word> shuffle_set(const Word& u, const Word& v,
                              std::size_t limit_total) {
    if (u.size() + v.size() > limit_total)
        throw CapacityError("shuffle_set: |u|+|v| = " +
                            std::to_string(u.size() + v.size()) +
                            " exceeds limit " + std::to_string(limit_total));
    std::set<Word> out;
    Word cur;
    cur.reserve(u.size() + v.size());
    shuffle_rec(u, v, 0, 0, cur, out);
    return std::vector<Word>(out.begin(), out.end());
}

std::optional<ShuffleSplit> shuffle_membership(const Word& v, const Word& u1,
                                               const Word& u2) {
    if (v.size() != u1.size() + u2.size()) return std::nullopt;
    const std::size_t n1 = u1.size(), n2 = u2.size();
    // reach[i][j]: v[0..i+j) is an interleaving of u1[0..i) and u2[0..j).
    std::vector<std::vector<bool>> reach(n1 + 1, std::vector<bool>(n2 + 1, false));
    reach[0][0] = true;
    for (std::size_t i = 0; i <= n1; ++i)
        for (std::size_t j = 0; j <= n2; ++j) {
            if (!reach[i][j]) continue;
            std::size_t pos = i + j;
            if (i < n1 && v[pos] == u1[i]) reach[i + 1][j] = true;
            if (j < n2 && v[pos] == u2[j]) reach[i][j + 1] = true;
        }
    if (!reach[n1][n2]) return std::nullopt;
    // Walk back, preferring the u1 edge for a deterministic certificate.
    ShuffleSplit split;
    std::size_t i = n1, j = n2;
    while (i > 0 || j > 0) {
        if (i > 0 && reach[i - 1][j] && v[i + j - 1] == u1[i - 1]) {
            split.first_positions.push_back(i + j - 1);
            --i;
        } else {
            --j;
        }
    }
    std::reverse(split.first_positions.begin(), split.first_positions.end());
    return split;
}

namespace {

// Enumerates size-k position subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Word> self_shuffle_check(const Word& v, SelfShuffleMode mode) {
    if (mode == SelfShuffleMode::marked) {
        Word first, second;
        for (const Symbol& s : v)
            (s.marked ? second : first).push_back(Symbol{s.base, false});
        if (first.size() != second.size() || first != second)
            return std::nullopt;
        return first;
    }
    if (v.size() % 2 != 0) return std::nullopt;
    const std::size_t n = v.size() / 2;
    if (v.empty()) return Word{};
    if (v.size() > 24)
        throw CapacityError("self_shuffle_check: word too long for split search");
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = i;
    do {
        Word first, second;
        std::size_t ci = 0;
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            if (ci < n && comb[ci] == pos) {
                first.push_back(v[pos]);
                ++ci;
            } else {
                second.push_back(v[pos]);
            }
        }
        bool ok = (mode == SelfShuffleMode::plain)
                      ? second == first
                      : second == reverse_word(first);
        if (ok) return first;
    } while (next_combination(comb, v.size()));
    return std::nullopt;
}

} // namespace fldt
