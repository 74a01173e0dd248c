#include "fldt/oracle.hpp"

#include <algorithm>

namespace fldt {

std::vector<Word> enumerate_members(const LangHandle& lang, std::size_t maxlen) {
    if (const Nfa* a = std::get_if<Nfa>(&lang))
        return enumerate_nfa(*a, maxlen);
    return enumerate(std::get<Cfg>(lang), maxlen, std::max<std::size_t>(maxlen, 16));
}

namespace {

bool is_even_palindrome(const Word& m, std::size_t i, std::size_t j) {
    if ((j - i) % 2 != 0) return false;
    for (std::size_t k = 0; k < (j - i) / 2; ++k)
        if (m[i + k] != m[j - 1 - k]) return false;
    return true;
}

bool mirror_product_split(const Word& m, std::size_t k) {
    std::size_t n = m.size();
    std::vector<bool> cur(n + 1, false), next(n + 1, false);
    cur[0] = true;
    for (std::size_t b = 0; b < k; ++b) {
        std::fill(next.begin(), next.end(), false);
        for (std::size_t i = 0; i <= n; ++i) {
            if (!cur[i]) continue;
            for (std::size_t j = i; j <= n; ++j)
                if (is_even_palindrome(m, i, j)) next[j] = true;
        }
        cur.swap(next);
    }
    return cur[n];
}

} // namespace

bool word_has_form(const Word& m, const Form& form, Word* witness) {
    auto yield = [&](Word w) {
        if (witness) *witness = std::move(w);
        return true;
    };
    // The empty member only counts where empty factors are meaningful
    // (every word is a 0-letter palindrome / a product of empty blocks);
    // for the copy and shuffle forms the empty witness is degenerate.
    if (m.empty() && form.kind != FormKind::palindrome &&
        form.kind != FormKind::mirror_product)
        return false;
    switch (form.kind) {
        case FormKind::square: {
            if (m.size() % 2 != 0) return false;
            Word half(m.begin(), m.begin() + static_cast<long>(m.size() / 2));
            return power(half, 2) == m ? yield(half) : false;
        }
        case FormKind::power: {
            std::size_t n = static_cast<std::size_t>(form.param);
            if (n < 2) throw PreconditionError("power form needs n >= 2");
            if (m.size() % n != 0) return false;
            Word part(m.begin(), m.begin() + static_cast<long>(m.size() / n));
            return power(part, n) == m ? yield(part) : false;
        }
        case FormKind::marked_copy: {
            if (m.size() % 2 != 0) return false;
            Word half(m.begin(), m.begin() + static_cast<long>(m.size() / 2));
            for (const Symbol& s : half)
                if (s.marked) return false;
            Word rest(m.begin() + static_cast<long>(m.size() / 2), m.end());
            return rest == markall(half) ? yield(half) : false;
        }
        case FormKind::reverse_copy: {
            if (m.size() % 2 != 0) return false;
            Word half(m.begin(), m.begin() + static_cast<long>(m.size() / 2));
            Word rest(m.begin() + static_cast<long>(m.size() / 2), m.end());
            return rest == reverse_word(half) ? yield(half) : false;
        }
        case FormKind::mirror_product: {
            if (form.param < 1)
                throw PreconditionError("mirror_product form needs k >= 1");
            return mirror_product_split(m, static_cast<std::size_t>(form.param))
                       ? yield(m)
                       : false;
        }
        case FormKind::self_shuffle: {
            auto w = self_shuffle_check(m, SelfShuffleMode::plain);
            return w ? yield(*w) : false;
        }
        case FormKind::reverse_shuffle: {
            auto w = self_shuffle_check(m, SelfShuffleMode::reversed);
            return w ? yield(*w) : false;
        }
        case FormKind::marked_shuffle: {
            auto w = self_shuffle_check(m, SelfShuffleMode::marked);
            return w ? yield(*w) : false;
        }
        case FormKind::palindrome:
            return m == reverse_word(m) ? yield(m) : false;
    }
    return false;
}

ScanResult scan_for_form(const LangHandle& lang, const Form& form,
                         const SearchBudget& budget) {
    ScanResult res;
    std::vector<Word> members;
    bool exhausted = false;
    try {
        members = enumerate_members(lang, budget.max_word_len);
    } catch (const CapacityError&) {
        res.verdict = Verdict::unknown;
        return res;
    }
    if (members.size() > budget.max_candidates) {
        members.resize(budget.max_candidates);
        exhausted = true;
    }
    for (const Word& m : members) {
        Word w;
        bool hit = false;
        try {
            hit = word_has_form(m, form, &w);
        } catch (const CapacityError&) {
            exhausted = true; // candidate too large to test
            continue;
        }
        if (hit) {
            res.verdict = Verdict::yes;
            res.witness = w;
            res.member = m;
            return res;
        }
    }
    res.verdict = exhausted ? Verdict::unknown : Verdict::no_up_to_bound;
    return res;
}

} // namespace fldt
