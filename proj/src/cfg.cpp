#include "fldt/cfg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace fldt {

int Cfg::add_nonterminal(const std::string& name) {
    for (std::size_t i = 0; i < nonterminals.size(); ++i)
        if (nonterminals[i] == name) return static_cast<int>(i);
    nonterminals.push_back(name);
    return static_cast<int>(nonterminals.size()) - 1;
}

int Cfg::nonterminal_id(const std::string& name) const {
    for (std::size_t i = 0; i < nonterminals.size(); ++i)
        if (nonterminals[i] == name) return static_cast<int>(i);
    throw ParseError("unknown nonterminal: " + name);
}

void Cfg::add(int lhs, std::vector<RhsItem> rhs) {
    productions.push_back({lhs, std::move(rhs)});
}

void Cfg::recompute_linear() {
    linear = true;
    for (const Production& p : productions) {
        int nts = 0;
        for (const RhsItem& it : p.rhs)
            if (!it.terminal) ++nts;
        if (nts > 1) linear = false;
    }
}

void Cfg::validate() const {
    auto nt_ok = [&](int i) {
        return i >= 0 && i < static_cast<int>(nonterminals.size());
    };
    if (!nt_ok(start)) throw ParseError("grammar start symbol undeclared");
    for (const Production& p : productions) {
        if (!nt_ok(p.lhs)) throw ParseError("production with undeclared lhs");
        for (const RhsItem& it : p.rhs) {
            if (it.terminal) {
                if (!terminals.contains(it.term))
                    throw ParseError("undeclared terminal: " + to_string(it.term));
            } else if (!nt_ok(it.nonterminal)) {
                throw ParseError("undeclared nonterminal on rhs");
            }
        }
    }
}

namespace {

std::vector<bool> productive_set(const Cfg& g) {
    std::vector<bool> prod(g.nonterminals.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions) {
            if (prod[p.lhs]) continue;
            bool all = true;
            for (const RhsItem& it : p.rhs)
                if (!it.terminal && !prod[it.nonterminal]) all = false;
            if (all) {
                prod[p.lhs] = true;
                changed = true;
            }
        }
    }
    return prod;
}

} // namespace

bool is_empty(const Cfg& g) { return !productive_set(g)[g.start]; }

std::optional<std::size_t> min_yield(const Cfg& g) {
    constexpr std::size_t INF = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(g.nonterminals.size(), INF);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions) {
            std::size_t total = 0;
            bool ok = true;
            for (const RhsItem& it : p.rhs) {
                if (it.terminal)
                    ++total;
                else if (best[it.nonterminal] == INF)
                    ok = false;
                else
                    total += best[it.nonterminal];
            }
            if (ok && total < best[p.lhs]) {
                best[p.lhs] = total;
                changed = true;
            }
        }
    }
    if (best[g.start] == INF) return std::nullopt;
    return best[g.start];
}

namespace {

/// Chomsky-like normal form: binary rules, terminal rules, nullable-start flag.
struct Cnf {
    int count = 0;
    int start = 0;
    bool nullable_start = false;
    std::vector<std::vector<std::pair<int, int>>> binary; // lhs -> (B, C)
    std::vector<std::vector<Symbol>> term;                // lhs -> a
};

Cnf to_cnf(const Cfg& g) {
    // Work representation: rhs of nonterminal ids, with terminals wrapped.
    struct WProd {
        int lhs;
        std::vector<int> rhs;
    };
    int count = static_cast<int>(g.nonterminals.size());
    auto fresh = [&]() { return count++; };
    std::map<Symbol, int> wrapper;
    std::vector<std::pair<int, Symbol>> term_rules;
    auto wrap = [&](Symbol s) {
        auto it = wrapper.find(s);
        if (it != wrapper.end()) return it->second;
        int id = fresh();
        wrapper.emplace(s, id);
        term_rules.emplace_back(id, s);
        return id;
    };

    std::vector<WProd> work;
    int start = fresh(); // fresh start, never on a rhs
    work.push_back({start, {g.start}});
    for (const Production& p : g.productions) {
        WProd wp{p.lhs, {}};
        if (p.rhs.size() == 1 && p.rhs[0].terminal) {
            term_rules.emplace_back(p.lhs, p.rhs[0].term);
            continue;
        }
        for (const RhsItem& it : p.rhs)
            wp.rhs.push_back(it.terminal ? wrap(it.term) : it.nonterminal);
        work.push_back(std::move(wp));
    }

    // BIN: split rhs longer than 2.
    std::vector<WProd> bin;
    for (WProd& wp : work) {
        while (wp.rhs.size() > 2) {
            int id = fresh();
            std::vector<int> tail(wp.rhs.begin() + 1, wp.rhs.end());
            bin.push_back({wp.lhs, {wp.rhs[0], id}});
            wp.lhs = id;
            wp.rhs = std::move(tail);
        }
        bin.push_back(wp);
    }

    // DEL: nullable closure, then expand optional occurrences.
    std::vector<bool> nullable(static_cast<std::size_t>(count), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const WProd& wp : bin) {
            if (nullable[wp.lhs]) continue;
            bool all = true;
            for (int r : wp.rhs)
                if (!nullable[r]) all = false;
            if (all) {
                nullable[wp.lhs] = true;
                changed = true;
            }
        }
    }
    std::set<std::pair<int, std::pair<int, int>>> bins; // lhs -> (B, C)
    std::set<std::pair<int, int>> units;                // lhs -> B
    for (const WProd& wp : bin) {
        if (wp.rhs.size() == 2) {
            bins.insert({wp.lhs, {wp.rhs[0], wp.rhs[1]}});
            if (nullable[wp.rhs[0]]) units.insert({wp.lhs, wp.rhs[1]});
            if (nullable[wp.rhs[1]]) units.insert({wp.lhs, wp.rhs[0]});
        } else if (wp.rhs.size() == 1) {
            units.insert({wp.lhs, wp.rhs[0]});
        }
    }

    // UNIT: transitive closure over unit pairs.
    std::vector<std::set<int>> ureach(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) ureach[static_cast<std::size_t>(i)].insert(i);
    changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : units)
            for (int i = 0; i < count; ++i)
                if (ureach[static_cast<std::size_t>(i)].count(a))
                    for (int c : ureach[static_cast<std::size_t>(b)])
                        if (ureach[static_cast<std::size_t>(i)].insert(c).second)
                            changed = true;
    }

    Cnf cnf;
    cnf.count = count;
    cnf.start = start;
    cnf.nullable_start = nullable[start];
    cnf.binary.resize(static_cast<std::size_t>(count));
    cnf.term.resize(static_cast<std::size_t>(count));
    for (int a = 0; a < count; ++a) {
        for (int b : ureach[static_cast<std::size_t>(a)]) {
            for (auto& [lhs, rhs] : bins)
                if (lhs == b)
                    cnf.binary[static_cast<std::size_t>(a)].push_back(rhs);
            for (auto& [lhs, s] : term_rules)
                if (lhs == b)
                    cnf.term[static_cast<std::size_t>(a)].push_back(s);
        }
    }
    return cnf;
}

} // namespace

bool membership(const Cfg& g, const Word& w) {
    for (const Symbol& s : w)
        if (!g.terminals.contains(s)) return false;
    Cnf cnf = to_cnf(g);
    if (w.empty()) return cnf.nullable_start;
    const std::size_t n = w.size();
    // dp[l][i]: nonterminals deriving w[i..i+l).
    std::vector<std::vector<std::vector<bool>>> dp(
        n + 1, std::vector<std::vector<bool>>(
                   n, std::vector<bool>(static_cast<std::size_t>(cnf.count), false)));
    for (std::size_t i = 0; i < n; ++i)
        for (int a = 0; a < cnf.count; ++a)
            for (const Symbol& s : cnf.term[static_cast<std::size_t>(a)])
                if (s == w[i]) dp[1][i][static_cast<std::size_t>(a)] = true;
    for (std::size_t l = 2; l <= n; ++l)
        for (std::size_t i = 0; i + l <= n; ++i)
            for (int a = 0; a < cnf.count; ++a) {
                for (auto [b, c] : cnf.binary[static_cast<std::size_t>(a)]) {
                    bool hit = false;
                    for (std::size_t k = 1; k < l && !hit; ++k)
                        if (dp[k][i][static_cast<std::size_t>(b)] &&
                            dp[l - k][i + k][static_cast<std::size_t>(c)])
                            hit = true;
                    if (hit) {
                        dp[l][i][static_cast<std::size_t>(a)] = true;
                        break;
                    }
                }
            }
    return dp[n][0][static_cast<std::size_t>(cnf.start)];
}

std::vector<Word> enumerate(const Cfg& g, std::size_t maxlen, std::size_t cap) {
    if (maxlen > cap)
        throw CapacityError("enumerate: maxlen " + std::to_string(maxlen) +
                            " exceeds cap " + std::to_string(cap));
    Cfg t = trim(g);
    if (t.productions.empty() && !membership(g, {}))
        return {};
    Cnf cnf = to_cnf(t);
    // words[a][l]: all words of length l derivable from a.
    std::vector<std::vector<std::set<Word>>> words(
        static_cast<std::size_t>(cnf.count), std::vector<std::set<Word>>(maxlen + 1));
    for (int a = 0; a < cnf.count; ++a)
        for (const Symbol& s : cnf.term[static_cast<std::size_t>(a)])
            if (maxlen >= 1) words[static_cast<std::size_t>(a)][1].insert({s});
    for (std::size_t l = 2; l <= maxlen; ++l)
        for (int a = 0; a < cnf.count; ++a)
            for (auto [b, c] : cnf.binary[static_cast<std::size_t>(a)])
                for (std::size_t k = 1; k < l; ++k)
                    for (const Word& u : words[static_cast<std::size_t>(b)][k])
                        for (const Word& v :
                             words[static_cast<std::size_t>(c)][l - k])
                            words[static_cast<std::size_t>(a)][l].insert(
                                concat(u, v));
    std::vector<Word> out;
    if (cnf.nullable_start) out.push_back({});
    for (std::size_t l = 1; l <= maxlen; ++l) {
        std::vector<Word> layer(words[static_cast<std::size_t>(cnf.start)][l].begin(),
                                words[static_cast<std::size_t>(cnf.start)][l].end());
        std::sort(layer.begin(), layer.end(), [&](const Word& x, const Word& y) {
            return word_less(x, y, g.terminals);
        });
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Cfg trim(const Cfg& g) {
    std::vector<bool> prod = productive_set(g);
    // Reachability through productive productions only.
    std::vector<bool> reach(g.nonterminals.size(), false);
    reach[static_cast<std::size_t>(g.start)] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions) {
            if (!reach[static_cast<std::size_t>(p.lhs)]) continue;
            bool all = true;
            for (const RhsItem& it : p.rhs)
                if (!it.terminal && !prod[static_cast<std::size_t>(it.nonterminal)])
                    all = false;
            if (!all) continue;
            for (const RhsItem& it : p.rhs)
                if (!it.terminal &&
                    !reach[static_cast<std::size_t>(it.nonterminal)]) {
                    reach[static_cast<std::size_t>(it.nonterminal)] = true;
                    changed = true;
                }
        }
    }
    Cfg out;
    out.terminals = g.terminals;
    std::vector<int> remap(g.nonterminals.size(), -1);
    for (std::size_t i = 0; i < g.nonterminals.size(); ++i)
        if (reach[i] && prod[i])
            remap[i] = out.add_nonterminal(g.nonterminals[i]);
    if (remap[static_cast<std::size_t>(g.start)] < 0) {
        // Empty language: keep a bare start with no productions.
        out.start = out.add_nonterminal(g.nonterminals[static_cast<std::size_t>(g.start)]);
        out.recompute_linear();
        return out;
    }
    out.start = remap[static_cast<std::size_t>(g.start)];
    for (const Production& p : g.productions) {
        if (remap[static_cast<std::size_t>(p.lhs)] < 0) continue;
        std::vector<RhsItem> rhs;
        bool ok = true;
        for (const RhsItem& it : p.rhs) {
            if (it.terminal) {
                rhs.push_back(it);
            } else if (remap[static_cast<std::size_t>(it.nonterminal)] < 0) {
                ok = false;
                break;
            } else {
                rhs.push_back(RhsItem::nt(remap[static_cast<std::size_t>(it.nonterminal)]));
            }
        }
        if (ok) out.add(remap[static_cast<std::size_t>(p.lhs)], std::move(rhs));
    }
    out.recompute_linear();
    return out;
}

std::optional<Word> shortest_word(const Cfg& g) {
    auto len = min_yield(g);
    if (!len) return std::nullopt;
    std::vector<Word> all = enumerate(g, *len, std::max<std::size_t>(*len, 16));
    std::optional<Word> best;
    for (const Word& w : all)
        if (w.size() == *len && (!best || word_less(w, *best, g.terminals)))
            best = w;
    return best;
}

Cfg intersect_regular(const Cfg& g, const Nfa& a) {
    Nfa e = eps_free(a);
    // Binarize rhs by chaining; keeps at-most-one-nonterminal linearity.
    Cfg b = g;
    b.productions.clear();
    for (const Production& p : g.productions) {
        std::vector<RhsItem> rhs = p.rhs;
        int lhs = p.lhs;
        while (rhs.size() > 2) {
            int chain = b.add_nonterminal(
                "B" + std::to_string(b.nonterminals.size()));
            b.add(lhs, {rhs[0], RhsItem::nt(chain)});
            rhs.erase(rhs.begin());
            lhs = chain;
        }
        b.add(lhs, std::move(rhs));
    }

    const int nq = e.state_count();
    auto has_trans = [&](int p, const Symbol& s, int q) {
        for (const Transition& t : e.transitions)
            if (t.from == p && t.to == q && t.sym == s) return true;
        return false;
    };

    Cfg out;
    out.terminals = g.terminals;
    std::map<std::tuple<int, int, int>, int> triple;
    auto tid = [&](int p, int x, int q) {
        auto [it, fresh] = triple.emplace(std::make_tuple(p, x, q), 0);
        if (fresh)
            it->second = out.add_nonterminal("T" + std::to_string(triple.size()));
        return it->second;
    };
    out.start = out.add_nonterminal("S0");
    for (int i : e.initial)
        for (int f : e.finals)
            out.add(out.start, {RhsItem::nt(tid(i, b.start, f))});

    for (const Production& p : b.productions) {
        if (p.rhs.empty()) {
            for (int q = 0; q < nq; ++q) out.add(tid(q, p.lhs, q), {});
        } else if (p.rhs.size() == 1) {
            const RhsItem& it = p.rhs[0];
            for (int q0 = 0; q0 < nq; ++q0)
                for (int q1 = 0; q1 < nq; ++q1) {
                    if (it.terminal) {
                        if (has_trans(q0, it.term, q1))
                            out.add(tid(q0, p.lhs, q1), {it});
                    } else {
                        out.add(tid(q0, p.lhs, q1),
                                {RhsItem::nt(tid(q0, it.nonterminal, q1))});
                    }
                }
        } else {
            for (int q0 = 0; q0 < nq; ++q0)
                for (int q1 = 0; q1 < nq; ++q1)
                    for (int qm = 0; qm < nq; ++qm) {
                        std::vector<RhsItem> rhs;
                        bool ok = true;
                        const int ends[3] = {q0, qm, q1};
                        for (int k = 0; k < 2 && ok; ++k) {
                            const RhsItem& it = p.rhs[static_cast<std::size_t>(k)];
                            if (it.terminal) {
                                if (has_trans(ends[k], it.term, ends[k + 1]))
                                    rhs.push_back(it);
                                else
                                    ok = false;
                            } else {
                                rhs.push_back(RhsItem::nt(
                                    tid(ends[k], it.nonterminal, ends[k + 1])));
                            }
                        }
                        if (ok) out.add(tid(q0, p.lhs, q1), std::move(rhs));
                    }
        }
    }
    Cfg trimmed = trim(out);
    trimmed.recompute_linear();
    return trimmed;
}

Cfg palindrome_grammar(const Alphabet& sigma, bool with_empty) {
    Cfg g;
    g.terminals = sigma;
    g.start = g.add_nonterminal("S");
    for (const Symbol& s : sigma)
        g.add(g.start, {RhsItem::t(s), RhsItem::nt(g.start), RhsItem::t(s)});
    if (with_empty) {
        g.add(g.start, {});
    } else {
        for (const Symbol& s : sigma) g.add(g.start, {RhsItem::t(s), RhsItem::t(s)});
    }
    g.recompute_linear();
    return g;
}

Cfg mirror_k_grammar(const Alphabet& sigma, std::size_t k) {
    if (k < 1) throw PreconditionError("mirror_k_grammar: k must be >= 1");
    Cfg g;
    g.terminals = sigma;
    g.start = g.add_nonterminal("S");
    int pal = g.add_nonterminal("P");
    for (const Symbol& s : sigma)
        g.add(pal, {RhsItem::t(s), RhsItem::nt(pal), RhsItem::t(s)});
    g.add(pal, {});
    std::vector<RhsItem> rhs(k, RhsItem::nt(pal));
    g.add(g.start, std::move(rhs));
    g.recompute_linear();
    return g;
}

Cfg mirror_star_grammar(const Alphabet& sigma) {
    Cfg g;
    g.terminals = sigma;
    g.start = g.add_nonterminal("S");
    int pal = g.add_nonterminal("P");
    for (const Symbol& s : sigma)
        g.add(pal, {RhsItem::t(s), RhsItem::nt(pal), RhsItem::t(s)});
    g.add(pal, {});
    g.add(g.start, {RhsItem::nt(pal), RhsItem::nt(g.start)});
    g.add(g.start, {RhsItem::nt(pal)});
    g.recompute_linear();
    return g;
}

Cfg concat_regular_right(const Cfg& g, const Nfa& tail) {
    Nfa e = eps_free(tail);
    Cfg out = g;
    std::vector<int> cq(static_cast<std::size_t>(e.state_count()));
    for (int q = 0; q < e.state_count(); ++q)
        cq[static_cast<std::size_t>(q)] =
            out.add_nonterminal("C" + std::to_string(q));
    // C_q derives (G word)(path word) for every initial->q path.
    for (const Transition& t : e.transitions)
        out.add(cq[static_cast<std::size_t>(t.to)],
                {RhsItem::nt(cq[static_cast<std::size_t>(t.from)]),
                 RhsItem::t(t.sym)});
    for (int i : e.initial)
        out.add(cq[static_cast<std::size_t>(i)], {RhsItem::nt(g.start)});
    int start2 = out.add_nonterminal("S1");
    for (int f : e.finals)
        out.add(start2, {RhsItem::nt(cq[static_cast<std::size_t>(f)])});
    out.start = start2;
    out.terminals = g.terminals.merged(e.alphabet);
    out.recompute_linear();
    return out;
}

namespace {

bool is_nonterminal_token(const std::string& tok) {
    return !tok.empty() && tok[0] >= 'A' && tok[0] <= 'Z';
}

} // namespace

Cfg parse_cfg(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string start_name;
    struct RawAlt {
        std::string lhs;
        std::vector<std::string> toks;
    };
    std::vector<RawAlt> alts;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "start:") {
            if (toks.size() != 2) throw ParseError("start: expects one symbol");
            start_name = toks[1];
            continue;
        }
        if (toks.size() < 2 || toks[1] != "->")
            throw ParseError("expected 'LHS -> ...' in: " + line);
        if (!is_nonterminal_token(toks[0]))
            throw ParseError("production lhs must be a nonterminal: " + toks[0]);
        RawAlt cur{toks[0], {}};
        for (std::size_t i = 2; i < toks.size(); ++i) {
            if (toks[i] == "|") {
                alts.push_back(cur);
                cur.toks.clear();
            } else {
                cur.toks.push_back(toks[i]);
            }
        }
        alts.push_back(cur);
    }
    if (start_name.empty()) throw ParseError("missing start: line");

    Cfg g;
    for (const RawAlt& a : alts) g.add_nonterminal(a.lhs);
    std::vector<Symbol> terms;
    for (const RawAlt& a : alts)
        for (const std::string& t : a.toks)
            if (!is_nonterminal_token(t) && t != "_") {
                Symbol s = parse_symbol(t);
                if (std::find(terms.begin(), terms.end(), s) == terms.end())
                    terms.push_back(s);
            }
    g.terminals = Alphabet(std::move(terms));
    g.start = g.nonterminal_id(start_name);
    for (const RawAlt& a : alts) {
        std::vector<RhsItem> rhs;
        for (const std::string& t : a.toks) {
            if (t == "_") continue;
            if (is_nonterminal_token(t))
                rhs.push_back(RhsItem::nt(g.nonterminal_id(t)));
            else
                rhs.push_back(RhsItem::t(parse_symbol(t)));
        }
        g.add(g.nonterminal_id(a.lhs), std::move(rhs));
    }
    g.recompute_linear();
    g.validate();
    return g;
}

std::string to_string(const Cfg& g) {
    std::ostringstream os;
    os << "start: " << g.nonterminals[static_cast<std::size_t>(g.start)] << "\n";
    for (std::size_t n = 0; n < g.nonterminals.size(); ++n) {
        bool first = true;
        for (const Production& p : g.productions) {
            if (p.lhs != static_cast<int>(n)) continue;
            if (first)
                os << g.nonterminals[n] << " ->";
            else
                os << " |";
            if (p.rhs.empty()) os << " _";
            for (const RhsItem& it : p.rhs) {
                if (it.terminal)
                    os << ' ' << to_string(it.term);
                else
                    os << ' '
                       << g.nonterminals[static_cast<std::size_t>(it.nonterminal)];
            }
            first = false;
        }
        if (!first) os << '\n';
    }
    return os.str();
}

} // namespace fldt
