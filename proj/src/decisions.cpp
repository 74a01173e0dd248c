#include "fldt/decisions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace fldt {

namespace {

// reach[p][q]: q reachable from p by zero or more transitions.
std::vector<std::vector<bool>> reachability(const Nfa& a) {
    int n = a.state_count();
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n)));
    for (int p = 0; p < n; ++p) r[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = true;
    for (const Transition& t : a.transitions)
        r[static_cast<std::size_t>(t.from)][static_cast<std::size_t>(t.to)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int j = 0; j < n; ++j)
                    if (r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return r;
}

void keep_shorter(std::optional<Word>& best, const std::optional<Word>& cand,
                  const Alphabet& alphabet) {
    if (!cand) return;
    if (!best || word_less(*cand, *best, alphabet)) best = *cand;
}

} // namespace

DecisionReport has_power(const Nfa& r, int n, const Nfa& p, bool allow_empty) {
    if (n < 2) throw PreconditionError("has_power: n must be at least 2");
    if (r.alphabet != p.alphabet)
        throw PreconditionError("has_power: R and P must share their alphabet");
    Nfa er = eps_free(r);
    Nfa ep = eps_free(p);
    auto reach = reachability(er);

    std::optional<Word> best;
    // State sequence q0 -> m1 -> ... -> m_{n-1} -> f; one fragment per hop.
    std::vector<int> seq(static_cast<std::size_t>(n) + 1);
    auto try_seq = [&]() {
        Nfa c = fragment(er, seq[0], seq[1]);
        for (int k = 1; k < n; ++k)
            c = product(c, fragment(er, seq[static_cast<std::size_t>(k)],
                                    seq[static_cast<std::size_t>(k) + 1]),
                        ProductMode::intersect);
        c = product(c, ep, ProductMode::intersect);
        if (!allow_empty)
            c = product(c, sigma_plus(r.alphabet), ProductMode::intersect);
        keep_shorter(best, shortest_member(c), r.alphabet);
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            for (int f : er.finals) {
                if (!reach[static_cast<std::size_t>(seq[static_cast<std::size_t>(k - 1) + 1 - 1])]
                          [static_cast<std::size_t>(f)])
                    continue;
                seq[static_cast<std::size_t>(n)] = f;
                try_seq();
            }
            return;
        }
        for (int m = 0; m < er.state_count(); ++m) {
            if (!reach[static_cast<std::size_t>(seq[static_cast<std::size_t>(k) - 1])]
                      [static_cast<std::size_t>(m)])
                continue;
            seq[static_cast<std::size_t>(k)] = m;
            self(self, k + 1);
        }
    };
    for (int i : er.initial) {
        seq[0] = i;
        rec(rec, 1);
    }

    DecisionReport rep;
    rep.method = "fragment-product";
    if (best) {
        rep.answer = true;
        rep.witness = *best;
        rep.member = power(*best, static_cast<std::size_t>(n));
    }
    return rep;
}

DecisionReport has_square(const Nfa& r) {
    return has_power(r, 2, sigma_star(r.alphabet), false);
}

Nfa nth_root(const Nfa& r, int n, std::size_t state_cap) {
    if (n < 2) throw PreconditionError("nth_root: n must be at least 2");
    Nfa er = eps_free(r);
    const int q = er.state_count();
    Nfa out;
    out.alphabet = er.alphabet;

    // State = (guessed midpoints s_1..s_{n-1}, current track tuple p_1..p_n).
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, int> ids;
    std::deque<Key> work;
    auto intern = [&](Key k) {
        auto [it, fresh] = ids.emplace(std::move(k), static_cast<int>(ids.size()));
        if (fresh) {
            if (ids.size() > state_cap)
                throw CapacityError("nth_root: state cap " +
                                    std::to_string(state_cap) + " exceeded");
            work.push_back(it->first);
        }
        return it->second;
    };

    // Enumerate guess vectors; track i > 1 starts on guess s_{i-1}.
    std::vector<int> guess(static_cast<std::size_t>(n) - 1, 0);
    bool more = q > 0;
    while (more) {
        for (int q0 : er.initial) {
            std::vector<int> tuple;
            tuple.push_back(q0);
            tuple.insert(tuple.end(), guess.begin(), guess.end());
            out.initial.insert(intern({guess, tuple}));
        }
        int pos = static_cast<int>(guess.size()) - 1;
        while (pos >= 0 && guess[static_cast<std::size_t>(pos)] == q - 1)
            guess[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) more = false;
        else ++guess[static_cast<std::size_t>(pos)];
    }

    while (!work.empty()) {
        Key cur = work.front();
        work.pop_front();
        int id = ids.at(cur);
        const auto& [g, tuple] = cur;
        bool ok = er.finals.count(tuple.back()) > 0;
        for (std::size_t i = 0; ok && i + 1 < tuple.size(); ++i)
            ok = tuple[i] == g[i];
        if (ok) out.finals.insert(id);
        for (const Symbol& s : er.alphabet) {
            // All tracks advance on s; expand the nondeterministic choices.
            std::vector<std::vector<int>> succ(tuple.size());
            bool dead = false;
            for (std::size_t i = 0; i < tuple.size() && !dead; ++i) {
                for (const Transition& t : er.transitions)
                    if (t.from == tuple[i] && t.sym == s) succ[i].push_back(t.to);
                dead = succ[i].empty();
            }
            if (dead) continue;
            std::vector<std::size_t> pick(tuple.size(), 0);
            bool again = true;
            while (again) {
                std::vector<int> next(tuple.size());
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    next[i] = succ[i][pick[i]];
                out.transitions.push_back({id, s, intern({g, std::move(next)})});
                int pos = static_cast<int>(pick.size()) - 1;
                while (pos >= 0 &&
                       pick[static_cast<std::size_t>(pos)] + 1 ==
                           succ[static_cast<std::size_t>(pos)].size())
                    pick[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) again = false;
                else ++pick[static_cast<std::size_t>(pos)];
            }
        }
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        out.state_names.push_back("t" + std::to_string(i));
    if (out.state_names.empty()) out.state_names.push_back("t0");
    return out;
}

Nfa star_root(const Nfa& r, std::size_t monoid_cap) {
    Nfa d = determinize(r); // complete DFA, single initial state
    const int n = d.state_count();
    const int q0 = *d.initial.begin();
    using Fn = std::vector<int>; // state function of a word
    std::map<Symbol, Fn> letter;
    for (const Symbol& s : d.alphabet) letter[s] = Fn(static_cast<std::size_t>(n), -1);
    for (const Transition& t : d.transitions)
        letter[t.sym][static_cast<std::size_t>(t.from)] = t.to;

    auto compose = [&](const Fn& first, const Fn& then) {
        Fn out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] =
                then[static_cast<std::size_t>(first[static_cast<std::size_t>(i)])];
        return out;
    };
    // Some power m^k, k >= 2, takes the initial state into the finals.
    auto marked = [&](const Fn& m) {
        std::vector<Fn> seen;
        Fn cur = m;
        for (;;) {
            cur = compose(cur, m); // m^2, m^3, ...
            if (d.finals.count(cur[static_cast<std::size_t>(q0)])) return true;
            if (std::find(seen.begin(), seen.end(), cur) != seen.end())
                return false;
            seen.push_back(cur);
        }
    };

    Fn identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;

    Nfa out;
    out.alphabet = d.alphabet;
    std::map<Fn, int> ids;
    std::deque<Fn> work;
    auto intern = [&](Fn f) {
        auto [it, fresh] = ids.emplace(std::move(f), static_cast<int>(ids.size()));
        if (fresh) {
            if (ids.size() > monoid_cap)
                throw CapacityError("star_root: monoid cap " +
                                    std::to_string(monoid_cap) + " exceeded");
            work.push_back(it->first);
        }
        return it->second;
    };
    out.initial.insert(intern(identity));
    while (!work.empty()) {
        Fn cur = work.front();
        work.pop_front();
        int id = ids.at(cur);
        if (marked(cur)) out.finals.insert(id);
        for (const Symbol& s : d.alphabet)
            out.transitions.push_back({id, s, intern(compose(cur, letter[s]))});
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        out.state_names.push_back("m" + std::to_string(i));
    return out;
}

DecisionReport squares_subset(const Nfa& p, const Nfa& r) {
    if (r.alphabet != p.alphabet)
        throw PreconditionError("squares_subset: P and R must share their alphabet");
    DecisionReport inner = has_power(complement(r), 2, p, true);
    DecisionReport rep;
    rep.method = "complement-square";
    rep.answer = !inner.answer;
    if (inner.answer) {
        rep.witness = inner.witness;
        rep.member = inner.member; // the square that escapes R
    }
    return rep;
}

DecisionReport has_marked_copy(const Nfa& r, bool allow_empty) {
    if (!r.alphabet.closed_under_marking())
        throw PreconditionError("has_marked_copy: alphabet not closed under marking");
    Nfa a = eps_free(product(r, unmarked_then_marked(r.alphabet),
                             ProductMode::intersect));
    Nfa b = flip_marking(a);

    // Unmarked words only, over the full alphabet.
    Nfa unm;
    unm.alphabet = r.alphabet;
    unm.state_names = {"u0", "u1"};
    unm.initial = {0};
    unm.finals = {allow_empty ? 0 : 1};
    if (allow_empty) {
        for (const Symbol& s : r.alphabet)
            if (!s.marked) unm.transitions.push_back({0, s, 0});
    } else {
        for (const Symbol& s : r.alphabet)
            if (!s.marked) {
                unm.transitions.push_back({0, s, 1});
                unm.transitions.push_back({1, s, 1});
            }
    }

    std::optional<Word> best;
    for (int i : a.initial)
        for (int j = 0; j < a.state_count(); ++j)
            for (int f : b.finals) {
                Nfa c = product(fragment(a, i, j), fragment(b, j, f),
                                ProductMode::intersect);
                c = product(c, unm, ProductMode::intersect);
                keep_shorter(best, shortest_member(c), r.alphabet);
            }

    DecisionReport rep;
    rep.method = "boundary-fragments";
    if (best) {
        rep.answer = true;
        rep.witness = *best;
        rep.member = concat(*best, markall(*best));
    }
    return rep;
}

namespace {

// Pair automaton: state (p,q); reading a moves p forward and q backward, so
// a path from (p,q) to the diagonal spells a w with p -w-> r and r -w^r-> q.
struct PairWalk {
    const Nfa& a;
    explicit PairWalk(const Nfa& er) : a(er) {}

    // Shortest w taking (p,q) to the diagonal, or nullopt. When
    // allow_trivial is false the start pair itself does not count even if it
    // already lies on the diagonal, forcing a nonempty w.
    std::optional<Word> to_diagonal(int p, int q, bool allow_trivial = true) const {
        struct Node { int p, q, parent; Symbol via; };
        std::vector<Node> nodes;
        std::set<std::pair<int, int>> seen;
        nodes.push_back({p, q, -1, Symbol{}});
        if (allow_trivial) seen.insert({p, q});
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            Node cur = nodes[head];
            if (cur.p == cur.q && (head > 0 || allow_trivial)) {
                Word w;
                int at = static_cast<int>(head);
                while (nodes[static_cast<std::size_t>(at)].parent >= 0) {
                    w.push_back(nodes[static_cast<std::size_t>(at)].via);
                    at = nodes[static_cast<std::size_t>(at)].parent;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            for (const Symbol& s : a.alphabet)
                for (const Transition& tf : a.transitions) {
                    if (tf.from != cur.p || tf.sym != s) continue;
                    for (const Transition& tb : a.transitions) {
                        if (tb.to != cur.q || tb.sym != s) continue;
                        if (seen.insert({tf.to, tb.from}).second)
                            nodes.push_back({tf.to, tb.from,
                                             static_cast<int>(head), s});
                    }
                }
        }
        return std::nullopt;
    }
};

// Block relation S: (p,q) in S iff some w w^r path leads from p to q.
std::vector<std::vector<bool>> block_relation(const Nfa& er) {
    int n = er.state_count();
    PairWalk walk(er);
    std::vector<std::vector<bool>> s(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n)));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            s[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                walk.to_diagonal(p, q).has_value();
    return s;
}

std::vector<std::vector<bool>> compose_rel(const std::vector<std::vector<bool>>& x,
                                           const std::vector<std::vector<bool>>& y) {
    std::size_t n = x.size();
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (x[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (y[k][j]) out[i][j] = true;
    return out;
}

} // namespace

DecisionReport has_reverse_copy(const Nfa& r, bool allow_empty,
                                ReverseCopyMethod method) {
    DecisionReport rep;
    if (method == ReverseCopyMethod::grammar) {
        rep.method = "grammar-intersection";
        Alphabet sigma = r.alphabet;
        Cfg pal = palindrome_grammar(sigma, allow_empty);
        std::optional<Word> m = shortest_word(intersect_regular(pal, r));
        if (m) {
            rep.answer = true;
            rep.member = *m;
            rep.witness = Word(m->begin(), m->begin() + static_cast<long>(m->size() / 2));
        }
        return rep;
    }
    rep.method = "pair-relation";
    Nfa er = eps_free(r);
    PairWalk walk(er);
    std::optional<Word> best;
    for (int i : er.initial)
        for (int f : er.finals) {
            keep_shorter(best, walk.to_diagonal(i, f, allow_empty),
                         r.alphabet);
        }
    if (best) {
        rep.answer = true;
        rep.witness = *best;
        rep.member = concat(*best, reverse_word(*best));
    }
    return rep;
}

DecisionReport has_mirror_product(const Nfa& r, std::size_t k) {
    if (k == 0) throw PreconditionError("has_mirror_product: k must be positive");
    Nfa er = eps_free(r);
    auto s = block_relation(er);
    auto acc = s;
    for (std::size_t i = 1; i < k; ++i) acc = compose_rel(acc, s);

    DecisionReport rep;
    rep.method = "relation-power";
    for (int i : er.initial)
        for (int f : er.finals)
            if (acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)])
                rep.answer = true;
    if (rep.answer) {
        // Recover a member by stitching shortest per-block words along some
        // admissible chain of intermediate states.
        PairWalk walk(er);
        std::vector<std::vector<std::vector<bool>>> pow{s};
        for (std::size_t i = 1; i < k; ++i)
            pow.push_back(compose_rel(pow.back(), s));
        auto chain = [&](auto&& self, int at, std::size_t left,
                         Word& acc_w) -> bool {
            if (left == 0) return er.finals.count(at) > 0;
            for (int mid = 0; mid < er.state_count(); ++mid) {
                if (!s[static_cast<std::size_t>(at)][static_cast<std::size_t>(mid)])
                    continue;
                bool tail_ok = false;
                if (left == 1) {
                    tail_ok = er.finals.count(mid) > 0;
                } else {
                    for (int f : er.finals)
                        if (pow[left - 2][static_cast<std::size_t>(mid)]
                               [static_cast<std::size_t>(f)])
                            tail_ok = true;
                }
                if (!tail_ok) continue;
                std::optional<Word> w = walk.to_diagonal(at, mid);
                if (!w) continue;
                std::size_t mark = acc_w.size();
                Word block = concat(*w, reverse_word(*w));
                acc_w.insert(acc_w.end(), block.begin(), block.end());
                if (self(self, mid, left - 1, acc_w)) return true;
                acc_w.resize(mark);
            }
            return false;
        };
        for (int i : er.initial) {
            Word m;
            if (chain(chain, i, k, m)) {
                rep.member = m;
                rep.witness = m;
                break;
            }
        }
    }
    return rep;
}

DecisionReport has_mirror_star(const Nfa& r) {
    Nfa er = eps_free(r);
    auto s = block_relation(er);
    std::size_t n = s.size();
    // S is reflexive, so its transitive closure covers every k >= 1.
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            if (s[i][m])
                for (std::size_t j = 0; j < n; ++j)
                    if (s[m][j]) s[i][j] = true;

    DecisionReport rep;
    rep.method = "relation-closure";
    for (int i : er.initial)
        for (int f : er.finals)
            if (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)])
                rep.answer = true;
    if (rep.answer) {
        std::optional<Word> m =
            shortest_word(intersect_regular(mirror_star_grammar(r.alphabet), r));
        if (m) {
            rep.member = *m;
            rep.witness = *m;
        }
    }
    return rep;
}

} // namespace fldt
