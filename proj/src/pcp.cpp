#include "fldt/pcp.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace fldt {

namespace {

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word drop_prefix(const Word& w, std::size_t n) {
    return Word(w.begin() + static_cast<long>(n), w.end());
}

void require_disjoint(const PcpInstance& inst) {
    for (const Symbol& s : inst.g.domain)
        if (inst.g.codomain.contains(s))
            throw PreconditionError(
                "construction requires disjoint domain and codomain; both "
                "contain " + to_string(s));
}

void require_fresh(const PcpInstance& inst, Symbol s) {
    if (inst.g.domain.contains(s) || inst.g.codomain.contains(s))
        throw PreconditionError("reserved letter " + to_string(s) +
                                " occurs in the instance alphabets");
}

std::vector<RhsItem> items(std::initializer_list<std::vector<RhsItem>> parts) {
    std::vector<RhsItem> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<RhsItem> ts(const Word& w) {
    std::vector<RhsItem> out;
    for (const Symbol& s : w) out.push_back(RhsItem::t(s));
    return out;
}

std::vector<RhsItem> nt1(int id) { return {RhsItem::nt(id)}; }

} // namespace

std::optional<Word> solve_bounded(const PcpInstance& inst, std::size_t max_len) {
    inst.validate();
    if (!inst.g.nonerasing() || !inst.h.nonerasing())
        throw PreconditionError("solve_bounded: morphisms must be nonerasing");
    std::size_t maxim = 1;
    for (const Symbol& a : inst.g.domain) {
        maxim = std::max(maxim, inst.g.image(a).size());
        maxim = std::max(maxim, inst.h.image(a).size());
    }
    const std::size_t residue_cap = maxim * std::max<std::size_t>(max_len, 1);

    // Configuration: which side leads and by what residue. lead >= 0 means
    // g(w) = h(w) . residue, lead < 0 the mirror image.
    struct Node {
        int lead;
        Word residue;
        std::size_t depth;
        int parent;
        Symbol via;
    };
    std::vector<Node> nodes;
    std::set<std::pair<int, Word>> seen;
    nodes.push_back({0, {}, 0, -1, Symbol{}});
    seen.insert({0, Word{}});
    auto unwind = [&](int at, Symbol last) {
        Word w;
        while (nodes[static_cast<std::size_t>(at)].parent >= 0) {
            w.push_back(nodes[static_cast<std::size_t>(at)].via);
            at = nodes[static_cast<std::size_t>(at)].parent;
        }
        std::reverse(w.begin(), w.end());
        w.push_back(last);
        return w;
    };
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        Node cur = nodes[head];
        if (cur.depth == max_len) continue;
        for (const Symbol& a : inst.g.domain) {
            const Word& lag = cur.lead >= 0 ? inst.h.image(a) : inst.g.image(a);
            Word lead_side = concat(
                cur.residue, cur.lead >= 0 ? inst.g.image(a) : inst.h.image(a));
            int nl;
            Word nr;
            if (is_prefix(lag, lead_side)) {
                nl = cur.lead >= 0 ? 1 : -1;
                nr = drop_prefix(lead_side, lag.size());
            } else if (is_prefix(lead_side, lag)) {
                nl = cur.lead >= 0 ? -1 : 1;
                nr = drop_prefix(lag, lead_side.size());
            } else {
                continue;
            }
            if (nr.empty()) return unwind(static_cast<int>(head), a);
            if (nr.size() > residue_cap) continue;
            if (seen.insert({nl, nr}).second)
                nodes.push_back({nl, std::move(nr), cur.depth + 1,
                                 static_cast<int>(head), a});
        }
    }
    return std::nullopt;
}

Gnfa marked_shuffle_automaton(const PcpInstance& inst) {
    inst.validate();
    if (!inst.g.nonerasing() || !inst.h.nonerasing())
        throw PreconditionError(
            "marked_shuffle_automaton: morphisms must be nonerasing");
    const Alphabet& sigma = inst.g.domain;

    // States: prefixes of h-images (overflows with g leading).
    std::vector<Word> states;
    auto intern = [&](const Word& w) {
        auto it = std::find(states.begin(), states.end(), w);
        if (it != states.end())
            return static_cast<int>(it - states.begin());
        states.push_back(w);
        return static_cast<int>(states.size()) - 1;
    };
    intern(Word{});
    for (const Symbol& a : sigma) {
        const Word& ha = inst.h.image(a);
        for (std::size_t l = 1; l <= ha.size(); ++l)
            intern(Word(ha.begin(), ha.begin() + static_cast<long>(l)));
    }

    // All z with h(z) = target, peeled one image at a time.
    auto h_factorizations = [&](const Word& target) {
        std::vector<Word> out;
        Word z;
        auto rec = [&](auto&& self, std::size_t at) -> void {
            if (at == target.size()) {
                if (!z.empty()) out.push_back(z);
                return;
            }
            for (const Symbol& b : sigma) {
                const Word& hb = inst.h.image(b);
                if (at + hb.size() > target.size()) continue;
                if (!std::equal(hb.begin(), hb.end(),
                                target.begin() + static_cast<long>(at)))
                    continue;
                z.push_back(b);
                self(self, at + hb.size());
                z.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    Gnfa out;
    out.alphabet = sigma.with_marked();
    for (const Word& s : states)
        out.state_names.push_back(s.empty() ? "e" : to_string(s));
    out.initial = {0};
    out.finals = {0};

    const std::size_t n = states.size();
    for (std::size_t ui = 0; ui < n; ++ui) {
        const Word& u = states[ui];
        for (const Symbol& a : sigma) {
            const Word& ga = inst.g.image(a);
            // u --a--> u g(a), when u g(a) is again an overflow.
            Word ug = concat(u, ga);
            if (std::find(states.begin(), states.end(), ug) != states.end()) {
                out.transitions.push_back(
                    {static_cast<int>(ui), Word{a}, intern(ug)});
            }
            // u --a markall(z)--> v with g(a) = x v and h(z) = u x.
            for (std::size_t cut = 0; cut <= ga.size(); ++cut) {
                Word x(ga.begin(), ga.begin() + static_cast<long>(cut));
                Word v(ga.begin() + static_cast<long>(cut), ga.end());
                auto vit = std::find(states.begin(), states.end(), v);
                if (vit == states.end()) continue;
                for (const Word& z : h_factorizations(concat(u, x))) {
                    Word label{a};
                    Word mz = markall(z);
                    label.insert(label.end(), mz.begin(), mz.end());
                    out.transitions.push_back(
                        {static_cast<int>(ui), label,
                         static_cast<int>(vit - states.begin())});
                }
            }
        }
    }
    return out;
}

Cfg build_L2(const PcpInstance& inst) {
    inst.validate();
    require_disjoint(inst);
    Cfg g;
    g.terminals = inst.g.codomain.merged(inst.g.domain);
    int s = g.add_nonterminal("S");
    int t = g.add_nonterminal("T");
    g.start = s;
    for (const Symbol& a : inst.g.domain) {
        g.add(s, items({ts(inst.g.image(a)), nt1(s), ts(Word{a})}));
        g.add(s, items({ts(inst.g.image(a)), nt1(t), ts(Word{a})}));
        g.add(t, items({ts(Word{a}), nt1(t), ts(inst.h.image(a))}));
        g.add(t, items({ts(Word{a}), ts(inst.h.image(a))}));
    }
    g.recompute_linear();
    g.validate();
    return g;
}

Cfg build_L2_marked(const PcpInstance& inst) {
    inst.validate();
    require_disjoint(inst);
    Cfg g;
    g.terminals = inst.g.codomain.merged(inst.g.domain).with_marked();
    int s = g.add_nonterminal("S");
    int t = g.add_nonterminal("T");
    g.start = s;
    for (const Symbol& a : inst.g.domain) {
        g.add(s, items({ts(inst.g.image(a)), nt1(s), ts(markall(Word{a}))}));
        g.add(t, items({ts(Word{a}), nt1(t), ts(markall(inst.h.image(a)))}));
    }
    g.add(s, nt1(t));
    g.add(t, {});
    g.recompute_linear();
    g.validate();
    return g;
}

namespace {

// Chain of `blocks` copies of (# ) Delta+ Gamma+ over the given alphabet.
Nfa tail_blocks(const Alphabet& full, const Alphabet& delta,
                const Alphabet& gamma, std::size_t blocks, bool separators) {
    Nfa out;
    out.alphabet = full;
    Symbol hash{'#', false};
    int at = 0;
    out.state_names.push_back("t0");
    out.initial = {0};
    for (std::size_t j = 0; j < blocks; ++j) {
        auto fresh = [&]() {
            out.state_names.push_back("t" + std::to_string(out.state_count()));
            return out.state_count() - 1;
        };
        int start = at;
        if (separators) {
            int hs = fresh();
            out.transitions.push_back({start, hash, hs});
            start = hs;
        }
        int d = fresh();
        int gq = fresh();
        for (const Symbol& x : delta) {
            out.transitions.push_back({start, x, d});
            out.transitions.push_back({d, x, d});
        }
        for (const Symbol& x : gamma) {
            out.transitions.push_back({d, x, gq});
            out.transitions.push_back({gq, x, gq});
        }
        at = gq;
    }
    out.finals = {at};
    return out;
}

} // namespace

Cfg build_Ln(const PcpInstance& inst, int n, bool separators) {
    if (n < 2) throw PreconditionError("build_Ln: n must be at least 2");
    Cfg core = build_L2(inst);
    if (n == 2) return core;
    Alphabet full = core.terminals;
    if (separators) {
        require_fresh(inst, Symbol{'#', false});
        full = full.merged(Alphabet({Symbol{'#', false}}));
    }
    Nfa tail = tail_blocks(full, inst.g.codomain, inst.g.domain,
                           static_cast<std::size_t>(n) - 2, separators);
    return concat_regular_right(core, tail);
}

Cfg build_Lomega(const PcpInstance& inst) {
    Cfg core = build_L2(inst);
    // (Delta+ Gamma+)*
    Nfa tail;
    tail.alphabet = core.terminals;
    tail.state_names = {"t0", "t1", "t2"};
    tail.initial = {0};
    tail.finals = {0, 2};
    for (const Symbol& x : inst.g.codomain) {
        tail.transitions.push_back({0, x, 1});
        tail.transitions.push_back({1, x, 1});
        tail.transitions.push_back({2, x, 1});
    }
    for (const Symbol& x : inst.g.domain) {
        tail.transitions.push_back({1, x, 2});
        tail.transitions.push_back({2, x, 2});
    }
    return concat_regular_right(core, tail);
}

Cfg build_Lsharp(const PcpInstance& inst, bool include_empty) {
    inst.validate();
    require_disjoint(inst);
    Symbol dollar{'$', false};
    Symbol hash{'#', false};
    require_fresh(inst, dollar);
    require_fresh(inst, hash);

    Cfg g;
    g.terminals = inst.g.codomain.merged(inst.g.domain)
                      .merged(Alphabet({dollar, hash}));
    int s = g.add_nonterminal("S");
    int x = g.add_nonterminal("X");
    int y = g.add_nonterminal("Y");
    int z = g.add_nonterminal("Z");
    g.start = s;
    g.add(s, items({ts(Word{dollar}), nt1(x), ts(Word{hash})}));
    for (const Symbol& a : inst.g.domain) {
        // w nonempty:
        g.add(x, items({ts(inst.g.image(a)), nt1(y), ts(Word{a})}));
        g.add(y, items({ts(inst.g.image(a)), nt1(y), ts(Word{a})}));
        // u letters:
        g.add(z, items({ts(Word{a}), nt1(z), ts(inst.h.image(a))}));
        // w empty, u nonempty:
        g.add(x, items({ts(Word{a}), nt1(z), ts(inst.h.image(a))}));
    }
    g.add(y, nt1(z));
    g.add(z, items({ts(Word{hash}), ts(Word{dollar})}));
    if (include_empty) g.add(x, nt1(z));
    g.recompute_linear();
    g.validate();
    return g;
}

Cfg build_L1(const PcpInstance& inst) {
    inst.validate();
    Symbol hash{'#', false};
    if (inst.g.codomain.contains(hash))
        throw PreconditionError("reserved letter # occurs in the codomain");
    Cfg g;
    g.terminals = inst.g.codomain.merged(Alphabet({hash}));
    int s = g.add_nonterminal("S");
    int t = g.add_nonterminal("T");
    g.start = s;
    for (const Symbol& a : inst.g.domain) {
        g.add(s, items({ts(Word{hash}), ts(inst.g.image(a)), nt1(t),
                        ts(reverse_word(inst.h.image(a))), ts(Word{hash})}));
        g.add(t, items({ts(inst.g.image(a)), nt1(t),
                        ts(reverse_word(inst.h.image(a)))}));
    }
    g.add(t, items({ts(Word{hash}), ts(Word{hash})}));
    g.recompute_linear();
    g.validate();
    return g;
}

Cfg build_Lk(const PcpInstance& inst, std::size_t k) {
    if (k == 0) throw PreconditionError("build_Lk: k must be positive");
    Cfg core = build_L1(inst);
    if (k == 1) return core;
    Symbol c{'c', false};
    if (core.terminals.contains(c))
        throw PreconditionError("reserved letter c occurs in the codomain");
    Alphabet full = core.terminals.merged(Alphabet({c}));
    Nfa tail = singleton(full, Word(2 * (k - 1), c));
    return concat_regular_right(core, tail);
}

} // namespace fldt
