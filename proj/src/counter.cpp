#include "fldt/counter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace fldt {

void OneCounterMachine::validate() const {
    auto check_state = [&](int q) {
        if (q < 0 || q >= state_count())
            throw ParseError("unknown state id in counter machine");
    };
    for (int q : initial) check_state(q);
    for (int q : finals) check_state(q);
    for (const CmTransition& t : transitions) {
        check_state(t.from);
        check_state(t.to);
        if (t.input && !alphabet.contains(*t.input))
            throw ParseError("transition symbol not in alphabet: " +
                             to_string(*t.input));
        if (t.effect < -1 || t.effect > 1)
            throw ParseError("counter effect must be -1, 0 or +1");
        if (t.effect == -1 && t.guard != Guard::pos)
            throw ParseError("a -1 effect requires the positive guard");
    }
}

bool run(const OneCounterMachine& m, const Word& w, std::size_t step_cap) {
    for (const Symbol& s : w)
        if (!m.alphabet.contains(s))
            throw PreconditionError("input symbol not in machine alphabet: " +
                                    to_string(s));
    const long bound =
        static_cast<long>(m.counter_slope) * static_cast<long>(w.size()) +
        m.counter_offset;
    std::set<std::tuple<int, std::size_t, long>> seen;
    std::deque<std::tuple<int, std::size_t, long>> work;
    for (int q : m.initial) {
        auto cfg = std::make_tuple(q, std::size_t{0}, 0L);
        if (seen.insert(cfg).second) work.push_back(cfg);
    }
    std::size_t expanded = 0;
    while (!work.empty()) {
        auto [state, pos, counter] = work.front();
        work.pop_front();
        if (pos == w.size() && m.finals.count(state)) return true;
        if (++expanded > step_cap)
            throw IndeterminateError(
                "run: step cap exhausted with live configurations");
        for (const CmTransition& t : m.transitions) {
            if (t.from != state) continue;
            if (t.guard == Guard::zero && counter != 0) continue;
            if (t.guard == Guard::pos && counter <= 0) continue;
            std::size_t npos = pos;
            if (t.input) {
                if (pos >= w.size() || w[pos] != *t.input) continue;
                npos = pos + 1;
            }
            long nc = counter + t.effect;
            if (nc < 0 || nc > bound) continue;
            auto cfg = std::make_tuple(t.to, npos, nc);
            if (seen.insert(cfg).second) work.push_back(cfg);
        }
    }
    return false;
}

namespace {

class Builder {
public:
    int st(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int id = m.state_count();
        m.state_names.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    void tr(int from, std::optional<Symbol> input, Guard g, int eff, int to) {
        m.transitions.push_back({from, input, g, eff, to});
    }

    OneCounterMachine m;

private:
    std::map<std::string, int> ids_;
};

} // namespace

OneCounterMachine complement_marked_copy_machine(const Nfa& p) {
    for (const Symbol& s : p.alphabet)
        if (s.marked)
            throw PreconditionError(
                "complement_marked_copy_machine: P must be over an unmarked "
                "alphabet");
    const Alphabet sigma = p.alphabet;
    Nfa dfa = determinize(p);

    Builder b;
    b.m.alphabet = sigma.with_marked();
    b.m.counter_slope = 1;
    b.m.counter_offset = 2;

    int I = b.st("start");
    b.m.initial = {I};

    // Branch 1: the input is not of the shape Sigma* SigmaBar*.
    int b1u = b.st("shape.u");
    int b1m = b.st("shape.m");
    int bad = b.st("shape.bad");
    b.tr(I, std::nullopt, Guard::any, 0, b1u);
    for (const Symbol& s : sigma) {
        b.tr(b1u, s, Guard::any, 0, b1u);
        b.tr(b1u, Symbol{s.base, true}, Guard::any, 0, b1m);
        b.tr(b1m, Symbol{s.base, true}, Guard::any, 0, b1m);
        b.tr(b1m, s, Guard::any, 0, bad);
        b.tr(bad, s, Guard::any, 0, bad);
        b.tr(bad, Symbol{s.base, true}, Guard::any, 0, bad);
    }
    b.m.finals.insert(bad);

    // Branch 2: unmarked and marked parts differ in length.
    int lu = b.st("len.up");
    int ld = b.st("len.down");
    int lacc = b.st("len.markedlonger");
    int lfin = b.st("len.unmarkedlonger");
    b.tr(I, std::nullopt, Guard::any, 0, lu);
    for (const Symbol& s : sigma) {
        Symbol mk{s.base, true};
        b.tr(lu, s, Guard::any, 1, lu);
        b.tr(lu, mk, Guard::pos, -1, ld);
        b.tr(lu, mk, Guard::zero, 0, lacc);
        b.tr(ld, mk, Guard::pos, -1, ld);
        b.tr(ld, mk, Guard::zero, 0, lacc);
        b.tr(lacc, mk, Guard::any, 0, lacc);
    }
    b.tr(lu, std::nullopt, Guard::pos, 0, lfin);
    b.tr(ld, std::nullopt, Guard::pos, 0, lfin);
    b.m.finals.insert(lacc);
    b.m.finals.insert(lfin);

    // Branch 3: the unmarked part is not in P; runs the complement DFA of P
    // in finite control and skips the marked tail.
    std::vector<int> cst(static_cast<std::size_t>(dfa.state_count()));
    for (int d = 0; d < dfa.state_count(); ++d)
        cst[static_cast<std::size_t>(d)] = b.st("notp." + std::to_string(d));
    int skip = b.st("notp.skip");
    b.tr(I, std::nullopt, Guard::any, 0, cst[static_cast<std::size_t>(*dfa.initial.begin())]);
    for (const Transition& t : dfa.transitions)
        b.tr(cst[static_cast<std::size_t>(t.from)], t.sym, Guard::any, 0,
             cst[static_cast<std::size_t>(t.to)]);
    for (int d = 0; d < dfa.state_count(); ++d) {
        if (dfa.finals.count(d)) continue; // u in P: no escape here
        b.m.finals.insert(cst[static_cast<std::size_t>(d)]);
        for (const Symbol& s : sigma)
            b.tr(cst[static_cast<std::size_t>(d)], Symbol{s.base, true},
                 Guard::any, 0, skip);
    }
    for (const Symbol& s : sigma)
        b.tr(skip, Symbol{s.base, true}, Guard::any, 0, skip);
    b.m.finals.insert(skip);

    // Branch 4: equal lengths but a mismatch at a guessed position. The
    // counter holds (position - 1); the compare fires on the zero guard.
    int g0 = b.st("mismatch.count");
    int macc = b.st("mismatch.found");
    b.tr(I, std::nullopt, Guard::any, 0, g0);
    for (const Symbol& a : sigma) {
        int ra = b.st("mismatch.rest." + to_string(a));
        int da = b.st("mismatch.pop." + to_string(a));
        b.tr(g0, a, Guard::any, 1, g0);
        b.tr(g0, a, Guard::any, 0, ra); // guess: this is the mismatch position
        for (const Symbol& s : sigma) {
            Symbol mk{s.base, true};
            b.tr(ra, s, Guard::any, 0, ra);
            b.tr(ra, mk, Guard::pos, -1, da);
            if (s.base != a.base) b.tr(ra, mk, Guard::zero, 0, macc);
            b.tr(da, mk, Guard::pos, -1, da);
            if (s.base != a.base) b.tr(da, mk, Guard::zero, 0, macc);
            b.tr(macc, mk, Guard::any, 0, macc);
        }
    }
    b.m.finals.insert(macc);

    b.m.validate();
    return b.m;
}

OneCounterMachine counter_inclusion_machine(const Morphism& g,
                                            const Morphism& h) {
    if (!g.nonerasing() || !h.nonerasing())
        throw PreconditionError(
            "counter_inclusion_machine: morphisms must be nonerasing");
    if (g.domain != h.domain)
        throw PreconditionError("counter_inclusion_machine: shared domain required");
    const Symbol hash{'#', false};
    if (g.domain.contains(hash))
        throw PreconditionError("counter_inclusion_machine: '#' must be fresh");
    const Alphabet sigma = g.domain;

    Builder b;
    b.m.alphabet = sigma.merged(Alphabet({hash}));
    int maxg = 1;
    for (const Symbol& a : sigma)
        maxg = std::max(maxg, static_cast<int>(g.image(a).size()));
    b.m.counter_slope = maxg;
    b.m.counter_offset = 2;

    int I = b.st("start");
    b.m.initial = {I};
    int fin = b.st("accept");
    int mism = b.st("mismatch"); // a difference was found; finish reading u#v#
    for (const Symbol& a : sigma) b.tr(mism, a, Guard::any, 0, mism);
    b.tr(mism, hash, Guard::any, 0, fin);
    b.m.finals.insert(fin);

    // Branch 1: w not in Sigma*#Sigma*#, by hash count and last letter.
    int h0 = b.st("shape.h0");
    int h1 = b.st("shape.h1");
    int h2h = b.st("shape.h2h");
    int h2x = b.st("shape.h2x");
    int h3 = b.st("shape.h3");
    b.tr(I, std::nullopt, Guard::any, 0, h0);
    for (const Symbol& a : sigma) {
        b.tr(h0, a, Guard::any, 0, h0);
        b.tr(h1, a, Guard::any, 0, h1);
        b.tr(h2h, a, Guard::any, 0, h2x);
        b.tr(h2x, a, Guard::any, 0, h2x);
        b.tr(h3, a, Guard::any, 0, h3);
    }
    b.tr(h0, hash, Guard::any, 0, h1);
    b.tr(h1, hash, Guard::any, 0, h2h);
    b.tr(h2h, hash, Guard::any, 0, h3);
    b.tr(h2x, hash, Guard::any, 0, h3);
    b.tr(h3, hash, Guard::any, 0, h3);
    b.m.finals.insert(h0);
    b.m.finals.insert(h1);
    b.m.finals.insert(h2x);
    b.m.finals.insert(h3);

    // Branch 2a: u and v differ at a guessed position n; counter = n - 1.
    int u2 = b.st("neq.count");
    b.tr(I, std::nullopt, Guard::any, 0, u2);
    for (const Symbol& a : sigma) {
        int ra = b.st("neq.rest." + to_string(a));
        int pa = b.st("neq.pop." + to_string(a));
        b.tr(u2, a, Guard::any, 1, u2);
        b.tr(u2, a, Guard::any, 0, ra); // guess: position n, letter a
        for (const Symbol& s : sigma) b.tr(ra, s, Guard::any, 0, ra);
        b.tr(ra, hash, Guard::any, 0, pa);
        for (const Symbol& s : sigma) {
            b.tr(pa, s, Guard::pos, -1, pa);
            if (s != a) b.tr(pa, s, Guard::zero, 0, mism);
        }
        b.tr(pa, hash, Guard::any, 0, fin); // v shorter than n: lengths differ
    }

    // Branch 2b: |u| != |v|.
    int u2b = b.st("len.count");
    int p2b = b.st("len.pop");
    b.tr(I, std::nullopt, Guard::any, 0, u2b);
    for (const Symbol& a : sigma) {
        b.tr(u2b, a, Guard::any, 1, u2b);
        b.tr(p2b, a, Guard::pos, -1, p2b);
        b.tr(p2b, a, Guard::zero, 0, mism); // v longer
    }
    b.tr(u2b, hash, Guard::any, 0, p2b);
    b.tr(p2b, hash, Guard::pos, 0, fin); // u longer

    // Branch 3a: g(u) and h(v) differ at a guessed image position. While
    // reading u the counter gains |g(a)| per letter via epsilon chains; the
    // guess stops after j pushes and remembers the j-th symbol of g(a).
    std::map<Symbol, int> v3r, p3x;
    std::vector<Symbol> image_syms;
    auto note_sym = [&](const Symbol& s) {
        if (std::find(image_syms.begin(), image_syms.end(), s) ==
            image_syms.end())
            image_syms.push_back(s);
    };
    for (const Symbol& a : sigma) {
        for (const Symbol& s : g.image(a)) note_sym(s);
        for (const Symbol& s : h.image(a)) note_sym(s);
    }
    int v3 = b.st("img.count");
    b.tr(I, std::nullopt, Guard::any, 0, v3);
    for (const Symbol& x : image_syms) {
        v3r[x] = b.st("img.rest." + to_string(x));
        p3x[x] = b.st("img.pop." + to_string(x));
        for (const Symbol& s : sigma) b.tr(v3r[x], s, Guard::any, 0, v3r[x]);
        b.tr(v3r[x], hash, Guard::any, 0, p3x[x]);
        b.tr(p3x[x], hash, Guard::any, 0, fin); // h(v) ends before position n
    }
    for (const Symbol& a : sigma) {
        const Word& ga = g.image(a);
        // Full push: read a, then |g(a)| increments through a chain.
        int prev = -1;
        for (std::size_t k = 0; k < ga.size(); ++k) {
            int next = (k + 1 == ga.size())
                           ? v3
                           : b.st("img.push." + to_string(a) + "." +
                                  std::to_string(k));
            if (k == 0)
                b.tr(v3, a, Guard::any, 1, next);
            else
                b.tr(prev, std::nullopt, Guard::any, 1, next);
            prev = next;
        }
        // Guess: push only j of them and remember g(a)[j].
        for (std::size_t j = 0; j < ga.size(); ++j) {
            int target = v3r[ga[j]];
            if (j == 0) {
                b.tr(v3, a, Guard::any, 0, target);
            } else {
                int at = b.st("img.guess." + to_string(a) + ".1");
                b.tr(v3, a, Guard::any, 1, at);
                for (std::size_t k = 2; k <= j; ++k) {
                    int next = b.st("img.guess." + to_string(a) + "." +
                                    std::to_string(k));
                    b.tr(at, std::nullopt, Guard::any, 1, next);
                    at = next;
                }
                b.tr(at, std::nullopt, Guard::any, 0, target);
            }
        }
    }
    // Pop side of 3a: per letter of v, h(b) is consumed one image symbol at a
    // time; the zero guard marks the guessed position and compares.
    for (const Symbol& x : image_syms) {
        for (const Symbol& bb : sigma) {
            const Word& hb = h.image(bb);
            int at = p3x[x];
            for (std::size_t s = 0; s < hb.size(); ++s) {
                int next = (s + 1 == hb.size())
                               ? p3x[x]
                               : b.st("img.popc." + to_string(x) + "." +
                                      to_string(bb) + "." + std::to_string(s));
                std::optional<Symbol> in =
                    (s == 0) ? std::optional<Symbol>(bb) : std::nullopt;
                b.tr(at, in, Guard::pos, -1, next);
                if (hb[s] != x) b.tr(at, in, Guard::zero, 0, mism);
                at = next;
            }
        }
    }

    // Branch 3b: |g(u)| != |h(v)|.
    int v3b = b.st("imglen.count");
    int p3b = b.st("imglen.pop");
    b.tr(I, std::nullopt, Guard::any, 0, v3b);
    for (const Symbol& a : sigma) {
        const Word& ga = g.image(a);
        int prev = -1;
        for (std::size_t k = 0; k < ga.size(); ++k) {
            int next = (k + 1 == ga.size())
                           ? v3b
                           : b.st("imglen.push." + to_string(a) + "." +
                                  std::to_string(k));
            if (k == 0)
                b.tr(v3b, a, Guard::any, 1, next);
            else
                b.tr(prev, std::nullopt, Guard::any, 1, next);
            prev = next;
        }
    }
    b.tr(v3b, hash, Guard::any, 0, p3b);
    for (const Symbol& bb : sigma) {
        const Word& hb = h.image(bb);
        int at = p3b;
        for (std::size_t s = 0; s < hb.size(); ++s) {
            int next = (s + 1 == hb.size())
                           ? p3b
                           : b.st("imglen.popc." + to_string(bb) + "." +
                                  std::to_string(s));
            std::optional<Symbol> in =
                (s == 0) ? std::optional<Symbol>(bb) : std::nullopt;
            b.tr(at, in, Guard::pos, -1, next);
            b.tr(at, in, Guard::zero, 0, mism); // h image is longer
            at = next;
        }
    }
    b.tr(p3b, hash, Guard::pos, 0, fin); // g image is longer

    b.m.validate();
    return b.m;
}

namespace {

Guard parse_guard(const std::string& tok) {
    if (tok == "zero") return Guard::zero;
    if (tok == "pos") return Guard::pos;
    if (tok == "any") return Guard::any;
    throw ParseError("bad guard token: " + tok);
}

std::string guard_name(Guard g) {
    switch (g) {
        case Guard::zero: return "zero";
        case Guard::pos: return "pos";
        default: return "any";
    }
}

} // namespace

OneCounterMachine parse_ocm(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    OneCounterMachine m;
    std::map<std::string, int> ids;
    std::vector<std::string> initial_toks, final_toks;
    struct RawT {
        std::string from, sym, guard, eff, to;
    };
    std::vector<RawT> raw;
    bool have_alphabet = false, have_states = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        std::vector<std::string> rest(toks.begin() + 1, toks.end());
        if (head == "alphabet:") {
            std::vector<Symbol> syms;
            for (const std::string& t : rest) syms.push_back(parse_symbol(t));
            m.alphabet = Alphabet(std::move(syms));
            have_alphabet = true;
        } else if (head == "states:") {
            for (const std::string& t : rest) {
                if (ids.count(t)) throw ParseError("duplicate state name: " + t);
                ids[t] = m.state_count();
                m.state_names.push_back(t);
            }
            have_states = true;
        } else if (head == "initial:") {
            initial_toks.insert(initial_toks.end(), rest.begin(), rest.end());
        } else if (head == "final:") {
            final_toks.insert(final_toks.end(), rest.begin(), rest.end());
        } else if (head == "slope:") {
            if (rest.size() != 1) throw ParseError("slope: expects one integer");
            m.counter_slope = std::stoi(rest[0]);
        } else if (head == "offset:") {
            if (rest.size() != 1) throw ParseError("offset: expects one integer");
            m.counter_offset = std::stoi(rest[0]);
        } else if (head == "trans:") {
            if (rest.size() != 5)
                throw ParseError("trans: expects 'from symbol guard effect to'");
            raw.push_back({rest[0], rest[1], rest[2], rest[3], rest[4]});
        } else {
            throw ParseError("unknown directive: " + head);
        }
    }
    if (!have_alphabet) throw ParseError("missing alphabet: line");
    if (!have_states) throw ParseError("missing states: line");
    auto lookup = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it == ids.end()) throw ParseError("unknown state: " + name);
        return it->second;
    };
    for (const std::string& t : initial_toks) m.initial.insert(lookup(t));
    for (const std::string& t : final_toks) m.finals.insert(lookup(t));
    for (const RawT& t : raw) {
        std::optional<Symbol> in;
        if (t.sym != "_") in = parse_symbol(t.sym);
        int eff;
        if (t.eff == "-1")
            eff = -1;
        else if (t.eff == "0")
            eff = 0;
        else if (t.eff == "+1" || t.eff == "1")
            eff = 1;
        else
            throw ParseError("bad effect token: " + t.eff);
        m.transitions.push_back(
            {lookup(t.from), in, parse_guard(t.guard), eff, lookup(t.to)});
    }
    m.validate();
    return m;
}

std::string to_string(const OneCounterMachine& m) {
    std::ostringstream os;
    os << "alphabet: " << to_string(m.alphabet) << "\n";
    os << "states:";
    for (const std::string& n : m.state_names) os << ' ' << n;
    os << "\ninitial:";
    for (int q : m.initial) os << ' ' << m.state_names[static_cast<std::size_t>(q)];
    os << "\nfinal:";
    for (int q : m.finals) os << ' ' << m.state_names[static_cast<std::size_t>(q)];
    os << "\nslope: " << m.counter_slope << "\noffset: " << m.counter_offset
       << "\n";
    for (const CmTransition& t : m.transitions) {
        os << "trans: " << m.state_names[static_cast<std::size_t>(t.from)] << ' '
           << (t.input ? to_string(*t.input) : std::string("_")) << ' '
           << guard_name(t.guard) << ' ';
        if (t.effect > 0) os << "+1";
        else if (t.effect < 0) os << "-1";
        else os << "0";
        os << ' ' << m.state_names[static_cast<std::size_t>(t.to)] << '\n';
    }
    return os.str();
}

} // namespace fldt
