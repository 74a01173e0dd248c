#include "fldt/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace fldt {

void Nfa::validate() const {
    auto check_state = [&](int q, const char* what) {
        if (q < 0 || q >= state_count())
            throw ParseError(std::string("unknown state id in ") + what);
    };
    for (int q : initial) check_state(q, "initial set");
    for (int q : finals) check_state(q, "final set");
    for (const Transition& t : transitions) {
        check_state(t.from, "transition");
        check_state(t.to, "transition");
        if (!alphabet.contains(t.sym))
            throw ParseError("transition symbol not in alphabet: " +
                             to_string(t.sym));
    }
    for (auto [p, q] : epsilons) {
        check_state(p, "epsilon transition");
        check_state(q, "epsilon transition");
    }
}

namespace {

std::set<int> eps_closure(const Nfa& a, std::set<int> states) {
    std::deque<int> work(states.begin(), states.end());
    while (!work.empty()) {
        int p = work.front();
        work.pop_front();
        for (auto [x, y] : a.epsilons)
            if (x == p && states.insert(y).second) work.push_back(y);
    }
    return states;
}

std::set<int> step(const Nfa& a, const std::set<int>& states, const Symbol& s) {
    std::set<int> next;
    for (const Transition& t : a.transitions)
        if (t.sym == s && states.count(t.from)) next.insert(t.to);
    return eps_closure(a, std::move(next));
}

bool any_final(const Nfa& a, const std::set<int>& states) {
    for (int q : states)
        if (a.finals.count(q)) return true;
    return false;
}

std::string fresh_name(int i) { return "q" + std::to_string(i); }

std::vector<std::string> fresh_names(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(fresh_name(static_cast<int>(i)));
    return out;
}

} // namespace

bool accepts(const Nfa& a, const Word& w) {
    for (const Symbol& s : w)
        if (!a.alphabet.contains(s))
            throw PreconditionError("word symbol not in automaton alphabet: " +
                                    to_string(s));
    std::set<int> cur = eps_closure(a, a.initial);
    for (const Symbol& s : w) {
        cur = step(a, cur, s);
        if (cur.empty()) return false;
    }
    return any_final(a, cur);
}

Nfa product(const Nfa& a, const Nfa& b, ProductMode mode) {
    if (mode == ProductMode::unite) {
        Nfa out;
        out.alphabet = a.alphabet.merged(b.alphabet);
        int off = a.state_count();
        out.state_names = fresh_names(static_cast<std::size_t>(off + b.state_count()));
        for (int q : a.initial) out.initial.insert(q);
        for (int q : b.initial) out.initial.insert(q + off);
        for (int q : a.finals) out.finals.insert(q);
        for (int q : b.finals) out.finals.insert(q + off);
        out.transitions = a.transitions;
        for (const Transition& t : b.transitions)
            out.transitions.push_back({t.from + off, t.sym, t.to + off});
        out.epsilons = a.epsilons;
        for (auto [p, q] : b.epsilons) out.epsilons.emplace_back(p + off, q + off);
        return out;
    }

    // Intersection over reachable pairs; epsilon moves are folded away first.
    Nfa ea = eps_free(a);
    Nfa eb = eps_free(b);
    Nfa out;
    out.alphabet = ea.alphabet.merged(eb.alphabet);
    std::map<std::pair<int, int>, int> ids;
    std::deque<std::pair<int, int>> work;
    auto intern = [&](int p, int q) {
        auto [it, fresh] = ids.emplace(std::make_pair(p, q),
                                       static_cast<int>(ids.size()));
        if (fresh) work.emplace_back(p, q);
        return it->second;
    };
    for (int p : ea.initial)
        for (int q : eb.initial) out.initial.insert(intern(p, q));
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        int id = ids.at({p, q});
        if (ea.finals.count(p) && eb.finals.count(q)) out.finals.insert(id);
        for (const Transition& ta : ea.transitions) {
            if (ta.from != p) continue;
            for (const Transition& tb : eb.transitions) {
                if (tb.from != q || tb.sym != ta.sym) continue;
                out.transitions.push_back({id, ta.sym, intern(ta.to, tb.to)});
            }
        }
    }
    out.state_names = fresh_names(ids.size());
    if (out.state_names.empty()) out.state_names.push_back("q0");
    return out;
}

Nfa determinize(const Nfa& a, std::size_t subset_cap) {
    Nfa out;
    out.alphabet = a.alphabet;
    std::map<std::set<int>, int> ids;
    std::deque<std::set<int>> work;
    auto intern = [&](std::set<int> s) {
        auto [it, fresh] = ids.emplace(std::move(s), static_cast<int>(ids.size()));
        if (fresh) {
            if (ids.size() > subset_cap)
                throw CapacityError("determinize: subset state cap " +
                                    std::to_string(subset_cap) + " exceeded");
            work.push_back(it->first);
        }
        return it->second;
    };
    int start = intern(eps_closure(a, a.initial));
    out.initial.insert(start);
    while (!work.empty()) {
        std::set<int> cur = work.front();
        work.pop_front();
        int id = ids.at(cur);
        if (any_final(a, cur)) out.finals.insert(id);
        for (const Symbol& s : a.alphabet)
            out.transitions.push_back({id, s, intern(step(a, cur, s))});
    }
    out.state_names = fresh_names(ids.size());
    return out;
}

Nfa complement(const Nfa& a, std::size_t subset_cap) {
    Nfa d = determinize(a, subset_cap);
    std::set<int> flipped;
    for (int q = 0; q < d.state_count(); ++q)
        if (!d.finals.count(q)) flipped.insert(q);
    d.finals = std::move(flipped);
    return d;
}

Nfa reverse(const Nfa& a) {
    Nfa out = a;
    out.initial = a.finals;
    out.finals = a.initial;
    out.transitions.clear();
    for (const Transition& t : a.transitions)
        out.transitions.push_back({t.to, t.sym, t.from});
    out.epsilons.clear();
    for (auto [p, q] : a.epsilons) out.epsilons.emplace_back(q, p);
    return out;
}

Nfa flip_marking(const Nfa& a) {
    if (!a.alphabet.closed_under_marking())
        throw PreconditionError("flip_marking: alphabet not closed under marking");
    Nfa out = a;
    for (Transition& t : out.transitions) t.sym = t.sym.flipped();
    return out;
}

std::optional<Word> shortest_member(const Nfa& a) {
    struct Node {
        std::set<int> states;
        int parent;
        Symbol via;
    };
    std::vector<Node> nodes;
    std::set<std::set<int>> seen;
    std::set<int> start = eps_closure(a, a.initial);
    nodes.push_back({start, -1, Symbol{}});
    seen.insert(start);
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        // Copy: nodes may reallocate while we append.
        Node cur = nodes[head];
        if (any_final(a, cur.states)) {
            Word w;
            int at = static_cast<int>(head);
            while (nodes[at].parent >= 0) {
                w.push_back(nodes[at].via);
                at = nodes[at].parent;
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (const Symbol& s : a.alphabet) {
            std::set<int> next = step(a, cur.states, s);
            if (next.empty()) continue;
            if (seen.insert(next).second)
                nodes.push_back({std::move(next), static_cast<int>(head), s});
        }
    }
    return std::nullopt;
}

Nfa fragment(const Nfa& a, int from, int to) {
    if (from < 0 || from >= a.state_count() || to < 0 || to >= a.state_count())
        throw PreconditionError("fragment: unknown state id");
    Nfa out = a;
    out.initial = {from};
    out.finals = {to};
    return out;
}

Nfa eps_free(const Nfa& a) {
    if (a.epsilons.empty()) return a;
    Nfa out;
    out.alphabet = a.alphabet;
    out.state_names = a.state_names;
    out.initial = a.initial;
    for (int p = 0; p < a.state_count(); ++p) {
        std::set<int> cl = eps_closure(a, {p});
        if (any_final(a, cl)) out.finals.insert(p);
        for (int q : cl)
            for (const Transition& t : a.transitions)
                if (t.from == q) out.transitions.push_back({p, t.sym, t.to});
    }
    std::sort(out.transitions.begin(), out.transitions.end());
    out.transitions.erase(
        std::unique(out.transitions.begin(), out.transitions.end()),
        out.transitions.end());
    return out;
}

std::vector<Word> enumerate_nfa(const Nfa& a, std::size_t maxlen) {
    Nfa e = eps_free(a);
    // States that can still reach a final state; prunes dead branches.
    std::set<int> coreach = e.finals;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Transition& t : e.transitions)
            if (coreach.count(t.to) && coreach.insert(t.from).second)
                changed = true;
    }
    std::vector<Word> out;
    struct Frame {
        Word w;
        std::set<int> states;
    };
    std::deque<Frame> work;
    std::set<int> start;
    for (int q : e.initial)
        if (coreach.count(q)) start.insert(q);
    if (start.empty()) return out;
    work.push_back({{}, start});
    while (!work.empty()) {
        Frame f = std::move(work.front());
        work.pop_front();
        bool acc = false;
        for (int q : f.states)
            if (e.finals.count(q)) acc = true;
        if (acc) out.push_back(f.w);
        if (f.w.size() == maxlen) continue;
        for (const Symbol& s : e.alphabet) {
            std::set<int> next;
            for (const Transition& t : e.transitions)
                if (t.sym == s && f.states.count(t.from) && coreach.count(t.to))
                    next.insert(t.to);
            if (next.empty()) continue;
            Word w = f.w;
            w.push_back(s);
            work.push_back({std::move(w), std::move(next)});
        }
    }
    std::stable_sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
        return word_less(x, y, a.alphabet);
    });
    return out;
}

Nfa sigma_star(const Alphabet& alphabet) {
    Nfa out;
    out.alphabet = alphabet;
    out.state_names = {"q0"};
    out.initial = {0};
    out.finals = {0};
    for (const Symbol& s : alphabet) out.transitions.push_back({0, s, 0});
    return out;
}

Nfa sigma_plus(const Alphabet& alphabet) {
    Nfa out;
    out.alphabet = alphabet;
    out.state_names = {"q0", "q1"};
    out.initial = {0};
    out.finals = {1};
    for (const Symbol& s : alphabet) {
        out.transitions.push_back({0, s, 1});
        out.transitions.push_back({1, s, 1});
    }
    return out;
}

Nfa empty_language(const Alphabet& alphabet) {
    Nfa out;
    out.alphabet = alphabet;
    out.state_names = {"q0"};
    out.initial = {0};
    return out;
}

Nfa singleton(const Alphabet& alphabet, const Word& w) {
    Nfa out;
    out.alphabet = alphabet;
    out.state_names = fresh_names(w.size() + 1);
    out.initial = {0};
    out.finals = {static_cast<int>(w.size())};
    for (std::size_t i = 0; i < w.size(); ++i)
        out.transitions.push_back({static_cast<int>(i), w[i],
                                   static_cast<int>(i) + 1});
    return out;
}

Nfa word_list(const Alphabet& alphabet, const std::vector<Word>& words) {
    Nfa out = empty_language(alphabet);
    for (const Word& w : words)
        out = product(out, singleton(alphabet, w), ProductMode::unite);
    return out;
}

Nfa unmarked_then_marked(const Alphabet& alphabet) {
    if (!alphabet.closed_under_marking())
        throw PreconditionError(
            "unmarked_then_marked: alphabet not closed under marking");
    Nfa out;
    out.alphabet = alphabet;
    out.state_names = {"u", "m"};
    out.initial = {0};
    out.finals = {0, 1};
    for (const Symbol& s : alphabet) {
        if (!s.marked) {
            out.transitions.push_back({0, s, 0});
        } else {
            out.transitions.push_back({0, s, 1});
            out.transitions.push_back({1, s, 1});
        }
    }
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct RawAutomaton {
    Alphabet alphabet;
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::set<int> initial, finals;
    std::vector<std::tuple<std::string, std::string, std::string>> trans;
    std::vector<std::pair<std::string, std::string>> eps;
    bool have_alphabet = false, have_states = false;
};

RawAutomaton parse_raw(const std::string& text) {
    RawAutomaton raw;
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> initial_toks, final_toks;
    while (std::getline(is, line)) {
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        std::vector<std::string> rest(toks.begin() + 1, toks.end());
        if (head == "alphabet:") {
            std::vector<Symbol> syms;
            for (const std::string& t : rest) syms.push_back(parse_symbol(t));
            raw.alphabet = Alphabet(std::move(syms));
            raw.have_alphabet = true;
        } else if (head == "states:") {
            for (const std::string& t : rest) {
                if (raw.ids.count(t))
                    throw ParseError("duplicate state name: " + t);
                raw.ids[t] = static_cast<int>(raw.names.size());
                raw.names.push_back(t);
            }
            raw.have_states = true;
        } else if (head == "initial:") {
            initial_toks.insert(initial_toks.end(), rest.begin(), rest.end());
        } else if (head == "final:") {
            final_toks.insert(final_toks.end(), rest.begin(), rest.end());
        } else if (head == "trans:") {
            if (rest.size() != 3)
                throw ParseError("trans: expects 'from symbol to'");
            raw.trans.emplace_back(rest[0], rest[1], rest[2]);
        } else if (head == "eps:") {
            if (rest.size() != 2) throw ParseError("eps: expects 'from to'");
            raw.eps.emplace_back(rest[0], rest[1]);
        } else {
            throw ParseError("unknown directive: " + head);
        }
    }
    if (!raw.have_alphabet) throw ParseError("missing alphabet: line");
    if (!raw.have_states) throw ParseError("missing states: line");
    auto lookup = [&](const std::string& name) {
        auto it = raw.ids.find(name);
        if (it == raw.ids.end()) throw ParseError("unknown state: " + name);
        return it->second;
    };
    for (const std::string& t : initial_toks) raw.initial.insert(lookup(t));
    for (const std::string& t : final_toks) raw.finals.insert(lookup(t));
    return raw;
}

} // namespace

Nfa parse_nfa(const std::string& text) {
    RawAutomaton raw = parse_raw(text);
    Nfa out;
    out.alphabet = raw.alphabet;
    out.state_names = raw.names;
    out.initial = raw.initial;
    out.finals = raw.finals;
    auto lookup = [&](const std::string& name) {
        auto it = raw.ids.find(name);
        if (it == raw.ids.end()) throw ParseError("unknown state: " + name);
        return it->second;
    };
    for (auto& [f, s, t] : raw.trans)
        out.transitions.push_back({lookup(f), parse_symbol(s), lookup(t)});
    for (auto& [f, t] : raw.eps) out.epsilons.emplace_back(lookup(f), lookup(t));
    out.validate();
    return out;
}

std::string to_string(const Nfa& a) {
    std::ostringstream os;
    os << "alphabet: " << to_string(a.alphabet) << "\n";
    os << "states:";
    for (const std::string& n : a.state_names) os << ' ' << n;
    os << "\ninitial:";
    for (int q : a.initial) os << ' ' << a.state_names[q];
    os << "\nfinal:";
    for (int q : a.finals) os << ' ' << a.state_names[q];
    os << '\n';
    for (const Transition& t : a.transitions)
        os << "trans: " << a.state_names[t.from] << ' ' << to_string(t.sym)
           << ' ' << a.state_names[t.to] << '\n';
    for (auto [p, q] : a.epsilons)
        os << "eps: " << a.state_names[p] << ' ' << a.state_names[q] << '\n';
    return os.str();
}

Nfa Gnfa::expand() const {
    Nfa out;
    out.alphabet = alphabet;
    out.state_names = state_names;
    out.initial = initial;
    out.finals = finals;
    for (const GnfaTransition& t : transitions) {
        if (t.label.empty()) {
            out.epsilons.emplace_back(t.from, t.to);
            continue;
        }
        int prev = t.from;
        for (std::size_t i = 0; i + 1 < t.label.size(); ++i) {
            int fresh = out.state_count();
            out.state_names.push_back("x" + std::to_string(fresh));
            out.transitions.push_back({prev, t.label[i], fresh});
            prev = fresh;
        }
        out.transitions.push_back({prev, t.label.back(), t.to});
    }
    out.validate();
    return out;
}

std::string to_string(const Gnfa& g) {
    std::ostringstream os;
    os << "alphabet: " << to_string(g.alphabet) << "\n";
    os << "states:";
    for (const std::string& n : g.state_names) os << ' ' << n;
    os << "\ninitial:";
    for (int q : g.initial) os << ' ' << g.state_names[q];
    os << "\nfinal:";
    for (int q : g.finals) os << ' ' << g.state_names[q];
    os << '\n';
    for (const GnfaTransition& t : g.transitions)
        os << "trans: " << g.state_names[t.from] << ' ' << to_string(t.label)
           << ' ' << g.state_names[t.to] << '\n';
    return os.str();
}

Gnfa parse_gnfa(const std::string& text) {
    RawAutomaton raw = parse_raw(text);
    Gnfa out;
    out.alphabet = raw.alphabet;
    out.state_names = raw.names;
    out.initial = raw.initial;
    out.finals = raw.finals;
    auto lookup = [&](const std::string& name) {
        auto it = raw.ids.find(name);
        if (it == raw.ids.end()) throw ParseError("unknown state: " + name);
        return it->second;
    };
    if (!raw.eps.empty())
        throw ParseError("generalized automata use empty-word labels, not eps:");
    for (auto& [f, s, t] : raw.trans)
        out.transitions.push_back({lookup(f), parse_word(s), lookup(t)});
    return out;
}

} // namespace fldt
