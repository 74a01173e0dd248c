#ifndef FLDT_NFA_HPP
#define FLDT_NFA_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fldt/word.hpp"

namespace fldt {

struct Transition {
    int from;
    Symbol sym;
    int to;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton with optional epsilon moves.
/// Missing transitions mean rejection, never an error. A DFA is an Nfa
/// that happens to satisfy a determinism predicate; there is no second type.
struct Nfa {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::set<int> initial;
    std::set<int> finals;
    std::vector<Transition> transitions;
    std::vector<std::pair<int, int>> epsilons;

    int state_count() const { return static_cast<int>(state_names.size()); }
    void validate() const;
};

enum class ProductMode { intersect, unite };

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 20;

bool accepts(const Nfa& a, const Word& w);

Nfa product(const Nfa& a, const Nfa& b, ProductMode mode);

/// Subset construction then final-set flip. Complement is taken relative to
/// the automaton's own alphabet.
Nfa complement(const Nfa& a, std::size_t subset_cap = kDefaultSubsetCap);

/// Complete DFA (with sink) for the same language.
Nfa determinize(const Nfa& a, std::size_t subset_cap = kDefaultSubsetCap);

/// Flips transition direction and swaps initial/final sets.
Nfa reverse(const Nfa& a);

/// Replaces every transition symbol by its marking-involution image.
/// Requires the alphabet to be closed under marking.
Nfa flip_marking(const Nfa& a);

/// None iff the language is empty; otherwise a shortest member, ties broken
/// lexicographically by alphabet order.
std::optional<Word> shortest_member(const Nfa& a);

/// Same transition structure with initial = {from}, finals = {to}.
Nfa fragment(const Nfa& a, int from, int to);

/// Equivalent automaton without epsilon transitions.
Nfa eps_free(const Nfa& a);

/// All members of length <= maxlen, sorted by length then alphabet order.
std::vector<Word> enumerate_nfa(const Nfa& a, std::size_t maxlen);

Nfa sigma_star(const Alphabet& alphabet);
Nfa sigma_plus(const Alphabet& alphabet);
Nfa empty_language(const Alphabet& alphabet);
Nfa singleton(const Alphabet& alphabet, const Word& w);
Nfa word_list(const Alphabet& alphabet, const std::vector<Word>& words);
/// Automaton for Sigma* SigmaBar* over a marking-closed alphabet.
Nfa unmarked_then_marked(const Alphabet& alphabet);

Nfa parse_nfa(const std::string& text);
std::string to_string(const Nfa& a);

/// Generalized automaton: transitions carry word labels, possibly empty or
/// longer than one symbol.
struct GnfaTransition {
    int from;
    Word label;
    int to;
};

struct Gnfa {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::set<int> initial;
    std::set<int> finals;
    std::vector<GnfaTransition> transitions;

    /// Splits every word label through fresh states.
    Nfa expand() const;
};

std::string to_string(const Gnfa& g);
Gnfa parse_gnfa(const std::string& text);

} // namespace fldt

#endif
