#ifndef FLDT_COUNTER_HPP
#define FLDT_COUNTER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fldt/nfa.hpp"
#include "fldt/pcp_types.hpp"
#include "fldt/word.hpp"

namespace fldt {

enum class Guard { zero, pos, any };

struct CmTransition {
    int from;
    std::optional<Symbol> input; // nullopt = epsilon move
    Guard guard = Guard::any;
    int effect = 0; // -1, 0 or +1
    int to;
};

/// Nondeterministic one-counter automaton with zero tests. Acceptance is by
/// final state with the input consumed; the counter value is unconstrained
/// unless a zero-guarded move enforces it.
struct OneCounterMachine {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::set<int> initial;
    std::set<int> finals;
    std::vector<CmTransition> transitions;

    /// Simulation bound: counter <= slope * |input| + offset. Sound for the
    /// machines this module builds, whose counter moves are per-symbol bounded.
    int counter_slope = 1;
    int counter_offset = 2;

    int state_count() const { return static_cast<int>(state_names.size()); }
    void validate() const;
};

inline constexpr std::size_t kDefaultStepCap = std::size_t{1} << 22;

/// True iff some run within step_cap explored configurations accepts w.
/// Throws IndeterminateError if the cap is exhausted with live configurations.
bool run(const OneCounterMachine& m, const Word& w,
         std::size_t step_cap = kDefaultStepCap);

/// One-counter machine for the complement of {w markall(w) | w in L(p)};
/// p must be over an unmarked alphabet.
OneCounterMachine complement_marked_copy_machine(const Nfa& p);

/// The three-branch machine accepting every word of (Sigma u {#})* that is
/// not of the form u#v#, or is u#v# with u != v or g(u) != h(v).
OneCounterMachine counter_inclusion_machine(const Morphism& g, const Morphism& h);

OneCounterMachine parse_ocm(const std::string& text);
std::string to_string(const OneCounterMachine& m);

} // namespace fldt

#endif
