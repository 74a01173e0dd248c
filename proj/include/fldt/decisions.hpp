#ifndef FLDT_DECISIONS_HPP
#define FLDT_DECISIONS_HPP

#include <optional>
#include <string>

#include "fldt/cfg.hpp"
#include "fldt/nfa.hpp"
#include "fldt/word.hpp"

namespace fldt {

/// Uniform result shape for the decision procedures. `witness` is the w of
/// the problem statement (e.g. the root), `member` the exhibited element of
/// the queried language. For squares_subset the witness is a counterexample
/// and accompanies answer = false.
struct DecisionReport {
    bool answer = false;
    std::optional<Word> witness;
    std::optional<Word> member;
    std::string method;
};

/// True iff some w in L(P) (nonempty unless allow_empty) has w^n in L(R).
/// Searches initial/midpoint/final state sequences and tests emptiness of the
/// iterated fragment product intersected with P. Witness = shortest such w.
DecisionReport has_power(const Nfa& r, int n, const Nfa& p,
                         bool allow_empty = false);

DecisionReport has_square(const Nfa& r);

/// Automaton for {w : w^n in L(R)}: all n tracks step on the same symbol and
/// the midpoint states are guessed up front in the initial tuples.
Nfa nth_root(const Nfa& r, int n, std::size_t state_cap = kDefaultSubsetCap);

/// Automaton for {w : w^n in L(R) for some n >= 2}, via the transition
/// monoid of the determinized input.
Nfa star_root(const Nfa& r, std::size_t monoid_cap = kDefaultSubsetCap);

/// True iff {ww : w in L(P)} is a subset of L(R); false comes with a
/// counterexample witness w (ww not in L(R)) and member ww.
DecisionReport squares_subset(const Nfa& p, const Nfa& r);

/// True iff w markall(w) in L(R) for some unmarked w; R's alphabet must be
/// marking-closed.
DecisionReport has_marked_copy(const Nfa& r, bool allow_empty = false);

enum class ReverseCopyMethod { relation, grammar };

/// True iff w w^r in L(R) for some w. The relation method walks the
/// forward/backward pair automaton to the diagonal; the grammar method
/// intersects the even-palindrome grammar with R.
DecisionReport has_reverse_copy(const Nfa& r, bool allow_empty = false,
                                ReverseCopyMethod method = ReverseCopyMethod::relation);

/// True iff w1 w1^r ... wk wk^r in L(R); individual blocks may be empty.
DecisionReport has_mirror_product(const Nfa& r, std::size_t k);

/// True iff some k >= 1 works; the block relation's transitive closure.
DecisionReport has_mirror_star(const Nfa& r);

} // namespace fldt

#endif
