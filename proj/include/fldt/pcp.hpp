#ifndef FLDT_PCP_HPP
#define FLDT_PCP_HPP

#include <optional>

#include "fldt/cfg.hpp"
#include "fldt/nfa.hpp"
#include "fldt/pcp_types.hpp"

namespace fldt {

/// Shortest solution w (g(w) = h(w), w nonempty) with |w| <= max_len, by BFS
/// over overflow configurations. nullopt means "none up to the bound" only.
std::optional<Word> solve_bounded(const PcpInstance& inst, std::size_t max_len);

/// The overflow automaton over the marked domain alphabet: states are the
/// prefixes of h-images, transitions read a or a markall(z), and a word is
/// accepted iff its unmarked part u and the unmarked projection z of its
/// marked part satisfy g(u) = h(z).
Gnfa marked_shuffle_automaton(const PcpInstance& inst);

/// Linear grammar for {g(w) u^r h(u) w^r : u, w nonempty domain words};
/// requires disjoint domain and codomain alphabets.
Cfg build_L2(const PcpInstance& inst);

/// Variant with the second half marked: {g(w) u^r markall(h(u) w^r)} over
/// possibly empty u, w.
Cfg build_L2_marked(const PcpInstance& inst);

/// build_L2 concatenated with n-2 tail blocks. With separators each block is
/// # Delta+ Gamma+ (the definition); without, Delta+ Gamma+ (the shape the
/// correctness argument analyses).
Cfg build_Ln(const PcpInstance& inst, int n, bool separators = true);

/// build_L2 concatenated with (Delta+ Gamma+)*.
Cfg build_Lomega(const PcpInstance& inst);

/// Linear grammar for {$ g(w) u^r # $ h(u) w^r # }; by default the fully
/// empty member $#$# (u = w = empty) is excluded, since it is a self-shuffle
/// witness regardless of the instance.
Cfg build_Lsharp(const PcpInstance& inst, bool include_empty = false);

/// The three-rule-family grammar for {# g(v) ## h(v)^r # : v nonempty}.
Cfg build_L1(const PcpInstance& inst);

/// build_L1 concatenated with (cc)^{k-1} for a fresh letter c.
Cfg build_Lk(const PcpInstance& inst, std::size_t k);

} // namespace fldt

#endif
