#ifndef FLDT_CFG_HPP
#define FLDT_CFG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fldt/nfa.hpp"
#include "fldt/word.hpp"

namespace fldt {

/// One right-hand-side item: a terminal symbol or a nonterminal index.
struct RhsItem {
    bool terminal = true;
    Symbol term{};
    int nonterminal = -1;

    static RhsItem t(Symbol s) { return RhsItem{true, s, -1}; }
    static RhsItem nt(int i) { return RhsItem{false, Symbol{}, i}; }
    friend bool operator==(const RhsItem&, const RhsItem&) = default;
};

struct Production {
    int lhs;
    std::vector<RhsItem> rhs;
};

/// Context-free grammar. `linear` is recomputed from the productions:
/// true iff every right-hand side has at most one nonterminal.
struct Cfg {
    Alphabet terminals;
    std::vector<std::string> nonterminals;
    int start = 0;
    std::vector<Production> productions;
    bool linear = false;

    int add_nonterminal(const std::string& name);
    int nonterminal_id(const std::string& name) const;
    void add(int lhs, std::vector<RhsItem> rhs);
    void recompute_linear();
    void validate() const;
};

/// True iff L(G) is empty, by least-fixpoint of productive nonterminals.
bool is_empty(const Cfg& g);

/// CYK over an internally binarized normal form; epsilon via nullable start.
bool membership(const Cfg& g, const Word& w);

/// Exactly the members of length <= maxlen. Refuses maxlen > cap.
std::vector<Word> enumerate(const Cfg& g, std::size_t maxlen,
                            std::size_t cap = 16);

/// Bar-Hillel triple construction; preserves the linearity flag.
Cfg intersect_regular(const Cfg& g, const Nfa& a);

/// Drops unreachable and unproductive nonterminals.
Cfg trim(const Cfg& g);

/// Minimal length of a derivable word, or nullopt if the language is empty.
std::optional<std::size_t> min_yield(const Cfg& g);

/// Shortest member, ties broken lexicographically by terminal order.
std::optional<Word> shortest_word(const Cfg& g);

/// Even palindromes {w w^r}; with_empty controls whether epsilon is included.
Cfg palindrome_grammar(const Alphabet& sigma, bool with_empty = true);
/// Concatenation of k palindrome blocks w1 w1^r ... wk wk^r.
Cfg mirror_k_grammar(const Alphabet& sigma, std::size_t k);
/// Union over all k >= 1 of the k-block mirror products.
Cfg mirror_star_grammar(const Alphabet& sigma);

/// L(g) . L(tail) for a linear g and regular tail; the result is linear.
Cfg concat_regular_right(const Cfg& g, const Nfa& tail);

Cfg parse_cfg(const std::string& text);
std::string to_string(const Cfg& g);

} // namespace fldt

#endif
