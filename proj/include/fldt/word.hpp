#ifndef FLDT_WORD_HPP
#define FLDT_WORD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fldt/errors.hpp"

namespace fldt {

/// A letter together with its marking flag. The base alphabet and the marked
/// alphabet are disjoint by construction: `a` and `~a` are distinct symbols
/// and flipping the flag is an involution.
struct Symbol {
    char base = '\0';
    bool marked = false;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;

    Symbol flipped() const { return Symbol{base, !marked}; }
};

using Word = std::vector<Symbol>;

Symbol sym(char base, bool marked = false);

/// Renders "a" for unmarked, "~a" for marked symbols.
std::string to_string(const Symbol& s);

/// Whitespace-free token string; the empty word renders as "_".
std::string to_string(const Word& w);

Symbol parse_symbol(std::string_view token);
Word parse_word(std::string_view text);

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Symbol& at(std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    bool contains(const Symbol& s) const;
    /// Position in the declared order; used for lexicographic tie-breaking.
    std::optional<std::size_t> index_of(const Symbol& s) const;

    bool contains_word(const Word& w) const;

    /// Whether the marking involution maps the alphabet onto itself.
    bool closed_under_marking() const;

    /// The unmarked symbols, in declared order.
    Alphabet unmarked_part() const;
    /// This alphabet extended with the marked copy of every unmarked symbol.
    Alphabet with_marked() const;

    /// Union keeping the declared order of *this, then new symbols of other.
    Alphabet merged(const Alphabet& other) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

private:
    std::vector<Symbol> symbols_;
};

Alphabet parse_alphabet(std::string_view text);
std::string to_string(const Alphabet& a);

Word concat(const Word& u, const Word& v);
Word reverse_word(const Word& w);

/// Marks every symbol; the input must be unmarked.
Word markall(const Word& w);
/// Flips the marking of every symbol (total involution).
Word markflip(const Word& w);

Word power(const Word& w, std::size_t n);

/// True iff w = u^n implies n = 1. Rejects the empty word.
bool is_primitive(const Word& w);

/// Orders by length, then lexicographically by alphabet position.
bool word_less(const Word& a, const Word& b, const Alphabet& alphabet);

/// All interleavings of u and v, deduplicated, sorted by operator<.
/// Refuses inputs with |u|+|v| > limit_total.
std::vector<Word> shuffle_set(const Word& u, const Word& v,
                              std::size_t limit_total = 24);

struct ShuffleSplit {
    /// 0-based positions of v assigned to the first component.
    std::vector<std::size_t> first_positions;
};

/// Decides v in u1 ⧢ u2 by dynamic programming over consumed-prefix pairs.
std::optional<ShuffleSplit> shuffle_membership(const Word& v, const Word& u1,
                                               const Word& u2);

enum class SelfShuffleMode { plain, reversed, marked };

/// Finds w with v in w ⧢ w (plain), w ⧢ w^r (reversed) or w ⧢ markall(w)
/// (marked). The marked mode is polynomial: the marked positions determine
/// the second copy. The other modes search over position splits.
std::optional<Word> self_shuffle_check(const Word& v, SelfShuffleMode mode);

} // namespace fldt

#endif
