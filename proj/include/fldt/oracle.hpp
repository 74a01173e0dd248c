#ifndef FLDT_ORACLE_HPP
#define FLDT_ORACLE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "fldt/cfg.hpp"
#include "fldt/nfa.hpp"
#include "fldt/word.hpp"

namespace fldt {

struct SearchBudget {
    std::size_t max_word_len = 10;
    std::size_t max_candidates = 200000;
};

using LangHandle = std::variant<Nfa, Cfg>;

/// Exactly the members of length <= maxlen, by length then alphabet order.
std::vector<Word> enumerate_members(const LangHandle& lang, std::size_t maxlen);

enum class FormKind {
    square,
    power,          // uses param = n
    marked_copy,
    reverse_copy,
    mirror_product, // uses param = k
    self_shuffle,
    reverse_shuffle,
    marked_shuffle,
    palindrome,
};

struct Form {
    FormKind kind = FormKind::square;
    int param = 0;

    static Form square() { return {FormKind::square, 0}; }
    static Form power(int n) { return {FormKind::power, n}; }
    static Form marked_copy() { return {FormKind::marked_copy, 0}; }
    static Form reverse_copy() { return {FormKind::reverse_copy, 0}; }
    static Form mirror_product(int k) { return {FormKind::mirror_product, k}; }
    static Form self_shuffle() { return {FormKind::self_shuffle, 0}; }
    static Form reverse_shuffle() { return {FormKind::reverse_shuffle, 0}; }
    static Form marked_shuffle() { return {FormKind::marked_shuffle, 0}; }
    static Form palindrome() { return {FormKind::palindrome, 0}; }
};

enum class Verdict { yes, no_up_to_bound, unknown };

struct ScanResult {
    Verdict verdict = Verdict::unknown;
    std::optional<Word> witness; // the w of the form
    std::optional<Word> member;  // the element of L of that form
};

/// True iff m has the given form; on success *witness is the underlying w
/// (for mirror products and palindromes, m itself).
bool word_has_form(const Word& m, const Form& form, Word* witness);

/// Brute-force scan of L's members in canonical order. yes is definitive;
/// no_up_to_bound only covers the budget; unknown absorbs every capacity
/// exhaustion (too many members, untestable candidates).
ScanResult scan_for_form(const LangHandle& lang, const Form& form,
                         const SearchBudget& budget);

} // namespace fldt

#endif
