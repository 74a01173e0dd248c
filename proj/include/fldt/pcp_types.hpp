#ifndef FLDT_PCP_TYPES_HPP
#define FLDT_PCP_TYPES_HPP

#include <map>
#include <string>

#include "fldt/word.hpp"

namespace fldt {

/// A monoid morphism given by its letter images; total on the domain.
struct Morphism {
    Alphabet domain;
    Alphabet codomain;
    std::map<Symbol, Word> images;

    Word apply(const Word& w) const;
    const Word& image(const Symbol& s) const;
    bool nonerasing() const;
    void validate() const;
};

/// A PCP instance (g, h): two morphisms with shared domain and codomain.
/// A solution is a nonempty w with g(w) = h(w).
struct PcpInstance {
    Morphism g;
    Morphism h;

    std::size_t size() const { return g.domain.size(); }
    void validate() const;
};

PcpInstance parse_pcp(const std::string& text);
std::string to_string(const PcpInstance& inst);

} // namespace fldt

#endif
