#include "fldt/pcp_types.hpp"

#include <sstream>

namespace fldt {

Word Morphism::apply(const Word& w) const {
    Word out;
    for (const Symbol& s : w) {
        const Word& im = image(s);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

const Word& Morphism::image(const Symbol& s) const {
    auto it = images.find(s);
    if (it == images.end())
        throw PreconditionError("morphism has no image for " + to_string(s));
    return it->second;
}

bool Morphism::nonerasing() const {
    for (const Symbol& s : domain)
        if (image(s).empty()) return false;
    return true;
}

void Morphism::validate() const {
    for (const Symbol& s : domain) {
        const Word& im = image(s);
        if (!codomain.contains_word(im))
            throw ParseError("morphism image leaves the codomain: " +
                             to_string(s) + " -> " + to_string(im));
    }
}

void PcpInstance::validate() const {
    if (g.domain != h.domain)
        throw ParseError("PCP morphisms must share their domain");
    g.validate();
    h.validate();
}

PcpInstance parse_pcp(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<Symbol> domain;
    std::map<Symbol, std::pair<Word, Word>> rows;
    bool have_domain = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "domain:") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                domain.push_back(parse_symbol(toks[i]));
            have_domain = true;
            continue;
        }
        // "1: a | baa"
        if (toks.size() != 4 || toks[2] != "|" || toks[0].back() != ':')
            throw ParseError("expected 'x: gimage | himage' in: " + line);
        Symbol letter = parse_symbol(toks[0].substr(0, toks[0].size() - 1));
        rows[letter] = {parse_word(toks[1]), parse_word(toks[3])};
    }
    if (!have_domain) throw ParseError("missing domain: line");
    PcpInstance inst;
    inst.g.domain = inst.h.domain = Alphabet(domain);
    std::vector<Symbol> codomain;
    auto note = [&](const Word& w) {
        for (const Symbol& s : w)
            if (std::find(codomain.begin(), codomain.end(), s) == codomain.end())
                codomain.push_back(s);
    };
    for (const Symbol& s : domain) {
        auto it = rows.find(s);
        if (it == rows.end())
            throw ParseError("no image row for domain letter " + to_string(s));
        inst.g.images[s] = it->second.first;
        inst.h.images[s] = it->second.second;
        note(it->second.first);
        note(it->second.second);
    }
    if (rows.size() != domain.size())
        throw ParseError("image row for a letter outside the domain");
    inst.g.codomain = inst.h.codomain = Alphabet(codomain);
    inst.validate();
    return inst;
}

std::string to_string(const PcpInstance& inst) {
    std::ostringstream os;
    os << "domain: " << to_string(inst.g.domain) << "\n";
    for (const Symbol& s : inst.g.domain)
        os << to_string(s) << ": " << to_string(inst.g.image(s)) << " | "
           << to_string(inst.h.image(s)) << "\n";
    return os.str();
}

} // namespace fldt
