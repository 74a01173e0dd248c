#include <doctest.h>

#include <algorithm>
#include <random>

#include "fldt/cfg.hpp"

using namespace fldt;

namespace {

const Alphabet kAb({sym('a'), sym('b')});

std::vector<Word> all_words(const Alphabet& sigma, std::size_t maxlen) {
    std::vector<Word> out{Word{}};
    std::size_t lo = 0;
    for (std::size_t l = 1; l <= maxlen; ++l) {
        std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i)
            for (const Symbol& s : sigma) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(w);
            }
        lo = hi;
    }
    return out;
}

bool contains(const std::vector<Word>& ws, const Word& w) {
    return std::find(ws.begin(), ws.end(), w) != ws.end();
}

Nfa random_nfa(std::mt19937& rng, int states = 3) {
    Nfa a;
    a.alphabet = kAb;
    for (int i = 0; i < states; ++i)
        a.state_names.push_back("q" + std::to_string(i));
    a.initial = {0};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int q = 0; q < states; ++q) {
        if (coin(rng) < 0.4) a.finals.insert(q);
        for (const Symbol& s : kAb)
            for (int to = 0; to < states; ++to)
                if (coin(rng) < 0.4) a.transitions.push_back({q, s, to});
    }
    if (a.finals.empty()) a.finals.insert(states - 1);
    return a;
}

} // namespace

TEST_CASE("is_empty by productivity") {
    Cfg g = parse_cfg("start: S\nS -> a S\n");
    CHECK(is_empty(g));
    Cfg g2 = parse_cfg("start: S\nS -> a\n");
    CHECK_FALSE(is_empty(g2));
}

TEST_CASE("palindrome grammar membership and enumeration") {
    Cfg e = palindrome_grammar(kAb);
    CHECK(e.linear);
    CHECK(membership(e, parse_word("abba")));
    CHECK_FALSE(membership(e, parse_word("ab")));
    CHECK(membership(e, Word{}));
    auto upto2 = enumerate(e, 2);
    CHECK(upto2 == std::vector<Word>{Word{}, parse_word("aa"), parse_word("bb")});

    Cfg ua = palindrome_grammar(Alphabet({sym('a')}));
    CHECK(enumerate(ua, 4) ==
          std::vector<Word>{Word{}, parse_word("aa"), parse_word("aaaa")});

    Cfg noeps = palindrome_grammar(kAb, false);
    CHECK_FALSE(membership(noeps, Word{}));
    CHECK(membership(noeps, parse_word("aa")));
}

TEST_CASE("mirror product grammars") {
    Cfg e2 = mirror_k_grammar(kAb, 2);
    CHECK(membership(e2, parse_word("abbabaab")));
    CHECK(membership(e2, parse_word("aa"))); // one block empty
    Cfg star = mirror_star_grammar(kAb);
    for (std::size_t k = 1; k <= 3; ++k) {
        Cfg ek = mirror_k_grammar(kAb, k);
        for (const Word& w : enumerate(ek, 8))
            CHECK(membership(star, w));
    }
}

TEST_CASE("fixed-word grammar") {
    Cfg g = parse_cfg("start: S\nS -> a b\n");
    CHECK(enumerate(g, 4) == std::vector<Word>{parse_word("ab")});
    CHECK(is_empty(parse_cfg("start: S\nS -> a S\n")));
    CHECK(enumerate(parse_cfg("start: S\nS -> a S\n"), 6).empty());
}

TEST_CASE("enumeration cap") {
    Cfg e = palindrome_grammar(kAb);
    CHECK_THROWS_AS(enumerate(e, 17), CapacityError);
}

TEST_CASE("membership agrees with enumeration") {
    Cfg fixtures[] = {palindrome_grammar(kAb), mirror_k_grammar(kAb, 2),
                      mirror_star_grammar(kAb),
                      parse_cfg("start: S\nS -> a S b | _\n")};
    for (const Cfg& g : fixtures) {
        auto members = enumerate(g, 6);
        for (const Word& w : all_words(kAb, 6))
            CHECK(membership(g, w) == contains(members, w));
    }
}

TEST_CASE("intersection with regular languages") {
    Cfg e = palindrome_grammar(kAb);
    Nfa abba = singleton(kAb, parse_word("abba"));
    CHECK_FALSE(is_empty(intersect_regular(e, abba)));
    Nfa ab = singleton(kAb, parse_word("ab"));
    CHECK(is_empty(intersect_regular(e, ab)));

    Nfa all = sigma_star(kAb);
    Cfg same = intersect_regular(e, all);
    CHECK(same.linear);
    for (const Word& w : all_words(kAb, 6))
        CHECK(membership(same, w) == membership(e, w));
}

TEST_CASE("intersection is a conjunction on a random population") {
    std::mt19937 rng(17);
    Cfg e = palindrome_grammar(kAb);
    for (int trial = 0; trial < 25; ++trial) {
        Nfa a = random_nfa(rng);
        Cfg inter = intersect_regular(e, a);
        CHECK(inter.linear == e.linear);
        for (const Word& w : all_words(kAb, 6))
            CHECK(membership(inter, w) == (membership(e, w) && accepts(a, w)));
    }
}

TEST_CASE("is_empty matches bounded enumeration on derivation-depth bound") {
    std::mt19937 rng(29);
    Cfg fixtures[] = {palindrome_grammar(kAb),
                      parse_cfg("start: S\nS -> a S\n"),
                      parse_cfg("start: S\nS -> A\nA -> a A\n"),
                      intersect_regular(palindrome_grammar(kAb),
                                        singleton(kAb, parse_word("ab")))};
    for (const Cfg& g : fixtures) {
        auto m = min_yield(g);
        CHECK(is_empty(g) == !m.has_value());
        if (m) {
            auto sw = shortest_word(g);
            REQUIRE(sw);
            CHECK(sw->size() == *m);
            CHECK(membership(g, *sw));
        }
    }
}

TEST_CASE("concatenation with a regular tail") {
    Cfg e = palindrome_grammar(kAb, false);
    Nfa tail = singleton(kAb, parse_word("ab"));
    Cfg cat = concat_regular_right(e, tail);
    CHECK(cat.linear);
    for (const Word& w : all_words(kAb, 6)) {
        bool expect = w.size() >= 2 && w[w.size() - 2] == sym('a') &&
                      w.back() == sym('b') &&
                      membership(e, Word(w.begin(), w.end() - 2));
        CHECK(membership(cat, w) == expect);
    }
}

TEST_CASE("grammar format round-trips") {
    Cfg g = parse_cfg("start: S\nS -> a T b | c\nT -> _ | T T\n");
    CHECK_FALSE(g.linear);
    Cfg h = parse_cfg(to_string(g));
    Alphabet abc({sym('a'), sym('b'), sym('c')});
    for (const Word& w : all_words(abc, 4))
        CHECK(membership(h, w) == membership(g, w));
    CHECK_THROWS_AS(parse_cfg("S -> a\n"), ParseError);
    CHECK_THROWS_AS(parse_cfg("start: S\nbogus\n"), ParseError);
}

TEST_CASE("trim removes useless nonterminals") {
    Cfg g = parse_cfg("start: S\nS -> a | B\nB -> b B\nC -> c\n");
    Cfg t = trim(g);
    CHECK(t.nonterminals.size() == 1);
    for (const Word& w : all_words(kAb, 4))
        CHECK(membership(t, w) == membership(g, w));
}
