#include <doctest.h>

#include <algorithm>

#include "fldt/word.hpp"

using namespace fldt;

namespace {

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

const Alphabet kAb({sym('a'), sym('b')});

} // namespace

TEST_CASE("symbol and word rendering round-trips") {
    CHECK(to_string(sym('a')) == "a");
    CHECK(to_string(sym('a', true)) == "~a");
    CHECK(parse_symbol("~b") == sym('b', true));
    CHECK(to_string(Word{}) == "_");
    CHECK(parse_word("_").empty());
    Word w = parse_word("a~bc");
    REQUIRE(w.size() == 3);
    CHECK(w[1] == sym('b', true));
    CHECK(parse_word(to_string(w)) == w);
    CHECK_THROWS_AS(parse_symbol("~"), ParseError);
    CHECK_THROWS_AS(parse_word("a ~"), ParseError);
}

TEST_CASE("power unfolds concatenation") {
    CHECK(power(parse_word("ab"), 2) == parse_word("abab"));
    CHECK(power(parse_word("ab"), 0).empty());
    CHECK(power(parse_word("a"), 3) == parse_word("aaa"));
}

TEST_CASE("primitivity") {
    CHECK_FALSE(is_primitive(parse_word("abab")));
    CHECK(is_primitive(parse_word("ab")));
    CHECK_FALSE(is_primitive(parse_word("aaaaa")));
    CHECK_THROWS_AS(is_primitive(Word{}), PreconditionError);
}

TEST_CASE("primitivity agrees with the divisor oracle up to length 10") {
    for (const Word& w : all_words(kAb, 10)) {
        if (w.empty()) continue;
        bool imprimitive = false;
        for (std::size_t d = 1; d < w.size(); ++d) {
            if (w.size() % d != 0) continue;
            Word head(w.begin(), w.begin() + static_cast<long>(d));
            if (power(head, w.size() / d) == w) imprimitive = true;
        }
        CHECK(is_primitive(w) == !imprimitive);
    }
}

TEST_CASE("marking involution and reversal commute") {
    Word w = parse_word("abba");
    CHECK(markall(w) == parse_word("~a~b~b~a"));
    CHECK(markall(reverse_word(w)) == reverse_word(markall(w)));
    CHECK(markflip(markflip(parse_word("a~b"))) == parse_word("a~b"));
    CHECK_THROWS_AS(markall(parse_word("a~b")), PreconditionError);
    for (const Word& x : all_words(kAb, 6))
        CHECK(reverse_word(reverse_word(x)) == x);
}

TEST_CASE("shuffle_set basics") {
    auto s = shuffle_set(parse_word("ab"), parse_word("ab"));
    CHECK(s == std::vector<Word>{parse_word("aabb"), parse_word("abab")});
    CHECK(shuffle_set(parse_word("abc"), Word{}) ==
          std::vector<Word>{parse_word("abc")});
    CHECK(shuffle_set(parse_word("a"), parse_word("b")) ==
          std::vector<Word>{parse_word("ab"), parse_word("ba")});
    Word big(13, sym('a'));
    CHECK_THROWS_AS(shuffle_set(big, big), CapacityError);
}

TEST_CASE("shuffle_set is symmetric and consistent with the membership DP") {
    std::vector<Word> pool = all_words(kAb, 4);
    for (const Word& u : pool)
        for (const Word& v : pool) {
            if (u.size() + v.size() > 8 || u.size() > v.size()) continue;
            auto uv = shuffle_set(u, v);
            CHECK(uv == shuffle_set(v, u));
            for (const Word& m : uv) CHECK(shuffle_membership(m, u, v));
        }
}

TEST_CASE("shuffle_membership certificates") {
    auto split = shuffle_membership(parse_word("aabb"), parse_word("ab"),
                                    parse_word("ab"));
    REQUIRE(split);
    CHECK(split->first_positions == std::vector<std::size_t>{1, 3});
    CHECK_FALSE(shuffle_membership(parse_word("abba"), parse_word("ab"),
                                   parse_word("ab")));
    Word v = parse_word("babab");
    auto idsplit = shuffle_membership(v, v, Word{});
    REQUIRE(idsplit);
    CHECK(idsplit->first_positions.size() == v.size());

    // A certificate really splits v into u1 and u2.
    for (const Word& u1 : all_words(kAb, 3))
        for (const Word& u2 : all_words(kAb, 3))
            for (const Word& m : shuffle_set(u1, u2)) {
                auto c = shuffle_membership(m, u1, u2);
                REQUIRE(c);
                Word got1, got2;
                std::size_t at = 0;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    if (at < c->first_positions.size() &&
                        c->first_positions[at] == i) {
                        got1.push_back(m[i]);
                        ++at;
                    } else {
                        got2.push_back(m[i]);
                    }
                }
                CHECK(got1 == u1);
                CHECK(got2 == u2);
            }
}

TEST_CASE("self_shuffle_check modes") {
    CHECK(self_shuffle_check(parse_word("a~a"), SelfShuffleMode::marked) ==
          parse_word("a"));
    CHECK(self_shuffle_check(parse_word("aabb"), SelfShuffleMode::plain) ==
          parse_word("ab"));
    CHECK_FALSE(self_shuffle_check(parse_word("aba"), SelfShuffleMode::plain));
    CHECK(self_shuffle_check(parse_word("abba"), SelfShuffleMode::reversed));
    CHECK_FALSE(
        self_shuffle_check(parse_word("a~b"), SelfShuffleMode::marked));
}

TEST_CASE("marked self-shuffle recovers w from every interleaving") {
    for (const Word& w : all_words(kAb, 6)) {
        if (w.empty()) continue;
        for (const Word& m : shuffle_set(w, markall(w)))
            CHECK(self_shuffle_check(m, SelfShuffleMode::marked) == w);
    }
}

TEST_CASE("word_less orders by length then alphabet position") {
    CHECK(word_less(parse_word("b"), parse_word("aa"), kAb));
    CHECK(word_less(parse_word("ab"), parse_word("ba"), kAb));
    CHECK_FALSE(word_less(parse_word("ba"), parse_word("ba"), kAb));
    CHECK(word_less(Word{}, parse_word("a"), kAb));
}

TEST_CASE("alphabet marking queries") {
    Alphabet closed({sym('a'), sym('b'), sym('a', true), sym('b', true)});
    CHECK(closed.closed_under_marking());
    CHECK_FALSE(kAb.closed_under_marking());
    CHECK(kAb.with_marked() == closed);
    CHECK(closed.unmarked_part() == kAb);
    CHECK(kAb.index_of(sym('b')) == 1);
    CHECK_FALSE(kAb.index_of(sym('c')).has_value());
}
