#include <doctest.h>

#include "lantern/parse.hpp"

using namespace lantern;

TEST_CASE("grammar examples") {
    TwistWord w = parse_twist_word("d1 g3^-2 t{1,3}", 3);
    REQUIRE(w.letters.size() == 4);
    CHECK(w.letters[0] == delta(1));
    CHECK(w.letters[1] == gamma(3, -1));
    CHECK(w.letters[2] == gamma(3, -1));
    CHECK(w.letters[3] == plain_twist({1, 3}, +1));
}

TEST_CASE("singleton and prefix normalization") {
    TwistWord w = parse_twist_word("t{1}", 2);
    REQUIRE(w.letters.size() == 1);
    CHECK(w.letters[0] == delta(1));
    CHECK(is_delta(w.letters[0]));

    TwistWord g = parse_twist_word("t{1,2}", 2);
    REQUIRE(g.letters.size() == 1);
    CHECK(g.letters[0] == gamma(2));
    CHECK(is_gamma(g.letters[0]));
}

TEST_CASE("parse errors carry a column") {
    CHECK_THROWS_AS(parse_twist_word("t{1,5}", 3), ParseError);
    try {
        parse_twist_word("x{", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column == 1);
    }
    CHECK_THROWS_AS(parse_twist_word("t{}", 3), ParseError);
    CHECK_THROWS_AS(parse_twist_word("d1^0", 3), ParseError);
    CHECK_THROWS_AS(parse_twist_word("d0", 3), ParseError);
    CHECK_THROWS_AS(parse_twist_word("t{2,1}", 3), ParseError);
    CHECK_THROWS_AS(parse_twist_word("g1", 3), ParseError);
}

TEST_CASE("print and reparse round trip") {
    for (const char* text : {"", "d1", "d1 d2^-1 g2 t{1,3}^-1 t{2,4}", "g4^3"}) {
        TwistWord w = parse_twist_word(text, 4);
        TwistWord again = parse_twist_word(print_twist_word(w), 4);
        CHECK(again == w);
    }
}

TEST_CASE("exponents expand at parse time") {
    TwistWord w = parse_twist_word("d2^3", 2);
    CHECK(w.letters.size() == 3);
    TwistWord v = parse_twist_word("t{1,3}^-2", 3);
    REQUIRE(v.letters.size() == 2);
    CHECK(v.letters[0].sign == -1);
}
