#include <doctest.h>

#include "lantern/twist.hpp"

using namespace lantern;

TEST_CASE("complexity") {
    CHECK(complexity({1, 2, 3}).is_neg_infinity());
    CHECK(complexity({1, 3}) == ComplexityValue::finite(2));
    CHECK(complexity({2, 5, 6}) == ComplexityValue::finite(4));
    CHECK(complexity({1}).is_neg_infinity());
    CHECK(complexity({2}) == ComplexityValue::finite(1));
    CHECK_THROWS_AS(complexity({}), std::invalid_argument);
}

TEST_CASE("complexity ordering has -infinity minimal") {
    CHECK(ComplexityValue::neg_infinity() < ComplexityValue::finite(1));
    CHECK(ComplexityValue::finite(1) < ComplexityValue::finite(2));
    CHECK(ComplexityValue::neg_infinity() == ComplexityValue::neg_infinity());
}

TEST_CASE("canonical curves") {
    CHECK(canonical_curve({2}).word == FreeWord::generator(2));
    CHECK(canonical_curve({1, 2}).word == FreeWord({1, 2}));
    CHECK(canonical_curve({1, 3}).word == FreeWord({1, 3}));
    CHECK(canonical_curve({3, 1}).enclosed == std::vector<int>{1, 3});
    CHECK_THROWS_AS(canonical_curve({}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_curve({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_curve({2, 2}), std::invalid_argument);
}

TEST_CASE("terminal letters") {
    CHECK(is_terminal(delta(3)));
    CHECK_FALSE(is_terminal(plain_twist({1, 3}, +1)));
    CHECK(is_terminal(plain_twist({1, 3}, -1)));
    CHECK(is_terminal(gamma(2)));
    CHECK(is_terminal(gamma(4)));

    // prefix set with a non-canonical word is not a gamma
    Twist odd{CurveSpec{{1, 2, 3}, FreeWord({1, 3, 2})}, +1, {}};
    CHECK_FALSE(is_terminal(odd));
}

TEST_CASE("surface and word validation") {
    CHECK_THROWS_AS(Surface(0), std::invalid_argument);
    CHECK_THROWS_AS(make_word(2, {delta(3)}), std::invalid_argument);
    CHECK_NOTHROW(make_word(3, {delta(3)}));
}
