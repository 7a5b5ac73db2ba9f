#include <doctest.h>

#include <random>

#include "lantern/twist.hpp"
#include "test_util.hpp"

using namespace lantern;
using namespace lantern::testutil;

TEST_CASE("delta_1 action on two boundaries") {
    MappingClassAction a = twist_action(2, delta(1));
    CHECK(a.loop_images()[0] == FreeWord::generator(1));
    CHECK(a.loop_images()[1] == FreeWord::generator(2));
    CHECK(a.arc_prefixes()[0] == FreeWord::generator(1));
    CHECK(a.arc_prefixes()[1].empty());
}

TEST_CASE("gamma_2 action on two boundaries") {
    MappingClassAction a = twist_action(2, gamma(2));
    CHECK(a.loop_images()[0] == FreeWord({1, 2, 1, -2, -1}));
    CHECK(a.loop_images()[1] == FreeWord({1, 2, -1}));
    CHECK(a.arc_prefixes()[0] == FreeWord({1, 2}));
    CHECK(a.arc_prefixes()[1] == FreeWord({1, 2}));
}

TEST_CASE("twist inverse law") {
    for (int n = 2; n <= 4; ++n) {
        std::mt19937 rng(n);
        for (int trial = 0; trial < 20; ++trial) {
            Twist t = random_twist(rng, n);
            MappingClassAction fwd = twist_action(n, t);
            MappingClassAction bwd = twist_action(n, t.inverse());
            CHECK(compose(fwd, bwd).is_identity());
            CHECK(compose(bwd, fwd).is_identity());
        }
    }
}

TEST_CASE("group laws on random words") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        MappingClassAction a = word_to_action(random_word(rng, n, 4));
        MappingClassAction b = word_to_action(random_word(rng, n, 4));
        MappingClassAction c = word_to_action(random_word(rng, n, 4));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(MappingClassAction::identity(n), a) == a);
        CHECK(compose(a, MappingClassAction::identity(n)) == a);
    }
}

TEST_CASE("word inverse gives the inverse action") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        TwistWord w = random_word(rng, n, 5);
        MappingClassAction a = word_to_action(w);
        MappingClassAction ai = word_to_action(inverse_word(w));
        CHECK(compose(a, ai).is_identity());
    }
}

TEST_CASE("faithfulness smoke tests") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            CHECK_FALSE(twist_action(n, delta(i)).is_identity());

    // delta has trivial loop action, nontrivial arc action
    MappingClassAction d = twist_action(3, delta(2));
    for (int i = 1; i <= 3; ++i)
        CHECK(d.loop_images()[i - 1] == FreeWord::generator(i));
    CHECK_FALSE(d.arc_prefixes()[1].empty());

    // distinct canonical twists are distinguished
    std::vector<Twist> twists;
    for (auto S : {std::vector<int>{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}})
        twists.push_back(plain_twist(S, +1));
    for (std::size_t i = 0; i < twists.size(); ++i)
        for (std::size_t j = i + 1; j < twists.size(); ++j)
            CHECK_FALSE(equal(twist_action(3, twists[i]), twist_action(3, twists[j])));
}

TEST_CASE("equality examples") {
    CHECK_FALSE(equal(twist_action(2, delta(1)), MappingClassAction::identity(2)));
    CHECK(equal(word_to_action(make_word(2, {delta(1), delta(2)})),
                word_to_action(make_word(2, {delta(2), delta(1)}))));
    CHECK_FALSE(equal(twist_action(2, gamma(2)), twist_action(2, delta(1))));
    CHECK_THROWS_AS(equal(MappingClassAction::identity(2), MappingClassAction::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("boundary twists are central") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        int i = std::uniform_int_distribution<int>(1, n)(rng);
        Twist t = random_twist(rng, n);
        CHECK(oracle_equal(make_word(n, {delta(i), t}), make_word(n, {t, delta(i)})));
    }
}

TEST_CASE("loop images stay conjugate by the arc prefix") {
    // g(x_i) = u_i x_i u_i^-1 for every action in the image of word_to_action
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        MappingClassAction a = word_to_action(random_word(rng, n, 5));
        for (int i = 1; i <= n; ++i)
            CHECK(a.loop_images()[i - 1] ==
                  FreeWord::generator(i).conjugated_by(a.arc_prefixes()[i - 1]));
    }
}

TEST_CASE("word_to_action basics") {
    CHECK(word_to_action(make_word(3, {})).is_identity());
    CHECK(word_to_action(make_word(2, {delta(1), delta(1, -1)})).is_identity());
}

TEST_CASE("bare curve specs must be canonical") {
    CurveSpec odd{{1, 3}, FreeWord({3, 1})};
    CHECK_THROWS_AS(twist_action(3, odd, +1), std::invalid_argument);
    CHECK_NOTHROW(twist_action(3, canonical_curve({1, 3}), +1));
}
