#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "spectree/degree_sequence.hpp"
#include "spectree/random.hpp"
#include "spectree/tree.hpp"

using namespace spectree;

TEST_CASE("parsing expands repetition and sorts nonincreasing") {
    CHECK(DegreeSequence::parse("4,3,3,2,1^6").to_string() == "4,3,3,2,1,1,1,1,1,1");
    CHECK(DegreeSequence::parse("1,1,2,2").to_string() == "2,2,1,1");
    CHECK(DegreeSequence::parse("2^3,1^2").to_string() == "2,2,2,1,1");
    CHECK(DegreeSequence::parse("0").to_string() == "0");
    CHECK(DegreeSequence::parse("1,1").n() == 2);
}

TEST_CASE("parse round-trips through the canonical form") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + uniform_below(rng, 14);
        const DegreeSequence pi = degree_sequence_of(random_tree(n, rng));
        CHECK(DegreeSequence::parse(pi.to_string()) == pi);
    }
}

TEST_CASE("parse rejects malformed or unrealizable input") {
    CHECK_THROWS_AS(DegreeSequence::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("a,1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("2^0,1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("2^-1,1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence::parse("1^1000000001"), std::invalid_argument);
}

TEST_CASE("tree-graphic recognition") {
    CHECK(is_tree_graphic({1, 1}));
    CHECK(is_tree_graphic({2, 2, 2, 1, 1}));
    CHECK(is_tree_graphic({0}));
    CHECK(is_tree_graphic({4, 1, 1, 1, 1}));
    CHECK_FALSE(is_tree_graphic({}));
    CHECK_FALSE(is_tree_graphic({2, 2}));
    CHECK_FALSE(is_tree_graphic({3, 3, 1, 1}));
    CHECK_FALSE(is_tree_graphic({0, 0}));
    CHECK_FALSE(is_tree_graphic({4, 1, 1, 1}));
    CHECK_FALSE(is_tree_graphic({3, 2, -1, 1, 1}));
}

TEST_CASE("majorization compares prefix sums") {
    const auto path5 = DegreeSequence::parse("2,2,2,1,1");
    const auto b5 = DegreeSequence::parse("3,2,1,1,1");
    const auto star5 = DegreeSequence::parse("4,1,1,1,1");
    CHECK(majorized_by(path5, b5));
    CHECK(majorized_by(b5, star5));
    CHECK(majorized_by(path5, path5));
    CHECK_FALSE(majorized_by(b5, path5));
    CHECK(strictly_majorized_by(path5, b5));
    CHECK_FALSE(strictly_majorized_by(path5, path5));
    CHECK_THROWS_AS(majorized_by(path5, DegreeSequence::parse("1,1")), std::invalid_argument);
}

TEST_CASE("unit transfer recognition") {
    CHECK(is_unit_transfer(DegreeSequence::parse("2,2,2,1,1"), DegreeSequence::parse("3,2,1,1,1")));
    CHECK(is_unit_transfer(DegreeSequence::parse("3,2,1,1,1"), DegreeSequence::parse("2,2,2,1,1")));
    CHECK_FALSE(is_unit_transfer(DegreeSequence::parse("2,2,2,1,1"),
                                 DegreeSequence::parse("4,1,1,1,1")));
    CHECK_FALSE(is_unit_transfer(DegreeSequence::parse("2,2,2,1,1"),
                                 DegreeSequence::parse("2,2,2,1,1")));
}

TEST_CASE("chains walk a path of unit transfers") {
    const auto path5 = DegreeSequence::parse("2,2,2,1,1");
    const auto star5 = DegreeSequence::parse("4,1,1,1,1");
    const auto chain = majorization_chain(path5, star5);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == path5);
    CHECK(chain[1] == DegreeSequence::parse("3,2,1,1,1"));
    CHECK(chain[2] == star5);
    CHECK(validate_majorization_chain(path5, star5, chain));

    const auto a = DegreeSequence::parse("3,2,2,1,1,1");
    const auto b = DegreeSequence::parse("3,3,1,1,1,1");
    const auto short_chain = majorization_chain(a, b);
    REQUIRE(short_chain.size() == 2);
    CHECK(short_chain[0] == a);
    CHECK(short_chain[1] == b);
    CHECK(validate_majorization_chain(a, b, short_chain));
}

TEST_CASE("chain construction survives interleaved deficits") {
    // The first deficit position sits between two excess positions here;
    // a transfer picked naively from the largest entry would leave the
    // chain stuck outside the majorization interval.
    const auto lo = DegreeSequence::parse("4,4,2,2,1,1,1,1,1,1");
    const auto hi = DegreeSequence::parse("5,3,3,1,1,1,1,1,1,1");
    REQUIRE(strictly_majorized_by(lo, hi));
    const auto chain = majorization_chain(lo, hi);
    CHECK(validate_majorization_chain(lo, hi, chain));
}

TEST_CASE("chain rejects non-strict inputs") {
    const auto path5 = DegreeSequence::parse("2,2,2,1,1");
    const auto b5 = DegreeSequence::parse("3,2,1,1,1");
    CHECK_THROWS_AS(majorization_chain(path5, path5), std::invalid_argument);
    CHECK_THROWS_AS(majorization_chain(b5, path5), std::invalid_argument);
    CHECK_THROWS_AS(majorization_chain(path5, DegreeSequence::parse("1,1")),
                    std::invalid_argument);
}

namespace {

// Applies `steps` random inequality-increasing transfers to pi.
DegreeSequence roughen(const DegreeSequence& pi, int steps, Rng& rng) {
    std::vector<int> cur = pi.degrees();
    for (int s = 0; s < steps; ++s) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            const int i = uniform_below(rng, static_cast<int>(cur.size()));
            const int j = uniform_below(rng, static_cast<int>(cur.size()));
            if (i < j && cur[static_cast<std::size_t>(j)] >= 2) {
                cur[static_cast<std::size_t>(i)] += 1;
                cur[static_cast<std::size_t>(j)] -= 1;
                std::sort(cur.begin(), cur.end(), std::greater<int>());
                break;
            }
        }
    }
    return DegreeSequence(cur);
}

}  // namespace

TEST_CASE("chains validate on randomized comparable pairs") {
    Rng rng(11);
    int exercised = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 5 + uniform_below(rng, 8);
        const DegreeSequence pi = degree_sequence_of(random_tree(n, rng));
        const DegreeSequence pi_prime = roughen(pi, 1 + uniform_below(rng, 4), rng);
        if (pi == pi_prime) continue;
        REQUIRE(strictly_majorized_by(pi, pi_prime));
        const auto chain = majorization_chain(pi, pi_prime);
        CHECK(validate_majorization_chain(pi, pi_prime, chain));
        for (const auto& step : chain) CHECK(is_tree_graphic(step.degrees()));
        ++exercised;
    }
    CHECK(exercised > 60);
}
