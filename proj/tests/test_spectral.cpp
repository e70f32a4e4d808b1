#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "spectree/greedy.hpp"
#include "spectree/random.hpp"
#include "spectree/spectral.hpp"
#include "test_support.hpp"

using namespace spectree;
using namespace testsupport;

namespace {

std::vector<BigInt> big(std::vector<long long> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

LabeledTree spider221() {
    return LabeledTree::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

LabeledTree spider311() {
    return LabeledTree::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
}

}  // namespace

TEST_CASE("closed walk counts on hand-checked trees") {
    const auto p5 = LabeledTree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(spectral_moments(p5).moments == big({5, 0, 8, 0, 20}));

    const auto star4 = LabeledTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(spectral_moments(star4).moments == big({4, 0, 6, 0}));
    CHECK(closed_walk_moments(star4, 4) == big({4, 0, 6, 0, 18}));

    const auto p4 = LabeledTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(closed_walk_moments(p4, 4) == big({4, 0, 6, 0, 14}));

    const auto k2 = LabeledTree::from_edges(2, {{0, 1}});
    CHECK(closed_walk_moments(k2, 5) == big({2, 0, 2, 0, 2, 0}));
    CHECK(closed_walk_moments(LabeledTree::from_edges(1, {}), 3) == big({1, 0, 0, 0}));
}

TEST_CASE("walk counts agree with matrix-power traces") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + uniform_below(rng, 11);
        const LabeledTree t = random_tree(n, rng);
        CHECK(closed_walk_moments(t, n + 2) == trace_moments(t, n + 2));
    }
}

TEST_CASE("structural moment facts hold on random trees") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + uniform_below(rng, 14);
        const LabeledTree t = random_tree(n, rng);
        const auto s = closed_walk_moments(t, 8);
        const auto counts = subgraph_counts_formula(t);
        CHECK(s[0] == n);
        CHECK(s[2] == 2 * (n - 1));
        // Trees are bipartite: no odd closed walks.
        for (int k = 1; k <= 7; k += 2) CHECK(s[static_cast<std::size_t>(k)] == 0);
        CHECK(s[4] == 2 * counts.p2 + 4 * counts.p3);
        // Moments are invariant under relabeling.
        const LabeledTree relabeled = permute_tree(t, random_permutation(n, rng));
        CHECK(closed_walk_moments(relabeled, 8) == s);
    }
}

TEST_CASE("lexicographic comparison and its certificate index") {
    // Same degree sequence, first difference at S_6.
    const auto res = s_order_compare(spider311(), spider221());
    CHECK(res.ordering == SOrder::Less);
    CHECK(res.first_diff_index == 6);
    const auto rev = s_order_compare(spider221(), spider311());
    CHECK(rev.ordering == SOrder::Greater);
    CHECK(rev.first_diff_index == 6);

    // Different degree sequences split at S_4 already.
    const auto p4 = LabeledTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto star4 = LabeledTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto r2 = s_order_compare(p4, star4);
    CHECK(r2.ordering == SOrder::Less);
    CHECK(r2.first_diff_index == 4);

    const auto eq = s_order_compare(p4, permute_tree(p4, {3, 2, 1, 0}));
    CHECK(eq.ordering == SOrder::Equal);
    CHECK_FALSE(eq.first_diff_index.has_value());

    CHECK_THROWS_AS(s_order_compare(p4, LabeledTree::from_edges(3, {{0, 1}, {1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("comparison is a total preorder refining isomorphism") {
    const auto classes = all_classes_of_order(7);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = 0; j < classes.size(); ++j) {
            const auto r = s_order_compare(classes[i], classes[j]);
            const auto r_back = s_order_compare(classes[j], classes[i]);
            if (i == j) {
                CHECK(r.ordering == SOrder::Equal);
            } else {
                // Distinct classes of order 7 never tie: the comparison
                // spans k = 0..n, pinning down the characteristic
                // polynomial, and cospectral tree pairs first appear at
                // order 8 (checked below).
                CHECK(r.ordering != SOrder::Equal);
            }
            // Antisymmetry of the certified direction.
            CHECK((r.ordering == SOrder::Less) == (r_back.ordering == SOrder::Greater));
            CHECK(r.first_diff_index == r_back.first_diff_index);
        }
    }
    // Transitivity of Less on a sampled triple chain.
    for (std::size_t i = 0; i + 2 < classes.size(); ++i) {
        const auto ab = s_order_compare(classes[i], classes[i + 1]);
        const auto bc = s_order_compare(classes[i + 1], classes[i + 2]);
        if (ab.ordering == SOrder::Less && bc.ordering == SOrder::Less) {
            CHECK(s_order_compare(classes[i], classes[i + 2]).ordering == SOrder::Less);
        }
    }
}

TEST_CASE("ties are genuine: equal comparisons mean equal spectra") {
    // Order 8 hosts the smallest cospectral tree pair, so non-isomorphic
    // classes can compare Equal. Whenever that happens the agreement must
    // extend to every moment, not just the compared window.
    const auto classes = all_classes_of_order(8);
    int cospectral_pairs = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const auto r = s_order_compare(classes[i], classes[j]);
            if (r.ordering != SOrder::Equal) continue;
            ++cospectral_pairs;
            CHECK(closed_walk_moments(classes[i], 16) ==
                  closed_walk_moments(classes[j], 16));
        }
    }
    CHECK(cospectral_pairs == 1);
}

TEST_CASE("subgraph closed forms on frozen instances") {
    const auto p5 = LabeledTree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    SubgraphCounts expected{4, 3, 2, 1, 0};
    CHECK(subgraph_counts_formula(p5) == expected);

    const auto star5 =
        LabeledTree::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(subgraph_counts_formula(star5).p3 == 6);
    CHECK(subgraph_counts_formula(star5).p4 == 0);

    // Double broom on 5 vertices: the lone B_5 instance counts itself once.
    const auto b5tree =
        LabeledTree::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}});
    CHECK(subgraph_counts_formula(b5tree).b5 == 1);

    CHECK(subgraph_counts_formula(spider221()).p4 == 4);
    CHECK(subgraph_counts_formula(spider311()).p4 == 3);
}

TEST_CASE("closed forms match subset enumeration exhaustively") {
    for (int n = 2; n <= 8; ++n) {
        for (const LabeledTree& t : all_classes_of_order(n)) {
            const auto counts = subgraph_counts_formula(t);
            CHECK(counts.p2 == brute_force_subgraph_count(t, Pattern::P2));
            CHECK(counts.p3 == brute_force_subgraph_count(t, Pattern::P3));
            CHECK(counts.p4 == brute_force_subgraph_count(t, Pattern::P4));
            CHECK(counts.p5 == brute_force_subgraph_count(t, Pattern::P5));
            CHECK(counts.b5 == brute_force_subgraph_count(t, Pattern::B5));
        }
    }
}

TEST_CASE("closed forms match subset enumeration on random larger trees") {
    Rng rng(29);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 9 + uniform_below(rng, 4);
        const LabeledTree t = random_tree(n, rng);
        const auto counts = subgraph_counts_formula(t);
        CHECK(counts.p4 == brute_force_subgraph_count(t, Pattern::P4));
        CHECK(counts.p5 == brute_force_subgraph_count(t, Pattern::P5));
        CHECK(counts.b5 == brute_force_subgraph_count(t, Pattern::B5));
    }
}

TEST_CASE("moment identities across same-degree trees") {
    const auto rep = moment_identity_report(spider221(), spider311());
    CHECK(rep.low_moments_equal);
    CHECK(rep.s6_delta == 6);
    CHECK(rep.s6_predicted == 6);
    CHECK(rep.holds());

    // 18-vertex pair from the greedy construction tests: identical low
    // moments, S_6 and S_8 both governed by the counting identities.
    const auto t_star = build_greedy_tree(DegreeSequence::parse("4,4,4,3,3,3,2,1^11"));
    const auto t_other = LabeledTree::from_edges(
        18, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {1, 5},  {1, 6},
             {1, 7},  {2, 8},  {2, 9},  {2, 10}, {3, 11}, {3, 12},
             {4, 13}, {4, 14}, {11, 15}, {13, 16}, {13, 17}});
    const auto rep2 = moment_identity_report(t_other, t_star);
    CHECK(rep2.low_moments_equal);
    CHECK(rep2.holds());
    CHECK(rep2.s6_delta < 0);

    CHECK_THROWS_AS(
        moment_identity_report(spider221(),
                               LabeledTree::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})),
        std::invalid_argument);
}

TEST_CASE("moment identities hold for random same-degree pairs") {
    Rng rng(31);
    int exercised = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + uniform_below(rng, 8);
        const DegreeSequence pi = degree_sequence_of(random_tree(n, rng));
        const LabeledTree a = random_tree_with_degrees(pi, rng);
        const LabeledTree b = random_tree_with_degrees(pi, rng);
        const auto rep = moment_identity_report(a, b);
        CHECK(rep.holds());
        if (rep.s6_delta != 0 || rep.s8_delta != 0) ++exercised;
    }
    CHECK(exercised >= 10);
}
