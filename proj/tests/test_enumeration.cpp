#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "spectree/enumeration.hpp"
#include "spectree/greedy.hpp"
#include "spectree/spectral.hpp"
#include "test_support.hpp"

using namespace spectree;
using namespace testsupport;

TEST_CASE("pruefer decoding on hand-checked codes") {
    CHECK(pruefer_decode(2, {}) == LabeledTree::from_edges(2, {{0, 1}}));
    // Code (0, 0): vertex 0 keeps degree 3.
    CHECK(pruefer_decode(4, {0, 0}) ==
          LabeledTree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    // Code (1, 2): the path 0-1-2-3.
    CHECK(pruefer_decode(4, {1, 2}) ==
          LabeledTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK_THROWS_AS(pruefer_decode(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(pruefer_decode(4, {0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(pruefer_decode(1, {}), std::invalid_argument);

    // Degrees follow code multiplicities.
    Rng rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + uniform_below(rng, 10);
        std::vector<int> code(static_cast<std::size_t>(n - 2));
        for (int& c : code) c = uniform_below(rng, n);
        const LabeledTree t = pruefer_decode(n, code);
        for (int v = 0; v < n; ++v) {
            const long long mult =
                std::count(code.begin(), code.end(), v);
            CHECK(t.degree(v) == mult + 1);
        }
    }
}

TEST_CASE("class enumeration on frozen degree sequences") {
    const auto spiders = enumerate_trees_with_degrees(DegreeSequence::parse("3,2,2,1,1,1"));
    CHECK(spiders.representatives.size() == 2);
    CHECK(spiders.labeled_count == 12);
    CHECK(spiders.labeled_count == count_labeled_trees(spiders.source_pi));

    const auto path = enumerate_trees_with_degrees(DegreeSequence::parse("2,2,2,1,1"));
    CHECK(path.representatives.size() == 1);
    CHECK(path.labeled_count == 6);

    const auto star = enumerate_trees_with_degrees(DegreeSequence::parse("4,1,1,1,1"));
    CHECK(star.representatives.size() == 1);
    CHECK(star.labeled_count == 1);

    const auto edge = enumerate_trees_with_degrees(DegreeSequence::parse("1,1"));
    CHECK(edge.representatives.size() == 1);
    CHECK(edge.labeled_count == 1);

    // Representatives realize the degree sequence, are pairwise
    // non-isomorphic, and arrive sorted by canonical code.
    for (const auto& set : {spiders, path, star}) {
        std::set<CanonicalCode> seen;
        CanonicalCode prev{""};
        for (const auto& t : set.representatives) {
            CHECK(degree_sequence_of(t) == set.source_pi);
            const auto code = canonical_form(t);
            CHECK(seen.insert(code).second);
            CHECK(prev < code);
            prev = code;
        }
    }
}

TEST_CASE("labeled counts match the multinomial") {
    CHECK(count_labeled_trees(DegreeSequence::parse("2,2,2,1,1")) == 6);
    CHECK(count_labeled_trees(DegreeSequence::parse("3,2,1,1,1")) == 3);
    CHECK(count_labeled_trees(DegreeSequence::parse("1,1")) == 1);
    // 5! / (2! 2! 1!) for the two degree-3 hubs and the degree-2 vertex.
    CHECK(count_labeled_trees(DegreeSequence::parse("3,3,2,1,1,1,1")) == 30);

    Rng rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + uniform_below(rng, 7);
        const DegreeSequence pi = degree_sequence_of(random_tree(n, rng));
        CHECK(enumerate_trees_with_degrees(pi).labeled_count == count_labeled_trees(pi));
    }
}

TEST_CASE("class totals over whole orders match the free tree numbers") {
    const int expected[] = {1, 2, 3, 6, 11, 23, 47};  // orders 3..9
    for (int n = 3; n <= 9; ++n) {
        std::size_t classes = 0;
        for (const auto& pi : enumerate_tree_degree_sequences(n)) {
            classes += enumerate_trees_with_degrees(pi).representatives.size();
        }
        CHECK(classes == static_cast<std::size_t>(expected[n - 3]));
    }
}

TEST_CASE("degree sequence sweep is complete and descending") {
    const auto seqs5 = enumerate_tree_degree_sequences(5);
    REQUIRE(seqs5.size() == 3);
    CHECK(seqs5[0] == DegreeSequence::parse("4,1,1,1,1"));
    CHECK(seqs5[1] == DegreeSequence::parse("3,2,1,1,1"));
    CHECK(seqs5[2] == DegreeSequence::parse("2,2,2,1,1"));

    // Counts follow the partition numbers p(n-2) for orders 4..10.
    const std::size_t partition_counts[] = {2, 3, 5, 7, 11, 15, 22};
    std::size_t total = 0;
    for (int n = 4; n <= 10; ++n) {
        const auto seqs = enumerate_tree_degree_sequences(n, 10);
        CHECK(seqs.size() == partition_counts[n - 4]);
        total += seqs.size();
        for (const auto& pi : seqs) {
            CHECK(pi.n() == n);
            CHECK(is_tree_graphic(pi.degrees()));
        }
        for (std::size_t i = 0; i + 1 < seqs.size(); ++i) {
            // Strictly descending in expanded lexicographic order.
            std::vector<int> a, b;
            for (int k = 0; k < n; ++k) {
                a.push_back(seqs[i][k]);
                b.push_back(seqs[i + 1][k]);
            }
            CHECK(a > b);
        }
    }
    CHECK(total == 65);

    CHECK(enumerate_tree_degree_sequences(2).size() == 1);
    CHECK_THROWS_AS(enumerate_tree_degree_sequences(1), std::invalid_argument);
}

TEST_CASE("enumeration caps guard factorial blowups") {
    CHECK_THROWS_AS(enumerate_tree_degree_sequences(13), std::invalid_argument);
    // Lifting the cap works; the count is the partition number p(11).
    CHECK(enumerate_tree_degree_sequences(13, 13).size() == 56);
    const DegreeSequence big = degree_sequence_of(build_greedy_tree(
        DegreeSequence::parse("4,4,4,3,3,3,2,1^11")));
    CHECK_THROWS_AS(enumerate_trees_with_degrees(big), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees_with_degrees(DegreeSequence::parse("0")),
                    std::invalid_argument);
}

TEST_CASE("the s-order maximum carries a full certificate") {
    const auto classes = enumerate_trees_with_degrees(DegreeSequence::parse("3,2,2,1,1,1"));
    const auto result = last_in_s_order(classes);
    CHECK(result.unique);
    // The winner is the breadth-first orderable spider.
    CHECK(are_isomorphic(result.tree,
                         build_greedy_tree(DegreeSequence::parse("3,2,2,1,1,1"))));
    CHECK(result.winner_index == 1);
    REQUIRE(result.certificate.size() == 1);
    CHECK(result.certificate[0].index == 0);
    CHECK(result.certificate[0].first_diff_index == 6);

    // Every loser really does compare Less against the winner.
    for (const auto& entry : result.certificate) {
        const auto cmp = s_order_compare(classes.representatives[entry.index], result.tree);
        CHECK(cmp.ordering == SOrder::Less);
        CHECK(cmp.first_diff_index == entry.first_diff_index);
    }

    const auto lone = last_in_s_order(
        enumerate_trees_with_degrees(DegreeSequence::parse("2,2,1,1")));
    CHECK(lone.unique);
    CHECK(lone.certificate.empty());
}

TEST_CASE("exact ties in the maximum are reported as non-unique") {
    // Duplicate the same tree twice: the maximum cannot be unique.
    const auto p4 = LabeledTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto p4_relabeled = permute_tree(p4, {3, 2, 1, 0});
    const auto result = last_in_s_order(std::vector<LabeledTree>{p4, p4_relabeled});
    CHECK_FALSE(result.unique);
    REQUIRE(result.certificate.size() == 1);
    CHECK_FALSE(result.certificate[0].first_diff_index.has_value());

    CHECK_THROWS_AS(last_in_s_order(std::vector<LabeledTree>{}), std::invalid_argument);
    CHECK_THROWS_AS(last_in_s_order(std::vector<LabeledTree>{
                        p4, LabeledTree::from_edges(3, {{0, 1}, {1, 2}})}),
                    std::invalid_argument);
}

TEST_CASE("winners across an order agree with direct pairwise comparison") {
    for (const auto& pi : enumerate_tree_degree_sequences(7)) {
        const auto classes = enumerate_trees_with_degrees(pi);
        const auto result = last_in_s_order(classes);
        for (std::size_t i = 0; i < classes.representatives.size(); ++i) {
            if (i == result.winner_index) continue;
            CHECK(s_order_compare(classes.representatives[i], result.tree).ordering ==
                  SOrder::Less);
        }
    }
}
