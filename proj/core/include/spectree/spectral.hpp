#pragma once

#include <optional>
#include <vector>

#include "spectree/bigint.hpp"
#include "spectree/tree.hpp"

namespace spectree {

// Exact spectral moments S_0 .. S_{n-1}, where S_k counts the closed
// k-walks of the tree (equivalently, the trace of the k-th adjacency
// power). No floating point is involved anywhere.
struct MomentVector {
    std::vector<BigInt> moments;

    int n() const { return static_cast<int>(moments.size()); }
    bool operator==(const MomentVector&) const = default;
};

// S_0 .. S_kmax by per-vertex walk counting: one vector of counts is pushed
// through the adjacency structure kmax times per start vertex.
std::vector<BigInt> closed_walk_moments(const LabeledTree& tree, int kmax);

MomentVector spectral_moments(const LabeledTree& tree);

enum class SOrder { Less, Equal, Greater };

struct SOrderResult {
    SOrder ordering;
    std::optional<int> first_diff_index;  // present unless Equal
};

// Lexicographic comparison of the moment sequences, k = 0 .. n. Comparing
// through index n is fully decisive: S_1 .. S_n determine the
// characteristic polynomial, so trees agreeing there agree on every
// moment. (Same-degree-sequence trees first differ at k = 6 or 8, which
// can exceed n-1 for small trees.) Throws on order mismatch.
SOrderResult s_order_compare(const LabeledTree& a, const LabeledTree& b);

// Exact counts of the five small subtrees the moment identities consume.
struct SubgraphCounts {
    BigInt p2, p3, p4, p5, b5;

    bool operator==(const SubgraphCounts&) const = default;
};

// Closed forms over degrees:
//   p2 = n - 1
//   p3 = sum_v C(d(v), 2)
//   p4 = sum_{uv in E} (d(u)-1)(d(v)-1)
//   b5 = sum_{uv in E} [ C(d(u)-1, 2)(d(v)-1) + C(d(v)-1, 2)(d(u)-1) ]
//   p5 = sum_u sum_{{x,y} distinct neighbors of u} (d(x)-1)(d(y)-1)
SubgraphCounts subgraph_counts_formula(const LabeledTree& tree);

enum class Pattern { P2, P3, P4, P5, B5 };

// Independent oracle sharing nothing with the closed forms: enumerates all
// vertex subsets of the pattern's size and tests each induced subgraph for
// membership in the pattern's isomorphism class.
BigInt brute_force_subgraph_count(const LabeledTree& tree, Pattern pattern);

// Both sides of the moment identities for two trees sharing a degree
// sequence:
//   S_6(a) - S_6(b) = 6 [p4(a) - p4(b)]
//   S_8(a) - S_8(b) = 32 [p4(a) - p4(b)] + 8 [p5(a) - p5(b)] + 16 [b5(a) - b5(b)]
// All lower moments (and S_7) must agree outright.
struct MomentIdentityReport {
    bool low_moments_equal;  // S_i agree for i in {0..5, 7}
    BigInt s6_delta;
    BigInt s6_predicted;
    BigInt s8_delta;
    BigInt s8_predicted;

    bool holds() const {
        return low_moments_equal && s6_delta == s6_predicted && s8_delta == s8_predicted;
    }
};

// Throws std::invalid_argument unless the trees share a degree sequence.
MomentIdentityReport moment_identity_report(const LabeledTree& a, const LabeledTree& b);

}  // namespace spectree
