#pragma once

#include "spectree/degree_sequence.hpp"
#include "spectree/tree.hpp"

namespace spectree {

enum class ExtremalFamily { Leaves, MaxDegree, Independence, Matching };

// Closed-form S-order maximum inside one parameterized family of trees.
// The degree sequence majorizes every sequence realizable in the family,
// and the tree is its greedy realization.
struct ExtremalSpec {
    ExtremalFamily family;
    int n;
    int parameter;
    DegreeSequence pi_star;
    LabeledTree tree;
};

// Trees of order n with exactly `leaves` leaves (n >= 3,
// 2 <= leaves <= n-1): the balanced spider, degree sequence
// (leaves, 2^{n-leaves-1}, 1^{leaves}).
ExtremalSpec extremal_leaves(int n, int leaves);

// Trees of order n with maximum degree exactly `max_degree`
// (max_degree >= 3, n >= max_degree + 1): the top-full layered tree
// packing as many max_degree vertices as possible toward the root.
ExtremalSpec extremal_max_degree(int n, int max_degree);

// Trees of order n with independence number `alpha`
// (ceil(n/2) <= alpha <= n-1): degree sequence (alpha, 2^{n-alpha-1}, 1^{alpha}).
ExtremalSpec extremal_independence(int n, int alpha);

// Trees of order n with matching number `beta` (1 <= beta <= floor(n/2)):
// degree sequence (n-beta, 2^{beta-1}, 1^{n-beta}).
ExtremalSpec extremal_matching(int n, int beta);

// Leaf count, maximum degree, and exact independence and matching numbers
// (linear-time tree dynamic programs, no spectral machinery involved).
struct GraphParameters {
    int leaves;
    int max_degree;
    int independence_number;
    int matching_number;

    bool operator==(const GraphParameters&) const = default;
};

GraphParameters graph_parameter_oracles(const LabeledTree& tree);

}  // namespace spectree
