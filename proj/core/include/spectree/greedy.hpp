#pragma once

#include <vector>

#include "spectree/degree_sequence.hpp"
#include "spectree/tree.hpp"

namespace spectree {

// Layer-by-layer plan for the greedy tree: the cardinality of each BFS
// layer and the degrees assigned to its vertices in assignment order.
struct LayerPlan {
    std::vector<int> layer_sizes;               // layer_sizes[0] == 1 (the root)
    std::vector<std::vector<int>> layer_degrees;

    bool operator==(const LayerPlan&) const = default;
};

// Greedy layering of pi (n >= 2): the root takes the largest degree; layer
// t+1 holds one vertex per remaining child slot of layer t; degrees are
// consumed in nonincreasing order.
LayerPlan layer_plan(const DegreeSequence& pi);

// The unique tree realizing pi that admits a breadth-first ordering with
// nonincreasing degrees. Vertices are labeled in that ordering (root = 0);
// within a layer, larger degrees attach to earlier parents.
LabeledTree build_greedy_tree(const DegreeSequence& pi);

// True iff the tree admits a breadth-first well-ordering with nonincreasing
// degrees, i.e. it is isomorphic to the greedy tree of its own degree
// sequence.
bool has_bfs_ordering(const LabeledTree& tree);

// Checks one explicit vertex ordering, with heights measured from
// ordering.front() as root: heights nondecreasing, degrees nonincreasing,
// and parents appearing in an order compatible with their children's.
// Children of a common parent are unconstrained against each other.
// Throws std::invalid_argument if `ordering` is not a permutation of the
// vertices.
bool verify_ordering(const LabeledTree& tree, const std::vector<int>& ordering);

}  // namespace spectree
