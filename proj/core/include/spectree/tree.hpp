#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "spectree/degree_sequence.hpp"

namespace spectree {

// Immutable labeled tree on vertices {0, ..., n-1}, stored as a normalized
// edge list (u < v within each pair, pairs sorted) plus adjacency lists.
class LabeledTree {
public:
    // Validates vertex range, simplicity, edge count and connectivity.
    static LabeledTree from_edges(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Labeled equality, not isomorphism.
    bool operator==(const LabeledTree& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    LabeledTree(int n, std::vector<std::pair<int, int>> edges,
                std::vector<std::vector<int>> adjacency);

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

DegreeSequence degree_sequence_of(const LabeledTree& tree);

// BFS depth of every vertex measured from `root`.
std::vector<int> depths_from(const LabeledTree& tree, int root);

// BFS parent of every vertex; -1 for the root.
std::vector<int> parents_from(const LabeledTree& tree, int root);

// The one or two middle vertices left by repeatedly stripping leaves.
std::vector<int> tree_centers(const LabeledTree& tree);

// Isomorphism-class identifier: equal codes iff isomorphic trees.
struct CanonicalCode {
    std::string value;
    auto operator<=>(const CanonicalCode&) const = default;
};

// Nested-parenthesis encoding rooted at the center, children codes sorted.
// Bicentral trees split the center edge and concatenate both halves' codes
// in sorted order; the C/B prefix keeps the two shapes from colliding.
CanonicalCode canonical_form(const LabeledTree& tree);

// Rebuilds the canonically labeled representative (BFS labels from the
// root encoded first) of the class `code` describes.
LabeledTree tree_from_canonical_code(const CanonicalCode& code);

bool are_isomorphic(const LabeledTree& a, const LabeledTree& b);

}  // namespace spectree
