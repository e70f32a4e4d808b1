#pragma once

#include <vector>

#include "spectree/tree.hpp"

namespace spectree {

// Degree-respecting surgeries that push a tree strictly later in S-order.
// Each validates its preconditions and throws std::invalid_argument when
// they fail or when the rewired edge set is no longer a tree.

// Replaces edges v1u1 and v2u2 by v1v2 and u1u2. Requires four distinct
// vertices, both old edges present, both new pairs non-adjacent,
// d(v1) > d(u2) and d(v2) > d(u1). Preserves the degree sequence and
// raises S_6 by exactly 6 (d(v1) - d(u2)) (d(v2) - d(u1)).
LabeledTree double_edge_swap(const LabeledTree& tree, int v1, int u1, int v2, int u2);

// For two same-degree vertices u, v (neither equal to `root`, which must
// have maximum degree) with sum_{x in N(u)} d(x) >= sum_{x in N(v)} d(x):
// detaches a minimum-degree child x0 of u and a maximum-degree child x1 of
// v (ties broken by lowest index, children meaning neighbors away from the
// root) and reattaches x0 under v and x1 under u. Requires
// d(x0) < d(x1), u not adjacent to x1 and v not adjacent to x0. Leaves
// S_6 unchanged and raises S_8 by exactly
// 8 (d(x1) - d(x0)) [ (sum_u - sum_v) + (d(x1) - d(x0)) ].
LabeledTree child_exchange(const LabeledTree& tree, int root, int u, int v);

// Re-hangs the listed neighbors of u (with their subtrees) onto w.
// Requires d(w) >= d(u) before the move, every moved vertex adjacent to u
// but not to w, and w outside each moved subtree. Raises S_4 by exactly
// 4 [ k^2 + k (d(w) - d(u)) ] for k moved edges.
LabeledTree edge_shift(const LabeledTree& tree, int u, int w, const std::vector<int>& moved);

}  // namespace spectree
