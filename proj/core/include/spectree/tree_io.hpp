#pragma once

#include <string>

#include "spectree/tree.hpp"

namespace spectree {

// Compact single-line JSON, byte-stable for a given tree:
//   {"n":5,"edges":[[0,1],[1,2],[2,3],[2,4]]}
// Pairs are emitted u < v in sorted order.
std::string tree_to_json(const LabeledTree& tree);

// Accepts any JSON spelling of the same schema; edge order and pair
// orientation are normalized on load.
LabeledTree tree_from_json(const std::string& text);

// Reads a JSON tree file. Throws std::invalid_argument on I/O or schema
// problems.
LabeledTree load_tree_file(const std::string& path);

// Graphviz undirected graph; every vertex declared as v<i>.
std::string tree_to_dot(const LabeledTree& tree);

}  // namespace spectree
