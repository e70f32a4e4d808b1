#include "spectree/greedy.hpp"

#include <numeric>
#include <stdexcept>

namespace spectree {

LayerPlan layer_plan(const DegreeSequence& pi) {
    if (pi.n() < 2) {
        throw std::invalid_argument("layer plan: need at least two vertices");
    }
    LayerPlan plan;
    plan.layer_sizes.push_back(1);
    plan.layer_degrees.push_back({pi[0]});
    int consumed = 1;
    while (consumed < pi.n()) {
        const std::vector<int>& prev = plan.layer_degrees.back();
        long long slots = std::accumulate(prev.begin(), prev.end(), 0LL);
        // Each non-root vertex spends one incident edge on its parent.
        if (plan.layer_degrees.size() > 1) slots -= static_cast<long long>(prev.size());
        if (slots <= 0) {
            throw std::logic_error("layer plan: ran out of slots before degrees");
        }
        std::vector<int> layer;
        layer.reserve(static_cast<std::size_t>(slots));
        for (long long i = 0; i < slots; ++i) {
            layer.push_back(pi[consumed++]);
        }
        plan.layer_sizes.push_back(static_cast<int>(layer.size()));
        plan.layer_degrees.push_back(std::move(layer));
    }
    return plan;
}

LabeledTree build_greedy_tree(const DegreeSequence& pi) {
    const int n = pi.n();
    if (n == 1) return LabeledTree::from_edges(1, {});
    // Queue construction equivalent to filling the layer plan: the root
    // receives pi[0] children, every later vertex receives (degree - 1),
    // and degrees are handed out in nonincreasing order as vertices are
    // created. Labels automatically come out in BFS order.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    std::vector<std::pair<int, int>> queue;  // (vertex, child slots)
    queue.reserve(static_cast<std::size_t>(n));
    queue.emplace_back(0, pi[0]);
    int next_label = 1;
    int next_degree = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [v, slots] = queue[head];
        for (int i = 0; i < slots; ++i) {
            int child = next_label++;
            int degree = pi[next_degree++];
            edges.emplace_back(v, child);
            if (degree > 1) queue.emplace_back(child, degree - 1);
        }
    }
    if (next_label != n || next_degree != n) {
        throw std::logic_error("greedy build: degree bookkeeping mismatch");
    }
    return LabeledTree::from_edges(n, std::move(edges));
}

bool has_bfs_ordering(const LabeledTree& tree) {
    return are_isomorphic(tree, build_greedy_tree(degree_sequence_of(tree)));
}

bool verify_ordering(const LabeledTree& tree, const std::vector<int>& ordering) {
    const int n = tree.n();
    if (static_cast<int>(ordering.size()) != n) {
        throw std::invalid_argument("ordering: wrong length");
    }
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = ordering[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] != -1) {
            throw std::invalid_argument("ordering: not a permutation of the vertices");
        }
        position[static_cast<std::size_t>(v)] = i;
    }
    const int root = ordering.front();
    std::vector<int> depth = depths_from(tree, root);
    std::vector<int> parent = parents_from(tree, root);
    int last_parent_position = -1;
    for (int i = 1; i < n; ++i) {
        int prev = ordering[static_cast<std::size_t>(i - 1)];
        int cur = ordering[static_cast<std::size_t>(i)];
        if (depth[static_cast<std::size_t>(cur)] < depth[static_cast<std::size_t>(prev)]) {
            return false;
        }
        if (tree.degree(cur) > tree.degree(prev)) return false;
    }
    // Parent compatibility: along the ordering the (non-root) vertices'
    // parents may never step backwards.
    for (int i = 0; i < n; ++i) {
        int v = ordering[static_cast<std::size_t>(i)];
        if (v == root) continue;
        int p = position[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        if (p < last_parent_position) return false;
        last_parent_position = std::max(last_parent_position, p);
    }
    return true;
}

}  // namespace spectree
