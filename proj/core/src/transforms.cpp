#include "spectree/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spectree {

namespace {

[[noreturn]] void reject(const std::string& op, const std::string& why) {
    throw std::invalid_argument(op + ": " + why);
}

LabeledTree rebuild(const std::string& op, int n, std::vector<std::pair<int, int>> edges) {
    try {
        return LabeledTree::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument&) {
        reject(op, "rewired edges do not form a tree");
    }
}

// True iff `target` lies in the component of `start` once the edge
// start-hub is deleted.
bool reaches_avoiding(const LabeledTree& tree, int start, int hub, int target) {
    std::vector<char> seen(static_cast<std::size_t>(tree.n()), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == target) return true;
        for (int w : tree.neighbors(v)) {
            if (v == start && w == hub) continue;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace

LabeledTree double_edge_swap(const LabeledTree& tree, int v1, int u1, int v2, int u2) {
    const std::string op = "double edge swap";
    for (int x : {v1, u1, v2, u2}) {
        if (x < 0 || x >= tree.n()) reject(op, "vertex out of range");
    }
    int distinct[] = {v1, u1, v2, u2};
    std::sort(std::begin(distinct), std::end(distinct));
    if (std::adjacent_find(std::begin(distinct), std::end(distinct)) != std::end(distinct)) {
        reject(op, "vertices must be distinct");
    }
    if (!tree.has_edge(v1, u1)) reject(op, "v1u1 is not an edge");
    if (!tree.has_edge(v2, u2)) reject(op, "v2u2 is not an edge");
    if (tree.has_edge(v1, v2)) reject(op, "v1v2 already an edge");
    if (tree.has_edge(u1, u2)) reject(op, "u1u2 already an edge");
    if (!(tree.degree(v1) > tree.degree(u2))) reject(op, "requires d(v1) > d(u2)");
    if (!(tree.degree(v2) > tree.degree(u1))) reject(op, "requires d(v2) > d(u1)");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(tree.edges().size());
    auto drop1 = std::minmax(v1, u1);
    auto drop2 = std::minmax(v2, u2);
    for (const auto& e : tree.edges()) {
        if (e == std::make_pair(drop1.first, drop1.second)) continue;
        if (e == std::make_pair(drop2.first, drop2.second)) continue;
        edges.push_back(e);
    }
    edges.emplace_back(v1, v2);
    edges.emplace_back(u1, u2);
    return rebuild(op, tree.n(), std::move(edges));
}

LabeledTree child_exchange(const LabeledTree& tree, int root, int u, int v) {
    const std::string op = "child exchange";
    for (int x : {root, u, v}) {
        if (x < 0 || x >= tree.n()) reject(op, "vertex out of range");
    }
    int max_degree = 0;
    for (int x = 0; x < tree.n(); ++x) max_degree = std::max(max_degree, tree.degree(x));
    if (tree.degree(root) != max_degree) reject(op, "root must have maximum degree");
    if (u == v) reject(op, "u and v must differ");
    if (u == root || v == root) reject(op, "u and v must differ from the root");
    if (tree.degree(u) != tree.degree(v)) reject(op, "requires d(u) = d(v)");
    std::vector<int> depth = depths_from(tree, root);
    std::vector<int> parent = parents_from(tree, root);
    auto neighbor_degree_sum = [&](int x) {
        long long sum = 0;
        for (int w : tree.neighbors(x)) sum += tree.degree(w);
        return sum;
    };
    if (neighbor_degree_sum(u) < neighbor_degree_sum(v)) {
        reject(op, "requires the neighbor degree sum at u to dominate v's");
    }
    auto children_of = [&](int x) {
        std::vector<int> kids;
        for (int w : tree.neighbors(x)) {
            if (w != parent[static_cast<std::size_t>(x)]) kids.push_back(w);
        }
        return kids;
    };
    std::vector<int> ku = children_of(u);
    std::vector<int> kv = children_of(v);
    if (ku.empty()) reject(op, "u has no children");
    if (kv.empty()) reject(op, "v has no children");
    // Lowest index breaks degree ties; neighbor lists are sorted.
    int x0 = ku.front();
    for (int c : ku) {
        if (tree.degree(c) < tree.degree(x0)) x0 = c;
    }
    int x1 = kv.front();
    for (int c : kv) {
        if (tree.degree(c) > tree.degree(x1)) x1 = c;
    }
    if (tree.degree(x0) >= tree.degree(x1)) {
        reject(op, "requires d(x0) < d(x1) for the exchanged children");
    }
    if (tree.has_edge(u, x1)) reject(op, "u already adjacent to x1");
    if (tree.has_edge(v, x0)) reject(op, "v already adjacent to x0");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(tree.edges().size());
    auto drop1 = std::minmax(u, x0);
    auto drop2 = std::minmax(v, x1);
    for (const auto& e : tree.edges()) {
        if (e == std::make_pair(drop1.first, drop1.second)) continue;
        if (e == std::make_pair(drop2.first, drop2.second)) continue;
        edges.push_back(e);
    }
    edges.emplace_back(v, x0);
    edges.emplace_back(u, x1);
    return rebuild(op, tree.n(), std::move(edges));
}

LabeledTree edge_shift(const LabeledTree& tree, int u, int w, const std::vector<int>& moved) {
    const std::string op = "edge shift";
    if (u < 0 || u >= tree.n() || w < 0 || w >= tree.n()) reject(op, "vertex out of range");
    if (u == w) reject(op, "u and w must differ");
    if (moved.empty()) reject(op, "nothing to move");
    std::vector<int> sorted = moved;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        reject(op, "moved vertices must be distinct");
    }
    if (tree.degree(w) < tree.degree(u)) reject(op, "requires d(w) >= d(u)");
    for (int c : moved) {
        if (c < 0 || c >= tree.n()) reject(op, "vertex out of range");
        if (c == w || c == u) reject(op, "moved vertices must avoid u and w");
        if (!tree.has_edge(u, c)) reject(op, "moved vertex not adjacent to u");
        if (tree.has_edge(w, c)) reject(op, "moved vertex already adjacent to w");
        // w inside the detached subtree would turn the rewire into a cycle.
        if (reaches_avoiding(tree, c, u, w)) reject(op, "w lies in a moved subtree");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(tree.edges().size());
    for (const auto& e : tree.edges()) {
        bool dropped = false;
        for (int c : moved) {
            auto drop = std::minmax(u, c);
            if (e == std::make_pair(drop.first, drop.second)) {
                dropped = true;
                break;
            }
        }
        if (!dropped) edges.push_back(e);
    }
    for (int c : moved) edges.emplace_back(w, c);
    return rebuild(op, tree.n(), std::move(edges));
}

}  // namespace spectree
