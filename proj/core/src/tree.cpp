#include "spectree/tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace spectree {

namespace {

[[noreturn]] void bad_tree(const std::string& why) {
    throw std::invalid_argument("tree: " + why);
}

}  // namespace

LabeledTree::LabeledTree(int n, std::vector<std::pair<int, int>> edges,
                         std::vector<std::vector<int>> adjacency)
    : n_(n), edges_(std::move(edges)), adjacency_(std::move(adjacency)) {}

LabeledTree LabeledTree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) bad_tree("order must be at least 1");
    if (static_cast<int>(edges.size()) != n - 1) {
        bad_tree("expected " + std::to_string(n - 1) + " edges, got " +
                 std::to_string(edges.size()));
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) bad_tree("vertex out of range");
        if (u == v) bad_tree("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        bad_tree("duplicate edge");
    }
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adjacency[static_cast<std::size_t>(u)].push_back(v);
        adjacency[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());
    // n-1 edges and connected together make it a tree.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adjacency[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                q.push(w);
            }
        }
    }
    if (visited != n) bad_tree("edge set is not connected");
    return LabeledTree(n, std::move(edges), std::move(adjacency));
}

const std::vector<int>& LabeledTree::neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
}

int LabeledTree::degree(int v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

bool LabeledTree::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

DegreeSequence degree_sequence_of(const LabeledTree& tree) {
    std::vector<int> degrees(static_cast<std::size_t>(tree.n()));
    for (int v = 0; v < tree.n(); ++v) degrees[static_cast<std::size_t>(v)] = tree.degree(v);
    return DegreeSequence(std::move(degrees));
}

std::vector<int> depths_from(const LabeledTree& tree, int root) {
    if (root < 0 || root >= tree.n()) bad_tree("root out of range");
    std::vector<int> depth(static_cast<std::size_t>(tree.n()), -1);
    std::queue<int> q;
    depth[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : tree.neighbors(v)) {
            if (depth[static_cast<std::size_t>(w)] < 0) {
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return depth;
}

std::vector<int> parents_from(const LabeledTree& tree, int root) {
    if (root < 0 || root >= tree.n()) bad_tree("root out of range");
    std::vector<int> parent(static_cast<std::size_t>(tree.n()), -2);
    std::queue<int> q;
    parent[static_cast<std::size_t>(root)] = -1;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : tree.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
        }
    }
    return parent;
}

std::vector<int> tree_centers(const LabeledTree& tree) {
    const int n = tree.n();
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        return all;
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = tree.degree(v);
        if (degree[static_cast<std::size_t>(v)] == 1) frontier.push_back(v);
    }
    int remaining = n;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[static_cast<std::size_t>(v)] = 1;
            --remaining;
            for (int w : tree.neighbors(v)) {
                if (!removed[static_cast<std::size_t>(w)] &&
                    --degree[static_cast<std::size_t>(w)] == 1) {
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
    }
    return centers;
}

namespace {

// Code of the subtree hanging from `root`, with the component containing
// `avoid` (a neighbor of root, or -1) cut off. Children codes are sorted
// ascending before concatenation, bottom-up over a reversed BFS order, so
// no recursion depth limits apply.
std::string rooted_code(const LabeledTree& tree, int root, int avoid) {
    const auto n = static_cast<std::size_t>(tree.n());
    std::vector<int> parent(n, -2);
    std::vector<int> order;
    order.reserve(n);
    parent[static_cast<std::size_t>(root)] = -1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : tree.neighbors(v)) {
            if (w == avoid && v == root) continue;
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<int>> children(n);
    for (int v : order) {
        if (parent[static_cast<std::size_t>(v)] >= 0) {
            children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);
        }
    }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> parts;
        parts.reserve(children[static_cast<std::size_t>(v)].size());
        for (int c : children[static_cast<std::size_t>(v)]) {
            parts.push_back(std::move(code[static_cast<std::size_t>(c)]));
        }
        std::sort(parts.begin(), parts.end());
        std::string joined = "(";
        for (const auto& p : parts) joined += p;
        joined += ')';
        code[static_cast<std::size_t>(v)] = std::move(joined);
    }
    return code[static_cast<std::size_t>(root)];
}

}  // namespace

CanonicalCode canonical_form(const LabeledTree& tree) {
    std::vector<int> centers = tree_centers(tree);
    if (centers.size() == 1) {
        return CanonicalCode{"C" + rooted_code(tree, centers[0], -1)};
    }
    std::string a = rooted_code(tree, centers[0], centers[1]);
    std::string b = rooted_code(tree, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return CanonicalCode{"B" + a + b};
}

LabeledTree tree_from_canonical_code(const CanonicalCode& code) {
    const std::string& s = code.value;
    if (s.size() < 3 || (s[0] != 'C' && s[0] != 'B')) {
        throw std::invalid_argument("canonical code: expected 'C' or 'B' prefix");
    }
    struct Node {
        int parent;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    std::size_t pos = 1;
    auto parse_rooted = [&]() -> int {
        if (pos >= s.size() || s[pos] != '(') {
            throw std::invalid_argument("canonical code: expected '('");
        }
        std::vector<int> stack;
        int root = -1;
        while (pos < s.size()) {
            if (s[pos] == '(') {
                int id = static_cast<int>(nodes.size());
                nodes.push_back({stack.empty() ? -1 : stack.back(), {}});
                if (stack.empty()) {
                    root = id;
                } else {
                    nodes[static_cast<std::size_t>(stack.back())].children.push_back(id);
                }
                stack.push_back(id);
                ++pos;
            } else if (s[pos] == ')') {
                if (stack.empty()) {
                    throw std::invalid_argument("canonical code: unbalanced ')'");
                }
                stack.pop_back();
                ++pos;
                if (stack.empty()) return root;
            } else {
                throw std::invalid_argument("canonical code: unexpected character");
            }
        }
        throw std::invalid_argument("canonical code: unbalanced '('");
    };
    int root = parse_rooted();
    if (s[0] == 'B') {
        int other = parse_rooted();
        nodes[static_cast<std::size_t>(other)].parent = root;
        nodes[static_cast<std::size_t>(root)].children.push_back(other);
    }
    if (pos != s.size()) {
        throw std::invalid_argument("canonical code: trailing characters");
    }
    // Relabel in BFS order, children visited in code order.
    const auto n = nodes.size();
    std::vector<int> label(n, -1);
    std::vector<int> order;
    order.reserve(n);
    order.push_back(root);
    label[static_cast<std::size_t>(root)] = 0;
    int next = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int c : nodes[static_cast<std::size_t>(order[head])].children) {
            label[static_cast<std::size_t>(c)] = next++;
            order.push_back(c);
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (std::size_t id = 0; id < n; ++id) {
        if (nodes[id].parent >= 0) {
            edges.emplace_back(label[static_cast<std::size_t>(nodes[id].parent)], label[id]);
        }
    }
    return LabeledTree::from_edges(static_cast<int>(n), std::move(edges));
}

bool are_isomorphic(const LabeledTree& a, const LabeledTree& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace spectree
