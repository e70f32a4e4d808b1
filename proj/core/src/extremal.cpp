#include "spectree/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "spectree/greedy.hpp"

namespace spectree {

namespace {

[[noreturn]] void reject(const std::string& family, const std::string& why) {
    throw std::invalid_argument(family + ": " + why);
}

ExtremalSpec finish(ExtremalFamily family, int n, int parameter, std::vector<int> degrees) {
    DegreeSequence pi_star{std::move(degrees)};
    LabeledTree tree = build_greedy_tree(pi_star);
    ExtremalSpec spec{family, n, parameter, std::move(pi_star), std::move(tree)};
    // The constructions are closed-form; catching a drift between the
    // intended parameter and the realized tree here is much cheaper than
    // downstream.
    GraphParameters params = graph_parameter_oracles(spec.tree);
    const int realized = [&] {
        switch (family) {
            case ExtremalFamily::Leaves: return params.leaves;
            case ExtremalFamily::MaxDegree: return params.max_degree;
            case ExtremalFamily::Independence: return params.independence_number;
            case ExtremalFamily::Matching: return params.matching_number;
        }
        return -1;
    }();
    if (realized != parameter) {
        throw std::logic_error("extremal construction realizes the wrong parameter");
    }
    return spec;
}

std::vector<int> spider_like(int n, int high) {
    // (high, 2^{n-high-1}, 1^{high})
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    degrees.push_back(high);
    degrees.insert(degrees.end(), static_cast<std::size_t>(n - high - 1), 2);
    degrees.insert(degrees.end(), static_cast<std::size_t>(high), 1);
    return degrees;
}

}  // namespace

ExtremalSpec extremal_leaves(int n, int leaves) {
    if (n < 3) reject("leaves family", "need n >= 3");
    if (leaves < 2 || leaves > n - 1) reject("leaves family", "need 2 <= leaves <= n-1");
    return finish(ExtremalFamily::Leaves, n, leaves, spider_like(n, leaves));
}

ExtremalSpec extremal_max_degree(int n, int max_degree) {
    if (max_degree < 3) reject("max degree family", "need max_degree >= 3");
    if (n < max_degree + 1) reject("max degree family", "need n >= max_degree + 1");
    if (n == max_degree + 1) {
        // Star: the root alone exhausts the order.
        std::vector<int> degrees{max_degree};
        degrees.insert(degrees.end(), static_cast<std::size_t>(max_degree), 1);
        return finish(ExtremalFamily::MaxDegree, n, max_degree, std::move(degrees));
    }
    // Sizes of trees whose top l+1 layers are full of max_degree vertices:
    // full(0) = 1, full(l) = 1 + max_degree (( (max_degree-1)^l - 1 ) / (max_degree-2)).
    // Find l >= 1 with full(l) < n <= full(l+1); the layer below the last
    // full one absorbs the remaining vertices in blocks of max_degree - 1
    // per parent, the final partial parent keeping degree (remainder + 1).
    auto full = [&](int l) {
        long long size = 1;
        long long width = max_degree;
        for (int i = 0; i < l; ++i) {
            size += width;
            if (size > n) break;  // avoid overflow, exact value irrelevant beyond n
            width *= max_degree - 1;
        }
        return size;
    };
    int l = 1;
    while (full(l + 1) < n) ++l;
    const long long internal_full = full(l - 1);  // vertices whose children slots are all used
    const long long rem = n - full(l);            // vertices in the partial layer
    const long long blocks = rem / (max_degree - 1);
    const long long leftover = rem % (max_degree - 1);
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    degrees.insert(degrees.end(), static_cast<std::size_t>(internal_full + blocks),
                   max_degree);
    if (leftover > 0) degrees.push_back(static_cast<int>(leftover) + 1);
    degrees.insert(degrees.end(), static_cast<std::size_t>(n) - degrees.size(), 1);
    return finish(ExtremalFamily::MaxDegree, n, max_degree, std::move(degrees));
}

ExtremalSpec extremal_independence(int n, int alpha) {
    if (n < 2) reject("independence family", "need n >= 2");
    if (alpha < (n + 1) / 2 || alpha > n - 1) {
        reject("independence family", "need ceil(n/2) <= alpha <= n-1");
    }
    return finish(ExtremalFamily::Independence, n, alpha, spider_like(n, alpha));
}

ExtremalSpec extremal_matching(int n, int beta) {
    if (n < 2) reject("matching family", "need n >= 2");
    if (beta < 1 || beta > n / 2) reject("matching family", "need 1 <= beta <= floor(n/2)");
    return finish(ExtremalFamily::Matching, n, beta, spider_like(n, n - beta));
}

GraphParameters graph_parameter_oracles(const LabeledTree& tree) {
    const int n = tree.n();
    GraphParameters params{0, 0, 0, 0};
    for (int v = 0; v < n; ++v) {
        params.max_degree = std::max(params.max_degree, tree.degree(v));
        if (n >= 2 && tree.degree(v) == 1) ++params.leaves;
    }
    if (n == 1) {
        params.independence_number = 1;
        return params;
    }
    // Bottom-up over reversed BFS order.
    const int root = 0;
    std::vector<int> parent = parents_from(tree, root);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int w : tree.neighbors(order[head])) {
            if (w != parent[static_cast<std::size_t>(order[head])]) order.push_back(w);
        }
    }
    // Independence: include/exclude per vertex.
    std::vector<int> incl(static_cast<std::size_t>(n), 1);
    std::vector<int> excl(static_cast<std::size_t>(n), 0);
    // Matching: best = subtree optimum with v free or matched; matched_gain
    // tracks the best improvement from matching v to one of its children.
    std::vector<int> best(static_cast<std::size_t>(n), 0);
    std::vector<int> free_sum(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        int matched = -1;  // best value when v is matched to some child
        for (int c : tree.neighbors(v)) {
            if (c == parent[static_cast<std::size_t>(v)]) continue;
            incl[static_cast<std::size_t>(v)] += excl[static_cast<std::size_t>(c)];
            excl[static_cast<std::size_t>(v)] += std::max(incl[static_cast<std::size_t>(c)],
                                                          excl[static_cast<std::size_t>(c)]);
            free_sum[static_cast<std::size_t>(v)] += best[static_cast<std::size_t>(c)];
        }
        for (int c : tree.neighbors(v)) {
            if (c == parent[static_cast<std::size_t>(v)]) continue;
            const int candidate = free_sum[static_cast<std::size_t>(v)] -
                                  best[static_cast<std::size_t>(c)] + 1 +
                                  free_sum[static_cast<std::size_t>(c)];
            matched = std::max(matched, candidate);
        }
        best[static_cast<std::size_t>(v)] =
            std::max(free_sum[static_cast<std::size_t>(v)], matched);
    }
    params.independence_number = std::max(incl[root], excl[root]);
    params.matching_number = best[root];
    return params;
}

}  // namespace spectree
