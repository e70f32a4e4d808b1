#include "spectree/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spectree/spectral.hpp"

namespace spectree {

LabeledTree pruefer_decode(int n, const std::vector<int>& code) {
    if (n < 2) throw std::invalid_argument("pruefer: need n >= 2");
    if (static_cast<int>(code.size()) != n - 2) {
        throw std::invalid_argument("pruefer: code must have length n-2");
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) {
        if (c < 0 || c >= n) throw std::invalid_argument("pruefer: entry out of range");
        ++degree[static_cast<std::size_t>(c)];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    auto it = leaves.begin();
    int a = *it++;
    int b = *it;
    edges.emplace_back(a, b);
    return LabeledTree::from_edges(n, std::move(edges));
}

IsoClassSet enumerate_trees_with_degrees(const DegreeSequence& pi, int cap) {
    if (pi.n() < 2) {
        throw std::invalid_argument("enumeration: need at least two vertices");
    }
    if (pi.n() > cap) {
        throw std::invalid_argument("enumeration: order " + std::to_string(pi.n()) +
                                    " exceeds the cap of " + std::to_string(cap));
    }
    const int n = pi.n();
    // Vertex i gets degree pi[i], i.e. appears pi[i]-1 times in the code.
    // Ascending start lets next_permutation walk every multiset permutation.
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n) - 2);
    for (int v = 0; v < n; ++v) {
        code.insert(code.end(), static_cast<std::size_t>(pi[v] - 1), v);
    }
    std::set<CanonicalCode> classes;
    BigInt labeled = 0;
    do {
        classes.insert(canonical_form(pruefer_decode(n, code)));
        ++labeled;
    } while (std::next_permutation(code.begin(), code.end()));
    IsoClassSet out{pi, {}, std::move(labeled)};
    out.representatives.reserve(classes.size());
    for (const CanonicalCode& key : classes) {
        out.representatives.push_back(tree_from_canonical_code(key));
    }
    return out;
}

BigInt count_labeled_trees(const DegreeSequence& pi) {
    if (pi.n() < 2) {
        throw std::invalid_argument("count: need at least two vertices");
    }
    BigInt numerator = 1;
    for (int i = 2; i <= pi.n() - 2; ++i) numerator *= i;
    BigInt denominator = 1;
    for (int i = 0; i < pi.n(); ++i) {
        for (int j = 2; j <= pi[i] - 1; ++j) denominator *= j;
    }
    return numerator / denominator;
}

namespace {

void partitions_desc(int remaining, int parts, int max_part, std::vector<int>& prefix,
                     std::vector<DegreeSequence>& out) {
    if (parts == 0) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    // Each remaining part is between 1 and max_part; generate the largest
    // next part first so the output is lexicographically descending.
    int hi = std::min(max_part, remaining - (parts - 1));
    for (int next = hi; next >= 1; --next) {
        if (static_cast<long long>(next) * parts < remaining) break;
        prefix.push_back(next);
        partitions_desc(remaining - next, parts - 1, next, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> enumerate_tree_degree_sequences(int n, int cap) {
    if (n < 2) throw std::invalid_argument("sequence sweep: need n >= 2");
    if (n > cap) {
        throw std::invalid_argument("sequence sweep: order " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap));
    }
    std::vector<DegreeSequence> out;
    std::vector<int> prefix;
    partitions_desc(2 * (n - 1), n, n - 1, prefix, out);
    return out;
}

LastInSOrderResult last_in_s_order(const std::vector<LabeledTree>& trees) {
    if (trees.empty()) {
        throw std::invalid_argument("s-order maximum: empty input");
    }
    const int n = trees.front().n();
    for (const auto& t : trees) {
        if (t.n() != n) throw std::invalid_argument("s-order maximum: mixed orders");
    }
    // One moment table per tree; lexicographic comparison on k = 0..n is
    // decisive (see s_order_compare).
    std::vector<std::vector<BigInt>> table;
    table.reserve(trees.size());
    for (const auto& t : trees) table.push_back(closed_walk_moments(t, n));
    auto first_diff = [&](std::size_t i, std::size_t j) -> std::optional<int> {
        for (int k = 0; k <= n; ++k) {
            if (table[i][static_cast<std::size_t>(k)] != table[j][static_cast<std::size_t>(k)]) {
                return k;
            }
        }
        return std::nullopt;
    };
    std::size_t winner = 0;
    for (std::size_t i = 1; i < trees.size(); ++i) {
        auto k = first_diff(i, winner);
        if (k && table[i][static_cast<std::size_t>(*k)] > table[winner][static_cast<std::size_t>(*k)]) {
            winner = i;
        }
    }
    LastInSOrderResult result{trees[winner], winner, true, {}};
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (i == winner) continue;
        auto k = first_diff(i, winner);
        if (!k) result.unique = false;
        result.certificate.push_back(SOrderLossEntry{i, k});
    }
    return result;
}

LastInSOrderResult last_in_s_order(const IsoClassSet& classes) {
    return last_in_s_order(classes.representatives);
}

}  // namespace spectree
