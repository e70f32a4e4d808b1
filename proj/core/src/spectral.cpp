#include "spectree/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace spectree {

std::vector<BigInt> closed_walk_moments(const LabeledTree& tree, int kmax) {
    if (kmax < 0) throw std::invalid_argument("moments: negative index");
    const auto n = static_cast<std::size_t>(tree.n());
    std::vector<BigInt> moments(static_cast<std::size_t>(kmax) + 1);
    moments[0] = tree.n();
    std::vector<BigInt> walk(n);
    std::vector<BigInt> next(n);
    for (std::size_t start = 0; start < n; ++start) {
        // walk[v] = number of k-walks from `start` to v.
        std::fill(walk.begin(), walk.end(), 0);
        walk[start] = 1;
        for (int k = 1; k <= kmax; ++k) {
            for (std::size_t v = 0; v < n; ++v) {
                BigInt total = 0;
                for (int w : tree.neighbors(static_cast<int>(v))) {
                    total += walk[static_cast<std::size_t>(w)];
                }
                next[v] = std::move(total);
            }
            walk.swap(next);
            moments[static_cast<std::size_t>(k)] += walk[start];
        }
    }
    return moments;
}

MomentVector spectral_moments(const LabeledTree& tree) {
    return MomentVector{closed_walk_moments(tree, tree.n() - 1)};
}

SOrderResult s_order_compare(const LabeledTree& a, const LabeledTree& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("s-order: trees must have the same order");
    }
    const int kmax = a.n();
    std::vector<BigInt> ma = closed_walk_moments(a, kmax);
    std::vector<BigInt> mb = closed_walk_moments(b, kmax);
    for (int k = 0; k <= kmax; ++k) {
        const BigInt& x = ma[static_cast<std::size_t>(k)];
        const BigInt& y = mb[static_cast<std::size_t>(k)];
        if (x != y) {
            return SOrderResult{x < y ? SOrder::Less : SOrder::Greater, k};
        }
    }
    return SOrderResult{SOrder::Equal, std::nullopt};
}

namespace {

long long choose2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

}  // namespace

SubgraphCounts subgraph_counts_formula(const LabeledTree& tree) {
    SubgraphCounts counts;
    counts.p2 = tree.n() - 1;
    counts.p3 = 0;
    counts.p4 = 0;
    counts.p5 = 0;
    counts.b5 = 0;
    for (int v = 0; v < tree.n(); ++v) {
        counts.p3 += choose2(tree.degree(v));
        const std::vector<int>& nb = tree.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                counts.p5 += static_cast<long long>(tree.degree(nb[i]) - 1) *
                             (tree.degree(nb[j]) - 1);
            }
        }
    }
    for (const auto& [u, v] : tree.edges()) {
        const long long du = tree.degree(u);
        const long long dv = tree.degree(v);
        counts.p4 += (du - 1) * (dv - 1);
        counts.b5 += choose2(du - 1) * (dv - 1) + choose2(dv - 1) * (du - 1);
    }
    return counts;
}

namespace {

struct PatternInfo {
    int size;
    CanonicalCode code;
};

const PatternInfo& pattern_info(Pattern pattern) {
    static const PatternInfo p2{2, canonical_form(LabeledTree::from_edges(2, {{0, 1}}))};
    static const PatternInfo p3{3, canonical_form(LabeledTree::from_edges(3, {{0, 1}, {1, 2}}))};
    static const PatternInfo p4{
        4, canonical_form(LabeledTree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}))};
    static const PatternInfo p5{
        5, canonical_form(LabeledTree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}))};
    static const PatternInfo b5{
        5, canonical_form(LabeledTree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}))};
    switch (pattern) {
        case Pattern::P2: return p2;
        case Pattern::P3: return p3;
        case Pattern::P4: return p4;
        case Pattern::P5: return p5;
        case Pattern::B5: return b5;
    }
    throw std::invalid_argument("unknown pattern");
}

}  // namespace

BigInt brute_force_subgraph_count(const LabeledTree& tree, Pattern pattern) {
    const PatternInfo& info = pattern_info(pattern);
    const int k = info.size;
    const int n = tree.n();
    if (n < k) return 0;
    BigInt count = 0;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    // Iterate all k-subsets in lexicographic order.
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] = i;
        std::vector<std::pair<int, int>> induced;
        for (int i = 0; i < k; ++i) {
            const int v = subset[static_cast<std::size_t>(i)];
            for (int w : tree.neighbors(v)) {
                if (w > v && local[static_cast<std::size_t>(w)] >= 0) {
                    induced.emplace_back(i, local[static_cast<std::size_t>(w)]);
                }
            }
        }
        // In a tree any induced subgraph is a forest; it matches the
        // pattern only if it is connected (k-1 edges) with the right shape.
        if (static_cast<int>(induced.size()) == k - 1) {
            LabeledTree candidate = LabeledTree::from_edges(k, std::move(induced));
            if (canonical_form(candidate) == info.code) ++count;
        }
        for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] = -1;
        // Advance the subset odometer.
        int pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return count;
}

MomentIdentityReport moment_identity_report(const LabeledTree& a, const LabeledTree& b) {
    if (!(degree_sequence_of(a) == degree_sequence_of(b))) {
        throw std::invalid_argument("moment identities: trees must share a degree sequence");
    }
    std::vector<BigInt> ma = closed_walk_moments(a, 8);
    std::vector<BigInt> mb = closed_walk_moments(b, 8);
    MomentIdentityReport report;
    report.low_moments_equal = true;
    for (int k : {0, 1, 2, 3, 4, 5, 7}) {
        if (ma[static_cast<std::size_t>(k)] != mb[static_cast<std::size_t>(k)]) {
            report.low_moments_equal = false;
        }
    }
    SubgraphCounts ca = subgraph_counts_formula(a);
    SubgraphCounts cb = subgraph_counts_formula(b);
    report.s6_delta = ma[6] - mb[6];
    report.s6_predicted = 6 * (ca.p4 - cb.p4);
    report.s8_delta = ma[8] - mb[8];
    report.s8_predicted =
        32 * (ca.p4 - cb.p4) + 8 * (ca.p5 - cb.p5) + 16 * (ca.b5 - cb.b5);
    return report;
}

}  // namespace spectree
