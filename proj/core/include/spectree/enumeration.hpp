#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spectree/bigint.hpp"
#include "spectree/degree_sequence.hpp"
#include "spectree/tree.hpp"

namespace spectree {

// Guard rails for the factorial-growth enumerations. Both can be lifted
// explicitly by callers that know what they are asking for.
inline constexpr int kEnumerationCap = 12;  // single degree sequence
inline constexpr int kSweepCap = 10;        // all degree sequences of an order

// One canonically labeled representative per isomorphism class of trees
// realizing a degree sequence.
struct IsoClassSet {
    DegreeSequence source_pi;
    std::vector<LabeledTree> representatives;  // sorted by canonical code
    BigInt labeled_count;                      // labeled trees seen before dedup
};

// Decodes a Pruefer code (length n-2, entries in [0, n)) into its labeled
// tree; vertex i ends up with degree (multiplicity of i) + 1.
LabeledTree pruefer_decode(int n, const std::vector<int>& code);

// Enumerates every labeled tree in which vertex i has degree pi[i], via all
// multiset permutations of the Pruefer code with i repeated pi[i]-1 times,
// and deduplicates by canonical form. Requires n >= 2 and n <= cap.
IsoClassSet enumerate_trees_with_degrees(const DegreeSequence& pi, int cap = kEnumerationCap);

// (n-2)! / prod_i (pi[i] - 1)!  labeled trees realize pi vertex-wise.
BigInt count_labeled_trees(const DegreeSequence& pi);

// Every tree degree sequence of order n, lexicographically descending.
// Requires 2 <= n <= cap.
std::vector<DegreeSequence> enumerate_tree_degree_sequences(int n, int cap = kEnumerationCap);

struct SOrderLossEntry {
    std::size_t index;                    // position in the input list
    std::optional<int> first_diff_index;  // absent for an exact moment tie
};

struct LastInSOrderResult {
    LabeledTree tree;
    std::size_t winner_index;
    bool unique;
    std::vector<SOrderLossEntry> certificate;  // one entry per non-winner
};

// S-order maximum of a nonempty list of same-order trees, with a
// certificate recording where each other tree first falls behind.
LastInSOrderResult last_in_s_order(const std::vector<LabeledTree>& trees);
LastInSOrderResult last_in_s_order(const IsoClassSet& classes);

}  // namespace spectree
