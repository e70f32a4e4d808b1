#pragma once

#include <cstdint>
#include <random>

#include "spectree/degree_sequence.hpp"
#include "spectree/tree.hpp"

namespace spectree {

using Rng = std::mt19937_64;

// Derives an engine for one sample of a seeded batch; identical across
// platforms and independent of evaluation order, so parallel sweeps stay
// reproducible.
Rng rng_for_sample(std::uint64_t seed, std::uint64_t index);

// Draw in [0, bound) using the raw engine stream (no distribution objects,
// whose outputs vary across standard libraries).
int uniform_below(Rng& rng, int bound);

// Uniform labeled tree on n vertices via a uniform Pruefer code.
LabeledTree random_tree(int n, Rng& rng);

// Uniform labeled tree among those with degree pi[i] at vertex i, via a
// shuffled Pruefer multiset.
LabeledTree random_tree_with_degrees(const DegreeSequence& pi, Rng& rng);

}  // namespace spectree
