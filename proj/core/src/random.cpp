#include "spectree/random.hpp"

#include <stdexcept>

#include "spectree/enumeration.hpp"

namespace spectree {

Rng rng_for_sample(std::uint64_t seed, std::uint64_t index) {
    // Golden-ratio stride keeps nearby indices' states far apart.
    return Rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

int uniform_below(Rng& rng, int bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

LabeledTree random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random tree: need n >= 1");
    if (n == 1) return LabeledTree::from_edges(1, {});
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = uniform_below(rng, n);
    return pruefer_decode(n, code);
}

LabeledTree random_tree_with_degrees(const DegreeSequence& pi, Rng& rng) {
    if (pi.n() < 2) throw std::invalid_argument("random tree: need n >= 2");
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(pi.n()) - 2);
    for (int v = 0; v < pi.n(); ++v) {
        code.insert(code.end(), static_cast<std::size_t>(pi[v] - 1), v);
    }
    // Fisher-Yates, spelled out so the draw sequence is engine-portable.
    for (std::size_t i = code.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, static_cast<int>(i)));
        std::swap(code[i - 1], code[j]);
    }
    return pruefer_decode(pi.n(), code);
}

}  // namespace spectree
