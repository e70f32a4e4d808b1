#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectree/degree_sequence.hpp"
#include "spectree/enumeration.hpp"

namespace spectree {

// Exhaustive and randomized certification sweeps. Every report row is
// computed independently of worker scheduling, so a report serializes to
// the same bytes for any worker count.

// One degree sequence: enumerate its classes, locate the S-order maximum,
// and compare it against the greedy construction.
struct GreedyMaximumCase {
    std::string pi;
    std::size_t class_count = 0;
    std::string labeled_count;
    std::string winner_code;
    bool unique = false;
    bool matches_greedy = false;

    bool passed() const { return unique && matches_greedy; }
};

struct GreedyMaximumReport {
    int min_n = 0;
    int max_n = 0;
    std::vector<GreedyMaximumCase> cases;
    bool all_passed = false;
};

// Sweeps every tree degree sequence with min_n <= n <= max_n.
GreedyMaximumReport verify_greedy_maximum(int min_n, int max_n, int workers = 1,
                                          int cap = kEnumerationCap);

// One strictly majorized pair: the greedy trees must compare strictly in
// S-order, and the unit-transfer chain between the sequences must validate.
struct MajorizationCase {
    int n = 0;
    std::string pi;
    std::string pi_prime;
    bool greedy_less = false;
    bool chain_valid = false;
    std::size_t chain_steps = 0;

    bool passed() const { return greedy_less && chain_valid; }
};

struct MajorizationReport {
    int max_n = 0;
    std::vector<MajorizationCase> cases;
    bool all_passed = false;
};

// All strictly majorized sequence pairs with 4 <= n <= max_n.
MajorizationReport verify_majorization(int max_n, int workers = 1);

// One random same-degree-sequence tree pair: shared low moments, the
// S_6/S_8 identities, and the per-tree structural facts
// (S_0 = n, S_2 = 2(n-1), odd moments zero, S_4 = 2 p2 + 4 p3).
struct IdentityCase {
    int n = 0;
    std::string pi;
    bool low_moments_equal = false;
    bool s6_identity = false;
    bool s8_identity = false;
    bool structural = false;

    bool passed() const {
        return low_moments_equal && s6_identity && s8_identity && structural;
    }
};

struct IdentityReport {
    std::uint64_t seed = 0;
    int samples = 0;
    int max_n = 0;
    std::vector<IdentityCase> cases;
    bool all_passed = false;
};

IdentityReport verify_identities(int samples, int max_n, std::uint64_t seed, int workers = 1);

// Stable serializations. JSON is emitted with a fixed key order and a
// trailing newline; byte-identical across runs and worker counts.
nlohmann::ordered_json report_json(const GreedyMaximumReport& report);
nlohmann::ordered_json report_json(const MajorizationReport& report);
nlohmann::ordered_json report_json(const IdentityReport& report);
std::string report_text(const GreedyMaximumReport& report);
std::string report_text(const MajorizationReport& report);
std::string report_text(const IdentityReport& report);

}  // namespace spectree
