#include "spectree/verify.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spectree/greedy.hpp"
#include "spectree/random.hpp"
#include "spectree/spectral.hpp"

namespace spectree {

namespace {

// Index-addressed work queue: results land in preassigned slots, so the
// assembled report is identical for any worker count.
template <typename Work>
void parallel_for(std::size_t count, int workers, Work&& work) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            work(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawned = std::min<int>(workers, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(spawned));
    for (int t = 0; t < spawned; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
}

}  // namespace

GreedyMaximumReport verify_greedy_maximum(int min_n, int max_n, int workers, int cap) {
    if (min_n < 2 || max_n < min_n) {
        throw std::invalid_argument("greedy maximum sweep: need 2 <= min_n <= max_n");
    }
    std::vector<DegreeSequence> sequences;
    for (int n = min_n; n <= max_n; ++n) {
        std::vector<DegreeSequence> of_n = enumerate_tree_degree_sequences(n, cap);
        sequences.insert(sequences.end(), of_n.begin(), of_n.end());
    }
    GreedyMaximumReport report;
    report.min_n = min_n;
    report.max_n = max_n;
    report.cases.resize(sequences.size());
    parallel_for(sequences.size(), workers, [&](std::size_t i) {
        const DegreeSequence& pi = sequences[i];
        IsoClassSet classes = enumerate_trees_with_degrees(pi, cap);
        LastInSOrderResult last = last_in_s_order(classes);
        GreedyMaximumCase& row = report.cases[i];
        row.pi = pi.to_string();
        row.class_count = classes.representatives.size();
        row.labeled_count = classes.labeled_count.str();
        row.winner_code = canonical_form(last.tree).value;
        row.unique = last.unique;
        row.matches_greedy = are_isomorphic(last.tree, build_greedy_tree(pi));
    });
    report.all_passed = true;
    for (const auto& row : report.cases) {
        if (!row.passed()) report.all_passed = false;
    }
    return report;
}

MajorizationReport verify_majorization(int max_n, int workers) {
    if (max_n < 4) {
        throw std::invalid_argument("majorization sweep: need max_n >= 4");
    }
    struct Pair {
        DegreeSequence pi;
        DegreeSequence pi_prime;
    };
    std::vector<Pair> pairs;
    for (int n = 4; n <= max_n; ++n) {
        std::vector<DegreeSequence> of_n = enumerate_tree_degree_sequences(n, max_n);
        for (const auto& a : of_n) {
            for (const auto& b : of_n) {
                if (&a != &b && strictly_majorized_by(a, b)) {
                    pairs.push_back(Pair{a, b});
                }
            }
        }
    }
    MajorizationReport report;
    report.max_n = max_n;
    report.cases.resize(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t i) {
        const Pair& pair = pairs[i];
        MajorizationCase& row = report.cases[i];
        row.n = pair.pi.n();
        row.pi = pair.pi.to_string();
        row.pi_prime = pair.pi_prime.to_string();
        SOrderResult cmp = s_order_compare(build_greedy_tree(pair.pi),
                                           build_greedy_tree(pair.pi_prime));
        row.greedy_less = cmp.ordering == SOrder::Less;
        std::vector<DegreeSequence> chain = majorization_chain(pair.pi, pair.pi_prime);
        row.chain_valid = validate_majorization_chain(pair.pi, pair.pi_prime, chain);
        row.chain_steps = chain.size() - 1;
    });
    report.all_passed = true;
    for (const auto& row : report.cases) {
        if (!row.passed()) report.all_passed = false;
    }
    return report;
}

IdentityReport verify_identities(int samples, int max_n, std::uint64_t seed, int workers) {
    if (samples < 1) throw std::invalid_argument("identity sweep: need samples >= 1");
    if (max_n < 4) throw std::invalid_argument("identity sweep: need max_n >= 4");
    IdentityReport report;
    report.seed = seed;
    report.samples = samples;
    report.max_n = max_n;
    report.cases.resize(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), workers, [&](std::size_t i) {
        Rng rng = rng_for_sample(seed, i);
        const int n = 4 + uniform_below(rng, max_n - 3);
        const DegreeSequence pi = degree_sequence_of(random_tree(n, rng));
        const LabeledTree a = random_tree_with_degrees(pi, rng);
        const LabeledTree b = random_tree_with_degrees(pi, rng);
        IdentityCase& row = report.cases[i];
        row.n = n;
        row.pi = pi.to_string();
        MomentIdentityReport identity = moment_identity_report(a, b);
        row.low_moments_equal = identity.low_moments_equal;
        row.s6_identity = identity.s6_delta == identity.s6_predicted;
        row.s8_identity = identity.s8_delta == identity.s8_predicted;
        row.structural = true;
        for (const LabeledTree* t : {&a, &b}) {
            const MomentVector mv = spectral_moments(*t);
            const SubgraphCounts counts = subgraph_counts_formula(*t);
            const std::vector<BigInt> low = closed_walk_moments(*t, 4);
            if (mv.moments[0] != t->n()) row.structural = false;
            if (mv.n() > 2 && mv.moments[2] != 2 * (t->n() - 1)) row.structural = false;
            for (int k = 1; k < mv.n(); k += 2) {
                if (mv.moments[static_cast<std::size_t>(k)] != 0) row.structural = false;
            }
            if (low[4] != 2 * counts.p2 + 4 * counts.p3) row.structural = false;
        }
    });
    report.all_passed = true;
    for (const auto& row : report.cases) {
        if (!row.passed()) report.all_passed = false;
    }
    return report;
}

nlohmann::ordered_json report_json(const GreedyMaximumReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "verify-theorem";
    doc["min_n"] = report.min_n;
    doc["max_n"] = report.max_n;
    doc["sequences"] = report.cases.size();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.cases) {
        nlohmann::ordered_json r;
        r["pi"] = row.pi;
        r["classes"] = row.class_count;
        r["labeled_trees"] = row.labeled_count;
        r["winner"] = row.winner_code;
        r["unique"] = row.unique;
        r["matches_greedy"] = row.matches_greedy;
        r["passed"] = row.passed();
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["all_passed"] = report.all_passed;
    return doc;
}

nlohmann::ordered_json report_json(const MajorizationReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "verify-majorization";
    doc["max_n"] = report.max_n;
    doc["pairs"] = report.cases.size();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.cases) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["pi"] = row.pi;
        r["pi_prime"] = row.pi_prime;
        r["greedy_less"] = row.greedy_less;
        r["chain_valid"] = row.chain_valid;
        r["chain_steps"] = row.chain_steps;
        r["passed"] = row.passed();
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["all_passed"] = report.all_passed;
    return doc;
}

nlohmann::ordered_json report_json(const IdentityReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "verify-identities";
    doc["seed"] = report.seed;
    doc["samples"] = report.samples;
    doc["max_n"] = report.max_n;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.cases) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["pi"] = row.pi;
        r["low_moments_equal"] = row.low_moments_equal;
        r["s6_identity"] = row.s6_identity;
        r["s8_identity"] = row.s8_identity;
        r["structural"] = row.structural;
        r["passed"] = row.passed();
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["all_passed"] = report.all_passed;
    return doc;
}

std::string report_text(const GreedyMaximumReport& report) {
    std::ostringstream out;
    out << "greedy maximum sweep, n = " << report.min_n << " .. " << report.max_n << "\n";
    for (const auto& row : report.cases) {
        out << (row.passed() ? "  ok   " : "  FAIL ") << row.pi << "  classes=" << row.class_count
            << " labeled=" << row.labeled_count << " unique=" << (row.unique ? "yes" : "no")
            << " greedy=" << (row.matches_greedy ? "yes" : "no") << "\n";
    }
    out << "sequences: " << report.cases.size() << "\n";
    out << (report.all_passed ? "all passed" : "FAILURES PRESENT") << "\n";
    return out.str();
}

std::string report_text(const MajorizationReport& report) {
    std::ostringstream out;
    out << "majorization monotonicity sweep, n <= " << report.max_n << "\n";
    for (const auto& row : report.cases) {
        out << (row.passed() ? "  ok   " : "  FAIL ") << "(" << row.pi << ") < (" << row.pi_prime
            << ")  chain_steps=" << row.chain_steps << "\n";
    }
    out << "pairs: " << report.cases.size() << "\n";
    out << (report.all_passed ? "all passed" : "FAILURES PRESENT") << "\n";
    return out.str();
}

std::string report_text(const IdentityReport& report) {
    std::ostringstream out;
    out << "moment identity sweep, samples = " << report.samples << ", n <= " << report.max_n
        << ", seed = " << report.seed << "\n";
    std::size_t failed = 0;
    for (const auto& row : report.cases) {
        if (!row.passed()) {
            ++failed;
            out << "  FAIL n=" << row.n << " pi=" << row.pi << "\n";
        }
    }
    out << "failures: " << failed << "\n";
    out << (report.all_passed ? "all passed" : "FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace spectree
