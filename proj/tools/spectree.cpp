// Command-line front end: greedy construction, exact moments, S-order
// comparison, class enumeration, and the certification sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spectree/degree_sequence.hpp"
#include "spectree/enumeration.hpp"
#include "spectree/extremal.hpp"
#include "spectree/greedy.hpp"
#include "spectree/spectral.hpp"
#include "spectree/transforms.hpp"
#include "spectree/tree.hpp"
#include "spectree/tree_io.hpp"
#include "spectree/verify.hpp"

namespace {

using namespace spectree;
using nlohmann::ordered_json;

int env_cap(int fallback) {
    const char* raw = std::getenv("SPECTREE_MAX_N");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 2 || value > 1'000'000) {
        throw std::invalid_argument("SPECTREE_MAX_N must be an integer >= 2");
    }
    return static_cast<int>(value);
}

// Factorial-growth guard shared by the enumerating commands: the env var
// moves the cap, --force ignores it (with a warning).
int resolve_cap(int requested, int default_cap, bool force) {
    const int cap = env_cap(default_cap);
    if (requested <= cap) return cap;
    if (force) {
        std::cerr << "warning: order " << requested << " exceeds the enumeration cap of " << cap
                  << "; continuing because --force was given\n";
        return requested;
    }
    throw std::invalid_argument("order " + std::to_string(requested) +
                                " exceeds the enumeration cap of " + std::to_string(cap) +
                                " (raise SPECTREE_MAX_N or pass --force)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string edges_inline(const LabeledTree& tree) {
    std::string out;
    for (const auto& [u, v] : tree.edges()) {
        if (!out.empty()) out += ' ';
        out += '(' + std::to_string(u) + ',' + std::to_string(v) + ')';
    }
    return out;
}

ordered_json tree_json_doc(const LabeledTree& tree) {
    ordered_json doc;
    doc["n"] = tree.n();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : tree.edges()) {
        edges.push_back(ordered_json::array({u, v}));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

int run_build_greedy(const std::string& pi_text, const std::string& format,
                     const std::string& output) {
    const DegreeSequence pi = DegreeSequence::parse(pi_text);
    const LabeledTree tree = build_greedy_tree(pi);
    if (format == "json") {
        write_output(output, tree_to_json(tree) + "\n");
    } else if (format == "dot") {
        write_output(output, tree_to_dot(tree));
    } else {
        std::string text = "pi: " + pi.to_string() + "\nn: " + std::to_string(tree.n()) +
                           "\nedges: " + edges_inline(tree) + "\n";
        write_output(output, text);
    }
    return 0;
}

int run_moments(const std::string& tree_path, const std::string& format,
                const std::string& output) {
    const LabeledTree tree = load_tree_file(tree_path);
    const MomentVector mv = spectral_moments(tree);
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["n"] = tree.n();
        ordered_json moments = ordered_json::array();
        for (const BigInt& m : mv.moments) moments.push_back(m.str());
        doc["moments"] = std::move(moments);
        write_output(output, dump(doc));
    } else {
        std::string text = "n: " + std::to_string(tree.n()) + "\n";
        for (int k = 0; k < mv.n(); ++k) {
            text += "S[" + std::to_string(k) + "] = " + mv.moments[static_cast<std::size_t>(k)].str() +
                    "\n";
        }
        write_output(output, text);
    }
    return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path, const std::string& format,
                const std::string& output) {
    const LabeledTree a = load_tree_file(a_path);
    const LabeledTree b = load_tree_file(b_path);
    const SOrderResult result = s_order_compare(a, b);
    const char* word = result.ordering == SOrder::Less     ? "LESS"
                       : result.ordering == SOrder::Greater ? "GREATER"
                                                            : "EQUAL";
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["ordering"] = word;
        if (result.first_diff_index) {
            doc["first_diff_index"] = *result.first_diff_index;
        } else {
            doc["first_diff_index"] = nullptr;
        }
        write_output(output, dump(doc));
    } else {
        std::string text = word;
        if (result.first_diff_index) {
            text += " at k=" + std::to_string(*result.first_diff_index);
        }
        write_output(output, text + "\n");
    }
    return 0;
}

int run_enumerate(const std::string& pi_text, int limit, const std::string& format,
                  const std::string& output, bool force) {
    const DegreeSequence pi = DegreeSequence::parse(pi_text);
    const int cap = resolve_cap(pi.n(), kEnumerationCap, force);
    const IsoClassSet classes = enumerate_trees_with_degrees(pi, cap);
    const std::size_t shown =
        limit > 0 ? std::min<std::size_t>(static_cast<std::size_t>(limit),
                                          classes.representatives.size())
                  : classes.representatives.size();
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["pi"] = pi.to_string();
        doc["labeled_trees"] = classes.labeled_count.str();
        doc["classes"] = classes.representatives.size();
        doc["truncated"] = shown < classes.representatives.size();
        ordered_json reps = ordered_json::array();
        for (std::size_t i = 0; i < shown; ++i) {
            const LabeledTree& tree = classes.representatives[i];
            ordered_json rep;
            rep["code"] = canonical_form(tree).value;
            rep["tree"] = tree_json_doc(tree);
            reps.push_back(std::move(rep));
        }
        doc["representatives"] = std::move(reps);
        write_output(output, dump(doc));
    } else {
        std::string text = "pi: " + pi.to_string() + "\nlabeled trees: " +
                           classes.labeled_count.str() +
                           "\nclasses: " + std::to_string(classes.representatives.size()) + "\n";
        for (std::size_t i = 0; i < shown; ++i) {
            const LabeledTree& tree = classes.representatives[i];
            text += "class " + std::to_string(i) + ": " + canonical_form(tree).value +
                    " edges: " + edges_inline(tree) + "\n";
        }
        if (shown < classes.representatives.size()) {
            text += "... (" + std::to_string(classes.representatives.size() - shown) +
                    " more, raise --limit)\n";
        }
        write_output(output, text);
    }
    return 0;
}

int run_verify_theorem(int min_n, int max_n, int workers, const std::string& format,
                       const std::string& output, bool force) {
    const int cap = resolve_cap(max_n, kSweepCap, force);
    const GreedyMaximumReport report = verify_greedy_maximum(min_n, max_n, workers, cap);
    write_output(output, format == "json" ? dump(report_json(report)) : report_text(report));
    return report.all_passed ? 0 : 1;
}

int run_verify_majorization(int max_n, int workers, const std::string& format,
                            const std::string& output, bool force) {
    resolve_cap(max_n, kSweepCap, force);
    const MajorizationReport report = verify_majorization(max_n, workers);
    write_output(output, format == "json" ? dump(report_json(report)) : report_text(report));
    return report.all_passed ? 0 : 1;
}

int run_verify_identities(int samples, int max_n, std::uint64_t seed, int workers,
                          const std::string& format, const std::string& output) {
    const IdentityReport report = verify_identities(samples, max_n, seed, workers);
    write_output(output, format == "json" ? dump(report_json(report)) : report_text(report));
    return report.all_passed ? 0 : 1;
}

ExtremalSpec build_family(const std::string& family, int n, int param) {
    if (family == "leaves") return extremal_leaves(n, param);
    if (family == "maxdeg") return extremal_max_degree(n, param);
    if (family == "alpha") return extremal_independence(n, param);
    if (family == "beta") return extremal_matching(n, param);
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected leaves, maxdeg, alpha or beta)");
}

int family_parameter(const ExtremalSpec& spec, const GraphParameters& params) {
    switch (spec.family) {
        case ExtremalFamily::Leaves: return params.leaves;
        case ExtremalFamily::MaxDegree: return params.max_degree;
        case ExtremalFamily::Independence: return params.independence_number;
        case ExtremalFamily::Matching: return params.matching_number;
    }
    return -1;
}

int run_extremal(const std::string& family, int n, int param, bool verify,
                 const std::string& format, const std::string& output, bool force) {
    const ExtremalSpec spec = build_family(family, n, param);
    bool verified_ok = true;
    std::size_t class_size = 0;
    if (verify) {
        const int cap = resolve_cap(n, kSweepCap, force);
        std::vector<LabeledTree> members;
        for (const DegreeSequence& pi : enumerate_tree_degree_sequences(n, cap)) {
            IsoClassSet classes = enumerate_trees_with_degrees(pi, cap);
            for (LabeledTree& tree : classes.representatives) {
                if (family_parameter(spec, graph_parameter_oracles(tree)) == param) {
                    members.push_back(std::move(tree));
                }
            }
        }
        class_size = members.size();
        const LastInSOrderResult last = last_in_s_order(members);
        verified_ok = last.unique && are_isomorphic(last.tree, spec.tree);
    }
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["family"] = family;
        doc["n"] = n;
        doc["parameter"] = param;
        doc["pi_star"] = spec.pi_star.to_string();
        doc["tree"] = tree_json_doc(spec.tree);
        if (verify) {
            ordered_json v;
            v["class_size"] = class_size;
            v["is_unique_maximum"] = verified_ok;
            doc["verified"] = std::move(v);
        }
        write_output(output, dump(doc));
    } else {
        std::string text = "family: " + family + "\nn: " + std::to_string(n) +
                           "\nparameter: " + std::to_string(param) +
                           "\npi_star: " + spec.pi_star.to_string() +
                           "\nedges: " + edges_inline(spec.tree) + "\n";
        if (verify) {
            text += "class size: " + std::to_string(class_size) + "\n";
            text += std::string("unique S-order maximum: ") + (verified_ok ? "yes" : "NO") + "\n";
        }
        write_output(output, text);
    }
    return verified_ok ? 0 : 1;
}

int run_export(const std::string& pi_text, const std::string& tree_path,
               const std::string& format, const std::string& output) {
    if (pi_text.empty() == tree_path.empty()) {
        throw std::invalid_argument("export needs exactly one of --pi or --tree");
    }
    const LabeledTree tree = pi_text.empty()
                                 ? load_tree_file(tree_path)
                                 : build_greedy_tree(DegreeSequence::parse(pi_text));
    if (format == "dot") {
        write_output(output, tree_to_dot(tree));
    } else if (format == "json") {
        write_output(output, tree_to_json(tree) + "\n");
    } else {
        throw std::invalid_argument("export format must be json or dot");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact S-order toolkit for trees: greedy constructions, spectral moments, "
                 "enumeration and certification sweeps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "spectree 0.1.0");

    std::string pi_text;
    std::string tree_path;
    std::string a_path;
    std::string b_path;
    std::string format = "text";
    std::string output;
    std::string family;
    int limit = 0;
    int min_n = 4;
    int max_n = 10;
    int maj_max_n = 9;
    int samples = 500;
    int ident_max_n = 12;
    int workers = 1;
    int family_n = 0;
    int family_param = 0;
    std::uint64_t seed = 0;
    bool force = false;
    bool verify_family = false;

    CLI::App* build = app.add_subcommand("build-greedy", "Build the greedy tree of a degree sequence");
    build->add_option("--pi", pi_text, "Degree sequence, e.g. 4,3,3,2,1^5")->required();
    build->add_option("--format", format, "text, json or dot")->default_val("text");
    build->add_option("--output", output, "Write to a file instead of stdout");

    CLI::App* moments = app.add_subcommand("moments", "Exact spectral moments of a tree");
    moments->add_option("--tree", tree_path, "Tree JSON file")->required();
    moments->add_option("--format", format, "text or json")->default_val("text");
    moments->add_option("--output", output, "Write to a file instead of stdout");

    CLI::App* compare = app.add_subcommand("compare", "Compare two trees in S-order");
    compare->add_option("--a", a_path, "First tree JSON file")->required();
    compare->add_option("--b", b_path, "Second tree JSON file")->required();
    compare->add_option("--format", format, "text or json")->default_val("text");
    compare->add_option("--output", output, "Write to a file instead of stdout");

    CLI::App* enumerate = app.add_subcommand("enumerate", "Isomorphism classes realizing a degree sequence");
    enumerate->add_option("--pi", pi_text, "Degree sequence")->required();
    enumerate->add_option("--limit", limit, "Print at most this many classes (0 = all)");
    enumerate->add_option("--format", format, "text or json")->default_val("text");
    enumerate->add_option("--output", output, "Write to a file instead of stdout");
    enumerate->add_flag("--force", force, "Ignore the enumeration cap");

    CLI::App* vtheorem = app.add_subcommand(
        "verify-theorem", "Certify the greedy tree as unique S-order maximum for every degree sequence");
    vtheorem->add_option("--min-n", min_n, "Smallest order")->default_val(4);
    vtheorem->add_option("--max-n", max_n, "Largest order")->default_val(10);
    vtheorem->add_option("--workers", workers, "Worker threads")->default_val(1);
    vtheorem->add_option("--format", format, "text or json")->default_val("text");
    vtheorem->add_option("--output", output, "Write to a file instead of stdout");
    vtheorem->add_flag("--force", force, "Ignore the sweep cap");

    CLI::App* vmaj = app.add_subcommand(
        "verify-majorization", "Certify S-order monotonicity along strict majorization, with transfer chains");
    vmaj->add_option("--max-n", maj_max_n, "Largest order")->default_val(9);
    vmaj->add_option("--workers", workers, "Worker threads")->default_val(1);
    vmaj->add_option("--format", format, "text or json")->default_val("text");
    vmaj->add_option("--output", output, "Write to a file instead of stdout");
    vmaj->add_flag("--force", force, "Ignore the sweep cap");

    CLI::App* vident = app.add_subcommand(
        "verify-identities", "Check the S_6/S_8 moment identities on random same-degree-sequence pairs");
    vident->add_option("--samples", samples, "Number of random pairs")->default_val(500);
    vident->add_option("--max-n", ident_max_n, "Largest order")->default_val(12);
    vident->add_option("--seed", seed, "Seed for the sample stream")->default_val(0);
    vident->add_option("--workers", workers, "Worker threads")->default_val(1);
    vident->add_option("--format", format, "text or json")->default_val("text");
    vident->add_option("--output", output, "Write to a file instead of stdout");

    CLI::App* extremal = app.add_subcommand("extremal", "Closed-form family maxima");
    extremal->add_option("--family", family, "leaves, maxdeg, alpha or beta")->required();
    extremal->add_option("--n", family_n, "Tree order")->required();
    extremal->add_option("--param", family_param, "Family parameter")->required();
    extremal->add_flag("--verify", verify_family, "Check against exhaustive enumeration");
    extremal->add_option("--format", format, "text or json")->default_val("text");
    extremal->add_option("--output", output, "Write to a file instead of stdout");
    extremal->add_flag("--force", force, "Ignore the sweep cap (with --verify)");

    CLI::App* exp = app.add_subcommand("export", "Write a tree as JSON or Graphviz");
    exp->add_option("--pi", pi_text, "Degree sequence (exports its greedy tree)");
    exp->add_option("--tree", tree_path, "Tree JSON file to re-export");
    exp->add_option("--format", format, "json or dot")->required();
    exp->add_option("--output", output, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return run_build_greedy(pi_text, format, output);
        if (moments->parsed()) return run_moments(tree_path, format, output);
        if (compare->parsed()) return run_compare(a_path, b_path, format, output);
        if (enumerate->parsed()) return run_enumerate(pi_text, limit, format, output, force);
        if (vtheorem->parsed())
            return run_verify_theorem(min_n, max_n, workers, format, output, force);
        if (vmaj->parsed())
            return run_verify_majorization(maj_max_n, workers, format, output, force);
        if (vident->parsed())
            return run_verify_identities(samples, ident_max_n, seed, workers, format, output);
        if (extremal->parsed())
            return run_extremal(family, family_n, family_param, verify_family, format, output,
                                force);
        if (exp->parsed()) return run_export(pi_text, tree_path, format, output);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
