#include "spectree/tree_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace spectree {

std::string tree_to_json(const LabeledTree& tree) {
    std::string out = "{\"n\":" + std::to_string(tree.n()) + ",\"edges\":[";
    bool first = true;
    for (const auto& [u, v] : tree.edges()) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
    }
    out += "]}";
    return out;
}

LabeledTree tree_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("tree json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw std::invalid_argument("tree json: expected object with \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw std::invalid_argument("tree json: \"n\" must be an integer");
    }
    const int n = doc["n"].get<int>();
    if (!doc["edges"].is_array()) {
        throw std::invalid_argument("tree json: \"edges\" must be an array");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(doc["edges"].size());
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw std::invalid_argument("tree json: each edge must be a pair of integers");
        }
        edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return LabeledTree::from_edges(n, std::move(edges));
}

LabeledTree load_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tree file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return tree_from_json(buffer.str());
}

std::string tree_to_dot(const LabeledTree& tree) {
    std::string out = "graph tree {\n";
    for (int v = 0; v < tree.n(); ++v) {
        out += "  v" + std::to_string(v) + ";\n";
    }
    for (const auto& [u, v] : tree.edges()) {
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace spectree
