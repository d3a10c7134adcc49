#include "treearch/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include <json.hpp>

namespace treearch {

namespace {

using nlohmann::ordered_json;

std::int64_t require_id(const ordered_json& j, const char* where) {
    if (!j.is_number_integer())
        throw parse_error(std::string("expected an integer id in ") + where);
    return j.get<std::int64_t>();
}

} // namespace

Tree parse_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
    if (!doc.is_object()) throw parse_error("top-level JSON value must be an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw parse_error("missing or non-array \"nodes\" field");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw parse_error("missing or non-array \"edges\" field");

    std::vector<std::int64_t> ids;
    std::unordered_map<std::int64_t, int> index_of_id;
    for (const auto& node : doc["nodes"]) {
        std::int64_t id = require_id(node, "\"nodes\"");
        if (!index_of_id.emplace(id, static_cast<int>(ids.size())).second)
            throw invalid_tree_error("duplicate node id " + std::to_string(id));
        ids.push_back(id);
    }
    const int n = static_cast<int>(ids.size());
    if (n == 0) throw invalid_tree_error("tree is empty");

    auto lookup = [&](std::int64_t id, const char* where) {
        auto it = index_of_id.find(id);
        if (it == index_of_id.end())
            throw invalid_tree_error(std::string("unknown node id ") + std::to_string(id) +
                                     " in " + where);
        return it->second;
    };
    auto lookup_key = [&](const std::string& key, const char* where) {
        std::size_t used = 0;
        std::int64_t id = 0;
        try {
            id = std::stoll(key, &used);
        } catch (const std::exception&) {
            throw parse_error(std::string("non-integer key \"") + key + "\" in " + where);
        }
        if (used != key.size())
            throw parse_error(std::string("non-integer key \"") + key + "\" in " + where);
        return lookup(id, where);
    };

    std::vector<std::vector<int>> adj(n);
    for (const auto& edge : doc["edges"]) {
        if (!edge.is_array() || edge.size() != 2)
            throw parse_error("each edge must be a two-element array");
        int u = lookup(require_id(edge[0], "\"edges\""), "\"edges\"");
        int v = lookup(require_id(edge[1], "\"edges\""), "\"edges\"");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    if (doc.contains("order")) {
        if (!doc["order"].is_object())
            throw parse_error("\"order\" must be an object mapping id to neighbor ids");
        for (const auto& [key, value] : doc["order"].items()) {
            int u = lookup_key(key, "\"order\"");
            if (!value.is_array())
                throw parse_error("\"order\" entries must be arrays of neighbor ids");
            std::vector<int> want;
            for (const auto& nb : value) want.push_back(lookup(require_id(nb, "\"order\""), "\"order\""));
            std::vector<int> a = adj[u];
            std::vector<int> b = want;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                throw invalid_tree_error("order inconsistent with edges at node " +
                                         std::to_string(ids[u]));
            adj[u] = std::move(want);
        }
    }

    std::unordered_map<std::uint64_t, double> weights;
    if (doc.contains("weights")) {
        if (!doc["weights"].is_array())
            throw parse_error("\"weights\" must be an array of [id, id, value] triples");
        for (const auto& entry : doc["weights"]) {
            if (!entry.is_array() || entry.size() != 3 || !entry[2].is_number())
                throw parse_error("each weight must be an [id, id, value] triple");
            int u = lookup(require_id(entry[0], "\"weights\""), "\"weights\"");
            int v = lookup(require_id(entry[1], "\"weights\""), "\"weights\"");
            weights[Tree::edge_key(u, v)] = entry[2].get<double>();
        }
    }

    std::vector<std::string> labels(n);
    bool ids_are_positional = true;
    for (int v = 0; v < n; ++v)
        if (ids[v] != v) ids_are_positional = false;
    if (!ids_are_positional)
        for (int v = 0; v < n; ++v) labels[v] = std::to_string(ids[v]);
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object())
            throw parse_error("\"labels\" must be an object mapping id to text");
        for (const auto& [key, value] : doc["labels"].items()) {
            int u = lookup_key(key, "\"labels\"");
            if (!value.is_string()) throw parse_error("label values must be strings");
            labels[u] = value.get<std::string>();
        }
    }

    int root = -1;
    if (doc.contains("root")) root = lookup(require_id(doc["root"], "\"root\""), "\"root\"");

    return Tree(std::move(adj), std::move(labels), root, std::move(weights));
}

std::string to_json(const Tree& t) {
    ordered_json doc;
    doc["nodes"] = ordered_json::array();
    for (int v = 0; v < t.n(); ++v) doc["nodes"].push_back(v);

    doc["edges"] = ordered_json::array();
    for (int u = 0; u < t.n(); ++u)
        for (int v : t.neighbors(u))
            if (u < v) doc["edges"].push_back(ordered_json::array({u, v}));

    ordered_json order = ordered_json::object();
    for (int u = 0; u < t.n(); ++u) order[std::to_string(u)] = t.neighbors(u);
    doc["order"] = std::move(order);

    if (t.weighted()) {
        ordered_json weights = ordered_json::array();
        for (int u = 0; u < t.n(); ++u)
            for (int v : t.neighbors(u))
                if (u < v && t.has_weight(u, v))
                    weights.push_back(ordered_json::array({u, v, t.weight(u, v)}));
        doc["weights"] = std::move(weights);
    }

    bool any_label = false;
    for (int v = 0; v < t.n(); ++v)
        if (!t.label(v).empty()) any_label = true;
    if (any_label) {
        ordered_json labels = ordered_json::object();
        for (int v = 0; v < t.n(); ++v)
            if (!t.label(v).empty()) labels[std::to_string(v)] = t.label(v);
        doc["labels"] = std::move(labels);
    }

    if (t.has_root()) doc["root"] = t.root();

    return doc.dump(2);
}

} // namespace treearch
