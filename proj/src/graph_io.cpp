#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rainbowdom/errors.hpp"
#include "rainbowdom/graph.hpp"

namespace rainbowdom {

using nlohmann::json;

Graph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("graph json (byte " + std::to_string(e.byte) + ")", e.what());
    }
    if (!doc.is_object()) throw ParseError("graph json", "top-level value must be an object");
    if (!doc.contains("n_vertices") || !doc["n_vertices"].is_number_integer())
        throw ParseError("n_vertices", "missing or not an integer");
    const int n = doc["n_vertices"].get<int>();
    if (n < 0) throw ParseError("n_vertices", "must be nonnegative");
    Graph g(n);

    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("edges", "missing or not an array");
    int idx = 0;
    for (const auto& e : doc["edges"]) {
        const std::string where = "edges[" + std::to_string(idx) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(where, "each edge must be a pair of integers");
        const int a = e[0].get<int>();
        const int b = e[1].get<int>();
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError(where, "endpoint out of range 0.." + std::to_string(n - 1));
        if (a >= b)
            throw ParseError(where, "endpoints must be listed in increasing order");
        if (g.has_edge(a, b)) throw ParseError(where, "duplicate edge");
        g.add_edge(a, b);
        ++idx;
    }

    if (doc.contains("labels")) {
        if (!doc["labels"].is_object()) throw ParseError("labels", "must be an object");
        for (const auto& [key, value] : doc["labels"].items()) {
            int v = 0;
            try {
                size_t pos = 0;
                v = std::stoi(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("labels", "key '" + key + "' is not a vertex id");
            }
            if (v < 0 || v >= n) throw ParseError("labels", "vertex id " + key + " out of range");
            if (!value.is_string()) throw ParseError("labels", "label for vertex " + key + " must be a string");
            g.set_label(v, value.get<std::string>());
        }
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    json doc;
    doc["n_vertices"] = g.n_vertices();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, label] : g.labels()) labels[std::to_string(v)] = label;
        doc["labels"] = std::move(labels);
    }
    return doc.dump(2) + "\n";
}

std::string export_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n_vertices(); ++v) {
        out << "  " << v;
        if (auto label = g.label(v)) out << " [label=\"" << *label << "\"]";
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace rainbowdom
