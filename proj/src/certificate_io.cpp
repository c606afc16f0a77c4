#include "royal/certificate_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace royal {

using nlohmann::json;

std::string certificate_to_json(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.size())
        throw std::invalid_argument("coloring does not match the graph's edge count");
    json edges = json::array();
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        edges.push_back(json::array({u, v, c.colors[e].to_list()}));
    }
    json out{{"n", g.order()}, {"k", c.palette_k}, {"edges", std::move(edges)}};
    return out.dump(2);
}

ParsedCertificate certificate_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") || !doc.contains("edges"))
        throw std::invalid_argument("certificate must be an object with n, k and edges");
    if (!doc["n"].is_number_integer() || !doc["k"].is_number_integer() ||
        !doc["edges"].is_array())
        throw std::invalid_argument("certificate fields have the wrong types");
    int n = doc["n"].get<int>();
    int k = doc["k"].get<int>();
    if (n < 1) throw std::invalid_argument("certificate order must be positive");
    if (k < 1 || k > ColorSet::kMaxPalette)
        throw std::invalid_argument("certificate palette must be in 1..16");

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<std::pair<int, int>, ColorSet>> colored;
    for (const json& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_array())
            throw std::invalid_argument("certificate edge entries must be [u, v, [colors]]");
        int u = entry[0].get<int>(), v = entry[1].get<int>();
        ColorSet s;
        for (const json& c : entry[2]) {
            if (!c.is_number_integer())
                throw std::invalid_argument("certificate colors must be integers");
            int color = c.get<int>();
            if (color < 1 || color > ColorSet::kMaxPalette)
                throw std::invalid_argument("certificate color out of range 1..16: " +
                                            std::to_string(color));
            s = s.with(color);
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        colored.push_back({{u, v}, s});
    }
    Graph g(n, edges);  // validates ranges, loops, duplicates
    EdgeColoring c;
    c.palette_k = k;
    c.colors.resize(g.size());
    for (auto& [uv, s] : colored) c.colors[g.edge_index(uv.first, uv.second)] = s;
    return {std::move(g), std::move(c)};
}

std::string certificate_to_dot(const Graph& g, const EdgeColoring& c) {
    VertexColoring ind = induced(g, c);
    std::string out = "graph royal {\n  node [shape=circle];\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + " " +
               ind.colors[v].to_string() + "\"];\n";
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + " [label=\"" +
               c.colors[e].to_string() + "\"];\n";
    }
    return out + "}\n";
}

}  // namespace royal
