#include "ababfree/hypergraph.hpp"

#include "ababfree/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace abab {

using json = nlohmann::ordered_json;

namespace {

std::string describe_edge(const std::vector<int>& edge) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i) out << ",";
        out << edge[i];
    }
    out << "}";
    return out.str();
}

} // namespace

OrderedHypergraph make_hypergraph(std::vector<std::string> vertices,
                                  std::vector<std::vector<int>> edges) {
    const int n = static_cast<int>(vertices.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& edge = edges[k];
        if (edge.empty()) {
            fail(ErrorKind::Invalid, "hyperedge #" + std::to_string(k) + " is empty");
        }
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (edge[i] < 0 || edge[i] >= n) {
                fail(ErrorKind::Invalid,
                     "hyperedge #" + std::to_string(k) + " " + describe_edge(edge) +
                         " references vertex " + std::to_string(edge[i]) +
                         " outside [0," + std::to_string(n) + ")");
            }
            if (i > 0 && edge[i] <= edge[i - 1]) {
                fail(ErrorKind::Invalid,
                     "hyperedge #" + std::to_string(k) + " " + describe_edge(edge) +
                         " is not strictly increasing");
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedHypergraph{std::move(vertices), std::move(edges)};
}

OrderedHypergraph parse_hypergraph(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("hypergraph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
        !doc["vertices"].is_array() || !doc["edges"].is_array()) {
        fail(ErrorKind::Parse, "hypergraph JSON must be {\"vertices\":[...],\"edges\":[...]}");
    }
    std::vector<std::string> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) fail(ErrorKind::Parse, "vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::vector<int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array()) fail(ErrorKind::Parse, "each edge must be an array of indices");
        std::vector<int> edge;
        for (const auto& idx : e) {
            if (!idx.is_number_integer()) {
                fail(ErrorKind::Parse, "edge entries must be integers");
            }
            edge.push_back(idx.get<int>());
        }
        edges.push_back(std::move(edge));
    }
    // Shape problems above are Parse errors; structural problems (empty or
    // out-of-range edges, duplicate labels) keep their Invalid kind.
    return make_hypergraph(std::move(vertices), std::move(edges));
}

std::string serialize_hypergraph(const OrderedHypergraph& hg) {
    json doc;
    doc["vertices"] = hg.vertices;
    doc["edges"] = hg.edges;
    return doc.dump();
}

Coloring make_coloring(std::vector<int> colors) {
    std::set<int> used;
    for (int c : colors) {
        if (c < 0) fail(ErrorKind::Invalid, "colors must be non-negative");
        used.insert(c);
    }
    return Coloring{std::move(colors), static_cast<int>(used.size())};
}

Coloring parse_coloring(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("coloring JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array()) {
        fail(ErrorKind::Parse, "coloring JSON must be {\"colors\":[...]}");
    }
    std::vector<int> colors;
    for (const auto& c : doc["colors"]) {
        if (!c.is_number_integer()) fail(ErrorKind::Parse, "colors must be integers");
        colors.push_back(c.get<int>());
    }
    try {
        return make_coloring(std::move(colors));
    } catch (const Error& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

std::string serialize_coloring(const Coloring& coloring) {
    json doc;
    doc["colors"] = coloring.colors;
    doc["palette"] = coloring.palette_size;
    return doc.dump();
}

bool is_proper_coloring(const OrderedHypergraph& hg, const Coloring& coloring) {
    if (static_cast<int>(coloring.colors.size()) != hg.vertex_count()) {
        fail(ErrorKind::Invalid,
             "coloring has " + std::to_string(coloring.colors.size()) + " entries for " +
                 std::to_string(hg.vertex_count()) + " vertices");
    }
    for (const auto& edge : hg.edges) {
        if (edge.size() < 2) continue;
        const int first = coloring.colors[edge[0]];
        bool mono = true;
        for (int v : edge) {
            if (coloring.colors[v] != first) {
                mono = false;
                break;
            }
        }
        if (mono) return false;
    }
    return true;
}

std::optional<Coloring> colorability_oracle(const OrderedHypergraph& hg, int num_colors) {
    if (num_colors < 1) fail(ErrorKind::Invalid, "need at least one color");
    const int n = hg.vertex_count();
    // Desk-scale guard on the search space.
    {
        double space = 1.0;
        for (int i = 0; i < n; ++i) {
            space *= num_colors;
            if (space > 1e8) {
                fail(ErrorKind::Guard,
                     "coloring search space " + std::to_string(num_colors) + "^" +
                         std::to_string(n) + " exceeds 1e8");
            }
        }
    }
    if (n == 0) return make_coloring({});

    // Edges become checkable once their largest vertex is assigned.
    std::vector<std::vector<const std::vector<int>*>> by_max(n);
    for (const auto& edge : hg.edges) {
        if (edge.size() >= 2) by_max[edge.back()].push_back(&edge);
    }

    std::vector<int> colors(n, 0);
    int v = 0;
    // Depth-first search in lexicographic order; the first success is the
    // lexicographically least proper coloring.
    while (true) {
        bool ok = true;
        for (const auto* edge : by_max[v]) {
            bool mono = true;
            for (int u : *edge) {
                if (colors[u] != colors[(*edge)[0]]) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (v == n - 1) return make_coloring(colors);
            colors[++v] = 0;
            continue;
        }
        // Backtrack to the next candidate.
        while (v >= 0 && colors[v] == num_colors - 1) --v;
        if (v < 0) return std::nullopt;
        ++colors[v];
    }
}

std::string serialize_violation(const PatternViolation& violation) {
    json doc;
    doc["free"] = false;
    doc["edge_a"] = violation.edge_a;
    doc["edge_b"] = violation.edge_b;
    doc["witness"] = violation.witness;
    return doc.dump();
}

} // namespace abab
