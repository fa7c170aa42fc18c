#include "ababfree/coloring.hpp"

#include "ababfree/errors.hpp"

#include <algorithm>
#include <string>

namespace abab {

namespace {

std::string edge_text(const std::vector<int>& edge) {
    std::string s = "{";
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(edge[i]);
    }
    return s + "}";
}

bool contains(const std::vector<int>& edge, int v) {
    return std::binary_search(edge.begin(), edge.end(), v);
}

} // namespace

bool splits(int p, int q, const std::vector<int>& edge_b) {
    if (edge_b.empty()) return false;
    if (contains(edge_b, p) || contains(edge_b, q)) return false;
    auto between = std::upper_bound(edge_b.begin(), edge_b.end(), p);
    bool has_between = between != edge_b.end() && *between < q;
    bool has_outside = edge_b.front() < p || edge_b.back() > q;
    return has_between && has_outside;
}

std::pair<int, int> find_unsplittable_pair(const OrderedHypergraph& hg,
                                           const std::vector<int>& edge_a) {
    if (edge_a.size() < 2) {
        fail(ErrorKind::Invalid, "hyperedge " + edge_text(edge_a) + " has fewer than 2 vertices");
    }
    for (std::size_t i = 0; i + 1 < edge_a.size(); ++i) {
        int p = edge_a[i];
        int q = edge_a[i + 1];
        bool split = false;
        for (const auto& b : hg.edges) {
            if (splits(p, q, b)) {
                split = true;
                break;
            }
        }
        if (!split) return {p, q};
    }
    fail(ErrorKind::NotFree, "no unsplittable consecutive pair in hyperedge " +
                                 edge_text(edge_a) + " - input not ABAB-free");
}

OrderedHypergraph saturate(const OrderedHypergraph& hg) {
    OrderedHypergraph current = hg;
    while (true) {
        // Unhit = size->=3 hyperedge with no size-2 hyperedge as a subset.
        const std::vector<int>* unhit = nullptr;
        for (const auto& e : current.edges) {
            if (e.size() < 3) continue;
            bool hit = false;
            for (const auto& two : current.edges) {
                if (two.size() == 2 && contains(e, two[0]) && contains(e, two[1])) {
                    hit = true;
                    break;
                }
            }
            if (hit) continue;
            if (!unhit || e < *unhit) unhit = &e;
        }
        if (!unhit) break;
        auto [p, q] = find_unsplittable_pair(current, *unhit);
        auto edges = current.edges;
        edges.push_back({p, q});
        current = make_hypergraph(current.vertices, std::move(edges));
    }
    return current;
}

TwoEdgeGraph two_edge_graph(const OrderedHypergraph& hg) {
    TwoEdgeGraph graph;
    graph.vertex_count = hg.vertex_count();
    for (const auto& e : hg.edges) {
        if (e.size() == 2) graph.edges.emplace_back(e[0], e[1]);
    }
    return graph;
}

void certify_noncrossing(const TwoEdgeGraph& graph) {
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < graph.edges.size(); ++j) {
            auto [a, b] = graph.edges[i];
            auto [c, d] = graph.edges[j];
            if (c < a) {
                std::swap(a, c);
                std::swap(b, d);
            }
            if (a < c && c < b && b < d) {
                fail(ErrorKind::NotFree,
                     "size-2 hyperedges {" + std::to_string(a) + "," + std::to_string(b) +
                         "} and {" + std::to_string(c) + "," + std::to_string(d) +
                         "} interleave - input not ABAB-free");
            }
        }
    }
}

Coloring three_color(const OrderedHypergraph& hg) {
    OrderedHypergraph saturated = saturate(hg);
    TwoEdgeGraph graph = two_edge_graph(saturated);
    certify_noncrossing(graph);

    const int n = graph.vertex_count;
    std::vector<std::vector<int>> adjacency(n);
    for (auto [a, b] : graph.edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }

    // Smallest-last order: repeatedly remove a minimum-degree vertex (ties
    // go to the lowest index). A non-crossing arc diagram is outerplanar and
    // hence 2-degenerate; the degree bound is asserted, not assumed.
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adjacency[v].size());
    std::vector<bool> removed(n, false);
    std::vector<int> removal_order;
    removal_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = v;
        }
        if (degree[best] > 2) {
            fail(ErrorKind::NotFree,
                 "two-edge graph is not 2-degenerate - input not ABAB-free");
        }
        removed[best] = true;
        removal_order.push_back(best);
        for (int u : adjacency[best]) {
            if (!removed[u]) --degree[u];
        }
    }

    // Color in reverse removal order; each vertex then has at most 2 colored
    // neighbors, so a color from {0,1,2} is always free.
    std::vector<int> colors(n, -1);
    for (int k = n - 1; k >= 0; --k) {
        int v = removal_order[k];
        bool used[3] = {false, false, false};
        for (int u : adjacency[v]) {
            if (colors[u] >= 0) used[colors[u]] = true;
        }
        int color = 0;
        while (color < 3 && used[color]) ++color;
        if (color == 3) {
            fail(ErrorKind::NotFree, "greedy coloring needs a fourth color - input not ABAB-free");
        }
        colors[v] = color;
    }

    Coloring result = make_coloring(colors);
    if (!is_proper_coloring(hg, result)) {
        fail(ErrorKind::NotFree,
             "pipeline produced a monochromatic hyperedge - input not ABAB-free");
    }
    return result;
}

} // namespace abab
