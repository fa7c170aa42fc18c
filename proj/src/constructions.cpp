#include "ababfree/constructions.hpp"

#include "ababfree/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace abab {

namespace {

// Number of bits beyond which hc_vertex_count refuses to keep growing; the
// counts are doubly exponential and anything near this bound is far past
// materializable range anyway.
constexpr unsigned kCountBitGuard = 200000;

long long checked_tree_size(long long arity, int levels) {
    if (levels >= 2 && arity > kMaxConstructionVertices) {
        fail(ErrorKind::Guard, "tree would have more than " +
                                   std::to_string(kMaxConstructionVertices) + " vertices");
    }
    long long total = 0;
    long long layer = 1;
    for (int d = 0; d < levels; ++d) {
        total += layer;
        if (total > kMaxConstructionVertices) {
            fail(ErrorKind::Guard, "tree would have more than " +
                                       std::to_string(kMaxConstructionVertices) + " vertices");
        }
        if (d + 1 < levels) layer *= arity;  // layer <= guard, so no overflow
    }
    return total;
}

std::vector<std::string> vertex_labels(long long n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

// Hypergraph under construction: vertex count plus un-normalized edge list.
struct RawHc {
    long long n = 0;
    std::vector<std::vector<int>> edges;
};

RawHc raw_tree_hypergraph(const LabeledTree& tree) {
    RawHc raw;
    raw.n = static_cast<long long>(tree.parent.size());
    const int n = static_cast<int>(raw.n);
    for (int u = 0; u < n; ++u) {
        if (!tree.children[u].empty()) raw.edges.push_back(tree.children[u]);
    }
    for (int u = 0; u < n; ++u) {
        if (!tree.children[u].empty()) continue;
        std::vector<int> path;
        for (int v = u; v != -1; v = tree.parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        raw.edges.push_back(std::move(path));
    }
    return raw;
}

// One recursion level: place a copy of `prev` on the children of every
// internal node of the full (|prev|)-ary tree with m levels, the copy's
// vertex order giving the sibling order, and add the root-to-leaf paths.
RawHc compose(RawHc prev, int m) {
    const long long a = prev.n;
    if (m == 2) {
        // Single internal node (the root): the one copy is just `prev`
        // shifted past the root, so reuse its storage.
        RawHc next;
        next.n = 1 + a;
        next.edges = std::move(prev.edges);
        for (auto& e : next.edges) {
            for (int& v : e) ++v;
        }
        for (long long j = 0; j < a; ++j) {
            next.edges.push_back({0, static_cast<int>(1 + j)});
        }
        return next;
    }
    LabeledTree tree = build_full_tree(static_cast<int>(a), m);
    RawHc next;
    next.n = static_cast<long long>(tree.parent.size());
    const int n = static_cast<int>(next.n);
    for (int u = 0; u < n; ++u) {
        if (tree.children[u].empty()) continue;
        for (const auto& e : prev.edges) {
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int v : e) mapped.push_back(tree.children[u][v]);
            next.edges.push_back(std::move(mapped));
        }
    }
    for (int u = 0; u < n; ++u) {
        if (!tree.children[u].empty()) continue;
        std::vector<int> path;
        for (int v = u; v != -1; v = tree.parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        next.edges.push_back(std::move(path));
    }
    return next;
}

void validate_hc_parameters(int c, int m) {
    if (c < 2) fail(ErrorKind::Invalid, "recursion level c must be >= 2");
    if (m < 2) fail(ErrorKind::Invalid, "uniformity m must be >= 2");
}

BigInt level_count(const BigInt& prev, int m) {
    BigInt total = 0;
    BigInt term = 1;
    for (int i = 0; i < m; ++i) {
        total += term;
        if (i + 1 < m) {
            term *= prev;
            if (boost::multiprecision::msb(term) > kCountBitGuard) {
                fail(ErrorKind::Guard, "vertex count exceeds the big-integer guard");
            }
        }
    }
    return total;
}

void check_materializable(const BigInt& count) {
    if (count > kMaxConstructionVertices) {
        fail(ErrorKind::Guard, "construction would have " + count.str() +
                                   " vertices, more than " +
                                   std::to_string(kMaxConstructionVertices));
    }
}

} // namespace

LabeledTree build_full_tree(int arity, int levels) {
    if (arity < 1) fail(ErrorKind::Invalid, "tree arity must be >= 1");
    if (levels < 1) fail(ErrorKind::Invalid, "tree must have >= 1 levels");
    const long long n = checked_tree_size(arity, levels);

    // Subtree size at each depth; node ids are assigned in depth-first
    // (preorder) fashion, so child j of node u at depth d has id
    // u + 1 + j * size[d+1].
    std::vector<long long> size(levels);
    size[levels - 1] = 1;
    for (int d = levels - 2; d >= 0; --d) size[d] = 1 + arity * size[d + 1];

    LabeledTree tree;
    tree.arity = arity;
    tree.levels = levels;
    tree.parent.assign(static_cast<std::size_t>(n), -1);
    tree.children.assign(static_cast<std::size_t>(n), {});
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    while (!stack.empty()) {
        auto [u, d] = stack.back();
        stack.pop_back();
        if (d + 1 >= levels) continue;
        tree.children[u].reserve(static_cast<std::size_t>(arity));
        for (int j = 0; j < arity; ++j) {
            int child = static_cast<int>(u + 1 + j * size[d + 1]);
            tree.parent[child] = u;
            tree.children[u].push_back(child);
            stack.emplace_back(child, d + 1);
        }
    }
    return tree;
}

OrderedHypergraph build_tree_hypergraph(int arity, int levels) {
    LabeledTree tree = build_full_tree(arity, levels);
    RawHc raw = raw_tree_hypergraph(tree);
    return make_hypergraph(vertex_labels(raw.n), std::move(raw.edges));
}

BigInt hc_vertex_count(int c, int m) {
    validate_hc_parameters(c, m);
    BigInt count = level_count(BigInt(m), m);
    for (int level = 3; level <= c; ++level) count = level_count(count, m);
    return count;
}

OrderedHypergraph build_hc(int c, int m) {
    validate_hc_parameters(c, m);
    check_materializable(hc_vertex_count(c, m));
    RawHc current = raw_tree_hypergraph(build_full_tree(m, m));
    for (int level = 3; level <= c; ++level) current = compose(std::move(current), m);
    return make_hypergraph(vertex_labels(current.n), std::move(current.edges));
}

std::shared_ptr<const HcStructure> build_hc_structure(int c, int m) {
    validate_hc_parameters(c, m);
    check_materializable(hc_vertex_count(c, m));
    std::shared_ptr<const HcStructure> sub;
    for (int level = 2; level <= c; ++level) {
        auto node = std::make_shared<HcStructure>();
        node->c = level;
        node->m = m;
        LabeledTree tree =
            level == 2 ? build_full_tree(m, m)
                       : build_full_tree(sub->hypergraph.vertex_count(), m);
        if (level == 2) {
            RawHc raw = raw_tree_hypergraph(tree);
            node->hypergraph = make_hypergraph(vertex_labels(raw.n), std::move(raw.edges));
        } else {
            RawHc prev{sub->hypergraph.vertex_count(), sub->hypergraph.edges};
            RawHc raw = compose(std::move(prev), m);
            node->hypergraph = make_hypergraph(vertex_labels(raw.n), std::move(raw.edges));
        }
        node->parent = std::move(tree.parent);
        node->children = std::move(tree.children);
        node->sub = sub;
        sub = node;
    }
    return sub;
}

std::vector<int> find_monochromatic_edge(const HcStructure& structure,
                                         const std::vector<int>& colors) {
    const int n = structure.hypergraph.vertex_count();
    if (static_cast<int>(colors.size()) != n) {
        fail(ErrorKind::Invalid, "coloring length does not match vertex count");
    }
    std::set<int> distinct(colors.begin(), colors.end());
    if (static_cast<int>(distinct.size()) > structure.c) {
        fail(ErrorKind::Invalid, "coloring uses " + std::to_string(distinct.size()) +
                                     " distinct colors, more than " +
                                     std::to_string(structure.c));
    }

    // Follow same-colored children from the root. Reaching a leaf yields a
    // monochromatic root-to-leaf edge; getting stuck means every child
    // avoids the root's color, so the copy sitting on the children is
    // colored with at most c-1 colors and recursion (or, at the bottom
    // level, the children set itself) yields a monochromatic edge.
    const int target = colors[0];
    std::vector<int> path{0};
    int u = 0;
    while (!structure.children[u].empty()) {
        int next = -1;
        for (int child : structure.children[u]) {
            if (colors[child] == target) {
                next = child;
                break;
            }
        }
        if (next != -1) {
            path.push_back(next);
            u = next;
            continue;
        }
        const auto& block = structure.children[u];
        if (!structure.sub) {
            for (int child : block) {
                if (colors[child] != colors[block[0]]) {
                    fail(ErrorKind::Invalid,
                         "children avoid the root color yet disagree - more than 2 colors");
                }
            }
            return block;
        }
        std::vector<int> sub_colors;
        sub_colors.reserve(block.size());
        for (int child : block) sub_colors.push_back(colors[child]);
        std::vector<int> sub_edge = find_monochromatic_edge(*structure.sub, sub_colors);
        std::vector<int> mapped;
        mapped.reserve(sub_edge.size());
        for (int v : sub_edge) mapped.push_back(block[v]);
        return mapped;
    }
    return path;
}

} // namespace abab
