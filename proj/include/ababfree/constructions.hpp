#ifndef ABABFREE_CONSTRUCTIONS_HPP
#define ABABFREE_CONSTRUCTIONS_HPP

#include "ababfree/hypergraph.hpp"
#include "ababfree/rational.hpp"

#include <memory>
#include <vector>

namespace abab {

/** Vertices may not exceed this count when materializing trees. */
constexpr long long kMaxConstructionVertices = 1000000;

/**
 * Full a-ary tree with b levels (depth b-1), vertices in depth-first order,
 * children visited in sibling order. Labels are "v<dfs-index>".
 */
struct LabeledTree {
    int arity = 0;
    int levels = 0;
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // in sibling order
};

LabeledTree build_full_tree(int arity, int levels);

/**
 * The tree hypergraph: one "horizontal" hyperedge per internal node (its
 * children, size a) and one "vertical" hyperedge per leaf (the root-to-leaf
 * path, size b), over the DFS vertex order.
 */
OrderedHypergraph build_tree_hypergraph(int arity, int levels);

/**
 * Number of vertices of the recursive construction: n_2 = sum_{i<m} m^i,
 * n_c = sum_{i<m} (n_{c-1})^i. Grows doubly exponentially; exact big-int.
 */
BigInt hc_vertex_count(int c, int m);

/**
 * Recursive non-c-colorable construction over the DFS order.
 *
 * Level 2 is the tree hypergraph of the full m-ary tree with m levels.
 * Level c is built on the full tree with m levels whose internal nodes have
 * n_{c-1} children each; the children of every internal node carry a fresh
 * copy of the level-(c-1) hypergraph, whose vertex order defines the sibling
 * order, and the copy's hyperedges become "horizontal" hyperedges. Vertical
 * hyperedges are the root-to-leaf paths (size m).
 *
 * Guard: vertex count must be <= kMaxConstructionVertices (Error{Guard}).
 */
OrderedHypergraph build_hc(int c, int m);

/**
 * Structural view of build_hc used to refute claimed colorings: the node
 * tree plus the shared blueprint of the level-(c-1) copies sitting on each
 * internal node's children (children are listed in blueprint vertex order).
 */
struct HcStructure {
    int c = 0;
    int m = 0;
    OrderedHypergraph hypergraph;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::shared_ptr<const HcStructure> sub;  // level c-1 blueprint; null when c == 2
};

std::shared_ptr<const HcStructure> build_hc_structure(int c, int m);

/**
 * Given any coloring that uses at most c distinct colors, walk the structure
 * and return a monochromatic hyperedge (a vertical path whose colors all
 * equal the root's, or a horizontal copy-edge found recursively). Throws
 * Error{Invalid} if more than c distinct colors are used.
 */
std::vector<int> find_monochromatic_edge(const HcStructure& structure,
                                         const std::vector<int>& colors);

} // namespace abab

#endif
