#ifndef ABABFREE_COLORING_HPP
#define ABABFREE_COLORING_HPP

#include "ababfree/hypergraph.hpp"

#include <utility>
#include <vector>

namespace abab {

/**
 * Does edge B split the pair {p, q} (p < q)? True iff p and q both lie
 * outside B, some element of B lies strictly between them, and some element
 * of B lies strictly outside [p, q] on either side — i.e. the four vertices
 * can be read as an EBEB or BEBE sequence.
 */
bool splits(int p, int q, const std::vector<int>& edge_b);

/**
 * First consecutive pair of A (in vertex order) that no edge of hg splits.
 * In an ABAB-free hypergraph every hyperedge has one; if none is found the
 * input was not ABAB-free and Error{NotFree} is thrown with the offending
 * hyperedge as certificate.
 */
std::pair<int, int> find_unsplittable_pair(const OrderedHypergraph& hg,
                                           const std::vector<int>& edge_a);

/**
 * Repeatedly pick the lexicographically least size->=3 hyperedge that has no
 * size-2 sub-hyperedge yet ("unhit"), and add an unsplittable pair of it as
 * a new size-2 hyperedge. Splitting is always tested against the augmented
 * hypergraph. The result is ABAB-free whenever the input was.
 */
OrderedHypergraph saturate(const OrderedHypergraph& hg);

/** The graph formed by the size-2 hyperedges. */
struct TwoEdgeGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

TwoEdgeGraph two_edge_graph(const OrderedHypergraph& hg);

/**
 * Certify that no two graph edges interleave (a < c < b < d with edges
 * {a,b}, {c,d}): drawn as arcs over the vertex line this makes the graph
 * outerplanar. Throws Error{NotFree} naming an interleaved quadruple.
 */
void certify_noncrossing(const TwoEdgeGraph& graph);

/**
 * Proper 3-coloring of an ABAB-free hypergraph: saturate, take the
 * two-edge graph, certify it non-crossing, then color greedily in
 * smallest-last order (outerplanar => 2-degenerate => 3 colors suffice).
 * Each step asserts its certificate and throws Error{NotFree} when the
 * input turns out not to be ABAB-free.
 */
Coloring three_color(const OrderedHypergraph& hg);

} // namespace abab

#endif
