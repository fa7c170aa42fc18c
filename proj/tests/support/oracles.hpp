#ifndef TESTS_SUPPORT_ORACLES_HPP
#define TESTS_SUPPORT_ORACLES_HPP

#include "ababfree/geometry.hpp"
#include "ababfree/hypergraph.hpp"

#include <utility>
#include <vector>

// Independent re-implementations used to validate the library. Each one
// favors the most literal (and usually slowest) formulation of its property.
namespace oracles {

// Longest sequence a_1 < b_1 < a_2 < ... with a_i in A\B, b_i in B\A, by
// quadratic dynamic programming over the merged element list (the library
// uses a greedy scan instead).
int alternation_length(const std::vector<int>& edge_a, const std::vector<int>& edge_b);

// Literal transcription of "edge_b splits the pair {p,q}".
bool splits(int p, int q, const std::vector<int>& edge_b);

// Every consecutive pair of `edge` (in vertex order) that no edge of hg
// splits, in order.
std::vector<std::pair<int, int>> unsplittable_consecutive_pairs(const abab::OrderedHypergraph& hg,
                                                                const std::vector<int>& edge);

// Is there a circle that contains the stab point and exactly
// {pts[i] : i in subset} (closed containment), with every other point of pts
// strictly outside? Decided exactly: a disk is a halfspace below a plane in
// lifted coordinates (x, y, x^2+y^2), so this is a rational linear program
// solved by a two-phase simplex with Bland's rule.
bool disk_trace_feasible(const std::vector<abab::Pt>& pts, const std::vector<int>& subset,
                         const abab::Pt& stab);

// No two non-adjacent boundary segments meet, adjacent ones meet only at the
// shared endpoint, and no edge has zero length.
bool polygon_is_simple(const abab::PseudoDiskPolygon& polygon);

// Number of distinct points where the two boundaries meet; -1 if they share
// a segment of positive length.
int boundary_intersection_count(const abab::PseudoDiskPolygon& p1,
                                const abab::PseudoDiskPolygon& p2);

} // namespace oracles

#endif
