#ifndef ABABFREE_GEOMETRY_HPP
#define ABABFREE_GEOMETRY_HPP

#include "ababfree/hypergraph.hpp"
#include "ababfree/pattern.hpp"
#include "ababfree/rational.hpp"

#include <optional>
#include <vector>

namespace abab {

struct Pt {
    Rat x;
    Rat y;
};

inline bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }

/** Finite point set; order is the input order (operations sort as needed). */
struct PointSet {
    std::vector<Pt> pts;
};

/**
 * An x-monotone bi-infinite polyline: a horizontal ray at left_y coming from
 * x = -infinity, breakpoints with strictly increasing x, and a horizontal
 * ray at right_y to +infinity. When breakpoints exist, the first/last
 * breakpoint y must equal the adjacent tail height (continuity); with no
 * breakpoints the curve is the horizontal line left_y == right_y.
 */
struct PolylineCurve {
    Rat left_y;
    std::vector<Pt> pts;
    Rat right_y;
};

/** Validate the invariants above; Error{Invalid} otherwise. */
PolylineCurve make_curve(Rat left_y, std::vector<Pt> breakpoints, Rat right_y);

/** Exact evaluation at x. */
Rat curve_value(const PolylineCurve& curve, const Rat& x);

struct CurveFamily {
    std::vector<PolylineCurve> curves;
    std::optional<int> t_bound;  // documented max pairwise crossing count
};

/**
 * Exact pairwise crossing data over the merged breakpoint grid (tails
 * included): x positions of proper crossings (vertical-order sign changes)
 * and of touching points (meetings without sign change, which count zero).
 * Error{Degenerate} if the curves share a segment of positive length.
 */
struct CrossingProfile {
    std::vector<Rat> crossings;
    std::vector<Rat> touches;
};

CrossingProfile crossing_profile(const PolylineCurve& c1, const PolylineCurve& c2);

/** Number of proper crossings; touching points count zero. */
int crossing_count(const PolylineCurve& c1, const PolylineCurve& c2);

/**
 * The hypergraph of "on or above" incidences: vertices are the points of S
 * in x-then-y order (labels "p0", "p1", ...), one hyperedge per curve
 * collecting the points on or above it. Duplicate traces merge; empty
 * traces contribute nothing. Error{Degenerate} when a point of S lies on
 * two curves that meet there.
 */
OrderedHypergraph hypergraph_from_curves(const PointSet& s, const CurveFamily& c);

/** Per-step record of the lens-elimination loop. */
struct LensElimStats {
    int steps = 0;
    // Total pairwise crossing count before the loop and after each step;
    // strictly decreasing.
    std::vector<long long> crossing_totals;
};

/**
 * Repeatedly find two consecutive crossings of some curve pair bounding a
 * lens with no point of S inside or on it (the unbounded regions before the
 * first and after the last crossing count as lenses), swap the lens-bounding
 * sub-curves and remove the now-redundant crossings. The realized hypergraph
 * is unchanged and the total crossing count strictly decreases each step.
 * If no lens is empty the input family is returned unchanged.
 */
CurveFamily eliminate_empty_lenses(const PointSet& s, const CurveFamily& c,
                                   LensElimStats* stats = nullptr);

struct CurveRealization {
    PointSet points;
    CurveFamily curves;
};

/**
 * Realize an (AB)^l-free ordered hypergraph (checked; Error{NotFree} with a
 * witness otherwise) as points on the x-axis, S = {(i+1, 0)}, and one
 * x-monotone curve per edge: edge k's curve alternates between y = +(k+1)
 * and y = -(k+1) (below the axis exactly while inside the edge) with linear
 * transitions in (j - 2/3, j - 1/3) before each membership change at the
 * 1-based vertex position j. Empty lenses are then eliminated; the final
 * family is pairwise at-most-(2l-2)-crossing and hypergraph_from_curves
 * reproduces the input.
 */
CurveRealization realize_as_curves(const OrderedHypergraph& hg, HalfIntegerL l);

/**
 * Make a finite-crossing family "even" (same vertical order at both
 * infinities, hence even pairwise crossing counts): with M = 1 + max x over
 * all breakpoints and points of S, replace everything right of x = M by a
 * segment to (M+1, i) and a horizontal ray, where i is the curve's 1-based
 * bottom-to-top rank at -infinity. Error{Degenerate} on tied left tails.
 */
CurveFamily evenize(const PointSet& s, const CurveFamily& c);

/** Closed simple polygon, counterclockwise, implicit closing edge. */
struct PseudoDiskPolygon {
    std::vector<Pt> ring;
};

/** Inside-or-on test, exact. */
bool point_in_polygon(const PseudoDiskPolygon& polygon, const Pt& p);

struct CompactifiedFamily {
    std::vector<PseudoDiskPolygon> polygons;
    Pt stab;
};

/**
 * Compactify an even family of pseudo-parabolas (pairwise crossing count
 * <= 2, checked) into closed regions all containing one stab point: pick M
 * beyond every breakpoint, point of S, and curve height; clip each curve to
 * [-M, M] and close it with the arch through (M+n-i, M), (0, M+n-i),
 * (-M-n+i, M), where i is the curve's bottom-to-top rank at both infinities
 * and n the family size. The rank-n arch's flat apex is lifted to M + 3/4
 * so the stab point (0, M + 1/2) is strictly interior to every polygon.
 * Boundaries of two polygons meet exactly where the curves crossed.
 */
CompactifiedFamily compactify(const CurveFamily& c, const PointSet* s = nullptr);

struct Disk {
    Pt center;
    Rat r2;  // squared radius
};

/** Closed containment |p - center|^2 <= r^2. */
bool disk_contains(const Disk& d, const Pt& p);

struct StabbedDiskFamily {
    std::vector<Disk> disks;
    Pt stab;
};

/**
 * Angular order of S around the stab point: counterclockwise starting at
 * the positive x direction, ties broken by squared distance (closer first).
 * A point coinciding with the stab sorts first when allow_coincident, and
 * raises Error{Degenerate} otherwise.
 */
std::vector<int> angular_order(const PointSet& s, const Pt& stab, bool allow_coincident);

/**
 * The trace hypergraph of disks through a common stab point: vertices are S
 * in angular order about the stab (labels "p0", ...), one hyperedge per
 * disk collecting the points it contains (closed). Every disk must contain
 * the stab (Error{Invalid}); a point coinciding with the stab is
 * Error{Degenerate}. Under this order the result is ABAB-free.
 */
OrderedHypergraph hypergraph_from_stabbed_disks(const PointSet& s, const StabbedDiskFamily& d);

struct DiskEnumeration {
    OrderedHypergraph hypergraph;
    // witnesses[k] realizes hypergraph.edges[k] (same order).
    std::vector<Disk> witnesses;
};

/**
 * Enumerate every trace realizable by a disk containing the stab point, at
 * desk scale (|S| <= 25, Error{Guard}): candidate disks are circumdisks of
 * 3-subsets and diametral disks of 2-subsets of S + {stab}, each in nine
 * perturbed variants (squared radius -eps/exact/+eps crossed with center
 * nudged toward/away from the stab), eps being half the smallest positive
 * gap between pairwise squared distances. The candidate set is a generator
 * whose completeness is certified against an exact feasibility oracle in
 * the tests, not a theorem. Every reported hyperedge keeps its witness disk.
 */
DiskEnumeration enumerate_stabbed_disk_hypergraph(const PointSet& s, const Pt& stab);

} // namespace abab

#endif
