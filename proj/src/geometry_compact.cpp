#include "ababfree/geometry.hpp"

#include "ababfree/errors.hpp"
#include "geometry_internal.hpp"

#include <algorithm>
#include <utility>

namespace abab {

namespace {

// Bottom-to-top order at -infinity (indices into c.curves) by left tail.
// Ties are Error{Degenerate}: tied tails overlap, so no order exists.
std::vector<int> left_order(const CurveFamily& c) {
    std::vector<int> order(c.curves.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return c.curves[a].left_y < c.curves[b].left_y;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (c.curves[order[k - 1]].left_y == c.curves[order[k]].left_y) {
            fail(ErrorKind::Degenerate, "curves " + std::to_string(order[k - 1]) + " and " +
                                            std::to_string(order[k]) +
                                            " share their left tail height");
        }
    }
    return order;
}

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

} // namespace

CurveFamily evenize(const PointSet& s, const CurveFamily& c) {
    sorted_point_order(s);  // validates distinctness
    // Overlapping segments anywhere (and in particular tied tails) are
    // rejected up front so the reroute cannot silently produce them.
    for (std::size_t i = 0; i < c.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < c.curves.size(); ++j) {
            crossing_profile(c.curves[i], c.curves[j]);
        }
    }
    std::vector<int> order = left_order(c);
    std::vector<int> rank(c.curves.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        rank[order[k]] = static_cast<int>(k) + 1;  // 1-based, bottom to top
    }

    Rat max_x = 0;
    for (const auto& curve : c.curves) {
        for (const auto& bp : curve.pts) max_x = std::max(max_x, bp.x);
    }
    for (const auto& p : s.pts) max_x = std::max(max_x, p.x);
    const Rat m = max_x + 1;

    CurveFamily out;
    for (std::size_t k = 0; k < c.curves.size(); ++k) {
        const PolylineCurve& curve = c.curves[k];
        std::vector<Pt> bps = curve.pts;
        bps.push_back(Pt{m, curve.right_y});
        bps.push_back(Pt{m + 1, Rat(rank[k])});
        out.curves.push_back(make_curve(curve.left_y, std::move(bps), Rat(rank[k])));
    }
    return out;
}

bool point_in_polygon(const PseudoDiskPolygon& polygon, const Pt& p) {
    const std::size_t n = polygon.ring.size();
    if (n == 0) return false;
    // On-boundary first, then an exact winding count.
    for (std::size_t k = 0; k < n; ++k) {
        const Pt& a = polygon.ring[k];
        const Pt& b = polygon.ring[(k + 1) % n];
        Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (cross != 0) continue;
        if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
            return true;
        }
    }
    int winding = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Pt& a = polygon.ring[k];
        const Pt& b = polygon.ring[(k + 1) % n];
        if (a.y <= p.y && p.y < b.y) {
            Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (cross > 0) ++winding;
        } else if (b.y <= p.y && p.y < a.y) {
            Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (cross < 0) --winding;
        }
    }
    return winding != 0;
}

CompactifiedFamily compactify(const CurveFamily& c, const PointSet* s) {
    for (std::size_t i = 0; i < c.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < c.curves.size(); ++j) {
            CrossingProfile profile = crossing_profile(c.curves[i], c.curves[j]);
            if (profile.crossings.size() > 2) {
                fail(ErrorKind::Invalid,
                     "curves " + std::to_string(i) + " and " + std::to_string(j) + " cross " +
                         std::to_string(profile.crossings.size()) +
                         " times; not pseudo-parabolas");
            }
        }
    }
    std::vector<int> order = left_order(c);
    {
        std::vector<int> right(c.curves.size());
        for (std::size_t k = 0; k < right.size(); ++k) right[k] = static_cast<int>(k);
        std::sort(right.begin(), right.end(), [&](int a, int b) {
            return c.curves[a].right_y < c.curves[b].right_y;
        });
        if (right != order) {
            fail(ErrorKind::Invalid,
                 "vertical orders at the two infinities differ; family is not even "
                 "(run evenize first)");
        }
    }

    Rat bound = 0;
    for (const auto& curve : c.curves) {
        bound = std::max(bound, abs_rat(curve.left_y));
        bound = std::max(bound, abs_rat(curve.right_y));
        for (const auto& bp : curve.pts) {
            bound = std::max(bound, abs_rat(bp.x));
            bound = std::max(bound, abs_rat(bp.y));
        }
    }
    if (s) {
        for (const auto& p : s->pts) {
            bound = std::max(bound, abs_rat(p.x));
            bound = std::max(bound, abs_rat(p.y));
        }
    }
    const Rat m = bound + 1;

    const int n = static_cast<int>(c.curves.size());
    std::vector<int> rank(c.curves.size());
    for (int k = 0; k < n; ++k) rank[order[k]] = k + 1;

    CompactifiedFamily out;
    out.stab = Pt{Rat(0), m + Rat(1, 2)};
    for (int k = 0; k < n; ++k) {
        const PolylineCurve& curve = c.curves[k];
        const Rat arch = Rat(n - rank[k]);  // 0 for the topmost curve
        PseudoDiskPolygon polygon;
        polygon.ring.push_back(Pt{-m, curve.left_y});
        for (const auto& bp : curve.pts) polygon.ring.push_back(bp);
        polygon.ring.push_back(Pt{m, curve.right_y});
        polygon.ring.push_back(Pt{m + arch, m});
        // Counterclockwise over the top; the flat topmost arch is lifted so
        // the stab point stays strictly interior to every polygon.
        polygon.ring.push_back(arch == 0 ? Pt{Rat(0), m + Rat(3, 4)} : Pt{Rat(0), m + arch});
        polygon.ring.push_back(Pt{-m - arch, m});
        out.polygons.push_back(std::move(polygon));
    }
    return out;
}

} // namespace abab
