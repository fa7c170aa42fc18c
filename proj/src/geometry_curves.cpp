#include "ababfree/geometry.hpp"

#include "ababfree/errors.hpp"
#include "geometry_internal.hpp"

#include <algorithm>
#include <utility>

namespace abab {

namespace {

// A curve value as an unreduced fraction with positive denominator; cheap to
// build (products only, no gcd) and compared by cross-multiplication.
struct RawValue {
    BigInt num;
    BigInt den;
};

// Value of the curve at x, where successive calls see ascending x and `idx`
// carries the breakpoint cursor between them (linear merge over the grid).
RawValue raw_curve_value(const PolylineCurve& curve, const Rat& x, std::size_t& idx) {
    const auto& pts = curve.pts;
    while (idx < pts.size() && pts[idx].x <= x) ++idx;
    if (idx == 0) return RawValue{numerator(curve.left_y), denominator(curve.left_y)};
    if (pts[idx - 1].x == x) return RawValue{numerator(pts[idx - 1].y), denominator(pts[idx - 1].y)};
    if (idx == pts.size()) return RawValue{numerator(curve.right_y), denominator(curve.right_y)};
    // Strictly inside the segment (lo, hi): with lo.y=a/b, hi.y=c/d,
    // lo.x=e/f, hi.x=g/h, x=p/q,
    //   value = lo.y + (hi.y-lo.y)(x-lo.x)/(hi.x-lo.x)
    //         = [adq(gf-eh) + (cb-ad)(pf-eq)h] / [bdq(gf-eh)],
    // and gf-eh > 0 because hi.x > lo.x, so the denominator stays positive.
    const Pt& lo = pts[idx - 1];
    const Pt& hi = pts[idx];
    const BigInt& a = numerator(lo.y);
    const BigInt& b = denominator(lo.y);
    const BigInt& c = numerator(hi.y);
    const BigInt& d = denominator(hi.y);
    const BigInt& e = numerator(lo.x);
    const BigInt& f = denominator(lo.x);
    const BigInt& g = numerator(hi.x);
    const BigInt& h = denominator(hi.x);
    const BigInt& p = numerator(x);
    const BigInt& q = denominator(x);
    BigInt gf_eh = g * f - e * h;
    BigInt pf_eq = p * f - e * q;
    BigInt cb_ad = c * b - a * d;
    BigInt dq_gf_eh = d * q * gf_eh;
    return RawValue{a * dq_gf_eh + cb_ad * pf_eq * h, b * dq_gf_eh};
}

} // namespace

PolylineCurve make_curve(Rat left_y, std::vector<Pt> breakpoints, Rat right_y) {
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i - 1].x < breakpoints[i].x)) {
            fail(ErrorKind::Invalid, "curve breakpoints must have strictly increasing x");
        }
    }
    if (breakpoints.empty()) {
        if (left_y != right_y) {
            fail(ErrorKind::Invalid,
                 "a curve without breakpoints must have equal tail heights");
        }
    } else {
        if (breakpoints.front().y != left_y) {
            fail(ErrorKind::Invalid, "first breakpoint must sit at the left tail height");
        }
        if (breakpoints.back().y != right_y) {
            fail(ErrorKind::Invalid, "last breakpoint must sit at the right tail height");
        }
    }
    return PolylineCurve{std::move(left_y), std::move(breakpoints), std::move(right_y)};
}

Rat curve_value(const PolylineCurve& curve, const Rat& x) {
    const auto& pts = curve.pts;
    if (pts.empty() || x <= pts.front().x) return curve.left_y;
    if (x >= pts.back().x) return curve.right_y;
    // First breakpoint with bp.x >= x; x is strictly inside the polyline.
    auto it = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const Pt& bp, const Rat& v) { return bp.x < v; });
    if (it->x == x) return it->y;
    const Pt& hi = *it;
    const Pt& lo = *(it - 1);
    return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

CrossingProfile crossing_profile(const PolylineCurve& c1, const PolylineCurve& c2) {
    // Difference d(x) = c1(x) - c2(x) is piecewise linear with kinks only at
    // the merged breakpoint x's; sample it there and at the infinite tails.
    std::vector<Rat> grid;
    grid.reserve(c1.pts.size() + c2.pts.size());
    for (const auto& p : c1.pts) grid.push_back(p.x);
    for (const auto& p : c2.pts) grid.push_back(p.x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const Rat d_left = c1.left_y - c2.left_y;
    const Rat d_right = c1.right_y - c2.right_y;
    if (d_left == 0 || d_right == 0) {
        fail(ErrorKind::Degenerate, "curves share an infinite horizontal tail segment");
    }

    CrossingProfile profile;
    if (grid.empty()) return profile;  // two disjoint horizontal lines

    // Difference d(x) = c1(x) - c2(x) at each grid x as an unreduced
    // fraction w/dd with dd > 0; the scan below needs only its sign, so the
    // reducing division is paid only at actual sign changes.
    std::vector<BigInt> w(grid.size()), dd(grid.size());
    std::size_t i1 = 0, i2 = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        RawValue v1 = raw_curve_value(c1, grid[k], i1);
        RawValue v2 = raw_curve_value(c2, grid[k], i2);
        w[k] = v1.num * v2.den - v2.num * v1.den;
        dd[k] = v1.den * v2.den;
    }

    // The outermost samples coincide with the tail differences, so zeros at
    // them would already have tripped the overlap error above; consecutive
    // zeros mean a shared segment of positive length.
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == 0 && w[k + 1] == 0) {
            fail(ErrorKind::Degenerate, "curves share a segment of positive length");
        }
    }

    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != 0) continue;
        // Isolated zero at a grid point: neighbors exist and are nonzero.
        bool flips = (w[k - 1] < 0) != (w[k + 1] < 0);
        if (flips) {
            profile.crossings.push_back(grid[k]);
        } else {
            profile.touches.push_back(grid[k]);
        }
    }
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == 0 || w[k + 1] == 0) continue;
        if ((w[k] < 0) == (w[k + 1] < 0)) continue;
        // One sign change strictly inside the piece; with v = w/dd the
        // crossing sits at grid[k] + (grid[k+1]-grid[k]) * v_k/(v_k-v_{k+1}).
        BigInt num = w[k] * dd[k + 1];
        BigInt den = num - w[k + 1] * dd[k];
        Rat x = grid[k] + (grid[k + 1] - grid[k]) * Rat(std::move(num), std::move(den));
        profile.crossings.push_back(std::move(x));
    }
    std::sort(profile.crossings.begin(), profile.crossings.end());
    return profile;
}

int crossing_count(const PolylineCurve& c1, const PolylineCurve& c2) {
    return static_cast<int>(crossing_profile(c1, c2).crossings.size());
}

std::vector<int> sorted_point_order(const PointSet& s) {
    std::vector<int> order(s.pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (s.pts[a].x != s.pts[b].x) return s.pts[a].x < s.pts[b].x;
        return s.pts[a].y < s.pts[b].y;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (s.pts[order[i - 1]] == s.pts[order[i]]) {
            fail(ErrorKind::Invalid, "point set contains a duplicate point");
        }
    }
    return order;
}

OrderedHypergraph hypergraph_from_curves(const PointSet& s, const CurveFamily& c) {
    std::vector<int> order = sorted_point_order(s);
    const int n = static_cast<int>(order.size());

    // Values of every curve at every point, so degenerate incidences (a
    // point on two curves meeting there) can be named precisely.
    std::vector<std::vector<Rat>> value(c.curves.size());
    for (std::size_t k = 0; k < c.curves.size(); ++k) {
        value[k].reserve(order.size());
        for (int pos = 0; pos < n; ++pos) {
            value[k].push_back(curve_value(c.curves[k], s.pts[order[pos]].x));
        }
    }
    for (int pos = 0; pos < n; ++pos) {
        const Pt& p = s.pts[order[pos]];
        int on_curve = -1;
        for (std::size_t k = 0; k < c.curves.size(); ++k) {
            if (value[k][pos] != p.y) continue;
            if (on_curve >= 0) {
                fail(ErrorKind::Degenerate,
                     "point " + format_rational(p.x) + "," + format_rational(p.y) +
                         " lies on curves " + std::to_string(on_curve) + " and " +
                         std::to_string(k) + " where they meet");
            }
            on_curve = static_cast<int>(k);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(order.size());
    for (int pos = 0; pos < n; ++pos) labels.push_back("p" + std::to_string(pos));

    std::vector<std::vector<int>> edges;
    for (std::size_t k = 0; k < c.curves.size(); ++k) {
        std::vector<int> trace;
        for (int pos = 0; pos < n; ++pos) {
            if (s.pts[order[pos]].y >= value[k][pos]) trace.push_back(pos);
        }
        if (!trace.empty()) edges.push_back(std::move(trace));
    }
    return make_hypergraph(std::move(labels), std::move(edges));
}

} // namespace abab
