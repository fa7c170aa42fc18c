#include "ababfree/geometry.hpp"

#include "ababfree/errors.hpp"
#include "geometry_internal.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace abab {

namespace {

// The wiring diagram of a curve family over a point set: the vertical order
// of the curves at -infinity plus a left-to-right sequence of events, each
// either an adjacent transposition of two curves (a crossing) or a column (a
// point of S with its exact above/on/below relation to every curve). All
// lens surgery happens on this combinatorial object; geometry is
// reconstructed afterwards.

struct ColumnInfo {
    Rat x;
    Rat y;
    std::vector<int> rel;  // per curve: +1 point above curve, 0 on it, -1 below
};

struct Event {
    bool is_crossing = false;
    int u = -1, v = -1;  // crossing: the two curves meeting (u < v)
    int column = -1;     // column: index into Diagram::columns
};

struct Diagram {
    int curve_count = 0;
    std::vector<int> sigma0;          // curve ids bottom to top at -infinity
    std::vector<ColumnInfo> columns;  // one per point of S, in x-then-y order
    std::vector<Event> events;
};

std::vector<int> order_at(const CurveFamily& c, const Rat& x) {
    const int n = static_cast<int>(c.curves.size());
    std::vector<Rat> value;
    value.reserve(c.curves.size());
    for (const auto& curve : c.curves) value.push_back(curve_value(curve, x));
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return value[a] < value[b]; });
    for (int k = 1; k < n; ++k) {
        if (value[order[k - 1]] == value[order[k]]) {
            fail(ErrorKind::Invalid, "internal: curve order sampled at a meeting point");
        }
    }
    return order;
}

// Decompose the permutation change across one crossing x into adjacent
// transpositions (insertion order), checking each swap against the set of
// pairs that geometrically cross there.
void decompose_crossings(std::vector<int>& cur, const std::vector<int>& target,
                         std::vector<std::pair<int, int>> pending, std::vector<Event>& events) {
    const int n = static_cast<int>(cur.size());
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[cur[k]] = k;
    for (int t = 0; t < n; ++t) {
        int w = target[t];
        for (int q = pos[w]; q > t; --q) {
            int other = cur[q - 1];
            std::pair<int, int> key{std::min(other, w), std::max(other, w)};
            auto it = std::find(pending.begin(), pending.end(), key);
            if (it == pending.end()) {
                fail(ErrorKind::Invalid,
                     "internal: crossing decomposition does not match the sampled orders");
            }
            pending.erase(it);
            Event ev;
            ev.is_crossing = true;
            ev.u = key.first;
            ev.v = key.second;
            events.push_back(ev);
            cur[q] = other;
            cur[q - 1] = w;
            pos[other] = q;
            pos[w] = q - 1;
        }
    }
    if (!pending.empty()) {
        fail(ErrorKind::Invalid,
             "internal: crossing decomposition does not match the sampled orders");
    }
}

Diagram extract_diagram(const PointSet& s, const CurveFamily& c) {
    const int n = static_cast<int>(c.curves.size());
    Diagram dg;
    dg.curve_count = n;

    // Pairwise profiles: crossings become transpositions; touch x's carry no
    // event but the order samples below must avoid them.
    std::map<Rat, std::vector<std::pair<int, int>>> crossings_at;
    std::vector<Rat> critical;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            CrossingProfile profile = crossing_profile(c.curves[i], c.curves[j]);
            for (const auto& x : profile.crossings) {
                crossings_at[x].emplace_back(i, j);
                critical.push_back(x);
            }
            for (const auto& x : profile.touches) critical.push_back(x);
        }
    }
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

    dg.sigma0.resize(n);
    for (int k = 0; k < n; ++k) dg.sigma0[k] = k;
    std::sort(dg.sigma0.begin(), dg.sigma0.end(),
              [&](int a, int b) { return c.curves[a].left_y < c.curves[b].left_y; });

    // Columns in x-then-y order, with the exact relation to every curve.
    std::vector<int> order = sorted_point_order(s);
    for (int idx : order) {
        const Pt& p = s.pts[idx];
        ColumnInfo col;
        col.x = p.x;
        col.y = p.y;
        col.rel.reserve(c.curves.size());
        int on_count = 0;
        for (const auto& curve : c.curves) {
            Rat value = curve_value(curve, p.x);
            int r = value < p.y ? 1 : (value == p.y ? 0 : -1);
            on_count += (r == 0);
            col.rel.push_back(r);
        }
        if (on_count >= 2) {
            fail(ErrorKind::Degenerate, "point " + format_rational(p.x) + "," +
                                            format_rational(p.y) +
                                            " lies on two curves where they meet");
        }
        dg.columns.push_back(std::move(col));
    }

    // Merge the sorted crossing x's and column x's into the event sequence;
    // crossings at a column's x go first (the column's relations are
    // unaffected by them, see the on-meeting rejection above).
    std::vector<Rat> xs = critical;
    for (const auto& col : dg.columns) xs.push_back(col.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<int> cur = dg.sigma0;
    std::size_t col_i = 0;
    for (const auto& x : xs) {
        auto hit = crossings_at.find(x);
        if (hit != crossings_at.end()) {
            auto next = std::upper_bound(critical.begin(), critical.end(), x);
            Rat sample = next == critical.end() ? Rat(x + 1) : Rat((x + *next) / 2);
            decompose_crossings(cur, order_at(c, sample), hit->second, dg.events);
        }
        while (col_i < dg.columns.size() && dg.columns[col_i].x == x) {
            Event ev;
            ev.column = static_cast<int>(col_i);
            dg.events.push_back(ev);
            ++col_i;
        }
    }
    return dg;
}

long long total_crossings(const Diagram& dg) {
    long long total = 0;
    for (const auto& ev : dg.events) total += ev.is_crossing;
    return total;
}

// Relabel curves i <-> j in every event of [first, last) and in the column
// relations; used after swapping the curve parts across a lens.
void relabel_span(Diagram& dg, std::size_t first, std::size_t last, int i, int j) {
    for (std::size_t k = first; k < last; ++k) {
        Event& ev = dg.events[k];
        if (ev.is_crossing) {
            auto swap_label = [&](int w) { return w == i ? j : (w == j ? i : w); };
            int u = swap_label(ev.u);
            int v = swap_label(ev.v);
            ev.u = std::min(u, v);
            ev.v = std::max(u, v);
        } else {
            std::swap(dg.columns[ev.column].rel[i], dg.columns[ev.column].rel[j]);
        }
    }
}

// Find and eliminate one empty lens: scan curve pairs in index order and
// their regions left to right (including the half-infinite regions before
// the first and after the last crossing of the pair). Returns false at the
// fixpoint.
bool eliminate_one(Diagram& dg) {
    const int n = dg.curve_count;
    std::vector<int> rank0(n);
    for (int k = 0; k < n; ++k) rank0[dg.sigma0[k]] = k;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::size_t> cross_pos;
            for (std::size_t k = 0; k < dg.events.size(); ++k) {
                const Event& ev = dg.events[k];
                if (ev.is_crossing && ev.u == i && ev.v == j) cross_pos.push_back(k);
            }
            if (cross_pos.empty()) continue;
            const std::size_t k_count = cross_pos.size();
            std::vector<bool> empty(k_count + 1, true);
            int lower0 = rank0[i] < rank0[j] ? i : j;
            std::size_t region = 0;
            for (const Event& ev : dg.events) {
                if (ev.is_crossing) {
                    if (ev.u == i && ev.v == j) ++region;
                    continue;
                }
                const ColumnInfo& col = dg.columns[ev.column];
                int lower = region % 2 == 0 ? lower0 : (lower0 == i ? j : i);
                int upper = lower == i ? j : i;
                // The point is inside or on the closed strip between the two
                // curves exactly when it is on or above the lower one and on
                // or below the upper one.
                if (col.rel[lower] >= 0 && col.rel[upper] <= 0) empty[region] = false;
            }
            for (std::size_t m = 0; m <= k_count; ++m) {
                if (!empty[m]) continue;
                if (m == 0) {
                    relabel_span(dg, 0, cross_pos[0], i, j);
                    int pi = rank0[i], pj = rank0[j];
                    std::swap(dg.sigma0[pi], dg.sigma0[pj]);
                    dg.events.erase(dg.events.begin() + static_cast<long>(cross_pos[0]));
                } else if (m == k_count) {
                    relabel_span(dg, cross_pos[k_count - 1] + 1, dg.events.size(), i, j);
                    dg.events.erase(dg.events.begin() +
                                    static_cast<long>(cross_pos[k_count - 1]));
                } else {
                    relabel_span(dg, cross_pos[m - 1] + 1, cross_pos[m], i, j);
                    dg.events.erase(dg.events.begin() + static_cast<long>(cross_pos[m]));
                    dg.events.erase(dg.events.begin() + static_cast<long>(cross_pos[m - 1]));
                }
                return true;
            }
        }
    }
    return false;
}

// One x position carrying either a single crossing or all the columns that
// share an x, plus the exact value every curve takes there.
struct Anchor {
    bool is_crossing = false;
    int u = -1, v = -1;
    std::vector<int> columns;
    Rat x;
};

// Redraw the diagram as polyline curves: columns keep their true x,
// crossings get synthetic x's spread through the gaps, and every curve gets
// one breakpoint per anchor at heights that realize the diagram's vertical
// orders exactly (so the drawn family has precisely the diagram's crossings,
// no touches, and the recorded point-curve relations).
CurveFamily redraw(const Diagram& dg, std::optional<int> t_bound) {
    const int n = dg.curve_count;
    CurveFamily out;
    out.t_bound = t_bound;

    std::vector<Anchor> anchors;
    for (std::size_t k = 0; k < dg.events.size(); ++k) {
        const Event& ev = dg.events[k];
        if (ev.is_crossing) {
            Anchor a;
            a.is_crossing = true;
            a.u = ev.u;
            a.v = ev.v;
            anchors.push_back(std::move(a));
        } else {
            const Rat& x = dg.columns[ev.column].x;
            if (!anchors.empty() && !anchors.back().is_crossing &&
                dg.columns[anchors.back().columns.front()].x == x) {
                anchors.back().columns.push_back(ev.column);
            } else {
                Anchor a;
                a.columns.push_back(ev.column);
                a.x = x;
                anchors.push_back(std::move(a));
            }
        }
    }

    if (anchors.empty()) {
        for (int k = 0; k < n; ++k) out.curves.emplace_back();
        for (int rho = 0; rho < n; ++rho) {
            out.curves[dg.sigma0[rho]] = make_curve(Rat(rho), {}, Rat(rho));
        }
        return out;
    }

    // Synthetic x's for crossing runs: unit steps outside the outermost
    // columns, uniform spread strictly between consecutive column x's.
    std::size_t k = 0;
    while (k < anchors.size()) {
        if (!anchors[k].is_crossing) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end < anchors.size() && anchors[end].is_crossing) ++end;
        const long long run = static_cast<long long>(end - k);
        const bool has_left = k > 0;
        const bool has_right = end < anchors.size();
        for (std::size_t t = 0; t < end - k; ++t) {
            Rat x;
            if (has_left && has_right) {
                const Rat& xa = anchors[k - 1].x;
                const Rat& xb = anchors[end].x;
                x = xa + (xb - xa) * Rat(static_cast<long long>(t) + 1, run + 1);
            } else if (has_right) {
                x = anchors[end].x - Rat(run - static_cast<long long>(t));
            } else if (has_left) {
                x = anchors[k - 1].x + Rat(static_cast<long long>(t) + 1);
            } else {
                x = Rat(static_cast<long long>(t));
            }
            anchors[k + t].x = std::move(x);
        }
        k = end;
    }

    std::vector<std::vector<Pt>> breakpoints(n);
    std::vector<int> cur = dg.sigma0;
    std::vector<int> pos(n);
    for (int q = 0; q < n; ++q) pos[cur[q]] = q;

    const Rat x_left = anchors.front().x - 1;
    const Rat x_right = anchors.back().x + 1;
    for (int w = 0; w < n; ++w) breakpoints[w].push_back(Pt{x_left, Rat(pos[w])});

    for (const Anchor& a : anchors) {
        if (a.is_crossing) {
            int su = pos[a.u], sv = pos[a.v];
            if (su > sv) std::swap(su, sv);
            if (sv != su + 1) {
                fail(ErrorKind::Invalid, "internal: crossing of non-adjacent curves");
            }
            for (int w = 0; w < n; ++w) {
                Rat y = (w == a.u || w == a.v) ? Rat(su) + Rat(1, 2) : Rat(pos[w]);
                breakpoints[w].push_back(Pt{a.x, std::move(y)});
            }
            std::swap(cur[su], cur[sv]);
            pos[cur[su]] = su;
            pos[cur[sv]] = sv;
            continue;
        }
        // Column anchor: positions are split into zones by the points'
        // heights; each zone gets strictly increasing values strictly
        // between (or exactly on, for a point lying on a curve) the
        // separating heights.
        struct Group {
            Rat y;
            int below = 0;    // curves on or below the point
            int pinned = -1;  // curve exactly through the point, if any
        };
        std::vector<Group> groups;
        for (int ci : a.columns) {
            const ColumnInfo& col = dg.columns[ci];
            Group g;
            g.y = col.y;
            for (int w = 0; w < n; ++w) {
                if (col.rel[w] >= 0) ++g.below;
                if (col.rel[w] == 0) g.pinned = w;
            }
            groups.push_back(std::move(g));
        }
        // Consistency between the stored relations and the running
        // permutation: each point's on-or-below set must be a prefix, with
        // the on-curve at the prefix top.
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const ColumnInfo& col = dg.columns[a.columns[gi]];
            for (int w = 0; w < n; ++w) {
                if ((col.rel[w] >= 0) != (pos[w] < groups[gi].below)) {
                    fail(ErrorKind::Invalid, "internal: column relations are not a prefix");
                }
            }
            if (groups[gi].pinned >= 0 && pos[groups[gi].pinned] != groups[gi].below - 1) {
                fail(ErrorKind::Invalid, "internal: on-curve point not at the prefix top");
            }
        }
        std::vector<Rat> height(n);
        int rho = 0;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const Group& g = groups[gi];
            const int top = g.below - (g.pinned >= 0 ? 1 : 0);
            if (gi == 0) {
                for (; rho < top; ++rho) height[rho] = g.y - Rat(top - rho);
            } else {
                const Rat& lo = groups[gi - 1].y;
                const long long count = top - rho;
                for (long long t = 0; rho < top; ++rho, ++t) {
                    height[rho] = lo + (g.y - lo) * Rat(t + 1, count + 1);
                }
            }
            if (g.pinned >= 0) {
                height[rho] = g.y;
                ++rho;
            }
        }
        for (long long t = 1; rho < n; ++rho, ++t) {
            height[rho] = groups.back().y + Rat(t);
        }
        for (int w = 0; w < n; ++w) breakpoints[w].push_back(Pt{a.x, height[pos[w]]});
    }

    for (int w = 0; w < n; ++w) breakpoints[w].push_back(Pt{x_right, Rat(pos[w])});

    for (int w = 0; w < n; ++w) {
        Rat left_y = breakpoints[w].front().y;
        Rat right_y = breakpoints[w].back().y;
        out.curves.push_back(make_curve(std::move(left_y), std::move(breakpoints[w]),
                                        std::move(right_y)));
    }
    return out;
}

} // namespace

CurveFamily eliminate_empty_lenses(const PointSet& s, const CurveFamily& c,
                                   LensElimStats* stats) {
    Diagram dg = extract_diagram(s, c);
    if (stats) {
        stats->steps = 0;
        stats->crossing_totals = {total_crossings(dg)};
    }
    int steps = 0;
    while (eliminate_one(dg)) {
        ++steps;
        if (stats) {
            stats->steps = steps;
            stats->crossing_totals.push_back(total_crossings(dg));
        }
    }
    if (steps == 0) return c;
    return redraw(dg, c.t_bound);
}

CurveRealization realize_as_curves(const OrderedHypergraph& hg, HalfIntegerL l) {
    if (auto violation = find_abl_violation(hg, l)) {
        std::string witness;
        for (std::size_t k = 0; k < violation->witness.size(); ++k) {
            if (k) witness += ",";
            witness += std::to_string(violation->witness[k]);
        }
        fail(ErrorKind::NotFree, "hypergraph is not (AB)^" + format_half_integer_l(l) +
                                     "-free: vertices " + witness + " alternate");
    }
    const int n = hg.vertex_count();
    CurveRealization result;
    for (int i = 0; i < n; ++i) result.points.pts.push_back(Pt{Rat(i + 1), Rat(0)});

    // One curve per edge: at height +(k+1) while outside the edge, -(k+1)
    // while inside, switching linearly in the window (j+1/3, j+2/3) just
    // before vertex j's x position j+1.
    CurveFamily initial;
    for (std::size_t k = 0; k < hg.edges.size(); ++k) {
        const Rat high = Rat(static_cast<long long>(k) + 1);
        const Rat low = -high;
        std::vector<bool> member(static_cast<std::size_t>(n), false);
        for (int v : hg.edges[k]) member[static_cast<std::size_t>(v)] = true;
        std::vector<Pt> bps;
        bool inside = false;
        for (int v = 0; v < n; ++v) {
            if (member[static_cast<std::size_t>(v)] == inside) continue;
            const Rat from = inside ? low : high;
            const Rat to = inside ? high : low;
            bps.push_back(Pt{Rat(v) + Rat(1, 3), from});
            bps.push_back(Pt{Rat(v) + Rat(2, 3), to});
            inside = !inside;
        }
        initial.curves.push_back(make_curve(high, std::move(bps), inside ? low : high));
    }

    Diagram dg = extract_diagram(result.points, initial);
    int steps = 0;
    while (eliminate_one(dg)) ++steps;

    // The diagram's crossing events are exact pairwise crossing counts: the
    // sweep in extract_diagram validated every event against sampled orders,
    // and redraw realizes the event sequence verbatim.
    const std::size_t m = initial.curves.size();
    std::vector<long long> pair_crossings(m * m, 0);
    for (const Event& ev : dg.events) {
        if (ev.is_crossing) {
            ++pair_crossings[static_cast<std::size_t>(ev.u) * m +
                             static_cast<std::size_t>(ev.v)];
        }
    }
    for (long long count : pair_crossings) {
        if (count > l.twice_l - 2) {
            fail(ErrorKind::Invalid,
                 "internal: lens elimination left a pair above the crossing bound");
        }
    }

    result.curves = steps == 0 ? std::move(initial) : redraw(dg, initial.t_bound);
    result.curves.t_bound = l.twice_l - 2;
    return result;
}

} // namespace abab
