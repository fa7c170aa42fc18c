#include "ababfree/geometry.hpp"

#include "ababfree/errors.hpp"
#include "geometry_internal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <utility>

namespace abab {

namespace {

Rat squared_distance(const Pt& a, const Pt& b) {
    return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

// 0 for the closed upper half (angle in [0, pi), including the positive x
// axis), 1 for the lower half (including the negative x axis).
int half_of(const Pt& d) {
    if (d.y > 0) return 0;
    if (d.y < 0) return 1;
    return d.x > 0 ? 0 : 1;
}

} // namespace

bool disk_contains(const Disk& d, const Pt& p) {
    return squared_distance(d.center, p) <= d.r2;
}

std::vector<int> angular_order(const PointSet& s, const Pt& stab, bool allow_coincident) {
    sorted_point_order(s);  // validates distinctness
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
        if (s.pts[i] == stab && !allow_coincident) {
            fail(ErrorKind::Degenerate, "point " + std::to_string(i) +
                                            " coincides with the stab point; its angle "
                                            "is undefined");
        }
    }
    std::vector<int> order(s.pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int ia, int ib) {
        const Pt da{s.pts[ia].x - stab.x, s.pts[ia].y - stab.y};
        const Pt db{s.pts[ib].x - stab.x, s.pts[ib].y - stab.y};
        const bool za = da.x == 0 && da.y == 0;
        const bool zb = db.x == 0 && db.y == 0;
        if (za != zb) return za;  // the stab point itself sorts first
        if (za && zb) return false;
        int ha = half_of(da), hb = half_of(db);
        if (ha != hb) return ha < hb;
        Rat cross = da.x * db.y - da.y * db.x;
        if (cross != 0) return cross > 0;
        // Same ray from the stab: closer point first.
        return squared_distance(s.pts[ia], stab) < squared_distance(s.pts[ib], stab);
    });
    return order;
}

OrderedHypergraph hypergraph_from_stabbed_disks(const PointSet& s, const StabbedDiskFamily& d) {
    for (std::size_t k = 0; k < d.disks.size(); ++k) {
        if (!disk_contains(d.disks[k], d.stab)) {
            fail(ErrorKind::Invalid,
                 "disk " + std::to_string(k) + " does not contain the stab point");
        }
    }
    std::vector<int> order = angular_order(s, d.stab, /*allow_coincident=*/false);
    const int n = static_cast<int>(order.size());
    std::vector<std::string> labels;
    labels.reserve(order.size());
    for (int pos = 0; pos < n; ++pos) labels.push_back("p" + std::to_string(pos));
    std::vector<std::vector<int>> edges;
    for (const auto& disk : d.disks) {
        std::vector<int> trace;
        for (int pos = 0; pos < n; ++pos) {
            if (disk_contains(disk, s.pts[order[pos]])) trace.push_back(pos);
        }
        if (!trace.empty()) edges.push_back(std::move(trace));
    }
    return make_hypergraph(std::move(labels), std::move(edges));
}

namespace {

std::optional<Disk> circumdisk(const Pt& a, const Pt& b, const Pt& c) {
    Rat d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (d == 0) return std::nullopt;  // collinear
    Rat na = a.x * a.x + a.y * a.y;
    Rat nb = b.x * b.x + b.y * b.y;
    Rat nc = c.x * c.x + c.y * c.y;
    Pt center{(na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d,
              (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d};
    Rat r2 = squared_distance(center, a);
    return Disk{std::move(center), std::move(r2)};
}

Disk diametral_disk(const Pt& a, const Pt& b) {
    Pt center{(a.x + b.x) / 2, (a.y + b.y) / 2};
    Rat r2 = squared_distance(center, a);
    return Disk{std::move(center), std::move(r2)};
}

// Exact solution of a k x 3 system (k <= 3) rows * delta = want. For k < 3
// the spare variables are pinned to zero, trying each choice until a
// nonsingular square system remains.
std::optional<std::array<Rat, 3>> solve_up_to_three(const std::vector<std::array<Rat, 3>>& rows,
                                                    const std::vector<Rat>& want) {
    const std::size_t k = rows.size();
    if (k == 1) {
        // The radius coefficient is always 1, so adjust the radius alone.
        return std::array<Rat, 3>{Rat(0), Rat(0), want[0] / rows[0][2]};
    }
    if (k == 2) {
        for (int dropped = 2; dropped >= 0; --dropped) {
            int c0 = dropped == 0 ? 1 : 0;
            int c1 = dropped == 2 ? 1 : 2;
            Rat det = rows[0][static_cast<std::size_t>(c0)] * rows[1][static_cast<std::size_t>(c1)] -
                      rows[0][static_cast<std::size_t>(c1)] * rows[1][static_cast<std::size_t>(c0)];
            if (det == 0) continue;
            Rat s0 = (want[0] * rows[1][static_cast<std::size_t>(c1)] -
                      want[1] * rows[0][static_cast<std::size_t>(c1)]) /
                     det;
            Rat s1 = (rows[0][static_cast<std::size_t>(c0)] * want[1] -
                      rows[1][static_cast<std::size_t>(c0)] * want[0]) /
                     det;
            std::array<Rat, 3> delta{Rat(0), Rat(0), Rat(0)};
            delta[static_cast<std::size_t>(c0)] = s0;
            delta[static_cast<std::size_t>(c1)] = s1;
            return delta;
        }
        return std::nullopt;
    }
    auto det3 = [](const std::array<Rat, 3>& a, const std::array<Rat, 3>& b,
                   const std::array<Rat, 3>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };
    Rat det = det3(rows[0], rows[1], rows[2]);
    if (det == 0) return std::nullopt;
    std::array<Rat, 3> delta;
    for (int col = 0; col < 3; ++col) {
        std::array<std::array<Rat, 3>, 3> m{rows[0], rows[1], rows[2]};
        for (int r = 0; r < 3; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = want[static_cast<std::size_t>(r)];
        delta[static_cast<std::size_t>(col)] = det3(m[0], m[1], m[2]) / det;
    }
    return delta;
}

} // namespace

DiskEnumeration enumerate_stabbed_disk_hypergraph(const PointSet& s, const Pt& stab) {
    if (s.pts.size() > 25) {
        fail(ErrorKind::Guard, "disk enumeration supports at most 25 points, got " +
                                   std::to_string(s.pts.size()));
    }
    std::vector<int> order = angular_order(s, stab, /*allow_coincident=*/true);
    const int n = static_cast<int>(order.size());
    std::vector<Pt> ordered;
    ordered.reserve(order.size());
    for (int pos = 0; pos < n; ++pos) ordered.push_back(s.pts[order[pos]]);

    std::vector<Pt> q = s.pts;
    bool stab_in_s = false;
    for (const auto& p : q) stab_in_s = stab_in_s || p == stab;
    if (!stab_in_s) q.push_back(stab);

    std::map<std::vector<int>, Disk> traces;

    auto record = [&](Disk disk) {
        if (!disk_contains(disk, stab)) return;
        std::vector<int> trace;
        for (int pos = 0; pos < n; ++pos) {
            if (disk_contains(disk, ordered[pos])) trace.push_back(pos);
        }
        if (trace.empty()) return;
        traces.emplace(std::move(trace), std::move(disk));
    };

    // A candidate disk carries its boundary contacts. Perturbing the disk by
    // delta = (dx, dy, dr) in (center, squared radius) space moves contact p
    // by the margin dr + 2*dx*(p.x-cx) + 2*dy*(p.y-cy) - (dx^2 + dy^2), so
    // the linearization of the contact margins is a full-rank system (the
    // contacts of one disk are never collinear with its center for pairs,
    // nor collinear among themselves for triples). For every in/out sign
    // pattern of the contacts, solve the linearization for margin +-1 and
    // shrink the step until (a) the quadratic term cannot overturn the signs
    // and (b) no non-contact point changes sides. This realizes every trace
    // in the neighborhood of the candidate exactly.
    auto consider = [&](const Disk& base, const std::vector<Pt>& contacts) {
        record(base);
        const int k = static_cast<int>(contacts.size());
        if (k == 0 || k > 3) return;
        for (int pattern = 0; pattern < (1 << k); ++pattern) {
            // rows[i] * (dx, dy, dr) = want[i]
            std::vector<std::array<Rat, 3>> rows;
            std::vector<Rat> want;
            for (int i = 0; i < k; ++i) {
                rows.push_back({2 * (contacts[static_cast<std::size_t>(i)].x - base.center.x),
                                2 * (contacts[static_cast<std::size_t>(i)].y - base.center.y),
                                Rat(1)});
                want.push_back((pattern >> i) & 1 ? Rat(1) : Rat(-1));
            }
            auto delta = solve_up_to_three(rows, want);
            if (!delta) continue;  // degenerate contact set; other candidates cover it
            const Rat dx = (*delta)[0], dy = (*delta)[1], dr = (*delta)[2];
            const Rat quad = dx * dx + dy * dy;
            // mu * 1 must beat mu^2 * quad at the contacts...
            Rat mu = quad == 0 ? Rat(1) : std::min(Rat(1), Rat(1) / (2 * quad));
            // ...and stay below every non-contact point's margin.
            for (const auto& p : q) {
                bool is_contact = false;
                for (const auto& c : contacts) is_contact = is_contact || p == c;
                if (is_contact) continue;
                Rat gap = squared_distance(base.center, p) - base.r2;
                if (gap < 0) gap = -gap;
                if (gap == 0) continue;  // also on the boundary: treated by
                                         // the candidate that lists it
                Rat speed = dr + 2 * dx * (p.x - base.center.x) + 2 * dy * (p.y - base.center.y);
                if (speed < 0) speed = -speed;
                Rat cap = gap / (2 * (speed + quad + 1));
                mu = std::min(mu, cap);
            }
            Pt center{base.center.x + mu * dx, base.center.y + mu * dy};
            Rat r2 = base.r2 + mu * dr;
            record(Disk{std::move(center), std::move(r2)});
        }
    };

    const int qn = static_cast<int>(q.size());
    // A disk around everything realizes the full trace even when no boundary
    // contacts pin it down.
    {
        Rat reach = 0;
        for (const auto& p : q) reach = std::max(reach, squared_distance(stab, p));
        consider(Disk{stab, reach + 1}, {});
    }
    for (int i = 0; i < qn; ++i) {
        for (int j = i + 1; j < qn; ++j) {
            consider(diametral_disk(q[i], q[j]), {q[i], q[j]});
            // Disks with q[i] and q[j] on the boundary form a pencil with
            // centers mid + t*perp. The trace is constant beyond the last
            // circumcenter parameter, and those two extreme intervals are the
            // near-halfplane witnesses the fixed-center candidates miss.
            const Pt mid{(q[i].x + q[j].x) / 2, (q[i].y + q[j].y) / 2};
            const Pt perp{q[i].y - q[j].y, q[j].x - q[i].x};
            const Rat norm = perp.x * perp.x + perp.y * perp.y;
            Rat tmax = 0;
            for (int k = 0; k < qn; ++k) {
                if (k == i || k == j) continue;
                auto cd = circumdisk(q[i], q[j], q[k]);
                if (!cd) continue;
                Rat t = ((cd->center.x - mid.x) * perp.x + (cd->center.y - mid.y) * perp.y) /
                        norm;
                if (t < 0) t = -t;
                tmax = std::max(tmax, t);
            }
            const Rat t = tmax + 1;
            for (int sign : {1, -1}) {
                Pt center{mid.x + sign * t * perp.x, mid.y + sign * t * perp.y};
                Rat r2 = squared_distance(center, q[i]);
                consider(Disk{std::move(center), std::move(r2)}, {q[i], q[j]});
            }
        }
    }
    for (int i = 0; i < qn; ++i) {
        for (int j = i + 1; j < qn; ++j) {
            for (int k = j + 1; k < qn; ++k) {
                if (auto disk = circumdisk(q[i], q[j], q[k])) {
                    consider(*disk, {q[i], q[j], q[k]});
                }
            }
        }
    }

    DiskEnumeration result;
    std::vector<std::string> labels;
    labels.reserve(order.size());
    for (int pos = 0; pos < n; ++pos) labels.push_back("p" + std::to_string(pos));
    std::vector<std::vector<int>> edges;
    edges.reserve(traces.size());
    for (const auto& [trace, disk] : traces) {
        edges.push_back(trace);
        result.witnesses.push_back(disk);
    }
    result.hypergraph = make_hypergraph(std::move(labels), std::move(edges));
    return result;
}

} // namespace abab
