#include "ababfree/coloring.hpp"
#include "ababfree/errors.hpp"
#include "ababfree/geometry.hpp"
#include "ababfree/pattern.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace abab;
using testutil::error_kind;
using testutil::rat;

namespace {

Pt pt(long long x, long long y) { return Pt{Rat(x), Rat(y)}; }

Disk disk(long long cx, long long cy, long long r2n, long long r2d = 1) {
    return Disk{Pt{Rat(cx), Rat(cy)}, Rat(r2n, r2d)};
}

std::vector<int> trace_of(const Disk& d, const std::vector<Pt>& ordered_pts) {
    std::vector<int> t;
    for (std::size_t i = 0; i < ordered_pts.size(); ++i) {
        if (disk_contains(d, ordered_pts[i])) t.push_back(static_cast<int>(i));
    }
    return t;
}

} // namespace

TEST_CASE("disk_contains is closed containment") {
    Disk d = disk(0, 0, 4);
    CHECK(disk_contains(d, pt(1, 1)));
    CHECK(disk_contains(d, pt(2, 0)));  // boundary
    CHECK(disk_contains(d, pt(0, -2)));
    CHECK_FALSE(disk_contains(d, pt(2, 1)));
    CHECK(disk_contains(Disk{Pt{rat(1, 2), rat(0)}, rat(1, 4)}, pt(0, 0)));
    CHECK(disk_contains(Disk{Pt{rat(1, 2), rat(0)}, rat(1, 4)}, pt(1, 0)));
}

TEST_CASE("angular_order sweeps counterclockwise from the positive x axis") {
    PointSet s{{pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1), pt(1, 1)}};
    CHECK(angular_order(s, pt(0, 0), false) == std::vector<int>{0, 4, 1, 2, 3});
}

TEST_CASE("angular_order breaks ray ties by distance") {
    PointSet s{{pt(2, 0), pt(1, 0)}};
    CHECK(angular_order(s, pt(0, 0), false) == std::vector<int>{1, 0});
    PointSet diag{{pt(3, 3), pt(1, 1), pt(2, 2)}};
    CHECK(angular_order(diag, pt(0, 0), false) == std::vector<int>{1, 2, 0});
}

TEST_CASE("angular_order and the stab point coinciding") {
    PointSet s{{pt(0, 0), pt(1, 0)}};
    CHECK(angular_order(s, pt(0, 0), true) == std::vector<int>{0, 1});
    CHECK(error_kind([&] { angular_order(s, pt(0, 0), false); }) == ErrorKind::Degenerate);
}

TEST_CASE("angular_order rejects duplicate points") {
    PointSet dup{{pt(1, 0), pt(1, 0)}};
    CHECK(error_kind([&] { angular_order(dup, pt(0, 0), false); }) == ErrorKind::Invalid);
}

TEST_CASE("hypergraph_from_stabbed_disks on collinear points") {
    // Disks through the stab reaching ever further along the positive x axis
    // trace exactly the prefixes.
    PointSet s{{pt(1, 0), pt(2, 0), pt(3, 0)}};
    StabbedDiskFamily fam{
        {Disk{Pt{rat(1, 2), rat(0)}, rat(1, 4)}, disk(1, 0, 1),
         Disk{Pt{rat(3, 2), rat(0)}, rat(9, 4)}},
        pt(0, 0)};
    auto h = hypergraph_from_stabbed_disks(s, fam);
    CHECK(h.vertices == std::vector<std::string>{"p0", "p1", "p2"});
    CHECK(h.edges == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}});
}

TEST_CASE("hypergraph_from_stabbed_disks drops empty traces and merges duplicates") {
    PointSet s{{pt(1, 0)}};
    StabbedDiskFamily fam{
        {disk(0, 0, 1), disk(0, 0, 1), Disk{Pt{rat(0), rat(0)}, rat(1, 100)}},
        pt(0, 0)};
    auto h = hypergraph_from_stabbed_disks(s, fam);
    CHECK(h.vertex_count() == 1);
    CHECK(h.edges == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("every disk must contain the stab point") {
    PointSet s{{pt(1, 0)}};
    StabbedDiskFamily fam{{Disk{Pt{rat(1), rat(0)}, rat(1, 2)}}, pt(0, 0)};
    CHECK(error_kind([&] { hypergraph_from_stabbed_disks(s, fam); }) == ErrorKind::Invalid);
    // On the boundary is fine.
    StabbedDiskFamily edge_case{{disk(1, 0, 1)}, pt(0, 0)};
    CHECK_NOTHROW(hypergraph_from_stabbed_disks(s, edge_case));
}

TEST_CASE("a sample point on the stab point is degenerate") {
    PointSet s{{pt(0, 0), pt(1, 0)}};
    StabbedDiskFamily fam{{disk(0, 0, 4)}, pt(0, 0)};
    CHECK(error_kind([&] { hypergraph_from_stabbed_disks(s, fam); }) == ErrorKind::Degenerate);
}

TEST_CASE("stabbed disk hypergraphs are ABAB-free and 3-colorable") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        auto scene = gen::random_disk_scene(rng, 12, 10);
        auto h = hypergraph_from_stabbed_disks(scene.points, scene.disks);
        CAPTURE(i);
        CHECK(is_abl_free_ordered(h, HalfIntegerL{4}));
        auto coloring = three_color(h);
        CHECK(is_proper_coloring(h, coloring));
        CHECK(coloring.palette_size <= 3);
    }
}

TEST_CASE("enumerate_stabbed_disk_hypergraph on collinear points") {
    PointSet s{{pt(1, 0), pt(2, 0), pt(3, 0)}};
    auto e = enumerate_stabbed_disk_hypergraph(s, pt(0, 0));
    CHECK(e.hypergraph.edges ==
          std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}});
    REQUIRE(e.witnesses.size() == e.hypergraph.edges.size());
    std::vector<Pt> ordered{pt(1, 0), pt(2, 0), pt(3, 0)};
    for (std::size_t k = 0; k < e.witnesses.size(); ++k) {
        CHECK(disk_contains(e.witnesses[k], pt(0, 0)));
        CHECK(trace_of(e.witnesses[k], ordered) == e.hypergraph.edges[k]);
    }
}

TEST_CASE("enumerate_stabbed_disk_hypergraph around a triangle") {
    // The stab point lies strictly inside, so every nonempty subset shows up.
    PointSet s{{pt(2, 0), pt(-1, 2), pt(-1, -2)}};
    auto e = enumerate_stabbed_disk_hypergraph(s, pt(0, 0));
    CHECK(e.hypergraph.edge_count() == 7);
    std::set<std::vector<int>> got(e.hypergraph.edges.begin(), e.hypergraph.edges.end());
    std::set<std::vector<int>> want{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    CHECK(got == want);
}

TEST_CASE("enumerate_stabbed_disk_hypergraph trivial inputs") {
    auto single = enumerate_stabbed_disk_hypergraph(PointSet{{pt(3, 1)}}, pt(0, 0));
    CHECK(single.hypergraph.edges == std::vector<std::vector<int>>{{0}});

    auto empty = enumerate_stabbed_disk_hypergraph(PointSet{}, pt(0, 0));
    CHECK(empty.hypergraph.vertex_count() == 0);
    CHECK(empty.hypergraph.edge_count() == 0);
}

TEST_CASE("enumerate_stabbed_disk_hypergraph guards its input size") {
    PointSet big;
    for (int i = 0; i < 26; ++i) big.pts.push_back(pt(i + 1, 1));
    CHECK(error_kind([&] { enumerate_stabbed_disk_hypergraph(big, pt(0, 0)); }) ==
          ErrorKind::Guard);
}

TEST_CASE("enumeration matches the exact feasibility oracle") {
    std::mt19937_64 rng(43);
    for (int scene_idx = 0; scene_idx < 20; ++scene_idx) {
        auto scene = gen::random_disk_scene(rng, 5, 1);
        const auto& pts = scene.points.pts;
        const Pt stab = scene.disks.stab;
        auto ordered_idx = angular_order(scene.points, stab, false);
        std::vector<Pt> ordered;
        for (int i : ordered_idx) ordered.push_back(pts[static_cast<std::size_t>(i)]);

        auto e = enumerate_stabbed_disk_hypergraph(scene.points, stab);
        std::set<std::vector<int>> got(e.hypergraph.edges.begin(), e.hypergraph.edges.end());

        std::set<std::vector<int>> feasible;
        int n = static_cast<int>(ordered.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < n; ++v) {
                if (mask & (1 << v)) subset.push_back(v);
            }
            if (oracles::disk_trace_feasible(ordered, subset, stab)) {
                feasible.insert(subset);
            }
        }
        CAPTURE(scene_idx);
        CHECK(got == feasible);

        REQUIRE(e.witnesses.size() == e.hypergraph.edges.size());
        for (std::size_t k = 0; k < e.witnesses.size(); ++k) {
            CHECK(disk_contains(e.witnesses[k], stab));
            CHECK(trace_of(e.witnesses[k], ordered) == e.hypergraph.edges[k]);
        }
    }
}

TEST_CASE("enumerated hypergraphs pass the full coloring pipeline") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 10; ++i) {
        auto scene = gen::random_disk_scene(rng, 7, 1);
        auto e = enumerate_stabbed_disk_hypergraph(scene.points, scene.disks.stab);
        if (e.hypergraph.edge_count() == 0) continue;
        CHECK(is_abl_free_ordered(e.hypergraph, HalfIntegerL{4}));
        auto coloring = three_color(e.hypergraph);
        CHECK(is_proper_coloring(e.hypergraph, coloring));
    }
}
