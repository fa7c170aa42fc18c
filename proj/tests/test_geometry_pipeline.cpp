#include "ababfree/errors.hpp"
#include "ababfree/geometry.hpp"
#include "ababfree/pattern.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace abab;
using testutil::error_kind;
using testutil::hg;
using testutil::rat;

namespace {

Pt pt(long long x, long long y) { return Pt{Rat(x), Rat(y)}; }

} // namespace

TEST_CASE("evenize turns one crossing into two") {
    auto flat = make_curve(rat(0), {}, rat(0));
    auto down = make_curve(rat(1), {pt(0, 1), pt(2, -1)}, rat(-1));
    CurveFamily f{{flat, down}, std::nullopt};
    REQUIRE(crossing_count(flat, down) == 1);

    auto even = evenize(PointSet{}, f);
    REQUIRE(even.curves.size() == 2);
    CHECK(crossing_count(even.curves[0], even.curves[1]) == 2);
    // Far right, curves sit at their bottom-to-top rank from the far left.
    CHECK(curve_value(even.curves[0], rat(1000)) == 1);
    CHECK(curve_value(even.curves[1], rat(1000)) == 2);
    // Left of the rewrite boundary nothing moved.
    CHECK(curve_value(even.curves[0], rat(-10)) == 0);
    CHECK(curve_value(even.curves[1], rat(-10)) == 1);
}

TEST_CASE("evenize keeps an already aligned family crossing-free") {
    CurveFamily f{{make_curve(rat(0), {}, rat(0)), make_curve(rat(1), {}, rat(1))},
                  std::nullopt};
    auto even = evenize(PointSet{}, f);
    CHECK(crossing_count(even.curves[0], even.curves[1]) == 0);
    CHECK(curve_value(even.curves[0], rat(1000)) == 1);
    CHECK(curve_value(even.curves[1], rat(1000)) == 2);
}

TEST_CASE("evenize rejects tied left tails") {
    auto a = make_curve(rat(0), {}, rat(0));
    auto b = make_curve(rat(0), {pt(0, 0), pt(1, 1)}, rat(1));
    CHECK(error_kind([&] { evenize(PointSet{}, CurveFamily{{a, b}, std::nullopt}); }) ==
          ErrorKind::Degenerate);
}

TEST_CASE("evenize preserves traces and makes all crossing counts even") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        auto h = gen::random_abab_free_hypergraph(rng, 8, 6);
        auto r = realize_as_curves(h, HalfIntegerL{4});
        auto even = evenize(r.points, r.curves);
        REQUIRE(even.curves.size() == r.curves.curves.size());
        for (std::size_t a = 0; a < even.curves.size(); ++a) {
            for (std::size_t b = a + 1; b < even.curves.size(); ++b) {
                CHECK(crossing_count(even.curves[a], even.curves[b]) % 2 == 0);
            }
        }
        CHECK(hypergraph_from_curves(r.points, even).edges == h.edges);
    }
}

TEST_CASE("point_in_polygon on a square") {
    PseudoDiskPolygon square{{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}};
    CHECK(point_in_polygon(square, pt(1, 1)));
    CHECK(point_in_polygon(square, pt(0, 1)));  // on an edge
    CHECK(point_in_polygon(square, pt(2, 1)));
    CHECK(point_in_polygon(square, pt(0, 0)));  // on a vertex
    CHECK(point_in_polygon(square, Pt{rat(1, 2), rat(1, 2)}));
    CHECK_FALSE(point_in_polygon(square, pt(3, 1)));
    CHECK_FALSE(point_in_polygon(square, pt(-1, 1)));
    CHECK_FALSE(point_in_polygon(square, pt(1, 3)));
    CHECK_FALSE(point_in_polygon(square, pt(1, -1)));
}

TEST_CASE("point_in_polygon on a concave ring") {
    PseudoDiskPolygon ell{{pt(0, 0), pt(3, 0), pt(3, 1), pt(1, 1), pt(1, 3), pt(0, 3)}};
    CHECK(point_in_polygon(ell, Pt{rat(1, 2), rat(5, 2)}));
    CHECK(point_in_polygon(ell, pt(2, 1)));  // on the notch edge
    CHECK_FALSE(point_in_polygon(ell, pt(2, 2)));
}

TEST_CASE("compactify a single horizontal curve") {
    CurveFamily f{{make_curve(rat(0), {}, rat(0))}, std::nullopt};
    auto out = compactify(f, nullptr);
    REQUIRE(out.polygons.size() == 1);
    CHECK(out.stab == Pt{rat(0), rat(3, 2)});
    const auto& ring = out.polygons[0].ring;
    CHECK(ring == std::vector<Pt>{pt(-1, 0), pt(1, 0), pt(1, 1), Pt{rat(0), rat(7, 4)},
                                  pt(-1, 1)});
    CHECK(point_in_polygon(out.polygons[0], out.stab));
    CHECK(oracles::polygon_is_simple(out.polygons[0]));
}

TEST_CASE("compactify nests disjoint curves into disjoint boundaries") {
    CurveFamily f{{make_curve(rat(0), {}, rat(0)), make_curve(rat(1), {}, rat(1))},
                  std::nullopt};
    auto out = compactify(f, nullptr);
    REQUIRE(out.polygons.size() == 2);
    CHECK(point_in_polygon(out.polygons[0], out.stab));
    CHECK(point_in_polygon(out.polygons[1], out.stab));
    CHECK(oracles::boundary_intersection_count(out.polygons[0], out.polygons[1]) == 0);
    CHECK(oracles::polygon_is_simple(out.polygons[0]));
    CHECK(oracles::polygon_is_simple(out.polygons[1]));
    // The lower curve's region swallows the upper curve's region.
    for (const auto& p : out.polygons[1].ring) {
        CHECK(point_in_polygon(out.polygons[0], p));
    }
}

TEST_CASE("compactify requires an even family") {
    auto flat = make_curve(rat(0), {}, rat(0));
    auto down = make_curve(rat(1), {pt(0, 1), pt(2, -1)}, rat(-1));
    CHECK(error_kind([&] { compactify(CurveFamily{{flat, down}, std::nullopt}, nullptr); }) ==
          ErrorKind::Invalid);
}

TEST_CASE("compactify requires pairwise at most two crossings") {
    auto flat = make_curve(rat(0), {}, rat(0));
    auto wiggle = make_curve(
        rat(1), {pt(0, 1), pt(1, -1), pt(2, 1), pt(3, -1), pt(4, 1)}, rat(1));
    REQUIRE(crossing_count(flat, wiggle) == 4);
    CHECK(error_kind([&] { compactify(CurveFamily{{flat, wiggle}, std::nullopt}, nullptr); }) ==
          ErrorKind::Invalid);
}

TEST_CASE("realize-evenize-compactify preserves traces as polygon membership") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 30; ++i) {
        auto h = gen::random_abab_free_hypergraph(rng, 7, 5);
        auto r = realize_as_curves(h, HalfIntegerL{4});
        auto even = evenize(r.points, r.curves);
        auto out = compactify(even, &r.points);
        REQUIRE(out.polygons.size() == h.edges.size());
        for (std::size_t k = 0; k < out.polygons.size(); ++k) {
            CHECK(oracles::polygon_is_simple(out.polygons[k]));
            CHECK(point_in_polygon(out.polygons[k], out.stab));
            std::vector<int> trace;
            for (std::size_t p = 0; p < r.points.pts.size(); ++p) {
                if (point_in_polygon(out.polygons[k], r.points.pts[p])) {
                    trace.push_back(static_cast<int>(p));
                }
            }
            CHECK(trace == h.edges[k]);
        }
        for (std::size_t a = 0; a < out.polygons.size(); ++a) {
            for (std::size_t b = a + 1; b < out.polygons.size(); ++b) {
                int meets = oracles::boundary_intersection_count(out.polygons[a],
                                                                out.polygons[b]);
                int crossings = crossing_count(even.curves[a], even.curves[b]);
                CHECK(meets == crossings);
                CHECK(meets <= 2);
            }
        }
    }
}
