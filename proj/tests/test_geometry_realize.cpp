#include "ababfree/errors.hpp"
#include "ababfree/geometry.hpp"
#include "ababfree/pattern.hpp"

#include "support/generators.hpp"
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

// Vertex count and edge sets agree (labels differ by construction:
// realized points are relabeled p0, p1, ...).
void check_round_trip(const OrderedHypergraph& h, const CurveRealization& r) {
    auto back = hypergraph_from_curves(r.points, r.curves);
    CHECK(back.vertex_count() == h.vertex_count());
    CHECK(back.edges == h.edges);
}

int max_pairwise_crossings(const CurveFamily& f) {
    int worst = 0;
    for (std::size_t i = 0; i < f.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < f.curves.size(); ++j) {
            worst = std::max(worst, crossing_count(f.curves[i], f.curves[j]));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("realize_as_curves on a single two-vertex edge") {
    auto r = realize_as_curves(hg(2, {{0, 1}}), HalfIntegerL{4});
    REQUIRE(r.points.pts.size() == 2);
    CHECK(r.points.pts[0] == pt(1, 0));
    CHECK(r.points.pts[1] == pt(2, 0));
    REQUIRE(r.curves.curves.size() == 1);
    const auto& c = r.curves.curves[0];
    CHECK(c.left_y == 1);
    CHECK(c.right_y == -1);
    CHECK(c.pts == std::vector<Pt>{Pt{rat(1, 3), rat(1)}, Pt{rat(2, 3), rat(-1)}});
    check_round_trip(hg(2, {{0, 1}}), r);
}

TEST_CASE("realize_as_curves on empty inputs") {
    auto r = realize_as_curves(hg(2, {}), HalfIntegerL{4});
    CHECK(r.points.pts == std::vector<Pt>{pt(1, 0), pt(2, 0)});
    CHECK(r.curves.curves.empty());

    auto nothing = realize_as_curves(make_hypergraph({}, {}), HalfIntegerL{4});
    CHECK(nothing.points.pts.empty());
    CHECK(nothing.curves.curves.empty());
}

TEST_CASE("realize_as_curves records the crossing bound") {
    auto r = realize_as_curves(hg(3, {{0, 2}, {1}}), HalfIntegerL{4});
    REQUIRE(r.curves.t_bound.has_value());
    CHECK(*r.curves.t_bound == 2);  // 2l - 2 with l = 2
    CHECK(max_pairwise_crossings(r.curves) <= 2);
    check_round_trip(hg(3, {{0, 2}, {1}}), r);
}

TEST_CASE("realize_as_curves refuses inputs with the forbidden alternation") {
    CHECK(error_kind([] { realize_as_curves(hg(4, {{0, 2}, {1, 3}}), HalfIntegerL{4}); }) ==
          ErrorKind::NotFree);
    CHECK(error_kind([] { realize_as_curves(hg(3, {{0, 2}, {1}}), HalfIntegerL{3}); }) ==
          ErrorKind::NotFree);
}

TEST_CASE("realize round-trips a nested pair with few crossings") {
    auto h = hg(4, {{0, 1, 3}, {1, 2}});
    auto r = realize_as_curves(h, HalfIntegerL{4});
    check_round_trip(h, r);
    CHECK(max_pairwise_crossings(r.curves) <= 2);
}

TEST_CASE("realize round-trips every small identity-free hypergraph") {
    int families = 0;
    for (int n = 1; n <= 4; ++n) {
        gen::enumerate_abab_free_hypergraphs(
            n, 3, 1, 0, gen::candidate_edge_count(n, 1),
            [&](const OrderedHypergraph& h) {
                ++families;
                auto r = realize_as_curves(h, HalfIntegerL{4});
                auto back = hypergraph_from_curves(r.points, r.curves);
                REQUIRE(back.vertex_count() == h.vertex_count());
                REQUIRE(back.edges == h.edges);
                REQUIRE(max_pairwise_crossings(r.curves) <= 2);
            });
    }
    CHECK(families > 100);
}

TEST_CASE("realize honors looser alternation bounds") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto h = gen::random_abab_free_hypergraph(rng, 8, 5);
        auto r25 = realize_as_curves(h, HalfIntegerL{5});
        CHECK(max_pairwise_crossings(r25.curves) <= 3);
        check_round_trip(h, r25);
    }
}

TEST_CASE("eliminate_empty_lenses removes a two-crossing empty lens") {
    auto dip = make_curve(rat(1), {pt(0, 1), pt(1, -1), pt(2, 1)}, rat(1));
    PointSet far{{pt(100, 100)}};
    CurveFamily f{{make_curve(rat(0), {}, rat(0)), dip}, std::nullopt};
    REQUIRE(crossing_count(f.curves[0], f.curves[1]) == 2);

    LensElimStats stats;
    auto slim = eliminate_empty_lenses(far, f, &stats);
    CHECK(max_pairwise_crossings(slim) == 0);
    CHECK(stats.steps >= 1);
    REQUIRE_FALSE(stats.crossing_totals.empty());
    CHECK(stats.crossing_totals.front() == 2);
    CHECK(stats.crossing_totals.back() == 0);
    for (std::size_t i = 1; i < stats.crossing_totals.size(); ++i) {
        CHECK(stats.crossing_totals[i] < stats.crossing_totals[i - 1]);
    }
    CHECK(hypergraph_from_curves(far, slim).edges == hypergraph_from_curves(far, f).edges);
}

TEST_CASE("an unbounded empty region counts as a lens") {
    // One crossing, nothing to the right of it: the crossing can be undone.
    PointSet left_of{{pt(-5, 10)}};
    auto down = make_curve(rat(1), {pt(0, 1), pt(2, -1)}, rat(-1));
    CurveFamily f{{make_curve(rat(0), {}, rat(0)), down}, std::nullopt};
    REQUIRE(crossing_count(f.curves[0], f.curves[1]) == 1);
    auto slim = eliminate_empty_lenses(left_of, f);
    CHECK(max_pairwise_crossings(slim) == 0);
    CHECK(hypergraph_from_curves(left_of, slim).edges ==
          hypergraph_from_curves(left_of, f).edges);
}

TEST_CASE("occupied lenses are left exactly as they are") {
    auto dip = make_curve(rat(1), {pt(0, 1), pt(1, -1), pt(2, 1)}, rat(1));
    CurveFamily f{{make_curve(rat(0), {}, rat(0)), dip}, std::nullopt};

    SUBCASE("a point strictly inside the lens") {
        PointSet blockers{{pt(-1, 0), pt(1, -1), pt(3, 0)}};
        // (-1,0) and (3,0) sit on the horizontal curve in the unbounded
        // regions; (1,-1) sits on the dip at the bottom of the lens: "on"
        // counts as occupied everywhere.
        auto out = eliminate_empty_lenses(blockers, f);
        REQUIRE(out.curves.size() == 2);
        CHECK(out.curves[0].left_y == f.curves[0].left_y);
        CHECK(out.curves[0].pts == f.curves[0].pts);
        CHECK(out.curves[0].right_y == f.curves[0].right_y);
        CHECK(out.curves[1].left_y == f.curves[1].left_y);
        CHECK(out.curves[1].pts == f.curves[1].pts);
        CHECK(out.curves[1].right_y == f.curves[1].right_y);
    }

    SUBCASE("interior points rather than boundary points") {
        PointSet blockers{{Pt{rat(-1), rat(1, 2)}, Pt{rat(1), rat(-1, 2)}, Pt{rat(3), rat(1, 2)}}};
        auto out = eliminate_empty_lenses(blockers, f);
        CHECK(max_pairwise_crossings(out) == 2);
        CHECK(hypergraph_from_curves(blockers, out).edges ==
              hypergraph_from_curves(blockers, f).edges);
    }
}

TEST_CASE("eliminate_empty_lenses is idempotent") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        auto h = gen::random_abab_free_hypergraph(rng, 7, 5);
        auto r = realize_as_curves(h, HalfIntegerL{4});
        LensElimStats again;
        auto twice = eliminate_empty_lenses(r.points, r.curves, &again);
        CHECK(again.steps == 0);
        REQUIRE(twice.curves.size() == r.curves.curves.size());
        for (std::size_t k = 0; k < twice.curves.size(); ++k) {
            CHECK(twice.curves[k].pts == r.curves.curves[k].pts);
        }
    }
}
