#include "ababfree/errors.hpp"
#include "ababfree/pattern.hpp"

#include "support/oracles.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace abab;
using testutil::error_kind;
using testutil::hg;

TEST_CASE("parse_half_integer_l") {
    CHECK(parse_half_integer_l("2").twice_l == 4);
    CHECK(parse_half_integer_l("2.5").twice_l == 5);
    CHECK(parse_half_integer_l("1").twice_l == 2);
    CHECK(parse_half_integer_l("1.5").twice_l == 3);
    CHECK(parse_half_integer_l("10").twice_l == 20);
    for (const char* bad : {"0.5", "0", "-2", "2.7", "2.50", "2.0", "abc", "", ".5", "2.5.5"}) {
        CAPTURE(bad);
        CHECK(error_kind([&] { parse_half_integer_l(bad); }) == ErrorKind::Parse);
    }
}

TEST_CASE("format_half_integer_l round-trips") {
    CHECK(format_half_integer_l(HalfIntegerL{4}) == "2");
    CHECK(format_half_integer_l(HalfIntegerL{5}) == "2.5");
    CHECK(format_half_integer_l(HalfIntegerL{3}) == "1.5");
    for (int twice = 2; twice <= 12; ++twice) {
        CHECK(parse_half_integer_l(format_half_integer_l(HalfIntegerL{twice})).twice_l == twice);
    }
}

TEST_CASE("alternation_length on pinned pairs") {
    CHECK(alternation_length({0, 2}, {1, 3}) == 4);
    CHECK(alternation_length({0, 1, 2}, {0, 1, 2}) == 0);
    CHECK(alternation_length({0, 1, 2}, {0, 1, 3}) == 2);
    CHECK(alternation_length({1, 3}, {0, 2}) == 3);
    CHECK(alternation_length({0, 1}, {2, 3}) == 2);
    CHECK(alternation_length({2, 3}, {0, 1}) == 1);
    CHECK(alternation_length({}, {0}) == 0);
    CHECK(alternation_length({0}, {}) == 1);
}

TEST_CASE("greedy alternation scan matches the exhaustive oracle") {
    // Every pair of subsets of {0..5}: 4096 cases.
    for (int ma = 0; ma < 64; ++ma) {
        for (int mb = 0; mb < 64; ++mb) {
            std::vector<int> a, b;
            for (int v = 0; v < 6; ++v) {
                if (ma & (1 << v)) a.push_back(v);
                if (mb & (1 << v)) b.push_back(v);
            }
            int got = alternation_length(a, b);
            int want = oracles::alternation_length(a, b);
            CAPTURE(ma);
            CAPTURE(mb);
            CHECK(got == want);
        }
    }
}

TEST_CASE("find_abl_violation reports the interleaved quadruple") {
    auto h = hg(4, {{0, 2}, {1, 3}});
    auto v = find_abl_violation(h, HalfIntegerL{4});
    REQUIRE(v.has_value());
    CHECK(v->edge_a == std::vector<int>{0, 2});
    CHECK(v->edge_b == std::vector<int>{1, 3});
    CHECK(v->witness == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(find_abl_violation(h, HalfIntegerL{5}).has_value());
    CHECK(is_abl_free_ordered(h, HalfIntegerL{5}));
}

TEST_CASE("is_abl_free_ordered follows the violation scan") {
    auto h = hg(4, {{0, 2}, {1, 3}});
    CHECK_FALSE(is_abl_free_ordered(h, HalfIntegerL{4}));
    CHECK(is_abl_free_ordered(h, HalfIntegerL{5}));
    CHECK(is_abl_free_ordered(hg(3, {{0, 1}, {1, 2}, {0, 2}}), HalfIntegerL{4}));
}

TEST_CASE("odd alternation lengths catch ABA patterns") {
    auto h = hg(3, {{0, 2}, {1}});
    auto v = find_abl_violation(h, HalfIntegerL{3});
    REQUIRE(v.has_value());
    CHECK(v->witness == std::vector<int>{0, 1, 2});
    CHECK(is_abl_free_ordered(h, HalfIntegerL{4}));

    // Singleton edges can interleave as AB but never as ABA.
    auto singles = hg(2, {{0}, {1}});
    CHECK_FALSE(is_abl_free_ordered(singles, HalfIntegerL{2}));
    CHECK(is_abl_free_ordered(singles, HalfIntegerL{3}));
}

TEST_CASE("violation witnesses are truncated to the forbidden length") {
    auto h = hg(8, {{0, 2, 4, 6}, {1, 3, 5, 7}});
    auto v = find_abl_violation(h, HalfIntegerL{4});
    REQUIRE(v.has_value());
    CHECK(v->witness == std::vector<int>{0, 1, 2, 3});
    auto v6 = find_abl_violation(h, HalfIntegerL{6});
    REQUIRE(v6.has_value());
    CHECK(v6->witness == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(find_abl_violation(h, HalfIntegerL{9}).has_value());
}

TEST_CASE("witness vertices alternate between the two edge differences") {
    auto h = hg(10, {{0, 3, 4, 7, 9}, {1, 2, 5, 6, 8}});
    auto v = find_abl_violation(h, HalfIntegerL{4});
    REQUIRE(v.has_value());
    REQUIRE(v->witness.size() == 4);
    for (std::size_t i = 0; i < v->witness.size(); ++i) {
        const auto& in_side = (i % 2 == 0) ? v->edge_a : v->edge_b;
        const auto& off_side = (i % 2 == 0) ? v->edge_b : v->edge_a;
        bool in = std::binary_search(in_side.begin(), in_side.end(), v->witness[i]);
        bool off = std::binary_search(off_side.begin(), off_side.end(), v->witness[i]);
        CHECK(in);
        CHECK_FALSE(off);
        if (i > 0) CHECK(v->witness[i - 1] < v->witness[i]);
    }
}

TEST_CASE("find_abl_free_order searches permutations lexicographically") {
    auto triangle = hg(3, {{0, 1}, {1, 2}, {0, 2}});
    auto id = find_abl_free_order(triangle, HalfIntegerL{4});
    REQUIRE(id.has_value());
    CHECK(*id == std::vector<int>{0, 1, 2});

    auto crossing = hg(4, {{0, 2}, {1, 3}});
    auto order = find_abl_free_order(crossing, HalfIntegerL{4});
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<int>{0, 1, 3, 2});
    CHECK(is_abl_free_ordered(apply_vertex_order(crossing, *order), HalfIntegerL{4}));
}

TEST_CASE("some hypergraphs admit no ABAB-free order") {
    auto k4 = hg(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(find_abl_free_order(k4, HalfIntegerL{4}).has_value());
    CHECK(find_abl_free_order(k4, HalfIntegerL{5}).has_value());
}

TEST_CASE("find_abl_free_order guards against large searches") {
    CHECK(error_kind([] { find_abl_free_order(hg(11, {}), HalfIntegerL{4}); }) ==
          ErrorKind::Guard);
}

TEST_CASE("apply_vertex_order permutes labels and edges") {
    auto h = hg(4, {{0, 2}, {1, 3}});
    auto moved = apply_vertex_order(h, {0, 1, 3, 2});
    CHECK(moved.vertices == std::vector<std::string>{"v0", "v1", "v3", "v2"});
    CHECK(moved.edges == std::vector<std::vector<int>>{{0, 3}, {1, 2}});

    auto same = apply_vertex_order(h, {0, 1, 2, 3});
    CHECK(same.edges == h.edges);

    CHECK(error_kind([&] { apply_vertex_order(h, {0, 1, 2}); }) == ErrorKind::Invalid);
    CHECK(error_kind([&] { apply_vertex_order(h, {0, 0, 1, 2}); }) == ErrorKind::Invalid);
}
