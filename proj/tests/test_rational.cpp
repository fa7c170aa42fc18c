#include "ababfree/errors.hpp"
#include "ababfree/rational.hpp"

#include "support/testutil.hpp"

#include <doctest.h>

#include <random>
#include <string>

using abab::ErrorKind;
using abab::format_rational;
using abab::parse_rational;
using abab::Rat;
using testutil::error_kind;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-2") == Rat(-2));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("+5") == Rat(5));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(parse_rational("3/-4") == Rat(-3, 4));
    CHECK(parse_rational("-3/-4") == Rat(3, 4));
}

TEST_CASE("parse_rational reduces to lowest terms") {
    CHECK(parse_rational("6/8") == Rat(3, 4));
    CHECK(format_rational(parse_rational("6/8")) == "3/4");
    CHECK(format_rational(parse_rational("8/4")) == "2");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK(format_rational(parse_rational("-0")) == "0");
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* bad : {"1/0", "", "abc", "1.5", "1/ 2", "1 /2", "/3", "3/", "1/2/3", "--1",
                            "0x10", " 1", "1 "}) {
        CAPTURE(bad);
        CHECK(error_kind([&] { parse_rational(bad); }) == ErrorKind::Parse);
    }
}

TEST_CASE("format_rational is canonical") {
    CHECK(format_rational(Rat(1, 2)) == "1/2");
    CHECK(format_rational(Rat(-1, 3)) == "-1/3");
    CHECK(format_rational(Rat(4)) == "4");
    CHECK(format_rational(Rat(0)) == "0");
    CHECK(format_rational(Rat(2) / Rat(-4)) == "-1/2");
}

TEST_CASE("parse and format round-trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Rat r(num(rng), den(rng));
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("sign_of") {
    CHECK(abab::sign_of(Rat(-5, 3)) == -1);
    CHECK(abab::sign_of(Rat(0)) == 0);
    CHECK(abab::sign_of(Rat(7, 2)) == 1);
}
