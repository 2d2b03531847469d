#include <catch2/catch_amalgamated.hpp>

#include "pfaff/parser.hpp"
#include "test_helpers.hpp"

using namespace pfaff;

namespace {
Ring xy() { return Ring({"x1", "y1", "y2"}); }
} // namespace

TEST_CASE("grammar essentials") {
    Ring r = xy();
    Polynomial p = parse_polynomial("y1*y2 + 1", r);
    REQUIRE(p.terms().size() == 2);
    CHECK(p == Polynomial::variable(r, "y1") * Polynomial::variable(r, "y2") +
                   Polynomial::one(r));

    CHECK(parse_polynomial("y1^2*(y2 + y1 - 2)", r) ==
          parse_polynomial("y1^2*y2 + y1^3 - 2*y1^2", r));

    CHECK(parse_polynomial("3/2*x1 - x1", r) ==
          Polynomial::variable(r, "x1") * rational_from_parts(1, 2));
}

TEST_CASE("signs, whitespace, nesting") {
    Ring r = xy();
    CHECK(parse_polynomial("-y1", r) == -Polynomial::variable(r, "y1"));
    CHECK(parse_polynomial("  y1   +\t2 ", r) == parse_polynomial("y1+2", r));
    CHECK(parse_polynomial("((y1))^2", r) == parse_polynomial("y1^2", r));
    CHECK(parse_polynomial("-(y1 - y2)", r) == parse_polynomial("y2 - y1", r));
    CHECK(parse_polynomial("0", r).is_zero());
    CHECK(parse_polynomial("y1^0", r).is_one());
    CHECK(parse_polynomial("y1^1", r) == Polynomial::variable(r, "y1"));
}

TEST_CASE("syntax errors carry positions") {
    Ring r = xy();
    CHECK_THROWS_AS(parse_polynomial("y1 + ", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(y1", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y1^", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y1 y2", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);

    try {
        parse_polynomial("y1 + zz*y2", r);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("print and parse are mutually inverse on canonical forms") {
    Ring r = xy();
    CHECK(parse_polynomial("y1^2*y2 + y1^3 - 2*y1^2", r).to_string() ==
          "y1^3 + y1^2*y2 - 2*y1^2");

    testutil::Rng rng(606);
    for (int it = 0; it < 40; ++it) {
        Polynomial p = rng.polynomial(r, 6, 3, -7, 7);
        CHECK(parse_polynomial(p.to_string(), r) == p);
    }

    SECTION("rational coefficients survive the round trip") {
        Polynomial q = parse_polynomial("1/2*y1 - 7/3", r);
        CHECK(parse_polynomial(q.to_string(), r) == q);
        CHECK(q.to_string() == "1/2*y1 - 7/3");
    }
}
