#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "pfaff/ideal.hpp"
#include "pfaff/parser.hpp"
#include "test_helpers.hpp"

using namespace pfaff;

namespace {

Ring yy() { return Ring({"y1", "y2"}); }
Ring xy() { return Ring({"x", "y"}); }
Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal make(const Ring& r, std::initializer_list<const char*> ss) {
    std::vector<Polynomial> v;
    for (auto s : ss)
        v.push_back(parse_polynomial(s, r));
    return Ideal(r, std::move(v));
}

} // namespace

TEST_CASE("triviality") {
    Ring s({"y"});
    CHECK(is_trivial(make(s, {"y", "y^2 + 1"}))); // no common zeros
    CHECK(!is_trivial(Ideal(s)));
    CHECK(!is_trivial(make(yy(), {"y1"})));
}

TEST_CASE("radical membership via the auxiliary-variable trick") {
    Ring r = yy();
    CHECK(radical_membership(P(r, "y1"), make(r, {"y1^2"})));
    CHECK(!radical_membership(P(r, "y2"), make(r, {"y1^2"})));
    CHECK(radical_membership(P(r, "y1"), make(r, {"y1^2", "y1^2*(y2 + y1 - 2)"})));
    // zero is in every radical
    CHECK(radical_membership(Polynomial::zero(r), make(r, {"y1"})));
}

TEST_CASE("saturation") {
    Ring r = xy();
    SECTION("strips one factor") {
        Ideal s = saturation(make(r, {"x*y"}), P(r, "x"));
        CHECK(ideal_equal(s, make(r, {"y"})));
    }
    SECTION("reaches the unit ideal on powers") {
        Ideal s = saturation(make(r, {"x^2"}), P(r, "x"));
        CHECK(is_trivial(s));
    }
    SECTION("elimination oracle on two generators") {
        Ring r3({"x", "y", "z"});
        Ideal s = saturation(make(r3, {"x*y", "x*z"}), P(r3, "x"));
        CHECK(ideal_equal(s, make(r3, {"y", "z"})));
    }
    SECTION("absorption: saturating twice changes nothing") {
        testutil::Rng rng(811);
        for (int it = 0; it < 8; ++it) {
            std::vector<Polynomial> gens;
            for (int i = 0, k = rng.pick(1, 2); i < k; ++i)
                gens.push_back(rng.polynomial(r, 3, 2));
            Polynomial f = rng.polynomial(r, 2, 2);
            if (f.is_zero())
                continue;
            Ideal I(r, gens);
            Ideal once = saturation(I, f);
            CHECK(ideal_equal(saturation(once, f), once));
        }
    }
    CHECK_THROWS_AS(saturation(make(r, {"x"}), Polynomial::zero(r)), Error);
}

TEST_CASE("intersection") {
    Ring r = xy();
    CHECK(ideal_equal(intersect(make(r, {"x"}), make(r, {"y"})), make(r, {"x*y"})));

    Ideal I = make(r, {"x^2 - y", "x*y"});
    CHECK(ideal_equal(intersect(I, make(r, {"1"})), I));

    // two points on the y-axis: ideal is (x, y^2 - y)
    Ideal pts = intersect(make(r, {"x", "y"}), make(r, {"x", "y - 1"}));
    CHECK(ideal_equal(pts, make(r, {"x", "y^2 - y"})));
}

TEST_CASE("dimension from the staircase") {
    Ring r = yy();
    CHECK(dimension(Ideal(r)) == 2);
    CHECK(dimension(make(r, {"y1"})) == 1);
    CHECK(dimension(make(r, {"y1", "y2 - 1"})) == 0);
    CHECK(dimension(make(r, {"y1", "y1 - 1"})) == -1);

    SECTION("monotone under ideal growth") {
        testutil::Rng rng(812);
        for (int it = 0; it < 10; ++it) {
            std::vector<Polynomial> gens{rng.polynomial(r, 3, 2)};
            Ideal I(r, gens);
            gens.push_back(rng.polynomial(r, 3, 2));
            Ideal J(r, gens);
            CHECK(dimension(J) <= dimension(I));
        }
    }

    SECTION("agrees with triviality") {
        testutil::Rng rng(813);
        for (int it = 0; it < 10; ++it) {
            std::vector<Polynomial> gens;
            for (int i = 0, k = rng.pick(1, 3); i < k; ++i)
                gens.push_back(rng.polynomial(r, 3, 2));
            Ideal I(r, gens);
            CHECK(is_trivial(I) == (dimension(I) == -1));
        }
    }
}

TEST_CASE("radical on the worked examples") {
    Ring r = yy();
    SECTION("double line collapses to the line") {
        Ideal rad = radical(make(r, {"y1^2", "y1^2*(y2 + y1 - 2)"}));
        REQUIRE(rad.generators().size() == 1);
        CHECK(rad.generators()[0] == P(r, "y1"));
    }
    SECTION("zero ideal is its own radical") {
        Ideal rad = radical(Ideal(r));
        CHECK(rad.generators().empty());
    }
    SECTION("redundant square is absorbed") {
        Ideal rad = radical(make(r, {"y1", "y1^2"}));
        REQUIRE(rad.generators().size() == 1);
        CHECK(rad.generators()[0] == P(r, "y1"));
    }
    SECTION("trivial ideal stays trivial") {
        CHECK(is_trivial(radical(make(r, {"y1", "y1 - 1"}))));
    }
    SECTION("mixed components: a plane and an embedded axis") {
        Ring r3({"x", "y", "z"});
        Ideal rad = radical(make(r3, {"z^2*x", "z^2*y"}));
        CHECK(ideal_equal(rad, make(r3, {"z*x", "z*y"})));
    }
    SECTION("principal squarefree products split correctly") {
        Ring r3({"x", "y", "z"});
        Ideal rad = radical(make(r3, {"x^2*y^3*z"}));
        CHECK(ideal_equal(rad, make(r3, {"x*y*z"})));
    }
}

TEST_CASE("radical on harder shapes") {
    SECTION("irreducible polynomials are untouched") {
        Ring r = xy();
        Ideal I = make(r, {"x^2 + y^2 + 1"});
        CHECK(ideal_equal(radical(I), I));
        Ring u({"x"});
        Ideal J = make(u, {"x^2 + 1"});
        CHECK(ideal_equal(radical(J), J));
    }
    SECTION("multiplicity in one factor is flattened") {
        Ring r = xy();
        Ideal rad = radical(make(r, {"(x + y)^2*(x - y)"}));
        CHECK(ideal_equal(rad, make(r, {"x^2 - y^2"})));
    }
    SECTION("embedded monomial structure") {
        Ring r = xy();
        CHECK(ideal_equal(radical(make(r, {"x*y", "x^2"})), make(r, {"x"})));
    }
    SECTION("squarefree monomial products recurse within the depth bound") {
        Ring r3({"x", "y", "z"});
        Ideal I = make(r3, {"x*y*z"});
        CHECK(ideal_equal(radical(I), I));
        Ring r2({"x", "y"});
        Ideal J = make(r2, {"x*y"});
        CHECK(ideal_equal(radical(J), J));
    }
    SECTION("cyclic 4-roots: two curves, not radical as given") {
        Ring r({"a", "b", "c", "d"});
        Ideal I = make(r, {"a + b + c + d", "a*b + b*c + c*d + d*a",
                           "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"});
        CHECK(dimension(I) == 1);
        Ideal rad = radical(I);
        CHECK(ideal_equal(rad, make(r, {"a + c", "b + d", "c^2*d^2 - 1"})));
        CHECK(!ideal_equal(rad, I)); // strictly larger
        for (const auto& g : rad.generators())
            CHECK(radical_membership(g, I));
    }
}

TEST_CASE("radical properties on random small ideals") {
    testutil::Rng rng(814);
    Ring r3({"x", "y", "z"});
    int done = 0;
    for (int it = 0; done < 12 && it < 60; ++it) {
        std::vector<Polynomial> gens;
        for (int i = 0, k = rng.pick(1, 2); i < k; ++i) {
            Polynomial p = rng.polynomial(r3, 3, 2);
            if (!p.is_zero())
                gens.push_back(p);
        }
        if (gens.empty())
            continue;
        ++done;
        Ideal I(r3, gens);
        Ideal rad = radical(I);

        // idempotence
        CHECK(ideal_equal(radical(rad), rad));
        // soundness: every radical generator is a radical member of I
        for (const auto& g : rad.generators())
            CHECK(radical_membership(g, I));
        // completeness on samples: radical members land in rad
        for (int s = 0; s < 3; ++s) {
            Polynomial f = rng.polynomial(r3, 2, 2);
            if (radical_membership(f, I))
                CHECK(contains(rad, f));
            // and never the other way: members of rad are radical members
            if (contains(rad, f))
                CHECK(radical_membership(f, I));
        }
    }
    REQUIRE(done == 12);
}

TEST_CASE("ideal equality") {
    Ring r = yy();
    CHECK(ideal_equal(make(r, {"y1"}), make(r, {"y1", "y1^2"})));
    CHECK(!ideal_equal(make(r, {"y1"}), make(r, {"y1^2"})));
}

TEST_CASE("noether exponent search") {
    Ring r = yy();
    CHECK(noether_exponent(make(r, {"y1^2"}), 6) == 2u);
    CHECK(noether_exponent(make(r, {"y1"}), 6) == 1u);
    CHECK(noether_exponent(Ideal(r), 6) == 1u);

    SECTION("two squares need exponent three") {
        Ring r2 = xy();
        Ideal I = make(r2, {"x^2", "y^2"});

        // brute-force oracle: membership in a monomial ideal is term-wise
        // divisibility, no basis needed
        auto in_I = [&](const Polynomial& p) {
            for (const auto& t : p.terms())
                if (t.mono.exps[0] < 2 && t.mono.exps[1] < 2)
                    return false;
            return true;
        };
        Polynomial x = P(r2, "x"), y = P(r2, "y");
        CHECK(!in_I(x * y));                       // exponent 2 fails
        CHECK(in_I(x * x * y));
        CHECK(in_I(x * y * y));                    // every length-3 product works
        CHECK(in_I(x * x * x));
        CHECK(in_I(y * y * y));

        CHECK(noether_exponent(I, 6) == 3u);
    }

    SECTION("cap reports exhaustion") {
        Ring r1({"z"});
        Ideal I(r1, {P(r1, "z^5")});
        CHECK(noether_exponent(I, 3) == std::nullopt);
        CHECK(noether_exponent(I, 5) == 5u);
    }
}

TEST_CASE("groebner cache is safe under concurrent reads") {
    Ring r = yy();
    Ideal I = make(r, {"y1^2 - y2", "y1*y2 - 1"});
    std::vector<std::thread> workers;
    std::vector<int> dims(8, -7);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] { dims[t] = dimension(I); });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 8; ++t)
        CHECK(dims[t] == 0);
}
