#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algc/jet.hpp"
#include "algc/polynomial.hpp"

#include <random>

using namespace algc;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& coords = XY) {
    return Polynomial::parse(s, coords);
}

Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& coords, int max_deg,
                       int max_terms = 5) {
    Polynomial out(coords);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponents e(coords.size(), 0);
        int budget = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        for (int d = 0; d < budget; ++d) {
            if (coords.empty()) break;
            e[rng() % coords.size()] += 1;
        }
        long num = static_cast<long>(rng() % 9) - 4;
        if (num == 0) num = 1;
        out.add_term(e, Rational(num));
    }
    return out;
}

} // namespace

TEST_CASE("ring operations match hand results") {
    CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
    Polynomial p = P("3*x^2*y - 1/2*y + 5");
    CHECK(p + Polynomial(XY) == p);
    // (x+1)^3 expanded equals brute-force repeated multiplication.
    Polynomial xp1 = P("x+1");
    CHECK(xp1.pow(3) == (xp1 * xp1) * xp1);
    CHECK(xp1.pow(3) == P("x^3+3*x^2+3*x+1"));
}

TEST_CASE("ring axioms on randomized instances") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_poly(rng, XY, 3);
        Polynomial b = random_poly(rng, XY, 3);
        Polynomial c = random_poly(rng, XY, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("chart alignment") {
    Polynomial a = P("x", {"x"});
    Polynomial b = P("y", {"y"});
    CHECK((a + b) == P("x+y", {"x", "y"}));
    Polynomial c = P("x+y", {"x", "y"});
    Polynomial d = P("y+x", {"y", "x"});
    CHECK_THROWS_AS(c + d, AlignmentError);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x^2*y").derivative("x") == P("2*x*y"));
    CHECK(P("5").derivative("y").is_zero());
    Polynomial lhs = P("x+y").pow(3).derivative("x");
    CHECK(lhs == P("x+y").pow(2).scaled(3));
    CHECK_THROWS_AS(P("x").derivative("z"), AlignmentError);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = random_poly(rng, XY, 4);
        CHECK(p.derivative("x").derivative("y") == p.derivative("y").derivative("x"));
    }
}

TEST_CASE("monomial bases") {
    auto b22 = monomial_basis(2, 2);
    CHECK(b22.size() == 3);
    auto b34 = monomial_basis(3, 4);
    CHECK(b34.size() == 15);
    auto b0 = monomial_basis(4, 0);
    REQUIRE(b0.size() == 1);
    CHECK(total_degree(b0[0]) == 0);
    for (int n = 1; n <= 5; ++n)
        for (int w = 0; w <= 8; ++w)
            CHECK(Int(monomial_basis(n, w).size()) == binomial(n + w - 1, w));
}

TEST_CASE("evaluation and substitution") {
    Polynomial p = P("x^2*y - 3*y + 2");
    CHECK(p.evaluate({Rational(2), Rational(3)}) == Rational(5));
    // substitute x -> x+y, y -> y^2 and check one point two ways
    std::vector<Polynomial> subs = {P("x+y"), P("y^2")};
    Polynomial q = p.substitute(subs);
    std::vector<Rational> pt = {Rational(1), Rational(2)};
    CHECK(q.evaluate(pt) ==
          p.evaluate({subs[0].evaluate(pt), subs[1].evaluate(pt)}));
}

TEST_CASE("exact division") {
    Polynomial a = P("x^2-y^2");
    auto q = a.divide_exact(P("x-y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x+y"));
    CHECK_FALSE(P("x^2+1").divide_exact(P("x-y")).has_value());
}

TEST_CASE("printer and parser round-trip") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(rng, {"x", "y", "z"}, 4);
        CHECK(Polynomial::parse(p.str(), {"x", "y", "z"}) == p);
    }
    CHECK(Polynomial(XY).str() == "0");
    CHECK(P("0").is_zero());
    CHECK(P("-x") == P("x").scaled(-1));
    CHECK(P("3/2*x^2*y - y + 5").str() == "3/2*x^2*y - y + 5");
    CHECK_THROWS_AS(P("x + @"), ParseError);
    CHECK_THROWS_AS(P("w"), ParseError);
}

TEST_CASE("directional jet: chain rule and mixed partials") {
    std::vector<std::string> X1 = {"x"};
    Polynomial p = Polynomial::parse("x^2", X1);
    // x -> x + t, coefficient of t is 2x.
    std::vector<std::string> ext = {"x", "t"};
    std::vector<Polynomial> base = {Polynomial::variable(ext, "x")};
    std::vector<std::vector<Polynomial>> dirs = {{Polynomial::constant(ext, 1)}};
    CHECK(directional_jet(p, base, dirs, {"t"}) == Polynomial::parse("2*x", {"x"}));

    // p = x*y, x -> x + t1, y -> y + t2: coefficient of t1*t2 is 1.
    Polynomial q = P("x*y");
    std::vector<std::string> ext2 = {"x", "y", "t1", "t2"};
    std::vector<Polynomial> base2 = {Polynomial::variable(ext2, "x"), Polynomial::variable(ext2, "y")};
    std::vector<std::vector<Polynomial>> dirs2 = {
        {Polynomial::constant(ext2, 1), Polynomial::constant(ext2, 0)},
        {Polynomial::constant(ext2, 0), Polynomial::constant(ext2, 1)}};
    CHECK(directional_jet(q, base2, dirs2, {"t1", "t2"}) == Polynomial::constant(XY, 1));
}

TEST_CASE("single-direction jet equals the anchor-style derivative") {
    std::mt19937_64 rng(123);
    std::vector<std::string> ext = {"x", "y", "t"};
    for (int i = 0; i < 10; ++i) {
        Polynomial p = random_poly(rng, XY, 3);
        Polynomial v1 = random_poly(rng, XY, 2);
        Polynomial v2 = random_poly(rng, XY, 2);
        std::vector<Polynomial> base = {Polynomial::variable(ext, "x"),
                                        Polynomial::variable(ext, "y")};
        std::vector<std::vector<Polynomial>> dirs = {{v1.on_chart(ext), v2.on_chart(ext)}};
        Polynomial jet = directional_jet(p, base, dirs, {"t"});
        Polynomial oracle = v1 * p.derivative("x") + v2 * p.derivative("y");
        CHECK(jet == oracle);
    }
}

TEST_CASE("jet truncation kills squares") {
    std::vector<std::string> ext = {"x", "t"};
    Polynomial a = Polynomial::parse("x + t", ext);
    Polynomial sq = jet_mul(a, a, {"t"});
    CHECK(sq == Polynomial::parse("x^2 + 2*x*t", ext));
}

TEST_CASE("polynomials over the empty chart behave like constants") {
    Polynomial c = Polynomial::constant({}, Rational(7, 2));
    CHECK(c.degree() == 0);
    CHECK((c * c).constant_term() == Rational(49, 4));
    CHECK(monomial_basis(0, 0).size() == 1);
    CHECK(monomial_basis(0, 3).empty());
}
