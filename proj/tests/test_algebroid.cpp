#include <doctest.h>

#include "fixtures.hpp"

using namespace algc;
using namespace algc::fixtures;

TEST_CASE("frame brackets reproduce the structure functions") {
    auto a = so3();
    Section e1 = Section::frame_element(a, 0);
    Section e2 = Section::frame_element(a, 1);
    auto b = bracket_sections(e1, e2);
    CHECK(b.coeffs[2] == a->constant(1));
    CHECK(b.coeffs[0].is_zero());
    auto anti = bracket_sections(e2, e1);
    CHECK(anti.coeffs[2] == a->constant(-1));
}

TEST_CASE("classical commutator on the tangent algebroid") {
    auto a = tangent(2);
    auto x = Polynomial::variable(a->chart(), "x1");
    auto y = Polynomial::variable(a->chart(), "x2");
    // [x*dy, y*dx] = x*dx - y*dy
    Section s1(a, {a->zero(), x});
    Section s2(a, {y, a->zero()});
    auto b = bracket_sections(s1, s2);
    CHECK(b.coeffs[0] == x);
    CHECK(b.coeffs[1] == -y);
}

TEST_CASE("Leibniz identity on random sections") {
    std::mt19937_64 rng(5);
    auto a = tangent(2);
    for (int i = 0; i < 10; ++i) {
        Section x = random_section(rng, a, 2);
        Section y = random_section(rng, a, 2);
        Polynomial f = random_poly(rng, a->chart(), 2);
        Section fy(a, {y.coeffs[0] * f, y.coeffs[1] * f});
        auto lhs = bracket_sections(x, fy);
        auto rhs = bracket_sections(x, y);
        // [X, fY] - f[X,Y] = rho(X)(f) Y
        Polynomial rf = a->zero();
        for (int k = 0; k < a->rank(); ++k) rf += x.coeffs[static_cast<size_t>(k)] * a->anchor_apply(k, f);
        for (int k = 0; k < a->rank(); ++k) {
            CHECK(lhs.coeffs[static_cast<size_t>(k)] - rhs.coeffs[static_cast<size_t>(k)] * f ==
                  rf * y.coeffs[static_cast<size_t>(k)]);
        }
    }
}

TEST_CASE("antisymmetry of the bracket on random sections") {
    std::mt19937_64 rng(6);
    auto a = so3();
    for (int i = 0; i < 5; ++i) {
        Section x = random_section(rng, a, 0);
        Section y = random_section(rng, a, 0);
        auto b1 = bracket_sections(x, y);
        auto b2 = bracket_sections(y, x);
        for (int k = 0; k < a->rank(); ++k)
            CHECK(b1.coeffs[static_cast<size_t>(k)] == -b2.coeffs[static_cast<size_t>(k)]);
    }
}

TEST_CASE("validation accepts so(3) and the coordinate tangent frame") {
    CHECK(validate_algebroid(so3()).valid());
    CHECK(validate_algebroid(tangent(2)).valid());
}

TEST_CASE("validation flags an anchor-incompatible bracket") {
    // Coordinate frame on R^2 with identity anchor but [d1,d2] = d1 declared.
    std::vector<std::string> chart = {"x1", "x2"};
    std::vector<std::vector<Polynomial>> anchor(2, std::vector<Polynomial>(2, Polynomial(chart)));
    anchor[0][0] = Polynomial::constant(chart, 1);
    anchor[1][1] = Polynomial::constant(chart, 1);
    std::map<std::pair<int, int>, std::vector<Polynomial>> br;
    br[{0, 1}] = {Polynomial::constant(chart, 1), Polynomial(chart)};
    auto a = make_algebroid(chart, {"d1", "d2"}, std::move(anchor), std::move(br));
    auto report = validate_algebroid(a);
    CHECK_FALSE(report.valid());
    CHECK(report.issues[0].check == "anchor");
}

TEST_CASE("representation validation") {
    auto a = so3();
    SUBCASE("zero connection is flat") {
        auto rep = trivial_representation(a);
        CHECK(validate_representation(rep).valid());
    }
    SUBCASE("adjoint is flat") {
        auto rep = adjoint_representation(a);
        CHECK(rep->rank() == 3);
        CHECK(validate_representation(rep).valid());
    }
    SUBCASE("non-commuting matrices on an abelian algebroid fail") {
        std::vector<std::string> chart;
        auto ab = make_algebroid(chart, {"e1", "e2"}, std::vector<std::vector<Polynomial>>(2), {});
        validate_algebroid(ab);
        auto c = [&](const Rational& q) { return Polynomial::constant(chart, q); };
        PolyMatrix w1 = {{c(1), c(0)}, {c(0), c(0)}};
        PolyMatrix w2 = {{c(0), c(1)}, {c(0), c(0)}};
        auto rep = make_representation(ab, 2, {w1, w2});
        auto report = validate_representation(rep);
        CHECK_FALSE(report.valid());
        CHECK(report.issues[0].check == "curvature");
    }
}

TEST_CASE("dual representation") {
    auto a = aff1();
    SUBCASE("rank-1 dual negates the connection scalar") {
        auto q = canonical_line_bundle(a);
        auto d = dual_representation(q);
        CHECK(d->connection(0)[0][0] == -q->connection(0)[0][0]);
    }
    SUBCASE("double dual returns the original matrices") {
        auto g = so3();
        auto rep = adjoint_representation(g);
        auto dd = dual_representation(dual_representation(rep));
        for (int i = 0; i < 3; ++i) CHECK(is_zero(dd->connection(i) - rep->connection(i)));
    }
    SUBCASE("so(3) adjoint is self-dual (skew matrices)") {
        auto g = so3();
        auto rep = adjoint_representation(g);
        auto d = dual_representation(rep);
        for (int i = 0; i < 3; ++i) CHECK(is_zero(d->connection(i) - rep->connection(i)));
    }
    SUBCASE("complex rank-1 dual conjugates") {
        std::vector<std::string> chart;
        auto ab = make_algebroid(chart, {"e1"}, std::vector<std::vector<Polynomial>>(1), {});
        validate_algebroid(ab);
        auto c = [&](const Rational& q) { return Polynomial::constant(chart, q); };
        auto rep = make_representation(ab, 1, {{{c(2)}}}, {{{c(3)}}});
        validate_representation(rep);
        auto d = dual_representation(rep);
        CHECK(d->connection(0)[0][0] == c(-2));
        CHECK(d->connection_im(0)[0][0] == c(3));
    }
}

TEST_CASE("direct sum and tensor product") {
    auto g = so3();
    auto ad = adjoint_representation(g);
    auto triv2 = [&]() {
        std::vector<PolyMatrix> conn(3, poly_matrix_zero(g->chart(), 2, 2));
        auto rep = make_representation(g, 2, conn);
        validate_representation(rep);
        return rep;
    }();
    auto sum = direct_sum(triv2, ad);
    CHECK(sum->rank() == 5);
    CHECK(sum->validated());
    auto tens = tensor_product(ad, ad);
    CHECK(tens->rank() == 9);
    CHECK(tens->validated()); // flatness preserved
    // trivial (x) E has the same connection in the induced frame
    auto triv1 = trivial_representation(g);
    auto te = tensor_product(triv1, ad);
    for (int i = 0; i < 3; ++i) CHECK(is_zero(te->connection(i) - ad->connection(i)));
}

TEST_CASE("Bott quotients") {
    SUBCASE("vertical foliation in T R^2 acts trivially on the normal line") {
        auto a = tangent(2);
        auto bq = bott_quotient(a, {1});
        CHECK(bq.sub->rank() == 1);
        CHECK(bq.normal->rank() == 1);
        CHECK(bq.normal->connection(0)[0][0].is_zero());
    }
    SUBCASE("span(e1) in so(3) acts by the rotation generator") {
        auto a = so3();
        auto bq = bott_quotient(a, {0});
        REQUIRE(bq.normal->rank() == 2);
        const auto& w = bq.normal->connection(0);
        CHECK(w[0][0].is_zero());
        CHECK(w[0][1] == a->constant(-1));
        CHECK(w[1][0] == a->constant(1));
        CHECK(w[1][1].is_zero());
    }
    SUBCASE("span(e1,e2) in so(3) is rejected") {
        auto a = so3();
        CHECK_THROWS_WITH_AS(bott_quotient(a, {0, 1}),
                             doctest::Contains("not bracket-closed"), Error);
    }
}

TEST_CASE("canonical line bundle") {
    SUBCASE("tangent algebroid: zero") {
        auto q = canonical_line_bundle(tangent(2));
        for (int i = 0; i < 2; ++i) CHECK(q->connection(i)[0][0].is_zero());
    }
    SUBCASE("aff(1): (1, 0)") {
        auto q = canonical_line_bundle(aff1());
        CHECK(q->connection(0)[0][0].constant_term() == Rational(1));
        CHECK(q->connection(1)[0][0].is_zero());
    }
    SUBCASE("so(3) is unimodular") {
        auto q = canonical_line_bundle(so3());
        for (int i = 0; i < 3; ++i) CHECK(q->connection(i)[0][0].is_zero());
    }
}

TEST_CASE("pullback algebroids") {
    SUBCASE("zero algebroid pulls back to the vertical foliation") {
        auto zero = make_algebroid({}, {}, {}, {});
        validate_algebroid(zero);
        auto pb = pullback_algebroid(zero, 2);
        CHECK(pb->rank() == 2);
        CHECK(pb->dim() == 2);
        CHECK(validate_algebroid(pb).valid());
        CHECK(pb->anchor_row(0)[0] == pb->constant(1));
    }
    SUBCASE("T R pulls back to T R^2 in the product frame") {
        auto a = tangent(1);
        auto pb = pullback_algebroid(a, 1);
        CHECK(pb->rank() == 2);
        CHECK(validate_algebroid(pb).valid());
        CHECK(pb->anchor_row(0)[0] == pb->constant(1));
        CHECK(pb->anchor_row(0)[1].is_zero());
        CHECK(pb->anchor_row(1)[1] == pb->constant(1));
        for (const auto& [ij, c] : pb->bracket_table())
            for (const auto& p : c) CHECK(p.is_zero());
    }
    SUBCASE("so(3) pulled back over R stays valid") {
        auto pb = pullback_algebroid(so3(), 1);
        CHECK(pb->rank() == 4);
        CHECK(pb->dim() == 1);
        CHECK(validate_algebroid(pb).valid());
    }
}

TEST_CASE("metric invariants") {
    auto g = so3();
    auto ad = adjoint_representation(g);
    PolyMatrix id = poly_matrix_identity(g->chart(), 3);
    CHECK_NOTHROW(Metric(ad, id));
    PolyMatrix bad = id;
    bad[0][1] = g->constant(1); // not symmetric
    CHECK_THROWS(Metric(ad, bad));
    PolyMatrix sing = poly_matrix_zero(g->chart(), 3, 3);
    CHECK_THROWS(Metric(ad, sing));
    PolyMatrix neg = scaled(id, -1);
    CHECK_THROWS(Metric(ad, neg));
}
