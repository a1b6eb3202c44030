#ifndef ALGC_TEST_FIXTURES_HPP
#define ALGC_TEST_FIXTURES_HPP

#include "algc/cochain.hpp"
#include "algc/constructions.hpp"

#include <functional>
#include <random>

namespace algc::fixtures {

// so(3) over a point: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
inline AlgebroidPtr so3() {
    std::vector<std::string> chart;
    auto c = [&](const Rational& q) { return Polynomial::constant(chart, q); };
    std::map<std::pair<int, int>, std::vector<Polynomial>> br;
    br[{0, 1}] = {c(0), c(0), c(1)};
    br[{1, 2}] = {c(1), c(0), c(0)};
    br[{0, 2}] = {c(0), c(-1), c(0)};
    auto a = make_algebroid(chart, {"e1", "e2", "e3"},
                            std::vector<std::vector<Polynomial>>(3), std::move(br));
    validate_algebroid(a);
    return a;
}

// aff(1) over a point: [e1,e2] = e2.
inline AlgebroidPtr aff1() {
    std::vector<std::string> chart;
    auto c = [&](const Rational& q) { return Polynomial::constant(chart, q); };
    std::map<std::pair<int, int>, std::vector<Polynomial>> br;
    br[{0, 1}] = {c(0), c(1)};
    auto a = make_algebroid(chart, {"e1", "e2"}, std::vector<std::vector<Polynomial>>(2),
                            std::move(br));
    validate_algebroid(a);
    return a;
}

// Tangent algebroid of R^n with the coordinate frame.
inline AlgebroidPtr tangent(int n) {
    std::vector<std::string> chart;
    for (int i = 1; i <= n; ++i) chart.push_back("x" + std::to_string(i));
    std::vector<std::string> frame;
    for (int i = 1; i <= n; ++i) frame.push_back("d" + std::to_string(i));
    std::vector<std::vector<Polynomial>> anchor(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        anchor[static_cast<size_t>(i)].assign(static_cast<size_t>(n), Polynomial(chart));
        anchor[static_cast<size_t>(i)][static_cast<size_t>(i)] = Polynomial::constant(chart, 1);
    }
    auto a = make_algebroid(chart, frame, std::move(anchor), {});
    validate_algebroid(a);
    return a;
}

// gl_2(R) over a point via the matrix basis E11, E12, E21, E22.
inline AlgebroidPtr gl2() {
    using Row = std::vector<Rational>;
    using Mat = std::vector<Row>;
    auto unit = [&](int i, int j) {
        Mat m(2, Row(2, Rational(0)));
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        return m;
    };
    auto a = algebroid_from_matrix_basis({unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)});
    validate_algebroid(a);
    return a;
}

// Standard 2-dim representation of gl2: omega_i = the basis matrix itself.
inline RepPtr gl2_standard(const AlgebroidPtr& g) {
    std::vector<std::string> chart;
    auto c = [&](const Rational& q) { return Polynomial::constant(chart, q); };
    auto mat = [&](int i, int j) {
        PolyMatrix m = poly_matrix_zero(chart, 2, 2);
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = c(1);
        return m;
    };
    auto rep = make_representation(g, 2, {mat(0, 0), mat(0, 1), mat(1, 0), mat(1, 1)});
    validate_representation(rep);
    return rep;
}

// Heisenberg over a point on the frame (e1, e2, f1): [e1,e2] = f1.
inline AlgebroidPtr heisenberg() {
    std::vector<std::string> chart;
    auto c = [&](const Rational& q) { return Polynomial::constant(chart, q); };
    std::map<std::pair<int, int>, std::vector<Polynomial>> br;
    br[{0, 1}] = {c(0), c(0), c(1)};
    auto a = make_algebroid(chart, {"e1", "e2", "f1"}, std::vector<std::vector<Polynomial>>(3),
                            std::move(br));
    validate_algebroid(a);
    return a;
}

// Rank-1 algebroid of a vector field X = f(x) d/dx over R.
inline AlgebroidPtr vector_field_algebroid(const std::string& f) {
    std::vector<std::string> chart = {"x"};
    std::vector<std::vector<Polynomial>> anchor = {{Polynomial::parse(f, chart)}};
    auto a = make_algebroid(chart, {"e"}, std::move(anchor), {});
    validate_algebroid(a);
    return a;
}

// Rank-2 foliation span(dx, dy) inside T R^3.
inline AlgebroidPtr foliation_xy_r3() {
    std::vector<std::string> chart = {"x", "y", "z"};
    std::vector<std::vector<Polynomial>> anchor(2, std::vector<Polynomial>(3, Polynomial(chart)));
    anchor[0][0] = Polynomial::constant(chart, 1);
    anchor[1][1] = Polynomial::constant(chart, 1);
    auto a = make_algebroid(chart, {"e1", "e2"}, std::move(anchor), {});
    validate_algebroid(a);
    return a;
}

inline Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& coords,
                              int max_deg, int max_terms = 4) {
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

inline Section random_section(std::mt19937_64& rng, const AlgebroidPtr& a, int max_deg) {
    std::vector<Polynomial> coeffs;
    for (int i = 0; i < a->rank(); ++i) coeffs.push_back(random_poly(rng, a->chart(), max_deg));
    return Section(a, std::move(coeffs));
}

inline AlgebroidCochain random_cochain(std::mt19937_64& rng, const AlgebroidPtr& a, int degree,
                                       int max_deg) {
    AlgebroidCochain w(a, degree);
    std::vector<int> tuple;
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == degree) {
            if (rng() % 2 == 0) w.set_component(tuple, {random_poly(rng, a->chart(), max_deg)});
            return;
        }
        for (int i = start; i < a->rank(); ++i) {
            tuple.push_back(i);
            rec(i + 1, depth + 1);
            tuple.pop_back();
        }
    };
    rec(0, 0);
    if (w.is_zero() && degree <= a->rank()) {
        std::vector<int> first;
        for (int i = 0; i < degree; ++i) first.push_back(i);
        w.set_component(first, {random_poly(rng, a->chart(), max_deg)});
    }
    return w;
}

} // namespace algc::fixtures

#endif
