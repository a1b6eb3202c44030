#include "algc/charclass.hpp"
#include "algc/cohomology.hpp"
#include "algc/groupoid.hpp"
#include "algc/poisson.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace algc;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& coords, int max_deg,
                       int terms) {
    Polynomial out(coords);
    for (int t = 0; t < terms; ++t) {
        Exponents e(coords.size(), 0);
        for (int d = 0; d < max_deg; ++d) e[rng() % coords.size()] += 1;
        out.add_term(e, Rational(static_cast<long>(rng() % 17) - 8));
    }
    return out;
}

PoissonBivector so3_linear() {
    std::vector<std::string> chart = {"x1", "x2", "x3"};
    std::map<std::pair<int, int>, Polynomial> e;
    e[{0, 1}] = Polynomial::variable(chart, "x3");
    e[{1, 2}] = Polynomial::variable(chart, "x1");
    e[{0, 2}] = -Polynomial::variable(chart, "x2");
    return PoissonBivector(chart, std::move(e));
}

void BM_PolynomialMultiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<std::string> coords = {"x", "y", "z", "w"};
    Polynomial a = random_poly(rng, coords, 4, 24);
    Polynomial b = random_poly(rng, coords, 4, 24);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply);

void BM_BareissRank(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const int n = static_cast<int>(state.range(0));
    SparseRationalMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (rng() % 3 == 0) m.set(r, c, Rational(static_cast<long>(rng() % 19) - 9,
                                                     1 + static_cast<long>(rng() % 6)));
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_BareissRank)->Arg(16)->Arg(48);

void BM_PoissonBetti(benchmark::State& state) {
    auto pi = so3_linear();
    validate_poisson(pi);
    for (auto _ : state) {
        auto report = poisson_cohomology(pi, 2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_PoissonBetti)->Arg(2)->Arg(3);

void BM_VanEstTrial(benchmark::State& state) {
    auto g = GroupoidChart::pair_groupoid(2);
    for (auto _ : state) {
        auto report = property_harness(g, 1, 7, static_cast<int>(state.range(0)), 2);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VanEstTrial)->Arg(2)->Arg(3);

void BM_OddClass(benchmark::State& state) {
    std::vector<std::string> none;
    auto unit = [&](int i, int j) {
        std::vector<std::vector<Rational>> m(2, std::vector<Rational>(2, Rational(0)));
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        return m;
    };
    auto g = algebroid_from_matrix_basis({unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)});
    validate_algebroid(g);
    auto c = [&](const Rational& q) { return Polynomial::constant(none, q); };
    auto mat = [&](int i, int j) {
        PolyMatrix m = poly_matrix_zero(none, 2, 2);
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = c(1);
        return m;
    };
    auto rep = make_representation(g, 2, {mat(0, 0), mat(0, 1), mat(1, 0), mat(1, 1)});
    validate_representation(rep);
    for (auto _ : state) {
        auto res = odd_trace_class(rep, 2);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_OddClass);

} // namespace

BENCHMARK_MAIN();
