#include <doctest.h>

#include "algc/linalg.hpp"

#include <random>

using namespace algc;

namespace {

// Dense textbook Gaussian elimination over Q, used as the rank oracle.
int dense_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rank matches a dense oracle on random sparse matrices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 7);
        SparseRationalMatrix m(rows, cols);
        std::vector<std::vector<Rational>> dense(static_cast<size_t>(rows),
                                                 std::vector<Rational>(static_cast<size_t>(cols), Rational(0)));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (rng() % 3 == 0) {
                    long num = static_cast<long>(rng() % 11) - 5;
                    long den = 1 + static_cast<long>(rng() % 4);
                    Rational v(num, den);
                    m.set(r, c, v);
                    dense[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
                }
            }
        CHECK(m.rank() == dense_rank(dense));
    }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
    SUBCASE("2x2 invertible") {
        SparseRationalMatrix m(2, 2);
        m.set(0, 0, 2);
        m.set(0, 1, 1);
        m.set(1, 0, 1);
        m.set(1, 1, 3);
        auto x = m.solve({Rational(5), Rational(10)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == Rational(1));
        CHECK((*x)[1] == Rational(3));
    }
    SUBCASE("inconsistent") {
        SparseRationalMatrix m(2, 1);
        m.set(0, 0, 1);
        m.set(1, 0, 2);
        CHECK_FALSE(m.solve({Rational(1), Rational(3)}).has_value());
    }
    SUBCASE("random consistent systems") {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 20; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6);
            int cols = 1 + static_cast<int>(rng() % 6);
            SparseRationalMatrix m(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    if (rng() % 2 == 0) m.set(r, c, Rational(static_cast<long>(rng() % 9) - 4));
            std::vector<Rational> x0(static_cast<size_t>(cols));
            for (auto& v : x0) v = Rational(static_cast<long>(rng() % 7) - 3);
            std::vector<Rational> b(static_cast<size_t>(rows), Rational(0));
            for (const auto& [rc, v] : m.entries())
                b[static_cast<size_t>(rc.first)] += v * x0[static_cast<size_t>(rc.second)];
            auto sol = m.solve(b);
            REQUIRE(sol.has_value());
            // verify A*sol == b
            std::vector<Rational> chk(static_cast<size_t>(rows), Rational(0));
            for (const auto& [rc, v] : m.entries())
                chk[static_cast<size_t>(rc.first)] += v * (*sol)[static_cast<size_t>(rc.second)];
            CHECK(chk == b);
        }
    }
}

TEST_CASE("nullspace vectors annihilate and have the right count") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        SparseRationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 2 == 0) m.set(r, c, Rational(static_cast<long>(rng() % 9) - 4));
        auto basis = m.nullspace();
        CHECK(static_cast<int>(basis.size()) == cols - m.rank());
        for (const auto& v : basis) {
            std::vector<Rational> out(static_cast<size_t>(rows), Rational(0));
            for (const auto& [rc, val] : m.entries())
                out[static_cast<size_t>(rc.first)] += val * v[static_cast<size_t>(rc.second)];
            for (const auto& o : out) CHECK(o == 0);
        }
        // independence: the column matrix has full rank
        if (!basis.empty()) {
            auto nm = SparseRationalMatrix::from_columns(cols, basis);
            CHECK(nm.rank() == static_cast<int>(basis.size()));
        }
    }
}

TEST_CASE("multiply") {
    SparseRationalMatrix a(2, 3);
    a.set(0, 0, 1);
    a.set(0, 2, 2);
    a.set(1, 1, -1);
    SparseRationalMatrix b(3, 2);
    b.set(0, 0, 3);
    b.set(2, 0, 1);
    b.set(1, 1, 4);
    auto c = a.multiply(b);
    CHECK(c.get(0, 0) == Rational(5));
    CHECK(c.get(1, 1) == Rational(-4));
    CHECK(c.get(0, 1) == Rational(0));
}
