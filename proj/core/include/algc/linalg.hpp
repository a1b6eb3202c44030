#ifndef ALGC_LINALG_HPP
#define ALGC_LINALG_HPP

#include "algc/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace algc {

// Exact sparse matrix over the rationals. Rank, solving and nullspaces run
// fraction-free: rows are scaled to integers and eliminated Bareiss-style
// (one-step fraction-free pivoting with exact divisions), so no rational
// arithmetic happens during elimination.
class SparseRationalMatrix {
public:
    SparseRationalMatrix() = default;
    SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    static SparseRationalMatrix from_columns(int rows, const std::vector<std::vector<Rational>>& cols);

    SparseRationalMatrix multiply(const SparseRationalMatrix& o) const;

    int rank() const;

    // One solution of A x = rhs with free variables pinned to zero.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

    // Basis of ker(A), one vector per free column.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Rational> entries_;
};

} // namespace algc

#endif
