#include "algc/linalg.hpp"

#include <algorithm>
#include <limits>

namespace algc {

void SparseRationalMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

Rational SparseRationalMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseRationalMatrix SparseRationalMatrix::from_columns(
    int rows, const std::vector<std::vector<Rational>>& cols) {
    SparseRationalMatrix m(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw Error("column height mismatch");
        for (int r = 0; r < rows; ++r) m.set(r, static_cast<int>(c), cols[c][static_cast<size_t>(r)]);
    }
    return m;
}

SparseRationalMatrix SparseRationalMatrix::multiply(const SparseRationalMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in multiply");
    SparseRationalMatrix out(rows_, o.cols_);
    // Group o's entries by row for the sparse product.
    std::map<int, std::vector<std::pair<int, Rational>>> orows;
    for (const auto& [rc, v] : o.entries_) orows[rc.first].push_back({rc.second, v});
    std::map<std::pair<int, int>, Rational> acc;
    for (const auto& [rc, v] : entries_) {
        auto it = orows.find(rc.second);
        if (it == orows.end()) continue;
        for (const auto& [c2, v2] : it->second) acc[{rc.first, c2}] += v * v2;
    }
    for (const auto& [rc, v] : acc)
        if (v != 0) out.entries_[rc] = v;
    return out;
}

namespace {

using Row = std::map<int, Int>;

// Fraction-free elimination state. Structural columns are 0..cols-1;
// anything beyond is an augmented column that rides along.
struct Elimination {
    int cols;
    std::vector<Row> rows;
    std::vector<bool> done;
    std::vector<char> col_done;
    std::vector<std::pair<int, int>> pivots; // (row, col) in elimination order

    explicit Elimination(int structural_cols, std::vector<Row> rs)
        : cols(structural_cols),
          rows(std::move(rs)),
          done(rows.size(), false),
          col_done(static_cast<size_t>(structural_cols), 0) {}

    int active_count(const Row& row) const {
        int n = 0;
        for (const auto& [c, v] : row)
            if (c < cols && !col_done[static_cast<size_t>(c)] && v != 0) ++n;
        return n;
    }

    void run() {
        Int prev = 1;
        while (true) {
            int best_row = -1;
            int best_count = std::numeric_limits<int>::max();
            for (size_t i = 0; i < rows.size(); ++i) {
                if (done[i]) continue;
                int n = active_count(rows[i]);
                if (n > 0 && n < best_count) {
                    best_count = n;
                    best_row = static_cast<int>(i);
                }
            }
            if (best_row < 0) break;
            int pc = -1;
            for (const auto& [c, v] : rows[static_cast<size_t>(best_row)]) {
                if (c < cols && !col_done[static_cast<size_t>(c)] && v != 0) {
                    pc = c;
                    break;
                }
            }
            const Row& prow = rows[static_cast<size_t>(best_row)];
            Int piv = prow.at(pc);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (done[i] || static_cast<int>(i) == best_row) continue;
                Row& row = rows[i];
                auto fit = row.find(pc);
                Int factor = fit == row.end() ? Int(0) : fit->second;
                Row updated;
                // (piv*row - factor*prow)/prev entrywise; divisions are exact.
                auto put = [&](int c, Int v) {
                    if (v != 0) updated[c] = std::move(v);
                };
                for (const auto& [c, v] : row) {
                    Int t = piv * v;
                    auto pit = prow.find(c);
                    if (pit != prow.end()) t -= factor * pit->second;
                    put(c, t / prev);
                }
                for (const auto& [c, v] : prow) {
                    if (row.count(c)) continue;
                    Int t = -factor * v;
                    if (t != 0) put(c, t / prev);
                }
                row = std::move(updated);
            }
            done[static_cast<size_t>(best_row)] = true;
            col_done[static_cast<size_t>(pc)] = 1;
            pivots.push_back({best_row, pc});
            prev = piv;
        }
    }

    // Solves the eliminated staircase with the given values on non-pivot
    // columns (augmented columns enter through `rhs_col`, negated).
    std::vector<Rational> back_substitute(const std::vector<Rational>& free_values,
                                          int rhs_col) const {
        std::vector<Rational> x(free_values);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const Row& row = rows[static_cast<size_t>(it->first)];
            Rational acc = 0;
            for (const auto& [c, v] : row) {
                if (c == it->second) continue;
                if (c == rhs_col)
                    acc -= Rational(v); // moved to the right-hand side
                else if (c < cols)
                    acc += Rational(v) * x[static_cast<size_t>(c)];
            }
            x[static_cast<size_t>(it->second)] = -acc / Rational(row.at(it->second));
        }
        return x;
    }
};

std::vector<Row> scaled_rows(const SparseRationalMatrix& m,
                             const std::vector<Rational>* rhs) {
    std::vector<std::map<int, Rational>> rat(static_cast<size_t>(m.rows()));
    for (const auto& [rc, v] : m.entries()) rat[static_cast<size_t>(rc.first)][rc.second] = v;
    if (rhs) {
        for (int r = 0; r < m.rows(); ++r) {
            const Rational& v = (*rhs)[static_cast<size_t>(r)];
            if (v != 0) rat[static_cast<size_t>(r)][m.cols()] = v;
        }
    }
    std::vector<Row> rows(rat.size());
    for (size_t r = 0; r < rat.size(); ++r) {
        Int l = 1;
        for (const auto& [c, v] : rat[r]) l = lcm(l, Int(denominator(v)));
        for (const auto& [c, v] : rat[r]) {
            Rational s = v * Rational(l);
            rows[r][c] = Int(numerator(s));
        }
    }
    return rows;
}

} // namespace

int SparseRationalMatrix::rank() const {
    Elimination e(cols_, scaled_rows(*this, nullptr));
    e.run();
    return static_cast<int>(e.pivots.size());
}

std::optional<std::vector<Rational>> SparseRationalMatrix::solve(
    const std::vector<Rational>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_) throw Error("rhs height mismatch");
    Elimination e(cols_, scaled_rows(*this, &rhs));
    e.run();
    // Untouched structural part of an active row is zero; a leftover
    // augmented entry certifies inconsistency.
    for (size_t i = 0; i < e.rows.size(); ++i) {
        if (e.done[i]) continue;
        auto it = e.rows[i].find(cols_);
        if (it != e.rows[i].end() && it->second != 0) return std::nullopt;
    }
    std::vector<Rational> zero(static_cast<size_t>(cols_), Rational(0));
    return e.back_substitute(zero, cols_);
}

std::vector<std::vector<Rational>> SparseRationalMatrix::nullspace() const {
    Elimination e(cols_, scaled_rows(*this, nullptr));
    e.run();
    std::vector<char> pivot_col(static_cast<size_t>(cols_), 0);
    for (const auto& [r, c] : e.pivots) pivot_col[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (pivot_col[static_cast<size_t>(f)]) continue;
        std::vector<Rational> free_values(static_cast<size_t>(cols_), Rational(0));
        free_values[static_cast<size_t>(f)] = 1;
        basis.push_back(e.back_substitute(free_values, -1));
    }
    return basis;
}

} // namespace algc
