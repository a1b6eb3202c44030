#include "algc/representation.hpp"

namespace algc {

PolyMatrix poly_matrix_zero(const std::vector<std::string>& chart, int rows, int cols) {
    return PolyMatrix(static_cast<size_t>(rows),
                      std::vector<Polynomial>(static_cast<size_t>(cols), Polynomial(chart)));
}

PolyMatrix poly_matrix_identity(const std::vector<std::string>& chart, int n) {
    PolyMatrix m = poly_matrix_zero(chart, n, n);
    for (int i = 0; i < n; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Polynomial::constant(chart, 1);
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    PolyMatrix out(n, std::vector<Polynomial>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            Polynomial acc = a[i].empty() ? Polynomial() : Polynomial(a[i][0].coordinates());
            for (size_t t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
            out[i][j] = acc;
        }
    return out;
}

PolyMatrix scaled(const PolyMatrix& a, const Rational& c) {
    PolyMatrix out = a;
    for (auto& row : out)
        for (auto& p : row) p = p.scaled(c);
    return out;
}

PolyMatrix transposed(const PolyMatrix& a) {
    if (a.empty()) return a;
    PolyMatrix out(a[0].size(), std::vector<Polynomial>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

Polynomial trace(const PolyMatrix& a) {
    Polynomial out = a.empty() ? Polynomial() : Polynomial(a[0][0].coordinates());
    for (size_t i = 0; i < a.size(); ++i) out += a[i][i];
    return out;
}

bool is_zero(const PolyMatrix& a) {
    for (const auto& row : a)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

namespace {

Polynomial minor_det(const PolyMatrix& a, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
    if (rows.empty()) return Polynomial::constant(a[0][0].coordinates(), 1);
    Polynomial out(a[0][0].coordinates());
    // Laplace expansion along the first listed row; fine at desk ranks.
    for (size_t j = 0; j < cols.size(); ++j) {
        const Polynomial& piv = a[rows[0]][cols[j]];
        if (piv.is_zero()) continue;
        std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<size_t> sub_cols;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Polynomial m = minor_det(a, sub_rows, sub_cols);
        out += (j % 2 == 0) ? piv * m : -(piv * m);
    }
    return out;
}

} // namespace

Polynomial poly_det(const PolyMatrix& a) {
    if (a.empty()) throw Error("determinant of empty matrix");
    std::vector<size_t> idx(a.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return minor_det(a, idx, idx);
}

PolyMatrix poly_adjugate(const PolyMatrix& a) {
    size_t n = a.size();
    const auto& chart = a[0][0].coordinates();
    if (n == 1) return {{Polynomial::constant(chart, 1)}};
    PolyMatrix out(n, std::vector<Polynomial>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> rows, cols;
            for (size_t t = 0; t < n; ++t) {
                if (t != i) rows.push_back(t);
                if (t != j) cols.push_back(t);
            }
            Polynomial c = minor_det(a, rows, cols);
            // adj(A)_{ji} = (-1)^{i+j} * minor_{ij}
            out[j][i] = ((i + j) % 2 == 0) ? c : -c;
        }
    }
    return out;
}

PolyMatrix anchor_applied(const AlgebroidPtr& a, int i, const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& row : out)
        for (auto& p : row) p = a->anchor_apply(i, p);
    return out;
}

Representation::Representation(AlgebroidPtr algebroid, int rank,
                               std::vector<PolyMatrix> connection_re,
                               std::vector<PolyMatrix> connection_im)
    : algebroid_(std::move(algebroid)), rank_(rank), conn_re_(std::move(connection_re)),
      conn_im_(std::move(connection_im)) {
    const size_t r = static_cast<size_t>(algebroid_->rank());
    const size_t m = static_cast<size_t>(rank_);
    auto check = [&](std::vector<PolyMatrix>& conn) {
        if (conn.size() != r) throw Error("one connection matrix per frame element required");
        for (auto& mat : conn) {
            if (mat.size() != m) throw Error("connection matrix rank mismatch");
            for (auto& row : mat) {
                if (row.size() != m) throw Error("connection matrix rank mismatch");
                for (auto& p : row) p = p.on_chart(algebroid_->chart());
            }
        }
    };
    check(conn_re_);
    if (!conn_im_.empty()) check(conn_im_);
}

const PolyMatrix& Representation::connection_im(int i) const {
    if (conn_im_.empty()) throw Error("real representation has no imaginary part");
    return conn_im_[static_cast<size_t>(i)];
}

std::vector<Polynomial> Representation::act(int i, const std::vector<Polynomial>& column) const {
    if (is_complex()) throw Error("coefficient action unsupported for complex representations");
    const auto& w = connection(i);
    std::vector<Polynomial> out(column.size(), algebroid_->zero());
    for (size_t s = 0; s < column.size(); ++s) {
        out[s] = algebroid_->anchor_apply(i, column[s]);
        for (size_t t = 0; t < column.size(); ++t) out[s] += w[s][t] * column[t];
    }
    return out;
}

RepPtr make_representation(AlgebroidPtr algebroid, int rank, std::vector<PolyMatrix> connection_re,
                           std::vector<PolyMatrix> connection_im) {
    return std::make_shared<const Representation>(std::move(algebroid), rank,
                                                  std::move(connection_re),
                                                  std::move(connection_im));
}

RepPtr trivial_representation(const AlgebroidPtr& a) {
    std::vector<PolyMatrix> conn(static_cast<size_t>(a->rank()),
                                 poly_matrix_zero(a->chart(), 1, 1));
    auto rep = make_representation(a, 1, std::move(conn));
    rep->mark_validated();
    return rep;
}

ValidationReport validate_representation(const RepPtr& e) {
    const auto& a = e->algebroid();
    require_validated(a);
    ValidationReport report;
    const int r = a->rank();
    auto curvature_part = [&](const std::vector<PolyMatrix>& wi, int i, int j,
                              const PolyMatrix& comm) {
        PolyMatrix c = anchor_applied(a, i, wi[static_cast<size_t>(j)]) -
                       anchor_applied(a, j, wi[static_cast<size_t>(i)]) + comm;
        auto str = a->frame_bracket(i, j);
        for (int k = 0; k < r; ++k)
            if (!str[static_cast<size_t>(k)].is_zero()) {
                PolyMatrix t = wi[static_cast<size_t>(k)];
                for (auto& row : t)
                    for (auto& p : row) p = p * str[static_cast<size_t>(k)];
                c = c - t;
            }
        return c;
    };
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (!e->is_complex()) {
                std::vector<PolyMatrix> w;
                for (int k = 0; k < r; ++k) w.push_back(e->connection(k));
                PolyMatrix comm = w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)] -
                                  w[static_cast<size_t>(j)] * w[static_cast<size_t>(i)];
                PolyMatrix cij = curvature_part(w, i, j, comm);
                if (!is_zero(cij)) {
                    std::string detail;
                    for (const auto& row : cij)
                        for (const auto& p : row)
                            if (detail.empty() && !p.is_zero()) detail = p.str();
                    report.issues.push_back({"curvature", {i, j}, detail});
                }
            } else {
                std::vector<PolyMatrix> wre, wim;
                for (int k = 0; k < r; ++k) {
                    wre.push_back(e->connection(k));
                    wim.push_back(e->connection_im(k));
                }
                auto& ar = wre[static_cast<size_t>(i)];
                auto& ai = wim[static_cast<size_t>(i)];
                auto& br = wre[static_cast<size_t>(j)];
                auto& bi = wim[static_cast<size_t>(j)];
                PolyMatrix comm_re = (ar * br - ai * bi) - (br * ar - bi * ai);
                PolyMatrix comm_im = (ar * bi + ai * br) - (br * ai + bi * ar);
                PolyMatrix cre = curvature_part(wre, i, j, comm_re);
                PolyMatrix cim = curvature_part(wim, i, j, comm_im);
                if (!is_zero(cre) || !is_zero(cim))
                    report.issues.push_back({"curvature", {i, j}, ""});
            }
        }
    }
    if (report.valid()) e->mark_validated();
    return report;
}

void require_validated(const RepPtr& e) {
    if (!e->validated()) throw ValidationError("operation requires a validated representation");
}

RepPtr dual_representation(const RepPtr& e) {
    require_validated(e);
    const auto& a = e->algebroid();
    std::vector<PolyMatrix> re, im;
    for (int i = 0; i < a->rank(); ++i) {
        re.push_back(scaled(transposed(e->connection(i)), -1));
        if (e->is_complex()) im.push_back(transposed(e->connection_im(i)));
    }
    auto rep = make_representation(a, e->rank(), std::move(re), std::move(im));
    validate_representation(rep);
    return rep;
}

RepPtr direct_sum(const RepPtr& e, const RepPtr& f) {
    require_validated(e);
    require_validated(f);
    if (e->algebroid() != f->algebroid()) throw Error("direct sum needs a common algebroid");
    if (e->is_complex() != f->is_complex()) throw Error("direct sum over mixed scalar fields");
    const auto& a = e->algebroid();
    int m = e->rank() + f->rank();
    auto block = [&](const PolyMatrix& top, const PolyMatrix& bot) {
        PolyMatrix out = poly_matrix_zero(a->chart(), m, m);
        for (int i = 0; i < e->rank(); ++i)
            for (int j = 0; j < e->rank(); ++j)
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    top[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int i = 0; i < f->rank(); ++i)
            for (int j = 0; j < f->rank(); ++j)
                out[static_cast<size_t>(e->rank() + i)][static_cast<size_t>(e->rank() + j)] =
                    bot[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return out;
    };
    std::vector<PolyMatrix> re, im;
    for (int k = 0; k < a->rank(); ++k) {
        re.push_back(block(e->connection(k), f->connection(k)));
        if (e->is_complex()) im.push_back(block(e->connection_im(k), f->connection_im(k)));
    }
    auto rep = make_representation(a, m, std::move(re), std::move(im));
    validate_representation(rep);
    return rep;
}

namespace {

PolyMatrix kronecker(const PolyMatrix& a, int na, const PolyMatrix& b, int nb,
                     const std::vector<std::string>& chart, bool a_side) {
    // a (x) I + I (x) b realized on the tensor frame f_s (x) g_t.
    int m = na * nb;
    PolyMatrix out = poly_matrix_zero(chart, m, m);
    for (int s = 0; s < na; ++s)
        for (int t = 0; t < nb; ++t) {
            int col = s * nb + t;
            if (a_side) {
                for (int u = 0; u < na; ++u)
                    out[static_cast<size_t>(u * nb + t)][static_cast<size_t>(col)] +=
                        a[static_cast<size_t>(u)][static_cast<size_t>(s)];
            } else {
                for (int v = 0; v < nb; ++v)
                    out[static_cast<size_t>(s * nb + v)][static_cast<size_t>(col)] +=
                        b[static_cast<size_t>(v)][static_cast<size_t>(t)];
            }
        }
    return out;
}

} // namespace

RepPtr tensor_product(const RepPtr& e, const RepPtr& f) {
    require_validated(e);
    require_validated(f);
    if (e->algebroid() != f->algebroid()) throw Error("tensor product needs a common algebroid");
    if (e->is_complex() || f->is_complex())
        throw Error("tensor product implemented for real representations");
    const auto& a = e->algebroid();
    const auto& chart = a->chart();
    std::vector<PolyMatrix> conn;
    for (int k = 0; k < a->rank(); ++k) {
        conn.push_back(kronecker(e->connection(k), e->rank(), f->connection(k), f->rank(), chart, true) +
                       kronecker(e->connection(k), e->rank(), f->connection(k), f->rank(), chart, false));
    }
    auto rep = make_representation(a, e->rank() * f->rank(), std::move(conn));
    validate_representation(rep);
    return rep;
}

Metric::Metric(RepPtr r, PolyMatrix entries) : rep(std::move(r)), h(std::move(entries)) {
    require_validated(rep);
    if (rep->is_complex()) throw Error("metrics are supported on real representations");
    const auto& chart = rep->algebroid()->chart();
    size_t m = static_cast<size_t>(rep->rank());
    if (h.size() != m) throw Error("metric rank mismatch");
    for (auto& row : h) {
        if (row.size() != m) throw Error("metric rank mismatch");
        for (auto& p : row) p = p.on_chart(chart);
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (h[i][j] != h[j][i]) throw Error("metric must be symmetric");
    if (poly_det(h).is_zero()) throw Error("metric determinant vanishes identically");
    // Positivity at the origin: leading principal minors, exactly.
    std::vector<Rational> origin(chart.size(), Rational(0));
    for (size_t k = 1; k <= m; ++k) {
        PolyMatrix lead(k, std::vector<Polynomial>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = h[i][j];
        if (poly_det(lead).evaluate(origin) <= 0)
            throw Error("metric is not positive at the chart origin");
    }
}

} // namespace algc
