#include "algc/charclass.hpp"

#include <algorithm>

namespace algc {

namespace {

CharClassResult finish(AlgebroidCochain cocycle) {
    CharClassResult res(std::move(cocycle));
    if (!differential(res.cocycle).is_zero())
        throw Error("internal: characteristic cocycle is not closed");
    res.closed = true;
    return res;
}

MatrixCochain degree_one_matrix_cochain(const AlgebroidPtr& a, const std::vector<PolyMatrix>& per_frame) {
    MatrixCochain w(a, 1, per_frame.empty() ? 0 : static_cast<int>(per_frame[0].size()));
    for (int i = 0; i < a->rank(); ++i) w.set_component({i}, per_frame[static_cast<size_t>(i)]);
    return w;
}

} // namespace

CharClassResult& with_exactness(CharClassResult& result, int cap) {
    auto res = find_primitive(result.cocycle.algebroid(), result.cocycle.coefficients(),
                              result.cocycle, cap);
    result.exact = res.exact;
    result.primitive = res.primitive;
    result.exactness_cap = cap;
    return result;
}

CharClassResult u1(const AlgebroidPtr& a, const RepPtr& e) {
    require_validated(a);
    require_validated(e);
    if (e->algebroid() != a) throw Error("representation lives on a different algebroid");
    AlgebroidCochain w(a, 1);
    for (int i = 0; i < a->rank(); ++i) w.add_component({i}, {trace(e->connection(i))});
    return finish(std::move(w));
}

bool frame_change_check(const RepPtr& e, const PolyMatrix& amat) {
    require_validated(e);
    const auto& a = e->algebroid();
    Polynomial det = poly_det(amat);
    if (det.is_zero()) throw Error("frame change is identically singular");
    PolyMatrix adj = poly_adjugate(amat);
    for (int i = 0; i < a->rank(); ++i) {
        // det * Tr(omega_f) = Tr(A omega adj(A)) + Tr(rho(A) adj(A)).
        Polynomial lhs = trace(amat * e->connection(i) * adj) +
                         trace(anchor_applied(a, i, amat) * adj) - det * trace(e->connection(i));
        Polynomial rhs = a->anchor_apply(i, det);
        if (lhs != rhs) return false;
    }
    return true;
}

CharClassResult u_odd(const RepPtr& e, const Metric& h, int k) {
    require_validated(e);
    if (h.rep != e) throw Error("metric belongs to a different representation");
    if (e->is_complex())
        throw Error("u_odd supports real representations (metrics are real symmetric)");
    if (k < 1 || k > e->rank()) throw Error("index k must satisfy 1 <= k <= rank(E)");
    const auto& a = e->algebroid();
    Polynomial det = poly_det(h.h);
    PolyMatrix adj = poly_adjugate(h.h);
    std::vector<PolyMatrix> theta;
    for (int i = 0; i < a->rank(); ++i) {
        // det * omega^h = adj(h) * (-omega^T h + rho(h)).
        PolyMatrix numerator =
            adj * (anchor_applied(a, i, h.h) - transposed(e->connection(i)) * h.h);
        PolyMatrix omega_h = numerator;
        for (auto& row : omega_h)
            for (auto& p : row) {
                auto q = p.divide_exact(det);
                if (!q)
                    throw Error("metric correction is not polynomial (determinant does not divide)");
                p = *q;
            }
        theta.push_back(scaled(e->connection(i) - omega_h, Rational(1, 2)));
    }
    auto theta_cochain = degree_one_matrix_cochain(a, theta);
    auto res = finish(trace_cochain(wedge_power(theta_cochain, 2 * k - 1)));
    if ((2 * k - 1) * (k - 1) % 2 == 1) {
        if (!res.cocycle.is_zero())
            throw Error("internal: transpose-reversal parity argument violated");
        res.parity_forced_zero = true;
    }
    return res;
}

CharClassResult odd_trace_class(const RepPtr& e, int k) {
    require_validated(e);
    if (e->is_complex()) throw Error("odd trace form implemented for real representations");
    if (k < 1 || k > e->rank()) throw Error("index k must satisfy 1 <= k <= rank(E)");
    const auto& a = e->algebroid();
    std::vector<PolyMatrix> omega;
    for (int i = 0; i < a->rank(); ++i) omega.push_back(e->connection(i));
    auto w = degree_one_matrix_cochain(a, omega);
    return finish(trace_cochain(wedge_power(w, 2 * k - 1)));
}

CharClassResult g_chern(const AlgebroidPtr& a, const std::vector<PolyMatrix>& gamma, int k) {
    require_validated(a);
    if (static_cast<int>(gamma.size()) != a->rank())
        throw Error("one connection matrix per frame element required");
    if (k < 1) throw Error("index k must be positive");
    const int m = static_cast<int>(gamma.empty() ? 0 : gamma[0].size());
    MatrixCochain curvature(a, 2, m);
    for (int i = 0; i < a->rank(); ++i) {
        for (int j = i + 1; j < a->rank(); ++j) {
            PolyMatrix r = anchor_applied(a, i, gamma[static_cast<size_t>(j)]) -
                           anchor_applied(a, j, gamma[static_cast<size_t>(i)]) +
                           gamma[static_cast<size_t>(i)] * gamma[static_cast<size_t>(j)] -
                           gamma[static_cast<size_t>(j)] * gamma[static_cast<size_t>(i)];
            auto c = a->frame_bracket(i, j);
            for (int l = 0; l < a->rank(); ++l) {
                if (c[static_cast<size_t>(l)].is_zero()) continue;
                PolyMatrix t = gamma[static_cast<size_t>(l)];
                for (auto& row : t)
                    for (auto& p : row) p = p * c[static_cast<size_t>(l)];
                r = r - t;
            }
            curvature.set_component({i, j}, std::move(r));
        }
    }
    return finish(trace_cochain(wedge_power(curvature, k)));
}

CharClassResult modular_class(const AlgebroidPtr& a) {
    return u1(a, canonical_line_bundle(a));
}

RepPtr kernel_bott_representation(const AlgebroidPtr& a, const std::vector<int>& kernel_indices) {
    require_validated(a);
    const int r = a->rank();
    std::vector<char> in_k(static_cast<size_t>(r), 0);
    for (int s : kernel_indices) {
        if (s < 0 || s >= r) throw Error("kernel index out of range");
        in_k[static_cast<size_t>(s)] = 1;
        for (const auto& p : a->anchor_row(s))
            if (!p.is_zero()) throw Error("kernel direction has nonzero anchor");
    }
    const int m = static_cast<int>(kernel_indices.size());
    std::vector<PolyMatrix> conn;
    for (int i = 0; i < r; ++i) {
        PolyMatrix w = poly_matrix_zero(a->chart(), m, m);
        for (int col = 0; col < m; ++col) {
            auto b = a->frame_bracket(i, kernel_indices[static_cast<size_t>(col)]);
            for (int l = 0; l < r; ++l) {
                if (b[static_cast<size_t>(l)].is_zero()) continue;
                if (!in_k[static_cast<size_t>(l)])
                    throw Error("kernel directions do not form an ideal");
                int row = static_cast<int>(
                    std::find(kernel_indices.begin(), kernel_indices.end(), l) -
                    kernel_indices.begin());
                w[static_cast<size_t>(row)][static_cast<size_t>(col)] = b[static_cast<size_t>(l)];
            }
        }
        conn.push_back(std::move(w));
    }
    auto rep = make_representation(a, m, std::move(conn));
    auto report = validate_representation(rep);
    if (!report.valid()) throw ValidationError("Bott action on the kernel is not flat");
    return rep;
}

RepPtr normal_bott_representation(const AlgebroidPtr& a,
                                  const std::vector<int>& nu_coordinate_indices) {
    require_validated(a);
    const int n = a->dim();
    std::vector<char> in_nu(static_cast<size_t>(n), 0);
    for (int t : nu_coordinate_indices) {
        if (t < 0 || t >= n) throw Error("coordinate index out of range");
        in_nu[static_cast<size_t>(t)] = 1;
    }
    // Frame-adapted image: the anchor may not touch the nu directions.
    for (int i = 0; i < a->rank(); ++i)
        for (int t : nu_coordinate_indices)
            if (!a->anchor_row(i)[static_cast<size_t>(t)].is_zero())
                throw Error("anchor image is not adapted to the chosen complement");
    const int m = static_cast<int>(nu_coordinate_indices.size());
    // Bott action on TM/F: L_{e_i}(d/dx_t mod F) = [rho(e_i), d/dx_t] mod F,
    // i.e. (omega_i)_{t',t} = -d(rho_i^{t'}) / d x_t.
    std::vector<PolyMatrix> conn;
    for (int i = 0; i < a->rank(); ++i) {
        PolyMatrix w = poly_matrix_zero(a->chart(), m, m);
        for (int col = 0; col < m; ++col)
            for (int row = 0; row < m; ++row) {
                int t = nu_coordinate_indices[static_cast<size_t>(col)];
                int tp = nu_coordinate_indices[static_cast<size_t>(row)];
                w[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                    -a->anchor_row(i)[static_cast<size_t>(tp)].derivative(static_cast<size_t>(t));
            }
        conn.push_back(std::move(w));
    }
    auto rep = make_representation(a, m, std::move(conn));
    auto report = validate_representation(rep);
    if (!report.valid()) throw ValidationError("Bott action on the normal bundle is not flat");
    return rep;
}

CharClassResult intrinsic_class(const AlgebroidPtr& a, const std::vector<int>& kernel_indices,
                                const std::vector<int>& nu_coordinate_indices, int k) {
    require_validated(a);
    if (k < 1) throw Error("index k must be positive");
    const int q = 2 * k - 1;
    AlgebroidCochain total(a, q);
    if (!kernel_indices.empty() && k <= static_cast<int>(kernel_indices.size())) {
        auto kr = kernel_bott_representation(a, kernel_indices);
        Metric id(kr, poly_matrix_identity(a->chart(), kr->rank()));
        total = total + u_odd(kr, id, k).cocycle;
    }
    if (!nu_coordinate_indices.empty() && k <= static_cast<int>(nu_coordinate_indices.size())) {
        auto nr = normal_bott_representation(a, nu_coordinate_indices);
        Metric id(nr, poly_matrix_identity(a->chart(), nr->rank()));
        total = total - u_odd(nr, id, k).cocycle;
    }
    return finish(std::move(total));
}

} // namespace algc
