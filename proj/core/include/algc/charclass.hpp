#ifndef ALGC_CHARCLASS_HPP
#define ALGC_CHARCLASS_HPP

#include "algc/cohomology.hpp"
#include "algc/constructions.hpp"

namespace algc {

struct CharClassResult {
    int degree = 0;
    AlgebroidCochain cocycle;
    bool closed = false; // d(cocycle) = 0, checked symbolically at construction
    // Filled in by with_exactness: verdict relative to the stated cap.
    std::optional<bool> exact;
    std::optional<AlgebroidCochain> primitive;
    int exactness_cap = -1;
    // Set when the transpose-reversal argument forces the cochain to vanish
    // identically ((2k-1)(k-1) odd, real coefficients, symmetric theta).
    bool parity_forced_zero = false;

    explicit CharClassResult(AlgebroidCochain c) : degree(c.degree()), cocycle(std::move(c)) {}
};

// Runs find_primitive on the cocycle and records the verdict.
CharClassResult& with_exactness(CharClassResult& result, int cap);

// Trace of the connection: X -> Tr(omega_X), real case; Tr(Re omega_X) for
// complex representations.
CharClassResult u1(const AlgebroidPtr& a, const RepPtr& e);

// Verifies det(A) * Tr(omega_f - omega_e)(e_i) = rho(e_i)(det A) for every
// frame index, with omega_f = A omega A^{-1} + (dA) A^{-1} cleared of
// fractions through the adjugate. For det A = 1 this certifies that the u1
// cocycle is frame-independent on the nose.
bool frame_change_check(const RepPtr& e, const PolyMatrix& amat);

// Metric-corrected odd classes: theta_i = (omega_i - omega_i^h)/2 with
// omega_i^h = -h^{-1} omega_i^T h + h^{-1} rho(e_i)(h), and the cocycle
// Tr(theta^(2k-1)) via the matrix-valued wedge. No normalization constant
// is applied. The metric inverse is realized by exact division through the
// adjugate; metrics whose correction is not polynomial are rejected.
CharClassResult u_odd(const RepPtr& e, const Metric& h, int k);

// Uncorrected odd trace form Tr(omega^(2k-1)). Closed for any flat
// connection; canonical (conjugation-invariant) over a point base. This is
// the form that exhibits the degree-3 generator on gl2, where the
// metric-corrected u3 of a real representation vanishes identically.
CharClassResult odd_trace_class(const RepPtr& e, int k);

// Chern-Weil off the anchor: curvature of arbitrary connection matrices
//   R_ij = rho(e_i)(G_j) - rho(e_j)(G_i) + [G_i, G_j] - sum_k c_ij^k G_k,
// cocycle Tr(R^k) in degree 2k.
CharClassResult g_chern(const AlgebroidPtr& a, const std::vector<PolyMatrix>& gamma, int k);

// u1 of the canonical line bundle.
CharClassResult modular_class(const AlgebroidPtr& a);

// Regular-algebroid intrinsic class u_{2k-1}(K) - u_{2k-1}(nu): K is the
// frame-adapted anchor kernel with its bracket action, nu = TM/F is
// presented by the complementary coordinate directions with the Bott
// action; identity metrics on both sides.
CharClassResult intrinsic_class(const AlgebroidPtr& a, const std::vector<int>& kernel_indices,
                                const std::vector<int>& nu_coordinate_indices, int k);

// Bott action of a on the span of the listed (zero-anchor, ideal) frame
// directions; used by the intrinsic class and exposed for tests.
RepPtr kernel_bott_representation(const AlgebroidPtr& a, const std::vector<int>& kernel_indices);
RepPtr normal_bott_representation(const AlgebroidPtr& a,
                                  const std::vector<int>& nu_coordinate_indices);

} // namespace algc

#endif
