#ifndef ALGC_CONSTRUCTIONS_HPP
#define ALGC_CONSTRUCTIONS_HPP

#include "algc/cochain.hpp"

namespace algc {

// Twisted semidirect product g x|_tau E on the frame (e_1..e_r, f_1..f_m):
// anchor extended by zero, [e_i,e_j] = sum c_ij^k e_k + tau(e_i,e_j),
// [e_i,f_a] = omega_i f_a, [f_a,f_b] = 0. The result passes
// validate_algebroid exactly when differential(tau) = 0.
AlgebroidPtr semidirect_product(const AlgebroidPtr& a, const RepPtr& e,
                                const AlgebroidCochain& tau);

struct ExtensionData {
    AlgebroidPtr quotient; // g = h / l
    RepPtr action;         // l as a representation of g
    AlgebroidCochain tau;  // the classifying 2-cochain

    ExtensionData(AlgebroidPtr q, RepPtr act, AlgebroidCochain t)
        : quotient(std::move(q)), action(std::move(act)), tau(std::move(t)) {}
};

// Splits h along an abelian ideal with zero anchor. `splitting` has one
// rational row per quotient frame element, expressed in h's frame; its rows
// together with the ideal directions must span. Action and cocycle follow
//   i(L_X V) = [sigma X, i V],   i(tau(X,Y)) = [sigma X, sigma Y] - sigma([X,Y]),
// so that semidirect_product(quotient, action, tau) rebuilds h up to the
// frame change given by the splitting.
ExtensionData extension_class(const AlgebroidPtr& h, const std::vector<int>& ideal,
                              const std::vector<std::vector<Rational>>& splitting);

// Pullback along the projection (chart x R^k) -> chart: lifted frame
// elements keep their anchors and brackets, the k new fiber directions are
// bracket-central with anchor d/du_a.
AlgebroidPtr pullback_algebroid(const AlgebroidPtr& a, int fiber_dim);

struct BottQuotient {
    AlgebroidPtr sub;            // the frame-adapted sub-algebroid
    RepPtr normal;               // Bott action on the complementary span
    std::vector<int> complement; // frame indices presenting the quotient
};

// Requires the subset to be bracket-closed; rejection names a failing pair.
BottQuotient bott_quotient(const AlgebroidPtr& a, const std::vector<int>& sub_indices);

// Q_g with the rank-1 action omega(e_i) = sum_k c_ik^k + div(rho(e_i)).
// The flatness of the result is checked, not assumed.
RepPtr canonical_line_bundle(const AlgebroidPtr& a);

// Bott action of a zero-anchor algebroid on itself: omega_i = ad(e_i).
RepPtr adjoint_representation(const AlgebroidPtr& a);

// Point-based algebroid from a commutator-closed list of rational matrices.
AlgebroidPtr algebroid_from_matrix_basis(const std::vector<std::vector<std::vector<Rational>>>& basis,
                                         std::vector<std::string> frame_names = {});

// Realification of a complex matrix Lie algebra: each basis element is a
// (real part, imaginary part) pair.
AlgebroidPtr algebroid_from_complex_matrix_basis(
    const std::vector<std::pair<std::vector<std::vector<Rational>>,
                                std::vector<std::vector<Rational>>>>& basis,
    std::vector<std::string> frame_names = {});

} // namespace algc

#endif
