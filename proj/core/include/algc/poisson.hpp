#ifndef ALGC_POISSON_HPP
#define ALGC_POISSON_HPP

#include "algc/charclass.hpp"

namespace algc {

// Polynomial bivector pi^{ij} on an affine chart, antisymmetric by storage
// (only i<j kept). Validated means the jacobiator vanishes identically.
class PoissonBivector {
public:
    PoissonBivector(std::vector<std::string> chart,
                    std::map<std::pair<int, int>, Polynomial> upper_entries);

    const std::vector<std::string>& chart() const { return chart_; }
    int dim() const { return static_cast<int>(chart_.size()); }
    // pi^{ij} for any index order; pi^{ii} = 0.
    Polynomial entry(int i, int j) const;
    const std::map<std::pair<int, int>, Polynomial>& upper_entries() const { return entries_; }

    bool validated() const { return validated_; }
    void mark_validated() const { validated_ = true; }
    Polynomial zero() const { return Polynomial(chart_); }

private:
    std::vector<std::string> chart_;
    std::map<std::pair<int, int>, Polynomial> entries_;
    mutable bool validated_ = false;
};

// J^{ijk} = sum_l (pi^{li} d_l pi^{jk} + pi^{lj} d_l pi^{ki} + pi^{lk} d_l pi^{ij})
// for i<j<k; the zero array certifies the Jacobi identity.
std::map<std::tuple<int, int, int>, Polynomial> jacobiator(const PoissonBivector& pi);

// Marks the bivector when the jacobiator vanishes.
ValidationReport validate_poisson(const PoissonBivector& pi);

// T*P with frame d<coord>, anchor rho(dx_i) = sum_j pi^{ij} d_j and
// brackets [dx_i, dx_j] = sum_k d_k(pi^{ij}) dx_k (the Koszul bracket on
// the coordinate frame). Refuses non-Poisson input.
AlgebroidPtr cotangent_algebroid(const PoissonBivector& pi);

Polynomial poisson_bracket(const PoissonBivector& pi, const Polynomial& f, const Polynomial& g);
// X_f = sum_j (sum_i pi^{ij} d_i f) d_j.
std::vector<Polynomial> hamiltonian_vf(const PoissonBivector& pi, const Polynomial& f);

// X_mod^i = sum_j d_j pi^{ij} for the coordinate volume form; asserted
// equal to the derivation f -> div(X_f) on coordinate functions.
std::vector<Polynomial> modular_vector_field(const PoissonBivector& pi);

// Betti table of the cotangent algebroid (multivector-field model).
BettiReport poisson_cohomology(const PoissonBivector& pi, int p_max, int cap);

struct ModularCrossCheck {
    AlgebroidCochain u1_cocycle;     // u1 of the canonical line bundle of T*P
    AlgebroidCochain modular_cochain; // dx_i -> X_mod^i
    bool both_zero = false;
    bool related = false;            // u1 = lambda * modular + d(primitive)
    Rational lambda = 0;
    std::optional<AlgebroidCochain> primitive;
    int cap = 0;
};

// Determines the rational constant between the two modular-class
// presentations, with an exactness certificate, relative to the cap.
ModularCrossCheck modular_cross_check(const PoissonBivector& pi, int cap);

} // namespace algc

#endif
