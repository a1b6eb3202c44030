#ifndef ALGC_COCHAIN_HPP
#define ALGC_COCHAIN_HPP

#include "algc/representation.hpp"

namespace algc {

// Degree-p alternating form with polynomial components, stored on strictly
// increasing frame multi-indices only. Coefficients are either trivial
// (rank one, zero connection) or a validated real representation.
//
// Sign conventions. The differential follows the source convention
//   d(w)(X_1..X_{p+1}) = sum_{i<j} (-1)^{i+j-1} w([X_i,X_j], .., ^i, .., ^j, ..)
//                      + sum_i    (-1)^i       L_{X_i}(w(.., ^i, ..)),
// which is the global negative of the most common Chevalley-Eilenberg
// convention. To keep the Cartan relations C1-C4 in their usual form
// alongside this d, the interior product is i_X(w) = -w(X, ...) and the
// Lie derivative is L_X(w)(..) = L_X(w(..)) - sum_i w(.., [X,X_i], ..);
// d i_X + i_X d = L_X, [L_X,L_Y] = L_{[X,Y]}, [L_X,i_Y] = i_{[X,Y]} and
// i_X i_Y + i_Y i_X = 0 all hold exactly (the randomized suites check them).
class AlgebroidCochain {
public:
    AlgebroidCochain(AlgebroidPtr algebroid, int degree, RepPtr coefficients = nullptr);

    const AlgebroidPtr& algebroid() const { return algebroid_; }
    int degree() const { return degree_; }
    // Null for trivial coefficients.
    const RepPtr& coefficients() const { return coefficients_; }
    int coeff_rank() const { return coefficients_ ? coefficients_->rank() : 1; }

    const std::map<std::vector<int>, std::vector<Polynomial>>& components() const {
        return components_;
    }
    void set_component(std::vector<int> tuple, std::vector<Polynomial> values);
    void add_component(const std::vector<int>& tuple, const std::vector<Polynomial>& values);
    // Zero vector when the tuple is absent. Tuple must be increasing.
    std::vector<Polynomial> component(const std::vector<int>& tuple) const;
    // Arbitrary index order; antisymmetry supplies the sign.
    std::vector<Polynomial> evaluate(std::vector<int> tuple) const;
    // Full multilinear evaluation on sections.
    std::vector<Polynomial> evaluate_sections(const std::vector<Section>& args) const;

    bool is_zero() const;
    AlgebroidCochain operator+(const AlgebroidCochain& o) const;
    AlgebroidCochain operator-(const AlgebroidCochain& o) const;
    AlgebroidCochain scaled(const Rational& c) const;
    AlgebroidCochain scaled(const Polynomial& f) const;
    bool operator==(const AlgebroidCochain& o) const;
    bool operator!=(const AlgebroidCochain& o) const { return !(*this == o); }

    int max_component_degree() const; // -1 when zero

private:
    AlgebroidPtr algebroid_;
    int degree_;
    RepPtr coefficients_;
    std::map<std::vector<int>, std::vector<Polynomial>> components_;
};

// Orders a tuple, returning (sign, increasing tuple); sign 0 on repeats.
std::pair<int, std::vector<int>> normalize_tuple(std::vector<int> tuple);

AlgebroidCochain differential(const AlgebroidCochain& w);

// Shuffle wedge without factorial normalization. Pairings: trivial*trivial,
// trivial*E (either side), and E*F valued in the tensor product.
AlgebroidCochain wedge(const AlgebroidCochain& a, const AlgebroidCochain& b);

// Trivial coefficients only.
AlgebroidCochain lie_derivative(const Section& x, const AlgebroidCochain& w);
AlgebroidCochain interior_product(const Section& x, const AlgebroidCochain& w);

// Lift along pullback_algebroid(A, k): components copied on the lifted
// frame indices, zero on any fiber index. Trivial coefficients only.
AlgebroidCochain pullback_cochain(const AlgebroidCochain& w, const AlgebroidPtr& pullback);

// gl-valued cochain with the matrix product as wedge pairing; carries the
// curvature and connection-correction forms of the characteristic classes.
class MatrixCochain {
public:
    MatrixCochain(AlgebroidPtr algebroid, int degree, int size);

    const AlgebroidPtr& algebroid() const { return algebroid_; }
    int degree() const { return degree_; }
    int size() const { return size_; }
    const std::map<std::vector<int>, PolyMatrix>& components() const { return components_; }
    void set_component(std::vector<int> tuple, PolyMatrix value);
    void add_component(const std::vector<int>& tuple, const PolyMatrix& value);
    PolyMatrix component(const std::vector<int>& tuple) const;
    bool is_zero() const;

private:
    AlgebroidPtr algebroid_;
    int degree_;
    int size_;
    std::map<std::vector<int>, PolyMatrix> components_;
};

MatrixCochain wedge(const MatrixCochain& a, const MatrixCochain& b);
MatrixCochain wedge_power(const MatrixCochain& a, int n);
AlgebroidCochain trace_cochain(const MatrixCochain& a);

// Cochain literal syntax: {"e1^e3": "x", ...} with frame names joined by
// '^'; E-valued components are arrays of polynomial strings. The key "1"
// stands for the empty multi-index of a degree-0 cochain.
std::string cochain_literal(const AlgebroidCochain& w);
AlgebroidCochain parse_cochain_literal(const AlgebroidPtr& a, int degree, RepPtr coefficients,
                                       const std::string& text);

} // namespace algc

#endif
