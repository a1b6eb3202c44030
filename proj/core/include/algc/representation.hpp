#ifndef ALGC_REPRESENTATION_HPP
#define ALGC_REPRESENTATION_HPP

#include "algc/algebroid.hpp"

namespace algc {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_matrix_zero(const std::vector<std::string>& chart, int rows, int cols);
PolyMatrix poly_matrix_identity(const std::vector<std::string>& chart, int n);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scaled(const PolyMatrix& a, const Rational& c);
PolyMatrix transposed(const PolyMatrix& a);
Polynomial trace(const PolyMatrix& a);
bool is_zero(const PolyMatrix& a);
Polynomial poly_det(const PolyMatrix& a);
PolyMatrix poly_adjugate(const PolyMatrix& a); // adj(A) with A*adj(A) = det(A)*I
// Entrywise anchor derivative rho(e_i)(.).
PolyMatrix anchor_applied(const AlgebroidPtr& a, int i, const PolyMatrix& m);

// A representation on a frame-presented bundle: the infinitesimal action is
// L_{e_i}(s) = rho(e_i)(s) + omega_i * s on coefficient columns. Complex
// representations carry the matrices as real/imaginary pairs.
class Representation {
public:
    Representation(AlgebroidPtr algebroid, int rank, std::vector<PolyMatrix> connection_re,
                   std::vector<PolyMatrix> connection_im = {});

    const AlgebroidPtr& algebroid() const { return algebroid_; }
    int rank() const { return rank_; }
    bool is_complex() const { return !conn_im_.empty(); }

    const PolyMatrix& connection(int i) const { return conn_re_[static_cast<size_t>(i)]; }
    const PolyMatrix& connection_im(int i) const;

    // L_{e_i} on a real coefficient column.
    std::vector<Polynomial> act(int i, const std::vector<Polynomial>& column) const;

    bool validated() const { return validated_; }
    void mark_validated() const { validated_ = true; }

private:
    AlgebroidPtr algebroid_;
    int rank_;
    std::vector<PolyMatrix> conn_re_;
    std::vector<PolyMatrix> conn_im_;
    mutable bool validated_ = false;
};

using RepPtr = std::shared_ptr<const Representation>;

RepPtr make_representation(AlgebroidPtr algebroid, int rank, std::vector<PolyMatrix> connection_re,
                           std::vector<PolyMatrix> connection_im = {});

// Trivial line bundle (rank 1, zero connection): the coefficients of
// ordinary scalar cochains.
RepPtr trivial_representation(const AlgebroidPtr& a);

// Curvature of every frame pair:
//   R_ij = rho(e_i)(w_j) - rho(e_j)(w_i) + w_i w_j - w_j w_i - sum_k c_ij^k w_k.
// Valid iff every R_ij vanishes identically. Marks the representation.
ValidationReport validate_representation(const RepPtr& e);

void require_validated(const RepPtr& e);

// Dual: -w^T in the dual frame (conjugate-transpose with negation when
// complex).
RepPtr dual_representation(const RepPtr& e);
RepPtr direct_sum(const RepPtr& e, const RepPtr& f);
RepPtr tensor_product(const RepPtr& e, const RepPtr& f);

// Symmetric fiber metric with nonzero determinant, positive at the chart
// origin.
struct Metric {
    RepPtr rep;
    PolyMatrix h;

    Metric(RepPtr r, PolyMatrix entries);
};

} // namespace algc

#endif
