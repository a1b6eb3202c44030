#ifndef ALGC_COHOMOLOGY_HPP
#define ALGC_COHOMOLOGY_HPP

#include "algc/cochain.hpp"
#include "algc/linalg.hpp"

#include <optional>

namespace algc {

// Finite model of C^p(g;E): ordered triples (increasing frame multi-index,
// monomial, representation component). Monomials are either every exponent
// of total degree <= cap or the exact-weight block.
class TruncatedBasis {
public:
    static TruncatedBasis capped(AlgebroidPtr a, RepPtr e, int degree, int cap);
    static TruncatedBasis weighted(AlgebroidPtr a, RepPtr e, int degree, int weight);

    int size() const { return static_cast<int>(tuples_.size() * monomials_.size()) * rep_rank_; }
    int degree() const { return degree_; }
    const AlgebroidPtr& algebroid() const { return algebroid_; }
    const RepPtr& coefficients() const { return coefficients_; }

    // -1 when the (tuple, monomial, component) triple lies outside the basis.
    int index_of(const std::vector<int>& tuple, const Exponents& mono, int comp) const;
    AlgebroidCochain element(int index) const;
    AlgebroidCochain combine(const std::vector<Rational>& coords) const;
    // Coordinates of a cochain; nullopt when a component leaves the basis.
    std::optional<std::vector<Rational>> coordinates(const AlgebroidCochain& w) const;

    // Deterministic reshuffle used by the basis-independence checks.
    TruncatedBasis shuffled(unsigned seed) const;

private:
    AlgebroidPtr algebroid_;
    RepPtr coefficients_;
    int degree_ = 0;
    int rep_rank_ = 1;
    std::vector<std::vector<int>> tuples_;
    std::vector<Exponents> monomials_;
    std::vector<int> order_; // permutation: dense slot -> basis position
    std::vector<int> inverse_order_;

    void build_order();
    int dense_index(size_t tuple_idx, size_t mono_idx, int comp) const;
};

struct BoundaryMatrix {
    SparseRationalMatrix matrix; // columns over the source, rows over the target
    bool overflow = false;
    std::string overflow_detail; // minimal failing component, printed
};

// Matrix of the differential between two truncated bases of consecutive
// degrees. An image component that leaves the target basis sets the
// overflow flag instead of being dropped silently.
BoundaryMatrix assemble_boundary(const TruncatedBasis& source, const TruncatedBasis& target);
BoundaryMatrix assemble_boundary(const AlgebroidPtr& a, const RepPtr& e, int degree, int cap);

struct BettiRow {
    int degree = 0;
    int dim = 0;
    int kernel = 0;
    int image_prev = 0;
    int betti = 0;
};

struct BettiReport {
    std::vector<BettiRow> rows;
    int cap = 0;
    std::vector<std::string> flags; // "graded", "filtered", "capped", "weight:w"
    bool graded = false;
};

// Exact Betti table of the degree-capped subcomplex. Throws DegreeOverflow
// (with the minimal failing component) when d leaves the cap.
BettiReport betti(const AlgebroidPtr& a, const RepPtr& e, int p_max, int cap);
// Single exact-weight block.
BettiReport betti_weight_block(const AlgebroidPtr& a, const RepPtr& e, int p_max, int weight);

struct PrimitiveResult {
    bool exact = false;
    std::optional<AlgebroidCochain> primitive;
    int cap = 0; // NotExact is certified relative to this cap only
};

// Solves d(eta) = z with eta capped at `cap`. The target side of the solve
// is never truncated, so a returned primitive is exact by construction
// (and re-checked symbolically). Requires d(z) = 0.
PrimitiveResult find_primitive(const AlgebroidPtr& a, const RepPtr& e, const AlgebroidCochain& z,
                               int cap);

// H*(g, k) for a Lie algebra presented over a point: cohomology of the
// subcomplex of k-basic elements (killed by i_v and L_v for v in the
// k-frame). Lie-algebra invariance stands in for group invariance.
BettiReport relative_basic_cohomology(const AlgebroidPtr& g, const std::vector<int>& k_indices);

} // namespace algc

#endif
