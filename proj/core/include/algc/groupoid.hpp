#ifndef ALGC_GROUPOID_HPP
#define ALGC_GROUPOID_HPP

#include "algc/cochain.hpp"

namespace algc {

class GroupoidChart;
using GroupoidPtr = std::shared_ptr<const GroupoidChart>;

// Chart presentation of a Lie groupoid from one of two polynomial
// families. Conventions: an arrow is drawn tail -> head, beta is the head,
// alpha the tail, and strings g_1..g_p compose along alpha(g_i) =
// beta(g_{i+1}) with the head of the string at beta(g_1).
//
//   Pair(n):          arrows (x, y) meaning y -> x over M = R^n;
//                     beta = x, alpha = y, m((x,y),(y,z)) = (x,z).
//   AbelianAction:    arrows (v, x) in R^k x R^n with beta = x and
//                     alpha = a(v, x) for a polynomial action of (R^k, +);
//                     m((v,x),(w,y)) = (v+w, x) when a(v,x) = y.
//
// The groupoid axioms (unit, associativity, inverse laws, and for the
// action family a(0,x) = x and a(v,a(w,x)) = a(v+w,x)) are checked as
// polynomial identities at construction.
class GroupoidChart {
public:
    enum class Family { Pair, AbelianAction };

    static GroupoidPtr pair_groupoid(int base_dim);
    // `action` lists the n components of a(v, x) over the chart
    // (v1..vk, x1..xn).
    static GroupoidPtr abelian_action(int group_dim, int base_dim,
                                      std::vector<Polynomial> action);

    Family family() const { return family_; }
    int base_dim() const { return n_; }
    int group_dim() const { return k_; }
    const std::vector<std::string>& base_chart() const { return base_chart_; }

    // The derived algebroid: TM for the pair family, the action algebroid
    // (anchor = action vector fields, zero bracket) for the action family.
    const AlgebroidPtr& algebroid() const { return algebroid_; }

    // Coordinates of the degree-p nerve chart: pair p>=1 uses blocks
    // x{i}_{j}, i = 0..p; action p>=1 uses v{i}_{a}, i = 1..p, then the base
    // block. Degree 0 is the base chart itself.
    std::vector<std::string> nerve_chart(int p) const;
    // The arrows g_1..g_p of a nerve point, one coordinate vector per arrow.
    std::vector<std::vector<Polynomial>> nerve_arrows(int p) const;
    // beta_p, the head of the string.
    std::vector<Polynomial> nerve_head(int p) const;

    // Substitution (over the nerve-(p+1) chart) realizing face `i` of the
    // groupoid differential on degree-p cochains: i = 0 drops g_1, i = 1..p
    // merges g_i g_{i+1}, i = p+1 drops the last arrow. For p = 0, face 0
    // is beta and face 1 is alpha.
    std::vector<Polynomial> face_substitution(int p, int face) const;

    const std::vector<Polynomial>& action_map() const { return action_; }

private:
    Family family_ = Family::Pair;
    int n_ = 0;
    int k_ = 0;
    std::vector<std::string> base_chart_;
    std::vector<Polynomial> action_;
    AlgebroidPtr algebroid_;

    void check_axioms() const;
    friend struct GroupoidChartAccess;
};

// Polynomial function on the degree-p nerve chart (trivial coefficients).
class GroupoidCochain {
public:
    GroupoidCochain(GroupoidPtr groupoid, int degree, Polynomial value);

    const GroupoidPtr& groupoid() const { return groupoid_; }
    int degree() const { return degree_; }
    const Polynomial& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    GroupoidCochain operator+(const GroupoidCochain& o) const;
    GroupoidCochain operator-(const GroupoidCochain& o) const;
    bool operator==(const GroupoidCochain& o) const;

private:
    GroupoidPtr groupoid_;
    int degree_;
    Polynomial value_;
};

// Simplicial differential: (dc)(g_1..g_{p+1}) = c(g_2..g_{p+1})
//   + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{p+1} c(g_1..g_p);
// degree 0: (dc)(g) = c(beta g) - c(alpha g).
GroupoidCochain groupoid_differential(const GroupoidCochain& c);

// (c1 u c2)(g_1..g_{p+q}) = c1(g_1..g_p) * c2(g_{p+1}..g_{p+q}).
GroupoidCochain cup_product(const GroupoidCochain& c1, const GroupoidCochain& c2);

// Derivative at the unit along the right-invariant extension of a section:
// the first arrow slot is perturbed to first order and the t-coefficient
// extracted with a jet.
GroupoidCochain r_x(const GroupoidCochain& c, const Section& x);

// Van Est map: Phi(c)(X_1..X_p) = sum_{sigma} sign(sigma)
// R_{X_sigma(p)} ... R_{X_sigma(1)}(c); degree 0 is restriction to units.
AlgebroidCochain van_est(const GroupoidCochain& c);
// Same alternating sum evaluated on arbitrary sections.
Polynomial van_est_eval(const GroupoidCochain& c, const std::vector<Section>& args);

struct HarnessReport {
    bool pass = true;
    int trials = 0;
    unsigned seed = 0;
    int chain_sign = 0; // the single global sign s, 0 while undetermined
    std::string counterexample;
};

// Randomized verification of the chain-map identity Phi(d_G c) =
// s * d(Phi(c)) with one global sign, of the first-slot-independence
// vanishing, and of the recursion identity
// sum_i (-1)^{i+1} Phi(R_{X_i} c)(.., ^X_i, ..) = Phi(c)(X_1..X_{p+1}).
HarnessReport property_harness(const GroupoidPtr& g, int trials, unsigned seed, int max_degree,
                               int max_poly_degree);

struct SurjectivityWitness {
    int coordinate = 0;
    int sign = 0; // c = sign * (x0_i - x1_i) maps onto the coordinate covector
    bool ok = false;
};

// Degree-1 witnesses on the pair groupoid: c(x, y) = +-(x_i - y_i) maps to
// the coordinate 1-forms exactly.
std::vector<SurjectivityWitness> surjectivity_witnesses(const GroupoidPtr& g);

} // namespace algc

#endif
