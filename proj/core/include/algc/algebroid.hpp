#ifndef ALGC_ALGEBROID_HPP
#define ALGC_ALGEBROID_HPP

#include "algc/polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace algc {

class LieAlgebroid;
using AlgebroidPtr = std::shared_ptr<const LieAlgebroid>;

struct ValidationIssue {
    std::string check;        // "jacobi", "anchor", "curvature", ...
    std::vector<int> indices; // offending frame indices (0-based)
    std::string detail;       // the nonzero polynomial, printed
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
};

// A Lie algebroid presented on a single affine chart: global frame
// e_1..e_r, anchor rows rho(e_i) in chart coordinates, and structure
// functions [e_i,e_j] = sum_k c_{ij}^k e_k stored for i<j only.
class LieAlgebroid {
public:
    LieAlgebroid(std::vector<std::string> chart, std::vector<std::string> frame,
                 std::vector<std::vector<Polynomial>> anchor,
                 std::map<std::pair<int, int>, std::vector<Polynomial>> brackets);

    const std::vector<std::string>& chart() const { return chart_; }
    const std::vector<std::string>& frame() const { return frame_; }
    int dim() const { return static_cast<int>(chart_.size()); }
    int rank() const { return static_cast<int>(frame_.size()); }

    // rho(e_i) as a coordinate row.
    const std::vector<Polynomial>& anchor_row(int i) const { return anchor_[static_cast<size_t>(i)]; }
    // rho(e_i)(f), the anchor derivative of a chart function.
    Polynomial anchor_apply(int i, const Polynomial& f) const;

    // Coefficients of [e_i, e_j] in the frame; sign handled for i >= j.
    std::vector<Polynomial> frame_bracket(int i, int j) const;
    const std::map<std::pair<int, int>, std::vector<Polynomial>>& bracket_table() const {
        return brackets_;
    }

    int frame_index(const std::string& name) const;

    bool validated() const { return validated_; }
    void mark_validated() const { validated_ = true; }

    Polynomial zero() const { return Polynomial(chart_); }
    Polynomial constant(const Rational& c) const { return Polynomial::constant(chart_, c); }

private:
    std::vector<std::string> chart_;
    std::vector<std::string> frame_;
    std::vector<std::vector<Polynomial>> anchor_;
    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets_;
    mutable bool validated_ = false;
};

AlgebroidPtr make_algebroid(std::vector<std::string> chart, std::vector<std::string> frame,
                            std::vector<std::vector<Polynomial>> anchor,
                            std::map<std::pair<int, int>, std::vector<Polynomial>> brackets);

// X = sum_i coeffs[i] e_i.
struct Section {
    AlgebroidPtr algebroid;
    std::vector<Polynomial> coeffs;

    Section(AlgebroidPtr a, std::vector<Polynomial> c);
    static Section frame_element(const AlgebroidPtr& a, int i);
};

// [X, Y] via the Leibniz expansion over the frame brackets.
Section bracket_sections(const Section& x, const Section& y);

// Jacobi on all frame triples (with the anchor-derivative terms included)
// plus the anchor-morphism identity rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
// Marks the algebroid validated when the report is clean.
ValidationReport validate_algebroid(const AlgebroidPtr& a);

void require_validated(const AlgebroidPtr& a);

} // namespace algc

#endif
