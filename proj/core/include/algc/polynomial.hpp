#ifndef ALGC_POLYNOMIAL_HPP
#define ALGC_POLYNOMIAL_HPP

#include "algc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace algc {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Graded lexicographic order on exponent vectors over the declared
// coordinate order. This is the canonical term order of the engine:
// serialization, equality and basis enumeration all use it.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

using TermMap = std::map<Exponents, Rational, GradedLexLess>;

// Exact multivariate polynomial over named chart coordinates.
// Invariants: no zero coefficients stored; every exponent vector has
// length == coordinates().size(); term order is canonical graded-lex.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> coords) : coords_(std::move(coords)) {}

    static Polynomial constant(std::vector<std::string> coords, const Rational& c);
    static Polynomial variable(const std::vector<std::string>& coords, const std::string& name);
    static Polynomial monomial(std::vector<std::string> coords, Exponents e, const Rational& c);

    const std::vector<std::string>& coordinates() const { return coords_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Degree of the zero polynomial is -1.
    int degree() const;
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int k) const;

    Polynomial derivative(const std::string& coord) const;
    Polynomial derivative(size_t coord_index) const;

    // Evaluation at a rational point (one value per coordinate).
    Rational evaluate(const std::vector<Rational>& point) const;

    // Substitutes each coordinate by the polynomial of the same index; all
    // substitution polynomials must live on one common target chart.
    Polynomial substitute(const std::vector<Polynomial>& subs) const;

    // Re-expresses the polynomial on a chart containing all current
    // coordinates (by name). Throws AlignmentError on a missing name.
    Polynomial on_chart(const std::vector<std::string>& coords) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    std::string str() const;
    static Polynomial parse(const std::string& text, const std::vector<std::string>& coords);

    void add_term(const Exponents& e, const Rational& c);

private:
    std::vector<std::string> coords_;
    TermMap terms_;

    static void align(Polynomial& a, Polynomial& b);
    friend std::pair<Polynomial, Polynomial> aligned(const Polynomial& a, const Polynomial& b);
};

std::pair<Polynomial, Polynomial> aligned(const Polynomial& a, const Polynomial& b);

// Merges two coordinate lists that must order shared names consistently.
std::vector<std::string> merge_charts(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b);

// All exponent vectors of exact total degree `weight` over `n_coords`
// coordinates, in graded-lex order. Size C(n+w-1, w).
std::vector<Exponents> monomial_basis(int n_coords, int weight);

// All exponent vectors of total degree <= cap, weight by weight.
std::vector<Exponents> monomials_up_to(int n_coords, int cap);

Int binomial(int n, int k);

} // namespace algc

#endif
