#include "algc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace algc {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

Polynomial Polynomial::constant(std::vector<std::string> coords, const Rational& c) {
    Polynomial p(std::move(coords));
    if (c != 0) p.terms_[Exponents(p.coords_.size(), 0)] = c;
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& coords, const std::string& name) {
    auto it = std::find(coords.begin(), coords.end(), name);
    if (it == coords.end()) throw AlignmentError("unknown coordinate '" + name + "'");
    Exponents e(coords.size(), 0);
    e[static_cast<size_t>(it - coords.begin())] = 1;
    return monomial(coords, std::move(e), 1);
}

Polynomial Polynomial::monomial(std::vector<std::string> coords, Exponents e, const Rational& c) {
    Polynomial p(std::move(coords));
    if (e.size() != p.coords_.size()) throw AlignmentError("exponent length mismatch");
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

Rational Polynomial::constant_term() const {
    Exponents zero(coords_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::string> merge_charts(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out;
    size_t i = 0, j = 0;
    auto in = [](const std::vector<std::string>& v, const std::string& s, size_t from) {
        return std::find(v.begin() + static_cast<long>(from), v.end(), s) != v.end();
    };
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            out.push_back(a[i]);
            ++i, ++j;
        } else if (i < a.size() && !in(b, a[i], j)) {
            out.push_back(a[i++]);
        } else if (j < b.size() && !in(a, b[j], i)) {
            out.push_back(b[j++]);
        } else if (i < a.size() && j < b.size()) {
            // a[i] occurs later in b and b[j] occurs later in a: the two
            // declared orders disagree on the shared names.
            throw AlignmentError("coordinate orders disagree on '" + a[i] + "'/'" + b[j] + "'");
        } else {
            throw AlignmentError("coordinate alignment failed");
        }
    }
    return out;
}

Polynomial Polynomial::on_chart(const std::vector<std::string>& coords) const {
    if (coords == coords_) return *this;
    std::vector<int> pos(coords_.size(), -1);
    for (size_t k = 0; k < coords_.size(); ++k) {
        auto it = std::find(coords.begin(), coords.end(), coords_[k]);
        if (it == coords.end())
            throw AlignmentError("coordinate '" + coords_[k] + "' missing from target chart");
        pos[k] = static_cast<int>(it - coords.begin());
    }
    Polynomial out(coords);
    for (const auto& [e, c] : terms_) {
        Exponents ne(coords.size(), 0);
        for (size_t k = 0; k < e.size(); ++k) ne[static_cast<size_t>(pos[k])] = e[k];
        out.terms_[std::move(ne)] = c;
    }
    return out;
}

std::pair<Polynomial, Polynomial> aligned(const Polynomial& a, const Polynomial& b) {
    if (a.coords_ == b.coords_) return {a, b};
    auto merged = merge_charts(a.coords_, b.coords_);
    return {a.on_chart(merged), b.on_chart(merged)};
}

Polynomial Polynomial::operator-() const {
    Polynomial out(coords_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    auto [a, b] = aligned(*this, o);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    auto [a, b] = aligned(*this, o);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    *this = *this + o;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    *this = *this - o;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    auto [a, b] = aligned(*this, o);
    Polynomial out(a.coords_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (coords_ == o.coords_) return terms_ == o.terms_;
    auto [a, b] = aligned(*this, o);
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(coords_);
    if (c == 0) return out;
    for (const auto& [e, t] : terms_) out.terms_[e] = t * c;
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    Polynomial out = constant(coords_, 1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Polynomial Polynomial::derivative(const std::string& coord) const {
    auto it = std::find(coords_.begin(), coords_.end(), coord);
    if (it == coords_.end()) throw AlignmentError("unknown coordinate '" + coord + "'");
    return derivative(static_cast<size_t>(it - coords_.begin()));
}

Polynomial Polynomial::derivative(size_t k) const {
    Polynomial out(coords_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents ne = e;
        ne[k] -= 1;
        out.add_term(ne, c * e[k]);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != coords_.size()) throw Error("evaluation point arity mismatch");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (size_t k = 0; k < e.size(); ++k)
            for (int i = 0; i < e[k]; ++i) m *= point[k];
        acc += m;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
    if (subs.size() != coords_.size()) throw Error("substitution arity mismatch");
    std::vector<std::string> target = subs.empty() ? std::vector<std::string>{} : subs[0].coordinates();
    for (const auto& s : subs)
        if (s.coordinates() != target) throw AlignmentError("substitutions on mixed charts");
    Polynomial out(target);
    // Powers are memoized per coordinate; exponents at desk scale are small.
    std::vector<std::vector<Polynomial>> powers(subs.size());
    auto power = [&](size_t k, int e) -> const Polynomial& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * subs[k]);
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [e, c] : terms_) {
        Polynomial m = Polynomial::constant(target, c);
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) m = m * power(k, e[k]);
        out += m;
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    auto [num, den] = aligned(*this, divisor);
    if (den.is_zero()) return std::nullopt;
    Polynomial q(num.coords_);
    Polynomial r = num;
    const auto& dlead = *den.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        Exponents e(rlead.first.size());
        for (size_t k = 0; k < e.size(); ++k) {
            e[k] = rlead.first[k] - dlead.first[k];
            if (e[k] < 0) return std::nullopt;
        }
        Rational c = rlead.second / dlead.second;
        Polynomial t = Polynomial::monomial(num.coords_, e, c);
        q += t;
        r -= t * den;
    }
    return q;
}

namespace {

void print_monomial(std::ostringstream& os, const std::vector<std::string>& coords,
                    const Exponents& e, const Rational& c) {
    Rational a = c < 0 ? -c : c;
    bool has_vars = total_degree(e) > 0;
    bool wrote = false;
    if (a != 1 || !has_vars) {
        os << a.str();
        wrote = true;
    }
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (wrote) os << "*";
        wrote = true;
        os << coords[k];
        if (e[k] > 1) os << "^" << e[k];
    }
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest graded-lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        print_monomial(os, coords_, e, c);
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return s[i++];
    }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& coords) {
    Lexer lx{text};
    Polynomial out(coords);
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign *= (c == '-') ? -1 : 1;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError("expected '+' or '-' near position " + std::to_string(lx.i));
        // One term: optional coefficient, then '*'-joined powers.
        Rational coef = 1;
        Exponents e(coords.size(), 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (true) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                if (!expect_factor) break;
                std::string num;
                while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) num += lx.get();
                if (lx.peek() == '/') {
                    lx.get();
                    std::string den;
                    while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) den += lx.get();
                    if (den.empty()) throw ParseError("missing denominator");
                    coef *= parse_rational(num + "/" + den);
                } else {
                    coef *= parse_rational(num);
                }
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                if (!expect_factor) break;
                std::string name;
                while (!lx.eof() &&
                       (std::isalnum(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_'))
                    name += lx.get();
                auto it = std::find(coords.begin(), coords.end(), name);
                if (it == coords.end()) throw ParseError("unknown coordinate '" + name + "'");
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    std::string pw;
                    if (lx.peek() == '-') throw ParseError("negative exponent");
                    while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) pw += lx.get();
                    if (pw.empty()) throw ParseError("missing exponent");
                    exp = std::stoi(pw);
                }
                e[static_cast<size_t>(it - coords.begin())] += exp;
                saw_factor = true;
            } else if (p == '*') {
                lx.get();
                expect_factor = true;
                continue;
            } else {
                break;
            }
            expect_factor = false;
            if (lx.peek() == '*') {
                lx.get();
                expect_factor = true;
            }
        }
        if (!saw_factor) throw ParseError("empty term in '" + text + "'");
        out.add_term(e, sign * coef);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !out.is_zero()) throw ParseError("dangling sign in '" + text + "'");
    return out;
}

namespace {

void enumerate_weight(int n, int weight, Exponents& cur, size_t k, std::vector<Exponents>& out) {
    if (k + 1 == static_cast<size_t>(n)) {
        cur[k] = weight;
        out.push_back(cur);
        return;
    }
    for (int e = weight; e >= 0; --e) {
        cur[k] = e;
        enumerate_weight(n, weight - e, cur, k + 1, out);
    }
}

} // namespace

std::vector<Exponents> monomial_basis(int n_coords, int weight) {
    if (weight < 0) throw Error("negative monomial weight");
    std::vector<Exponents> out;
    if (n_coords == 0) {
        if (weight == 0) out.push_back({});
        return out;
    }
    Exponents cur(static_cast<size_t>(n_coords), 0);
    enumerate_weight(n_coords, weight, cur, 0, out);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<Exponents> monomials_up_to(int n_coords, int cap) {
    std::vector<Exponents> out;
    for (int w = 0; w <= cap; ++w) {
        auto block = monomial_basis(n_coords, w);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace algc
