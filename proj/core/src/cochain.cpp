#include "algc/cochain.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace algc {

std::pair<int, std::vector<int>> normalize_tuple(std::vector<int> tuple) {
    int sign = 1;
    for (size_t i = 1; i < tuple.size(); ++i) {
        size_t j = i;
        while (j > 0 && tuple[j] < tuple[j - 1]) {
            std::swap(tuple[j], tuple[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i] == tuple[i - 1]) return {0, {}};
    return {sign, std::move(tuple)};
}

AlgebroidCochain::AlgebroidCochain(AlgebroidPtr algebroid, int degree, RepPtr coefficients)
    : algebroid_(std::move(algebroid)), degree_(degree), coefficients_(std::move(coefficients)) {
    if (degree_ < 0) throw Error("negative cochain degree");
    if (coefficients_) {
        if (coefficients_->algebroid() != algebroid_)
            throw Error("coefficient representation lives on a different algebroid");
        if (coefficients_->is_complex())
            throw Error("cochains carry trivial or real coefficients");
        require_validated(coefficients_);
    }
}

void AlgebroidCochain::set_component(std::vector<int> tuple, std::vector<Polynomial> values) {
    if (static_cast<int>(tuple.size()) != degree_) throw Error("tuple length must equal degree");
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] >= tuple[i + 1]) throw Error("component tuples must be strictly increasing");
    for (int i : tuple)
        if (i < 0 || i >= algebroid_->rank()) throw Error("frame index out of range");
    if (static_cast<int>(values.size()) != coeff_rank()) throw Error("component arity mismatch");
    bool zero = true;
    for (auto& p : values) {
        p = p.on_chart(algebroid_->chart());
        zero = zero && p.is_zero();
    }
    if (zero)
        components_.erase(tuple);
    else
        components_[std::move(tuple)] = std::move(values);
}

void AlgebroidCochain::add_component(const std::vector<int>& tuple,
                                     const std::vector<Polynomial>& values) {
    auto cur = component(tuple);
    for (size_t i = 0; i < cur.size(); ++i) cur[i] += values[i];
    set_component(tuple, std::move(cur));
}

std::vector<Polynomial> AlgebroidCochain::component(const std::vector<int>& tuple) const {
    auto it = components_.find(tuple);
    if (it != components_.end()) return it->second;
    return std::vector<Polynomial>(static_cast<size_t>(coeff_rank()), algebroid_->zero());
}

std::vector<Polynomial> AlgebroidCochain::evaluate(std::vector<int> tuple) const {
    auto [sign, sorted] = normalize_tuple(std::move(tuple));
    if (sign == 0)
        return std::vector<Polynomial>(static_cast<size_t>(coeff_rank()), algebroid_->zero());
    auto vals = component(sorted);
    if (sign < 0)
        for (auto& p : vals) p = -p;
    return vals;
}

std::vector<Polynomial> AlgebroidCochain::evaluate_sections(const std::vector<Section>& args) const {
    if (static_cast<int>(args.size()) != degree_) throw Error("argument count must equal degree");
    for (const auto& s : args)
        if (s.algebroid != algebroid_) throw Error("section on a different algebroid");
    std::vector<Polynomial> out(static_cast<size_t>(coeff_rank()), algebroid_->zero());
    const int r = algebroid_->rank();
    if (degree_ > r) return out;
    std::vector<int> idx(args.size(), 0);
    // r^p multilinear expansion; desk-scale ranks keep this tiny.
    while (true) {
        Polynomial factor = algebroid_->constant(1);
        bool zero = false;
        for (size_t k = 0; k < args.size(); ++k) {
            const Polynomial& c = args[k].coeffs[static_cast<size_t>(idx[k])];
            if (c.is_zero()) {
                zero = true;
                break;
            }
            factor = factor * c;
        }
        if (!zero) {
            auto vals = evaluate(idx);
            for (size_t s = 0; s < out.size(); ++s)
                if (!vals[s].is_zero()) out[s] += factor * vals[s];
        }
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == r) idx[k++] = 0;
        if (k == idx.size() && !idx.empty()) break;
        if (idx.empty()) break;
    }
    return out;
}

bool AlgebroidCochain::is_zero() const { return components_.empty(); }

AlgebroidCochain AlgebroidCochain::operator+(const AlgebroidCochain& o) const {
    if (algebroid_ != o.algebroid_ || degree_ != o.degree_ || coefficients_ != o.coefficients_)
        throw Error("cochain shape mismatch");
    AlgebroidCochain out = *this;
    for (const auto& [t, v] : o.components_) out.add_component(t, v);
    return out;
}

AlgebroidCochain AlgebroidCochain::operator-(const AlgebroidCochain& o) const {
    return *this + o.scaled(Rational(-1));
}

AlgebroidCochain AlgebroidCochain::scaled(const Rational& c) const {
    AlgebroidCochain out(algebroid_, degree_, coefficients_);
    if (c == 0) return out;
    for (const auto& [t, v] : components_) {
        auto nv = v;
        for (auto& p : nv) p = p.scaled(c);
        out.components_[t] = std::move(nv);
    }
    return out;
}

AlgebroidCochain AlgebroidCochain::scaled(const Polynomial& f) const {
    AlgebroidCochain out(algebroid_, degree_, coefficients_);
    for (const auto& [t, v] : components_) {
        auto nv = v;
        for (auto& p : nv) p = p * f;
        out.set_component(t, std::move(nv));
    }
    return out;
}

bool AlgebroidCochain::operator==(const AlgebroidCochain& o) const {
    if (algebroid_ != o.algebroid_ || degree_ != o.degree_) return false;
    return (*this - o).is_zero();
}

int AlgebroidCochain::max_component_degree() const {
    int d = -1;
    for (const auto& [t, v] : components_)
        for (const auto& p : v) d = std::max(d, p.degree());
    return d;
}

namespace {

std::vector<std::vector<int>> increasing_tuples(int r, int p) {
    std::vector<std::vector<int>> out;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    if (p > r) return out;
    std::vector<int> cur(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int k = p - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == r - p + k) --k;
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
        for (int t = k + 1; t < p; ++t)
            cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

std::vector<Polynomial> act_on_values(const AlgebroidPtr& a, const RepPtr& rep, int i,
                                      const std::vector<Polynomial>& vals) {
    if (!rep) return {a->anchor_apply(i, vals[0])};
    return rep->act(i, vals);
}

} // namespace

AlgebroidCochain differential(const AlgebroidCochain& w) {
    const auto& a = w.algebroid();
    require_validated(a);
    const int r = a->rank();
    const int p = w.degree();
    AlgebroidCochain out(a, p + 1, w.coefficients());
    if (p + 1 > r) return out; // zero cochain past the top degree
    const int m = w.coeff_rank();
    for (const auto& tuple : increasing_tuples(r, p + 1)) {
        std::vector<Polynomial> comp(static_cast<size_t>(m), a->zero());
        // Bracket terms, signs (-1)^{i+j-1} with 1-based positions.
        for (int ia = 0; ia < p + 1; ++ia) {
            for (int ib = ia + 1; ib < p + 1; ++ib) {
                auto coeffs = a->frame_bracket(tuple[static_cast<size_t>(ia)],
                                               tuple[static_cast<size_t>(ib)]);
                std::vector<int> rest;
                for (int t = 0; t < p + 1; ++t)
                    if (t != ia && t != ib) rest.push_back(tuple[static_cast<size_t>(t)]);
                int outer = ((ia + 1 + ib + 1 - 1) % 2 == 0) ? 1 : -1;
                for (int k = 0; k < r; ++k) {
                    const Polynomial& c = coeffs[static_cast<size_t>(k)];
                    if (c.is_zero()) continue;
                    std::vector<int> args;
                    args.push_back(k);
                    args.insert(args.end(), rest.begin(), rest.end());
                    auto vals = w.evaluate(std::move(args));
                    for (size_t s = 0; s < comp.size(); ++s)
                        if (!vals[s].is_zero())
                            comp[s] += (outer > 0 ? c * vals[s] : -(c * vals[s]));
                }
            }
        }
        // Action terms, signs (-1)^i with 1-based positions.
        for (int ia = 0; ia < p + 1; ++ia) {
            std::vector<int> rest;
            for (int t = 0; t < p + 1; ++t)
                if (t != ia) rest.push_back(tuple[static_cast<size_t>(t)]);
            auto vals = w.component(rest);
            bool zero = true;
            for (const auto& v : vals) zero = zero && v.is_zero();
            if (zero) continue;
            auto acted = act_on_values(a, w.coefficients(), tuple[static_cast<size_t>(ia)], vals);
            int sgn = ((ia + 1) % 2 == 0) ? 1 : -1;
            for (size_t s = 0; s < comp.size(); ++s)
                if (!acted[s].is_zero()) comp[s] += sgn > 0 ? acted[s] : -acted[s];
        }
        out.set_component(tuple, std::move(comp));
    }
    return out;
}

namespace {

// Enumerates (p,q)-shuffles of an increasing tuple with signs.
void shuffles(const std::vector<int>& tuple, int p,
              const std::function<void(int, const std::vector<int>&, const std::vector<int>&)>& f) {
    int n = static_cast<int>(tuple.size());
    std::vector<int> pick(static_cast<size_t>(p));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == p) {
            std::vector<int> left, right;
            std::vector<char> used(static_cast<size_t>(n), 0);
            for (int t : pick) used[static_cast<size_t>(t)] = 1;
            int inversions = 0;
            for (int k = 0; k < p; ++k) inversions += pick[static_cast<size_t>(k)] - k;
            for (int t = 0; t < n; ++t)
                (used[static_cast<size_t>(t)] ? left : right).push_back(tuple[static_cast<size_t>(t)]);
            f(inversions % 2 == 0 ? 1 : -1, left, right);
            return;
        }
        for (int t = start; t < n; ++t) {
            pick[static_cast<size_t>(depth)] = t;
            rec(t + 1, depth + 1);
        }
    };
    if (p == 0) {
        f(1, {}, tuple);
        return;
    }
    rec(0, 0);
}

} // namespace

AlgebroidCochain wedge(const AlgebroidCochain& a, const AlgebroidCochain& b) {
    if (a.algebroid() != b.algebroid()) throw Error("wedge over different algebroids");
    const auto& alg = a.algebroid();
    const int p = a.degree(), q = b.degree();
    RepPtr coeff;
    enum class Pairing { Scalar, ScaleRight, ScaleLeft, Tensor } pairing;
    if (!a.coefficients() && !b.coefficients()) {
        pairing = Pairing::Scalar;
    } else if (!a.coefficients()) {
        pairing = Pairing::ScaleRight;
        coeff = b.coefficients();
    } else if (!b.coefficients()) {
        pairing = Pairing::ScaleLeft;
        coeff = a.coefficients();
    } else {
        pairing = Pairing::Tensor;
        coeff = tensor_product(a.coefficients(), b.coefficients());
    }
    AlgebroidCochain out(alg, p + q, coeff);
    if (p + q > alg->rank()) return out;
    for (const auto& tuple : increasing_tuples(alg->rank(), p + q)) {
        std::vector<Polynomial> comp(static_cast<size_t>(out.coeff_rank()), alg->zero());
        shuffles(tuple, p, [&](int sign, const std::vector<int>& l, const std::vector<int>& rr) {
            auto va = a.component(l);
            auto vb = b.component(rr);
            auto add = [&](size_t idx, const Polynomial& v) {
                if (v.is_zero()) return;
                comp[idx] += sign > 0 ? v : -v;
            };
            switch (pairing) {
            case Pairing::Scalar:
                add(0, va[0] * vb[0]);
                break;
            case Pairing::ScaleRight:
                for (size_t s = 0; s < vb.size(); ++s) add(s, va[0] * vb[s]);
                break;
            case Pairing::ScaleLeft:
                for (size_t s = 0; s < va.size(); ++s) add(s, va[s] * vb[0]);
                break;
            case Pairing::Tensor:
                for (size_t s = 0; s < va.size(); ++s)
                    for (size_t t = 0; t < vb.size(); ++t)
                        add(s * vb.size() + t, va[s] * vb[t]);
                break;
            }
        });
        out.set_component(tuple, std::move(comp));
    }
    return out;
}

AlgebroidCochain lie_derivative(const Section& x, const AlgebroidCochain& w) {
    if (w.coefficients()) throw Error("Lie derivative supports trivial coefficients only");
    const auto& a = w.algebroid();
    require_validated(a);
    if (x.algebroid != a) throw Error("section on a different algebroid");
    const int r = a->rank();
    const int p = w.degree();
    AlgebroidCochain out(a, p);
    for (const auto& tuple : increasing_tuples(r, p)) {
        // L_X(w(..)) - sum_i w(.., [X, e_i], ..).
        Polynomial acc = a->zero();
        const Polynomial wt = w.component(tuple)[0];
        for (int i = 0; i < r; ++i) {
            const Polynomial& xi = x.coeffs[static_cast<size_t>(i)];
            if (xi.is_zero()) continue;
            acc += xi * a->anchor_apply(i, wt);
        }
        for (int slot = 0; slot < p; ++slot) {
            Section bracket = bracket_sections(x, Section::frame_element(a, tuple[static_cast<size_t>(slot)]));
            for (int k = 0; k < r; ++k) {
                const Polynomial& c = bracket.coeffs[static_cast<size_t>(k)];
                if (c.is_zero()) continue;
                std::vector<int> args(tuple.begin(), tuple.end());
                args[static_cast<size_t>(slot)] = k;
                acc -= c * w.evaluate(std::move(args))[0];
            }
        }
        out.set_component(tuple, {acc});
    }
    return out;
}

AlgebroidCochain interior_product(const Section& x, const AlgebroidCochain& w) {
    if (w.coefficients()) throw Error("interior product supports trivial coefficients only");
    const auto& a = w.algebroid();
    if (x.algebroid != a) throw Error("section on a different algebroid");
    const int p = w.degree();
    if (p == 0) throw Error("interior product of a degree-0 cochain");
    AlgebroidCochain out(a, p - 1);
    for (const auto& tuple : increasing_tuples(a->rank(), p - 1)) {
        Polynomial acc = a->zero();
        for (int k = 0; k < a->rank(); ++k) {
            const Polynomial& c = x.coeffs[static_cast<size_t>(k)];
            if (c.is_zero()) continue;
            std::vector<int> args;
            args.push_back(k);
            args.insert(args.end(), tuple.begin(), tuple.end());
            acc -= c * w.evaluate(std::move(args))[0];
        }
        out.set_component(tuple, {acc});
    }
    return out;
}

AlgebroidCochain pullback_cochain(const AlgebroidCochain& w, const AlgebroidPtr& pullback) {
    if (w.coefficients()) throw Error("pullback supports trivial coefficients only");
    const auto& a = w.algebroid();
    if (pullback->rank() < a->rank()) throw Error("target is not a pullback of the source");
    AlgebroidCochain out(pullback, w.degree());
    for (const auto& [tuple, vals] : w.components()) {
        out.set_component(tuple, {vals[0].on_chart(pullback->chart())});
    }
    return out;
}

MatrixCochain::MatrixCochain(AlgebroidPtr algebroid, int degree, int size)
    : algebroid_(std::move(algebroid)), degree_(degree), size_(size) {}

void MatrixCochain::set_component(std::vector<int> tuple, PolyMatrix value) {
    if (static_cast<int>(tuple.size()) != degree_) throw Error("tuple length must equal degree");
    bool zero = true;
    for (auto& row : value)
        for (auto& p : row) {
            p = p.on_chart(algebroid_->chart());
            zero = zero && p.is_zero();
        }
    if (zero)
        components_.erase(tuple);
    else
        components_[std::move(tuple)] = std::move(value);
}

void MatrixCochain::add_component(const std::vector<int>& tuple, const PolyMatrix& value) {
    auto cur = component(tuple);
    set_component(tuple, cur + value);
}

PolyMatrix MatrixCochain::component(const std::vector<int>& tuple) const {
    auto it = components_.find(tuple);
    if (it != components_.end()) return it->second;
    return poly_matrix_zero(algebroid_->chart(), size_, size_);
}

bool MatrixCochain::is_zero() const { return components_.empty(); }

MatrixCochain wedge(const MatrixCochain& a, const MatrixCochain& b) {
    if (a.algebroid() != b.algebroid() || a.size() != b.size())
        throw Error("matrix cochain shape mismatch");
    const auto& alg = a.algebroid();
    MatrixCochain out(alg, a.degree() + b.degree(), a.size());
    if (a.degree() + b.degree() > alg->rank()) return out;
    for (const auto& tuple : increasing_tuples(alg->rank(), a.degree() + b.degree())) {
        PolyMatrix comp = poly_matrix_zero(alg->chart(), a.size(), a.size());
        bool any = false;
        shuffles(tuple, a.degree(), [&](int sign, const std::vector<int>& l, const std::vector<int>& rr) {
            auto [sl, tl] = normalize_tuple(l);
            auto [sr, tr] = normalize_tuple(rr);
            if (sl == 0 || sr == 0) return;
            auto ita = a.components().find(tl);
            auto itb = b.components().find(tr);
            if (ita == a.components().end() || itb == b.components().end()) return;
            PolyMatrix prod = ita->second * itb->second;
            int s = sign * sl * sr;
            comp = (s > 0) ? comp + prod : comp - prod;
            any = true;
        });
        if (any) out.set_component(tuple, std::move(comp));
    }
    return out;
}

MatrixCochain wedge_power(const MatrixCochain& a, int n) {
    if (n < 1) throw Error("wedge power requires n >= 1");
    MatrixCochain out = a;
    for (int i = 1; i < n; ++i) out = wedge(out, a);
    return out;
}

AlgebroidCochain trace_cochain(const MatrixCochain& a) {
    AlgebroidCochain out(a.algebroid(), a.degree());
    for (const auto& [tuple, m] : a.components()) out.set_component(tuple, {trace(m)});
    return out;
}

AlgebroidCochain parse_cochain_literal(const AlgebroidPtr& a, int degree, RepPtr coefficients,
                                       const std::string& text) {
    AlgebroidCochain out(a, degree, std::move(coefficients));
    // Hand-rolled scan over {"key": value, ...} with string or array values.
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("cochain literal: expected '") + c + "'");
        ++i;
    };
    auto quoted = [&] {
        expect('"');
        std::string s;
        while (i < text.size() && text[i] != '"') s += text[i++];
        expect('"');
        return s;
    };
    expect('{');
    skip();
    if (i < text.size() && text[i] == '}') return out;
    while (true) {
        std::string key = quoted();
        expect(':');
        std::vector<int> tuple;
        if (key != "1") {
            std::stringstream ks(key);
            std::string name;
            while (std::getline(ks, name, '^')) tuple.push_back(a->frame_index(name));
        }
        std::vector<std::string> parts;
        skip();
        if (i < text.size() && text[i] == '[') {
            ++i;
            while (true) {
                parts.push_back(quoted());
                skip();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                break;
            }
            expect(']');
        } else {
            parts.push_back(quoted());
        }
        std::vector<Polynomial> vals;
        for (const auto& p : parts) vals.push_back(Polynomial::parse(p, a->chart()));
        out.set_component(tuple, std::move(vals));
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect('}');
    return out;
}

std::string cochain_literal(const AlgebroidCochain& w) {
    const auto& frame = w.algebroid()->frame();
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [tuple, vals] : w.components()) {
        if (!first) os << ", ";
        first = false;
        os << "\"";
        if (tuple.empty()) os << "1";
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) os << "^";
            os << frame[static_cast<size_t>(tuple[i])];
        }
        os << "\": ";
        if (vals.size() == 1) {
            os << "\"" << vals[0].str() << "\"";
        } else {
            os << "[";
            for (size_t i = 0; i < vals.size(); ++i) {
                if (i) os << ", ";
                os << "\"" << vals[i].str() << "\"";
            }
            os << "]";
        }
    }
    os << "}";
    return os.str();
}

} // namespace algc
