#include "algc/algebroid.hpp"

#include <algorithm>

namespace algc {

LieAlgebroid::LieAlgebroid(std::vector<std::string> chart, std::vector<std::string> frame,
                           std::vector<std::vector<Polynomial>> anchor,
                           std::map<std::pair<int, int>, std::vector<Polynomial>> brackets)
    : chart_(std::move(chart)), frame_(std::move(frame)), anchor_(std::move(anchor)),
      brackets_(std::move(brackets)) {
    const size_t r = frame_.size();
    const size_t n = chart_.size();
    for (size_t i = 0; i < frame_.size(); ++i)
        for (size_t j = i + 1; j < frame_.size(); ++j)
            if (frame_[i] == frame_[j]) throw Error("duplicate frame name '" + frame_[i] + "'");
    for (size_t i = 0; i < chart_.size(); ++i)
        for (size_t j = i + 1; j < chart_.size(); ++j)
            if (chart_[i] == chart_[j]) throw Error("duplicate coordinate '" + chart_[i] + "'");
    if (anchor_.size() != r) throw Error("anchor must have one row per frame element");
    for (auto& row : anchor_) {
        if (row.size() != n) throw Error("anchor row arity mismatch");
        for (auto& p : row) p = p.on_chart(chart_);
    }
    for (auto& [ij, coeffs] : brackets_) {
        if (ij.first < 0 || ij.second <= ij.first || ij.second >= static_cast<int>(r))
            throw Error("bracket table keys must satisfy 0 <= i < j < rank");
        if (coeffs.size() != r) throw Error("bracket coefficient arity mismatch");
        for (auto& p : coeffs) p = p.on_chart(chart_);
    }
}

AlgebroidPtr make_algebroid(std::vector<std::string> chart, std::vector<std::string> frame,
                            std::vector<std::vector<Polynomial>> anchor,
                            std::map<std::pair<int, int>, std::vector<Polynomial>> brackets) {
    return std::make_shared<const LieAlgebroid>(std::move(chart), std::move(frame),
                                                std::move(anchor), std::move(brackets));
}

Polynomial LieAlgebroid::anchor_apply(int i, const Polynomial& f) const {
    Polynomial g = f.on_chart(chart_);
    Polynomial out = zero();
    const auto& row = anchor_[static_cast<size_t>(i)];
    for (size_t k = 0; k < chart_.size(); ++k) {
        if (row[k].is_zero()) continue;
        out += row[k] * g.derivative(k);
    }
    return out;
}

std::vector<Polynomial> LieAlgebroid::frame_bracket(int i, int j) const {
    std::vector<Polynomial> out(static_cast<size_t>(rank()), zero());
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it != brackets_.end()) {
        for (size_t k = 0; k < out.size(); ++k) out[k] = flip ? -it->second[k] : it->second[k];
    }
    return out;
}

int LieAlgebroid::frame_index(const std::string& name) const {
    auto it = std::find(frame_.begin(), frame_.end(), name);
    if (it == frame_.end()) throw Error("unknown frame element '" + name + "'");
    return static_cast<int>(it - frame_.begin());
}

Section::Section(AlgebroidPtr a, std::vector<Polynomial> c)
    : algebroid(std::move(a)), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != algebroid->rank())
        throw Error("section coefficient count must equal the rank");
    for (auto& p : coeffs) p = p.on_chart(algebroid->chart());
}

Section Section::frame_element(const AlgebroidPtr& a, int i) {
    std::vector<Polynomial> c(static_cast<size_t>(a->rank()), a->zero());
    c[static_cast<size_t>(i)] = a->constant(1);
    return Section(a, std::move(c));
}

Section bracket_sections(const Section& x, const Section& y) {
    if (x.algebroid != y.algebroid) throw Error("sections live on different algebroids");
    const auto& a = x.algebroid;
    const int r = a->rank();
    std::vector<Polynomial> out(static_cast<size_t>(r), a->zero());
    for (int i = 0; i < r; ++i) {
        const Polynomial& f = x.coeffs[static_cast<size_t>(i)];
        for (int j = 0; j < r; ++j) {
            const Polynomial& g = y.coeffs[static_cast<size_t>(j)];
            if (f.is_zero() || g.is_zero()) continue;
            auto c = a->frame_bracket(i, j);
            Polynomial fg = f * g;
            for (int k = 0; k < r; ++k)
                if (!c[static_cast<size_t>(k)].is_zero()) out[static_cast<size_t>(k)] += fg * c[static_cast<size_t>(k)];
        }
    }
    for (int k = 0; k < r; ++k) {
        Polynomial acc = a->zero();
        for (int i = 0; i < r; ++i) {
            const Polynomial& f = x.coeffs[static_cast<size_t>(i)];
            if (!f.is_zero()) acc += f * a->anchor_apply(i, y.coeffs[static_cast<size_t>(k)]);
            const Polynomial& g = y.coeffs[static_cast<size_t>(i)];
            if (!g.is_zero()) acc -= g * a->anchor_apply(i, x.coeffs[static_cast<size_t>(k)]);
        }
        out[static_cast<size_t>(k)] += acc;
    }
    return Section(a, std::move(out));
}

ValidationReport validate_algebroid(const AlgebroidPtr& a) {
    ValidationReport report;
    const int r = a->rank();
    const int n = a->dim();
    // Anchor morphism: rho([e_i,e_j]) = [rho(e_i), rho(e_j)] as vector fields.
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            auto c = a->frame_bracket(i, j);
            for (int l = 0; l < n; ++l) {
                Polynomial lhs = a->zero();
                for (int k = 0; k < r; ++k)
                    if (!c[static_cast<size_t>(k)].is_zero())
                        lhs += c[static_cast<size_t>(k)] * a->anchor_row(k)[static_cast<size_t>(l)];
                Polynomial rhs =
                    a->anchor_apply(i, a->anchor_row(j)[static_cast<size_t>(l)]) -
                    a->anchor_apply(j, a->anchor_row(i)[static_cast<size_t>(l)]);
                if (lhs != rhs)
                    report.issues.push_back({"anchor", {i, j, l}, (lhs - rhs).str()});
            }
        }
    }
    // Jacobi on frame triples, via bracket_sections so the anchor-derivative
    // terms of the polynomial structure functions are included.
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            for (int k = j + 1; k < r; ++k) {
                Section ei = Section::frame_element(a, i);
                Section ej = Section::frame_element(a, j);
                Section ek = Section::frame_element(a, k);
                Section s = bracket_sections(ei, bracket_sections(ej, ek));
                Section t = bracket_sections(ej, bracket_sections(ek, ei));
                Section u = bracket_sections(ek, bracket_sections(ei, ej));
                for (int m = 0; m < r; ++m) {
                    Polynomial sum = s.coeffs[static_cast<size_t>(m)] +
                                     t.coeffs[static_cast<size_t>(m)] +
                                     u.coeffs[static_cast<size_t>(m)];
                    if (!sum.is_zero())
                        report.issues.push_back({"jacobi", {i, j, k, m}, sum.str()});
                }
            }
        }
    }
    if (report.valid()) a->mark_validated();
    return report;
}

void require_validated(const AlgebroidPtr& a) {
    if (!a->validated()) throw ValidationError("operation requires a validated algebroid");
}

} // namespace algc
