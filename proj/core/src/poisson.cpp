#include "algc/poisson.hpp"

#include <tuple>

namespace algc {

PoissonBivector::PoissonBivector(std::vector<std::string> chart,
                                 std::map<std::pair<int, int>, Polynomial> upper_entries)
    : chart_(std::move(chart)), entries_(std::move(upper_entries)) {
    const int n = static_cast<int>(chart_.size());
    for (auto& [ij, p] : entries_) {
        if (ij.first < 0 || ij.second <= ij.first || ij.second >= n)
            throw Error("bivector entries must satisfy 0 <= i < j < dim");
        p = p.on_chart(chart_);
    }
}

Polynomial PoissonBivector::entry(int i, int j) const {
    if (i == j) return zero();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return zero();
    return flip ? -it->second : it->second;
}

std::map<std::tuple<int, int, int>, Polynomial> jacobiator(const PoissonBivector& pi) {
    const int n = pi.dim();
    std::map<std::tuple<int, int, int>, Polynomial> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Polynomial acc = pi.zero();
                for (int l = 0; l < n; ++l) {
                    acc += pi.entry(l, i) * pi.entry(j, k).derivative(static_cast<size_t>(l));
                    acc += pi.entry(l, j) * pi.entry(k, i).derivative(static_cast<size_t>(l));
                    acc += pi.entry(l, k) * pi.entry(i, j).derivative(static_cast<size_t>(l));
                }
                out[{i, j, k}] = std::move(acc);
            }
    return out;
}

ValidationReport validate_poisson(const PoissonBivector& pi) {
    ValidationReport report;
    for (const auto& [ijk, p] : jacobiator(pi)) {
        if (!p.is_zero())
            report.issues.push_back({"jacobi",
                                     {std::get<0>(ijk), std::get<1>(ijk), std::get<2>(ijk)},
                                     p.str()});
    }
    if (report.valid()) pi.mark_validated();
    return report;
}

AlgebroidPtr cotangent_algebroid(const PoissonBivector& pi) {
    if (!pi.validated()) {
        auto report = validate_poisson(pi);
        if (!report.valid())
            throw ValidationError("bivector fails the Jacobi identity: J^{" +
                                  std::to_string(report.issues[0].indices[0] + 1) + "," +
                                  std::to_string(report.issues[0].indices[1] + 1) + "," +
                                  std::to_string(report.issues[0].indices[2] + 1) +
                                  "} = " + report.issues[0].detail);
    }
    const int n = pi.dim();
    std::vector<std::string> frame;
    for (const auto& c : pi.chart()) frame.push_back("d" + c);
    std::vector<std::vector<Polynomial>> anchor;
    for (int i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        for (int j = 0; j < n; ++j) row.push_back(pi.entry(i, j));
        anchor.push_back(std::move(row));
    }
    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Polynomial> coeffs;
            bool nonzero = false;
            for (int k = 0; k < n; ++k) {
                coeffs.push_back(pi.entry(i, j).derivative(static_cast<size_t>(k)));
                nonzero = nonzero || !coeffs.back().is_zero();
            }
            if (nonzero) brackets[{i, j}] = std::move(coeffs);
        }
    auto a = make_algebroid(pi.chart(), std::move(frame), std::move(anchor), std::move(brackets));
    auto report = validate_algebroid(a);
    if (!report.valid()) throw ValidationError("internal: cotangent algebroid failed validation");
    return a;
}

Polynomial poisson_bracket(const PoissonBivector& pi, const Polynomial& f, const Polynomial& g) {
    Polynomial ff = f.on_chart(pi.chart());
    Polynomial gg = g.on_chart(pi.chart());
    Polynomial acc = pi.zero();
    const int n = pi.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Polynomial e = pi.entry(i, j);
            if (e.is_zero()) continue;
            acc += e * ff.derivative(static_cast<size_t>(i)) * gg.derivative(static_cast<size_t>(j));
        }
    return acc;
}

std::vector<Polynomial> hamiltonian_vf(const PoissonBivector& pi, const Polynomial& f) {
    Polynomial ff = f.on_chart(pi.chart());
    const int n = pi.dim();
    std::vector<Polynomial> out(static_cast<size_t>(n), pi.zero());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            Polynomial e = pi.entry(i, j);
            if (e.is_zero()) continue;
            out[static_cast<size_t>(j)] += e * ff.derivative(static_cast<size_t>(i));
        }
    return out;
}

std::vector<Polynomial> modular_vector_field(const PoissonBivector& pi) {
    if (!pi.validated())
        throw ValidationError("modular vector field requires a validated bivector");
    const int n = pi.dim();
    std::vector<Polynomial> out(static_cast<size_t>(n), pi.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(i)] += pi.entry(i, j).derivative(static_cast<size_t>(j));
    // Second route: X_mod(x_i) = div(X_{x_i}); the two must agree exactly.
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(pi.chart(), pi.chart()[static_cast<size_t>(i)]);
        auto ham = hamiltonian_vf(pi, xi);
        Polynomial div = pi.zero();
        for (int j = 0; j < n; ++j) div += ham[static_cast<size_t>(j)].derivative(static_cast<size_t>(j));
        if (div != out[static_cast<size_t>(i)])
            throw Error("internal: modular vector field routes disagree");
    }
    return out;
}

BettiReport poisson_cohomology(const PoissonBivector& pi, int p_max, int cap) {
    auto a = cotangent_algebroid(pi);
    return betti(a, nullptr, p_max, cap);
}

ModularCrossCheck modular_cross_check(const PoissonBivector& pi, int cap) {
    auto a = cotangent_algebroid(pi);
    auto uq = u1(a, canonical_line_bundle(a));
    auto mod = modular_vector_field(pi);
    AlgebroidCochain mc(a, 1);
    for (int i = 0; i < a->rank(); ++i) mc.add_component({i}, {mod[static_cast<size_t>(i)]});
    if (!differential(mc).is_zero())
        throw Error("internal: modular cochain is not closed");

    ModularCrossCheck out{uq.cocycle, mc, false, false, Rational(0), std::nullopt, 0};
    out.cap = cap;
    if (uq.cocycle.is_zero() && mc.is_zero()) {
        out.both_zero = true;
        out.related = true;
        return out;
    }
    // Solve u1 = lambda * modular + d(eta) over the capped function space.
    auto source = TruncatedBasis::capped(a, nullptr, 0, cap);
    std::map<std::pair<std::vector<int>, Exponents>, int> row_of;
    auto row_index = [&](const std::vector<int>& tuple, const Exponents& mono) {
        auto key = std::make_pair(tuple, mono);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        int idx = static_cast<int>(row_of.size());
        row_of.emplace(std::move(key), idx);
        return idx;
    };
    std::vector<std::map<int, Rational>> cols(static_cast<size_t>(source.size() + 1));
    for (int col = 0; col < source.size(); ++col) {
        auto d = differential(source.element(col));
        for (const auto& [tuple, vals] : d.components())
            for (const auto& [mono, c] : vals[0].terms())
                cols[static_cast<size_t>(col)][row_index(tuple, mono)] = c;
    }
    for (const auto& [tuple, vals] : mc.components())
        for (const auto& [mono, c] : vals[0].terms())
            cols[static_cast<size_t>(source.size())][row_index(tuple, mono)] = c;
    std::vector<std::pair<int, Rational>> rhs_entries;
    for (const auto& [tuple, vals] : uq.cocycle.components())
        for (const auto& [mono, c] : vals[0].terms())
            rhs_entries.push_back({row_index(tuple, mono), c});

    SparseRationalMatrix m(static_cast<int>(row_of.size()), source.size() + 1);
    for (int col = 0; col <= source.size(); ++col)
        for (const auto& [row, c] : cols[static_cast<size_t>(col)]) m.set(row, col, c);
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    for (const auto& [row, c] : rhs_entries) rhs[static_cast<size_t>(row)] = c;
    auto sol = m.solve(rhs);
    if (!sol) {
        out.related = false;
        return out;
    }
    out.related = true;
    out.lambda = (*sol)[static_cast<size_t>(source.size())];
    std::vector<Rational> eta_coords(sol->begin(), sol->end() - 1);
    auto eta = source.combine(eta_coords);
    if (differential(eta) + mc.scaled(out.lambda) != uq.cocycle)
        throw Error("internal: modular cross-check certificate failed");
    out.primitive = std::move(eta);
    return out;
}

} // namespace algc
