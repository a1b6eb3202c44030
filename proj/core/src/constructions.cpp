#include "algc/constructions.hpp"

#include "algc/linalg.hpp"

#include <algorithm>

namespace algc {

namespace {

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& stem,
                                     int count) {
    std::vector<std::string> out;
    std::string suffix;
    auto collides = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end() ||
               std::find(out.begin(), out.end(), s) != out.end();
    };
    for (int i = 1; i <= count; ++i) {
        std::string name = stem + std::to_string(i);
        while (collides(name)) name += "_";
        out.push_back(name);
    }
    return out;
}

} // namespace

AlgebroidPtr semidirect_product(const AlgebroidPtr& a, const RepPtr& e,
                                const AlgebroidCochain& tau) {
    require_validated(a);
    require_validated(e);
    if (e->algebroid() != a) throw Error("representation lives on a different algebroid");
    if (e->is_complex()) throw Error("semidirect product implemented for real representations");
    if (tau.degree() != 2 || tau.coefficients() != e)
        throw Error("twist must be an E-valued 2-cochain");
    const int r = a->rank();
    const int m = e->rank();
    std::vector<std::string> frame = a->frame();
    auto fnames = fresh_names(frame, "f", m);
    frame.insert(frame.end(), fnames.begin(), fnames.end());

    std::vector<std::vector<Polynomial>> anchor = {};
    for (int i = 0; i < r; ++i) anchor.push_back(a->anchor_row(i));
    for (int u = 0; u < m; ++u)
        anchor.push_back(std::vector<Polynomial>(a->chart().size(), a->zero()));

    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets;
    auto zero_coeffs = [&]() {
        return std::vector<Polynomial>(static_cast<size_t>(r + m), a->zero());
    };
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            auto coeffs = zero_coeffs();
            auto base = a->frame_bracket(i, j);
            for (int k = 0; k < r; ++k) coeffs[static_cast<size_t>(k)] = base[static_cast<size_t>(k)];
            auto tv = tau.component({i, j});
            bool nonzero = false;
            for (int u = 0; u < m; ++u) {
                coeffs[static_cast<size_t>(r + u)] = tv[static_cast<size_t>(u)];
                nonzero = nonzero || !tv[static_cast<size_t>(u)].is_zero();
            }
            for (const auto& c : base) nonzero = nonzero || !c.is_zero();
            if (nonzero) brackets[{i, j}] = std::move(coeffs);
        }
        for (int u = 0; u < m; ++u) {
            auto coeffs = zero_coeffs();
            const auto& w = e->connection(i);
            bool nonzero = false;
            for (int s = 0; s < m; ++s) {
                coeffs[static_cast<size_t>(r + s)] = w[static_cast<size_t>(s)][static_cast<size_t>(u)];
                nonzero = nonzero || !w[static_cast<size_t>(s)][static_cast<size_t>(u)].is_zero();
            }
            if (nonzero) brackets[{i, r + u}] = std::move(coeffs);
        }
    }
    return make_algebroid(a->chart(), std::move(frame), std::move(anchor), std::move(brackets));
}

ExtensionData extension_class(const AlgebroidPtr& h, const std::vector<int>& ideal,
                              const std::vector<std::vector<Rational>>& splitting) {
    require_validated(h);
    const int big = h->rank();
    const int m = static_cast<int>(ideal.size());
    const int q = big - m;
    for (int s : ideal)
        if (s < 0 || s >= big) throw Error("ideal index out of range");
    std::vector<char> in_ideal(static_cast<size_t>(big), 0);
    for (int s : ideal) {
        if (in_ideal[static_cast<size_t>(s)]) throw Error("repeated ideal index");
        in_ideal[static_cast<size_t>(s)] = 1;
    }
    // Zero anchor on the ideal.
    for (int s : ideal)
        for (const auto& p : h->anchor_row(s))
            if (!p.is_zero()) throw Error("ideal direction has nonzero anchor");
    // Abelian, and closed under brackets with everything.
    for (int s : ideal)
        for (int t : ideal)
            if (s < t) {
                for (const auto& p : h->frame_bracket(s, t))
                    if (!p.is_zero()) throw Error("ideal is not abelian");
            }
    for (int j = 0; j < big; ++j)
        for (int s : ideal) {
            auto b = h->frame_bracket(j, s);
            for (int k = 0; k < big; ++k)
                if (!in_ideal[static_cast<size_t>(k)] && !b[static_cast<size_t>(k)].is_zero())
                    throw Error("subset is not an ideal: [e" + std::to_string(j + 1) + ", e" +
                                std::to_string(s + 1) + "] leaves the span");
        }
    if (static_cast<int>(splitting.size()) != q) throw Error("splitting must have rank-many rows");
    for (const auto& row : splitting)
        if (static_cast<int>(row.size()) != big) throw Error("splitting row arity mismatch");

    // Coordinates on h's frame: columns sigma_1..sigma_q, then the ideal.
    SparseRationalMatrix basis(big, big);
    for (int c = 0; c < q; ++c)
        for (int rr = 0; rr < big; ++rr)
            basis.set(rr, c, splitting[static_cast<size_t>(c)][static_cast<size_t>(rr)]);
    for (int c = 0; c < m; ++c) basis.set(ideal[static_cast<size_t>(c)], q + c, 1);
    if (basis.rank() != big) throw Error("splitting does not complement the ideal");
    // Inverse columns: coordinates of each h-frame element in the new basis.
    std::vector<std::vector<Rational>> coords(static_cast<size_t>(big));
    for (int j = 0; j < big; ++j) {
        std::vector<Rational> unit(static_cast<size_t>(big), Rational(0));
        unit[static_cast<size_t>(j)] = 1;
        auto sol = basis.solve(unit);
        if (!sol) throw Error("splitting does not complement the ideal");
        coords[static_cast<size_t>(j)] = *sol;
    }
    auto decompose = [&](const std::vector<Polynomial>& v) {
        // v over h's frame -> (lambda over sigma, mu over ideal).
        std::vector<Polynomial> lambda(static_cast<size_t>(q), h->zero());
        std::vector<Polynomial> mu(static_cast<size_t>(m), h->zero());
        for (int j = 0; j < big; ++j) {
            if (v[static_cast<size_t>(j)].is_zero()) continue;
            for (int c = 0; c < q; ++c) {
                const Rational& w = coords[static_cast<size_t>(j)][static_cast<size_t>(c)];
                if (w != 0) lambda[static_cast<size_t>(c)] += v[static_cast<size_t>(j)].scaled(w);
            }
            for (int c = 0; c < m; ++c) {
                const Rational& w = coords[static_cast<size_t>(j)][static_cast<size_t>(q + c)];
                if (w != 0) mu[static_cast<size_t>(c)] += v[static_cast<size_t>(j)].scaled(w);
            }
        }
        return std::make_pair(lambda, mu);
    };

    auto sigma_section = [&](int i) {
        std::vector<Polynomial> c(static_cast<size_t>(big), h->zero());
        for (int j = 0; j < big; ++j)
            c[static_cast<size_t>(j)] = h->constant(splitting[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        return Section(h, std::move(c));
    };

    // Quotient frame names: reuse h's name when a splitting row is a unit.
    std::vector<std::string> qnames;
    for (int i = 0; i < q; ++i) {
        int unit_at = -1;
        int nonzeros = 0;
        for (int j = 0; j < big; ++j) {
            if (splitting[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                ++nonzeros;
                if (splitting[static_cast<size_t>(i)][static_cast<size_t>(j)] == 1) unit_at = j;
            }
        }
        if (nonzeros == 1 && unit_at >= 0)
            qnames.push_back(h->frame()[static_cast<size_t>(unit_at)]);
        else
            qnames.push_back("s" + std::to_string(i + 1));
    }

    std::vector<std::vector<Polynomial>> qanchor;
    for (int i = 0; i < q; ++i) {
        std::vector<Polynomial> row(h->chart().size(), h->zero());
        for (int j = 0; j < big; ++j) {
            const Rational& w = splitting[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (w == 0) continue;
            for (size_t l = 0; l < row.size(); ++l) row[l] += h->anchor_row(j)[l].scaled(w);
        }
        qanchor.push_back(std::move(row));
    }

    std::map<std::pair<int, int>, std::vector<Polynomial>> qbrackets;
    std::vector<std::vector<std::vector<Polynomial>>> tau_parts(static_cast<size_t>(q));
    for (auto& tp : tau_parts) tp.resize(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
        for (int j = i + 1; j < q; ++j) {
            Section b = bracket_sections(sigma_section(i), sigma_section(j));
            auto [lambda, mu] = decompose(b.coeffs);
            bool nonzero = false;
            for (const auto& p : lambda) nonzero = nonzero || !p.is_zero();
            if (nonzero) qbrackets[{i, j}] = lambda;
            tau_parts[static_cast<size_t>(i)][static_cast<size_t>(j)] = mu;
        }
    }
    auto quotient = make_algebroid(h->chart(), qnames, std::move(qanchor), std::move(qbrackets));
    auto qreport = validate_algebroid(quotient);
    if (!qreport.valid()) throw ValidationError("quotient by the ideal is not a Lie algebroid");

    // Action matrices: [sigma_i, e_s] decomposed back into the ideal.
    std::vector<PolyMatrix> conn;
    for (int i = 0; i < q; ++i) {
        PolyMatrix w = poly_matrix_zero(h->chart(), m, m);
        for (int s = 0; s < m; ++s) {
            Section b = bracket_sections(sigma_section(i),
                                         Section::frame_element(h, ideal[static_cast<size_t>(s)]));
            auto [lambda, mu] = decompose(b.coeffs);
            for (const auto& p : lambda)
                if (!p.is_zero()) throw Error("ideal is not preserved by the splitting");
            for (int t = 0; t < m; ++t) w[static_cast<size_t>(t)][static_cast<size_t>(s)] = mu[static_cast<size_t>(t)];
        }
        conn.push_back(std::move(w));
    }
    auto action = make_representation(quotient, m, std::move(conn));
    auto areport = validate_representation(action);
    if (!areport.valid()) throw ValidationError("induced action on the ideal is not flat");

    AlgebroidCochain tau(quotient, 2, action);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            tau.set_component({i, j}, tau_parts[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return ExtensionData(quotient, action, std::move(tau));
}

AlgebroidPtr pullback_algebroid(const AlgebroidPtr& a, int fiber_dim) {
    require_validated(a);
    if (fiber_dim < 0) throw Error("negative fiber dimension");
    auto chart = a->chart();
    auto unames = fresh_names(chart, "u", fiber_dim);
    chart.insert(chart.end(), unames.begin(), unames.end());
    auto frame = a->frame();
    auto vnames = fresh_names(frame, "v", fiber_dim);
    frame.insert(frame.end(), vnames.begin(), vnames.end());

    std::vector<std::vector<Polynomial>> anchor;
    for (int i = 0; i < a->rank(); ++i) {
        std::vector<Polynomial> row;
        for (const auto& p : a->anchor_row(i)) row.push_back(p.on_chart(chart));
        for (int u = 0; u < fiber_dim; ++u) row.push_back(Polynomial(chart));
        anchor.push_back(std::move(row));
    }
    for (int u = 0; u < fiber_dim; ++u) {
        std::vector<Polynomial> row(chart.size(), Polynomial(chart));
        row[a->chart().size() + static_cast<size_t>(u)] = Polynomial::constant(chart, 1);
        anchor.push_back(std::move(row));
    }
    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets;
    for (const auto& [ij, coeffs] : a->bracket_table()) {
        std::vector<Polynomial> lifted(static_cast<size_t>(a->rank() + fiber_dim), Polynomial(chart));
        for (size_t k = 0; k < coeffs.size(); ++k) lifted[k] = coeffs[k].on_chart(chart);
        brackets[ij] = std::move(lifted);
    }
    return make_algebroid(std::move(chart), std::move(frame), std::move(anchor),
                          std::move(brackets));
}

BottQuotient bott_quotient(const AlgebroidPtr& a, const std::vector<int>& sub_indices) {
    require_validated(a);
    const int r = a->rank();
    std::vector<char> in_sub(static_cast<size_t>(r), 0);
    for (int s : sub_indices) {
        if (s < 0 || s >= r) throw Error("sub-algebroid index out of range");
        in_sub[static_cast<size_t>(s)] = 1;
    }
    for (size_t i = 0; i + 1 < sub_indices.size(); ++i)
        if (sub_indices[i] >= sub_indices[i + 1]) throw Error("sub-algebroid indices must increase");
    // Bracket closure.
    for (int s : sub_indices)
        for (int t : sub_indices) {
            if (s >= t) continue;
            auto b = a->frame_bracket(s, t);
            for (int k = 0; k < r; ++k)
                if (!in_sub[static_cast<size_t>(k)] && !b[static_cast<size_t>(k)].is_zero())
                    throw Error("subset is not bracket-closed: [" +
                                a->frame()[static_cast<size_t>(s)] + ", " +
                                a->frame()[static_cast<size_t>(t)] + "] leaves the span");
        }
    std::vector<int> complement;
    for (int k = 0; k < r; ++k)
        if (!in_sub[static_cast<size_t>(k)]) complement.push_back(k);

    const int rs = static_cast<int>(sub_indices.size());
    std::vector<std::string> frame;
    std::vector<std::vector<Polynomial>> anchor;
    for (int s : sub_indices) {
        frame.push_back(a->frame()[static_cast<size_t>(s)]);
        anchor.push_back(a->anchor_row(s));
    }
    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets;
    for (int i = 0; i < rs; ++i)
        for (int j = i + 1; j < rs; ++j) {
            auto b = a->frame_bracket(sub_indices[static_cast<size_t>(i)],
                                      sub_indices[static_cast<size_t>(j)]);
            std::vector<Polynomial> coeffs(static_cast<size_t>(rs), a->zero());
            bool nonzero = false;
            for (int k = 0; k < rs; ++k) {
                coeffs[static_cast<size_t>(k)] = b[static_cast<size_t>(sub_indices[static_cast<size_t>(k)])];
                nonzero = nonzero || !coeffs[static_cast<size_t>(k)].is_zero();
            }
            if (nonzero) brackets[{i, j}] = std::move(coeffs);
        }
    auto sub = make_algebroid(a->chart(), std::move(frame), std::move(anchor), std::move(brackets));
    auto sreport = validate_algebroid(sub);
    if (!sreport.valid()) throw ValidationError("sub-algebroid fails its own axioms");

    const int m = static_cast<int>(complement.size());
    std::vector<PolyMatrix> conn;
    for (int s : sub_indices) {
        PolyMatrix w = poly_matrix_zero(a->chart(), m, m);
        for (int col = 0; col < m; ++col) {
            auto b = a->frame_bracket(s, complement[static_cast<size_t>(col)]);
            for (int row = 0; row < m; ++row)
                w[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                    b[static_cast<size_t>(complement[static_cast<size_t>(row)])];
        }
        conn.push_back(std::move(w));
    }
    auto normal = make_representation(sub, m, std::move(conn));
    auto nreport = validate_representation(normal);
    if (!nreport.valid()) throw ValidationError("Bott action on the quotient is not flat");
    return BottQuotient{sub, normal, complement};
}

RepPtr canonical_line_bundle(const AlgebroidPtr& a) {
    require_validated(a);
    const int r = a->rank();
    const int n = a->dim();
    std::vector<PolyMatrix> conn;
    for (int i = 0; i < r; ++i) {
        Polynomial w = a->zero();
        for (int k = 0; k < r; ++k) w += a->frame_bracket(i, k)[static_cast<size_t>(k)];
        for (int l = 0; l < n; ++l)
            w += a->anchor_row(i)[static_cast<size_t>(l)].derivative(static_cast<size_t>(l));
        conn.push_back({{w}});
    }
    auto rep = make_representation(a, 1, std::move(conn));
    auto report = validate_representation(rep);
    if (!report.valid())
        throw ValidationError("canonical line bundle action failed its flatness check");
    return rep;
}

RepPtr adjoint_representation(const AlgebroidPtr& a) {
    require_validated(a);
    for (int i = 0; i < a->rank(); ++i)
        for (const auto& p : a->anchor_row(i))
            if (!p.is_zero()) throw Error("adjoint action requires a zero anchor");
    const int r = a->rank();
    std::vector<PolyMatrix> conn;
    for (int i = 0; i < r; ++i) {
        PolyMatrix w = poly_matrix_zero(a->chart(), r, r);
        for (int j = 0; j < r; ++j) {
            auto b = a->frame_bracket(i, j);
            for (int k = 0; k < r; ++k) w[static_cast<size_t>(k)][static_cast<size_t>(j)] = b[static_cast<size_t>(k)];
        }
        conn.push_back(std::move(w));
    }
    auto rep = make_representation(a, r, std::move(conn));
    auto report = validate_representation(rep);
    if (!report.valid()) throw ValidationError("adjoint action is not flat (Jacobi failure?)");
    return rep;
}

namespace {

AlgebroidPtr algebroid_from_flattened(const std::vector<std::vector<Rational>>& flat,
                                      std::vector<std::vector<Rational>> commutators,
                                      std::vector<std::string> frame_names) {
    const int r = static_cast<int>(flat.size());
    const int dim = static_cast<int>(flat[0].size());
    SparseRationalMatrix basis(dim, r);
    for (int c = 0; c < r; ++c)
        for (int row = 0; row < dim; ++row) basis.set(row, c, flat[static_cast<size_t>(c)][static_cast<size_t>(row)]);
    if (frame_names.empty()) {
        for (int i = 1; i <= r; ++i) frame_names.push_back("e" + std::to_string(i));
    }
    std::map<std::pair<int, int>, std::vector<Polynomial>> brackets;
    std::vector<std::string> chart;
    int idx = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            auto sol = basis.solve(commutators[static_cast<size_t>(idx)]);
            ++idx;
            if (!sol) throw Error("matrix basis is not closed under commutators");
            std::vector<Polynomial> coeffs;
            bool nonzero = false;
            for (int k = 0; k < r; ++k) {
                coeffs.push_back(Polynomial::constant(chart, (*sol)[static_cast<size_t>(k)]));
                nonzero = nonzero || (*sol)[static_cast<size_t>(k)] != 0;
            }
            if (nonzero) brackets[{i, j}] = std::move(coeffs);
        }
    std::vector<std::vector<Polynomial>> anchor(static_cast<size_t>(r));
    auto alg = make_algebroid(chart, std::move(frame_names), std::move(anchor), std::move(brackets));
    auto report = validate_algebroid(alg);
    if (!report.valid()) throw Error("matrix commutators violate Jacobi (inconsistent basis)");
    return alg;
}

} // namespace

AlgebroidPtr algebroid_from_matrix_basis(const std::vector<std::vector<std::vector<Rational>>>& basis,
                                         std::vector<std::string> frame_names) {
    if (basis.empty()) throw Error("empty matrix basis");
    const size_t n = basis[0].size();
    auto flatten = [&](const std::vector<std::vector<Rational>>& m) {
        std::vector<Rational> out;
        for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
        return out;
    };
    auto mul = [&](const std::vector<std::vector<Rational>>& a,
                   const std::vector<std::vector<Rational>>& b) {
        std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        return out;
    };
    std::vector<std::vector<Rational>> flat;
    for (const auto& m : basis) flat.push_back(flatten(m));
    std::vector<std::vector<Rational>> comms;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            auto ab = mul(basis[i], basis[j]);
            auto ba = mul(basis[j], basis[i]);
            std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
            for (size_t s = 0; s < n; ++s)
                for (size_t t = 0; t < n; ++t) c[s][t] = ab[s][t] - ba[s][t];
            comms.push_back(flatten(c));
        }
    return algebroid_from_flattened(flat, std::move(comms), std::move(frame_names));
}

AlgebroidPtr algebroid_from_complex_matrix_basis(
    const std::vector<std::pair<std::vector<std::vector<Rational>>,
                                std::vector<std::vector<Rational>>>>& basis,
    std::vector<std::string> frame_names) {
    if (basis.empty()) throw Error("empty matrix basis");
    const size_t n = basis[0].first.size();
    auto mul = [&](const auto& a, const auto& b) {
        std::vector<std::vector<Rational>> re(n, std::vector<Rational>(n, Rational(0)));
        std::vector<std::vector<Rational>> im(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                for (size_t j = 0; j < n; ++j) {
                    re[i][j] += a.first[i][k] * b.first[k][j] - a.second[i][k] * b.second[k][j];
                    im[i][j] += a.first[i][k] * b.second[k][j] + a.second[i][k] * b.first[k][j];
                }
        return std::make_pair(re, im);
    };
    auto flatten = [&](const auto& m) {
        std::vector<Rational> out;
        for (const auto& row : m.first) out.insert(out.end(), row.begin(), row.end());
        for (const auto& row : m.second) out.insert(out.end(), row.begin(), row.end());
        return out;
    };
    std::vector<std::vector<Rational>> flat;
    for (const auto& m : basis) flat.push_back(flatten(m));
    std::vector<std::vector<Rational>> comms;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            auto ab = mul(basis[i], basis[j]);
            auto ba = mul(basis[j], basis[i]);
            for (size_t s = 0; s < n; ++s)
                for (size_t t = 0; t < n; ++t) {
                    ab.first[s][t] -= ba.first[s][t];
                    ab.second[s][t] -= ba.second[s][t];
                }
            comms.push_back(flatten(ab));
        }
    return algebroid_from_flattened(flat, std::move(comms), std::move(frame_names));
}

} // namespace algc
