#include "algc/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace algc {

namespace {

std::vector<std::vector<int>> increasing_tuples(int r, int p) {
    std::vector<std::vector<int>> out;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    if (p > r || p < 0) return out;
    std::vector<int> cur(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int k = p - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == r - p + k) --k;
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
        for (int t = k + 1; t < p; ++t) cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

std::string describe_component(const AlgebroidPtr& a, const std::vector<int>& tuple,
                               const Exponents& mono) {
    std::ostringstream os;
    os << "component ";
    if (tuple.empty()) os << "1";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << "^";
        os << a->frame()[static_cast<size_t>(tuple[i])];
    }
    os << " * monomial ";
    Polynomial m = Polynomial::monomial(a->chart(), mono, 1);
    os << m.str();
    return os.str();
}

} // namespace

void TruncatedBasis::build_order() {
    order_.resize(static_cast<size_t>(size()));
    std::iota(order_.begin(), order_.end(), 0);
    inverse_order_ = order_;
}

int TruncatedBasis::dense_index(size_t tuple_idx, size_t mono_idx, int comp) const {
    return static_cast<int>((tuple_idx * monomials_.size() + mono_idx) *
                                static_cast<size_t>(rep_rank_) +
                            static_cast<size_t>(comp));
}

TruncatedBasis TruncatedBasis::capped(AlgebroidPtr a, RepPtr e, int degree, int cap) {
    require_validated(a);
    if (e) require_validated(e);
    TruncatedBasis b;
    b.algebroid_ = std::move(a);
    b.coefficients_ = std::move(e);
    b.degree_ = degree;
    b.rep_rank_ = b.coefficients_ ? b.coefficients_->rank() : 1;
    b.tuples_ = increasing_tuples(b.algebroid_->rank(), degree);
    b.monomials_ = monomials_up_to(b.algebroid_->dim(), cap);
    b.build_order();
    return b;
}

TruncatedBasis TruncatedBasis::weighted(AlgebroidPtr a, RepPtr e, int degree, int weight) {
    require_validated(a);
    if (e) require_validated(e);
    TruncatedBasis b;
    b.algebroid_ = std::move(a);
    b.coefficients_ = std::move(e);
    b.degree_ = degree;
    b.rep_rank_ = b.coefficients_ ? b.coefficients_->rank() : 1;
    b.tuples_ = increasing_tuples(b.algebroid_->rank(), degree);
    b.monomials_ = monomial_basis(b.algebroid_->dim(), weight);
    b.build_order();
    return b;
}

TruncatedBasis TruncatedBasis::shuffled(unsigned seed) const {
    TruncatedBasis b = *this;
    // Deterministic linear-congruential shuffle of the slot order.
    unsigned long long state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (size_t i = b.order_.size(); i > 1; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        size_t j = static_cast<size_t>(state % i);
        std::swap(b.order_[i - 1], b.order_[j]);
    }
    b.inverse_order_.assign(b.order_.size(), 0);
    for (size_t i = 0; i < b.order_.size(); ++i)
        b.inverse_order_[static_cast<size_t>(b.order_[i])] = static_cast<int>(i);
    return b;
}

int TruncatedBasis::index_of(const std::vector<int>& tuple, const Exponents& mono, int comp) const {
    auto t = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
    if (t == tuples_.end() || *t != tuple) return -1;
    auto m = std::lower_bound(monomials_.begin(), monomials_.end(), mono, GradedLexLess{});
    if (m == monomials_.end() || *m != mono) return -1;
    int dense = dense_index(static_cast<size_t>(t - tuples_.begin()),
                            static_cast<size_t>(m - monomials_.begin()), comp);
    return inverse_order_[static_cast<size_t>(dense)];
}

AlgebroidCochain TruncatedBasis::element(int index) const {
    int dense = order_[static_cast<size_t>(index)];
    int comp = dense % rep_rank_;
    int rest = dense / rep_rank_;
    size_t mono_idx = static_cast<size_t>(rest) % monomials_.size();
    size_t tuple_idx = static_cast<size_t>(rest) / monomials_.size();
    AlgebroidCochain w(algebroid_, degree_, coefficients_);
    std::vector<Polynomial> vals(static_cast<size_t>(rep_rank_), algebroid_->zero());
    vals[static_cast<size_t>(comp)] =
        Polynomial::monomial(algebroid_->chart(), monomials_[mono_idx], 1);
    w.set_component(tuples_[tuple_idx], std::move(vals));
    return w;
}

AlgebroidCochain TruncatedBasis::combine(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != size()) throw Error("coordinate arity mismatch");
    AlgebroidCochain w(algebroid_, degree_, coefficients_);
    for (size_t tuple_idx = 0; tuple_idx < tuples_.size(); ++tuple_idx) {
        std::vector<Polynomial> vals(static_cast<size_t>(rep_rank_), algebroid_->zero());
        bool nonzero = false;
        for (size_t mono_idx = 0; mono_idx < monomials_.size(); ++mono_idx) {
            for (int comp = 0; comp < rep_rank_; ++comp) {
                int slot = inverse_order_[static_cast<size_t>(dense_index(tuple_idx, mono_idx, comp))];
                const Rational& c = coords[static_cast<size_t>(slot)];
                if (c == 0) continue;
                vals[static_cast<size_t>(comp)] +=
                    Polynomial::monomial(algebroid_->chart(), monomials_[mono_idx], c);
                nonzero = true;
            }
        }
        if (nonzero) w.set_component(tuples_[tuple_idx], std::move(vals));
    }
    return w;
}

std::optional<std::vector<Rational>> TruncatedBasis::coordinates(const AlgebroidCochain& w) const {
    if (w.degree() != degree_ || w.algebroid() != algebroid_) return std::nullopt;
    std::vector<Rational> out(static_cast<size_t>(size()), Rational(0));
    for (const auto& [tuple, vals] : w.components()) {
        for (int comp = 0; comp < static_cast<int>(vals.size()); ++comp) {
            for (const auto& [mono, c] : vals[static_cast<size_t>(comp)].terms()) {
                int idx = index_of(tuple, mono, comp);
                if (idx < 0) return std::nullopt;
                out[static_cast<size_t>(idx)] = c;
            }
        }
    }
    return out;
}

BoundaryMatrix assemble_boundary(const TruncatedBasis& source, const TruncatedBasis& target) {
    if (target.degree() != source.degree() + 1) throw Error("target degree must be source + 1");
    BoundaryMatrix out;
    out.matrix = SparseRationalMatrix(target.size(), source.size());
    for (int col = 0; col < source.size(); ++col) {
        AlgebroidCochain d = differential(source.element(col));
        for (const auto& [tuple, vals] : d.components()) {
            for (int comp = 0; comp < static_cast<int>(vals.size()); ++comp) {
                for (const auto& [mono, c] : vals[static_cast<size_t>(comp)].terms()) {
                    int row = target.index_of(tuple, mono, comp);
                    if (row < 0) {
                        if (!out.overflow) {
                            out.overflow = true;
                            out.overflow_detail =
                                describe_component(source.algebroid(), tuple, mono);
                        }
                        continue;
                    }
                    out.matrix.set(row, col, c);
                }
            }
        }
    }
    return out;
}

BoundaryMatrix assemble_boundary(const AlgebroidPtr& a, const RepPtr& e, int degree, int cap) {
    auto src = TruncatedBasis::capped(a, e, degree, cap);
    auto tgt = TruncatedBasis::capped(a, e, degree + 1, cap);
    return assemble_boundary(src, tgt);
}

namespace {

// Differential off a truncated basis with the target rows discovered, never
// truncated. Returns the matrix, the maximal image weight, and the rank of
// the block of rows above `window_cap` (used to cut images back to the
// window).
struct DiscoveredBoundary {
    SparseRationalMatrix matrix;
    int max_weight = -1;
    int min_shift = 0;
    int max_shift = 0;
    int rank_above_window = 0;
    int rank_full = 0;
};

DiscoveredBoundary discovered_boundary(const TruncatedBasis& source, int window_cap) {
    std::map<std::tuple<std::vector<int>, Exponents, int>, int> row_of;
    std::vector<int> row_weight;
    auto row_index = [&](const std::vector<int>& tuple, const Exponents& mono, int comp) {
        auto key = std::make_tuple(tuple, mono, comp);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        int idx = static_cast<int>(row_of.size());
        row_of.emplace(std::move(key), idx);
        row_weight.push_back(total_degree(mono));
        return idx;
    };
    DiscoveredBoundary out;
    std::vector<std::map<int, Rational>> cols(static_cast<size_t>(source.size()));
    bool first_shift = true;
    for (int col = 0; col < source.size(); ++col) {
        AlgebroidCochain elem = source.element(col);
        int src_weight = elem.max_component_degree();
        AlgebroidCochain d = differential(elem);
        for (const auto& [tuple, vals] : d.components())
            for (int comp = 0; comp < static_cast<int>(vals.size()); ++comp)
                for (const auto& [mono, c] : vals[static_cast<size_t>(comp)].terms()) {
                    int row = row_index(tuple, mono, comp);
                    cols[static_cast<size_t>(col)][row] = c;
                    out.max_weight = std::max(out.max_weight, total_degree(mono));
                    int shift = total_degree(mono) - src_weight;
                    if (first_shift) {
                        out.min_shift = out.max_shift = shift;
                        first_shift = false;
                    } else {
                        out.min_shift = std::min(out.min_shift, shift);
                        out.max_shift = std::max(out.max_shift, shift);
                    }
                }
    }
    out.matrix = SparseRationalMatrix(static_cast<int>(row_of.size()), source.size());
    for (int col = 0; col < source.size(); ++col)
        for (const auto& [row, c] : cols[static_cast<size_t>(col)]) out.matrix.set(row, col, c);
    out.rank_full = out.matrix.rank();
    SparseRationalMatrix above(out.matrix.rows(), out.matrix.cols());
    bool any_above = false;
    for (const auto& [rc, v] : out.matrix.entries())
        if (row_weight[static_cast<size_t>(rc.first)] > window_cap) {
            above.set(rc.first, rc.second, v);
            any_above = true;
        }
    out.rank_above_window = any_above ? above.rank() : 0;
    return out;
}

} // namespace

// Semantics: kernels are taken inside the degree <= cap window; images may
// borrow primitives from one weight above the window (the maximal drop of
// the differential is one), so the table reports the window slice of the
// full polynomial cohomology whenever d never raises weight. A d that
// raises weight out of the window is refused.
BettiReport betti(const AlgebroidPtr& a, const RepPtr& e, int p_max, int cap) {
    BettiReport report;
    report.cap = cap;
    std::vector<int> dims, window_ranks, image_dims;
    int min_shift = 0, max_shift = 0;
    for (int p = 0; p <= p_max; ++p) {
        auto window = TruncatedBasis::capped(a, e, p, cap);
        auto wb = discovered_boundary(window, cap);
        if (wb.max_weight > cap)
            throw DegreeOverflow("differential leaves the cap at degree " + std::to_string(p));
        dims.push_back(window.size());
        window_ranks.push_back(wb.rank_full);
        auto extended = TruncatedBasis::capped(a, e, p, cap + 1);
        auto eb = discovered_boundary(extended, cap);
        if (eb.max_weight > cap + 1)
            throw DegreeOverflow("differential leaves the extended cap at degree " +
                                 std::to_string(p));
        image_dims.push_back(eb.rank_full - eb.rank_above_window);
        min_shift = std::min(min_shift, eb.min_shift);
        max_shift = std::max(max_shift, eb.max_shift);
    }
    if (max_shift <= 0 && min_shift == 0)
        report.flags.push_back("graded");
    else if (max_shift <= 0)
        report.flags.push_back("filtered");
    else
        report.flags.push_back("capped");
    report.graded = max_shift == 0 && min_shift == 0;
    for (int p = 0; p <= p_max; ++p) {
        BettiRow row;
        row.degree = p;
        row.dim = dims[static_cast<size_t>(p)];
        row.kernel = dims[static_cast<size_t>(p)] - window_ranks[static_cast<size_t>(p)];
        row.image_prev = p == 0 ? 0 : image_dims[static_cast<size_t>(p - 1)];
        row.betti = row.kernel - row.image_prev;
        report.rows.push_back(row);
    }
    return report;
}

BettiReport betti_weight_block(const AlgebroidPtr& a, const RepPtr& e, int p_max, int weight) {
    BettiReport report;
    report.cap = weight;
    report.flags = {"graded", "weight:" + std::to_string(weight)};
    report.graded = true;
    std::vector<int> dims, ranks;
    TruncatedBasis cur = TruncatedBasis::weighted(a, e, 0, weight);
    for (int p = 0; p <= p_max; ++p) {
        TruncatedBasis next = TruncatedBasis::weighted(a, e, p + 1, weight);
        auto bm = assemble_boundary(cur, next);
        if (bm.overflow)
            throw DegreeOverflow("differential is not weight-preserving at degree " +
                                 std::to_string(p) + ": " + bm.overflow_detail);
        dims.push_back(cur.size());
        ranks.push_back(bm.matrix.rank());
        cur = std::move(next);
    }
    for (int p = 0; p <= p_max; ++p) {
        BettiRow row;
        row.degree = p;
        row.dim = dims[static_cast<size_t>(p)];
        row.kernel = dims[static_cast<size_t>(p)] - ranks[static_cast<size_t>(p)];
        row.image_prev = p == 0 ? 0 : ranks[static_cast<size_t>(p - 1)];
        row.betti = row.kernel - row.image_prev;
        report.rows.push_back(row);
    }
    return report;
}

PrimitiveResult find_primitive(const AlgebroidPtr& a, const RepPtr& e, const AlgebroidCochain& z,
                               int cap) {
    require_validated(a);
    if (!differential(z).is_zero()) throw Error("find_primitive requires a closed cochain");
    PrimitiveResult res;
    res.cap = cap;
    if (z.degree() == 0) {
        res.exact = z.is_zero();
        if (res.exact) res.primitive = AlgebroidCochain(a, 0, z.coefficients());
        return res;
    }
    auto source = TruncatedBasis::capped(a, e, z.degree() - 1, cap);

    // The target index is discovered, never truncated: a solution solves
    // d(eta) = z on the nose.
    std::map<std::tuple<std::vector<int>, Exponents, int>, int> row_of;
    auto row_index = [&](const std::vector<int>& tuple, const Exponents& mono, int comp) {
        auto key = std::make_tuple(tuple, mono, comp);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        int idx = static_cast<int>(row_of.size());
        row_of.emplace(std::move(key), idx);
        return idx;
    };
    std::vector<std::map<int, Rational>> cols(static_cast<size_t>(source.size()));
    for (int col = 0; col < source.size(); ++col) {
        AlgebroidCochain d = differential(source.element(col));
        for (const auto& [tuple, vals] : d.components())
            for (int comp = 0; comp < static_cast<int>(vals.size()); ++comp)
                for (const auto& [mono, c] : vals[static_cast<size_t>(comp)].terms())
                    cols[static_cast<size_t>(col)][row_index(tuple, mono, comp)] = c;
    }
    std::vector<std::pair<int, Rational>> rhs_entries;
    for (const auto& [tuple, vals] : z.components())
        for (int comp = 0; comp < static_cast<int>(vals.size()); ++comp)
            for (const auto& [mono, c] : vals[static_cast<size_t>(comp)].terms())
                rhs_entries.push_back({row_index(tuple, mono, comp), c});

    SparseRationalMatrix m(static_cast<int>(row_of.size()), source.size());
    for (int col = 0; col < source.size(); ++col)
        for (const auto& [row, c] : cols[static_cast<size_t>(col)]) m.set(row, col, c);
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    for (const auto& [row, c] : rhs_entries) rhs[static_cast<size_t>(row)] = c;

    auto sol = m.solve(rhs);
    if (!sol) {
        res.exact = false;
        return res;
    }
    AlgebroidCochain eta = source.combine(*sol);
    if (differential(eta) != z) throw Error("internal: primitive verification failed");
    res.exact = true;
    res.primitive = std::move(eta);
    return res;
}

BettiReport relative_basic_cohomology(const AlgebroidPtr& g, const std::vector<int>& k_indices) {
    require_validated(g);
    if (g->dim() != 0) throw Error("relative cohomology requires a base point");
    const int r = g->rank();
    std::vector<char> in_k(static_cast<size_t>(r), 0);
    for (int s : k_indices) {
        if (s < 0 || s >= r) throw Error("subalgebra index out of range");
        in_k[static_cast<size_t>(s)] = 1;
    }
    for (int s : k_indices)
        for (int t : k_indices) {
            if (s >= t) continue;
            auto b = g->frame_bracket(s, t);
            for (int k = 0; k < r; ++k)
                if (!in_k[static_cast<size_t>(k)] && !b[static_cast<size_t>(k)].is_zero())
                    throw Error("the chosen indices do not span a subalgebra");
        }

    // Basic subspace per degree, then ranks of the restricted boundary.
    std::vector<int> basic_dim;
    std::vector<int> ranks;
    std::vector<SparseRationalMatrix> injections;
    std::vector<TruncatedBasis> bases;
    for (int p = 0; p <= r; ++p) bases.push_back(TruncatedBasis::capped(g, nullptr, p, 0));
    for (int p = 0; p <= r; ++p) {
        const auto& basis = bases[static_cast<size_t>(p)];
        const int n = basis.size();
        const int below = p > 0 ? bases[static_cast<size_t>(p - 1)].size() : 0;
        SparseRationalMatrix constraints(static_cast<int>(k_indices.size()) * (below + n), n);
        int row_base = 0;
        for (int s : k_indices) {
            Section v = Section::frame_element(g, s);
            for (int col = 0; col < n; ++col) {
                auto elem = basis.element(col);
                if (p > 0) {
                    auto iv = interior_product(v, elem);
                    auto coords = bases[static_cast<size_t>(p - 1)].coordinates(iv);
                    if (!coords) throw Error("internal: interior product left the point basis");
                    for (int row = 0; row < below; ++row)
                        if ((*coords)[static_cast<size_t>(row)] != 0)
                            constraints.set(row_base + row, col, (*coords)[static_cast<size_t>(row)]);
                }
                auto lv = lie_derivative(v, elem);
                auto coords = basis.coordinates(lv);
                if (!coords) throw Error("internal: Lie derivative left the point basis");
                for (int row = 0; row < n; ++row)
                    if ((*coords)[static_cast<size_t>(row)] != 0)
                        constraints.set(row_base + below + row, col, (*coords)[static_cast<size_t>(row)]);
            }
            row_base += below + n;
        }
        auto kernel = constraints.nullspace();
        basic_dim.push_back(static_cast<int>(kernel.size()));
        injections.push_back(SparseRationalMatrix::from_columns(n, kernel));
    }
    for (int p = 0; p <= r; ++p) {
        if (p == r) {
            ranks.push_back(0);
            continue;
        }
        auto bm = assemble_boundary(bases[static_cast<size_t>(p)], bases[static_cast<size_t>(p + 1)]);
        // d preserves basics, so the rank of d restricted to the basic
        // subspace is the rank of D * J.
        ranks.push_back(bm.matrix.multiply(injections[static_cast<size_t>(p)]).rank());
    }
    BettiReport report;
    report.cap = 0;
    report.flags = {"relative"};
    for (int p = 0; p <= r; ++p) {
        BettiRow row;
        row.degree = p;
        row.dim = basic_dim[static_cast<size_t>(p)];
        row.kernel = basic_dim[static_cast<size_t>(p)] - ranks[static_cast<size_t>(p)];
        row.image_prev = p == 0 ? 0 : ranks[static_cast<size_t>(p - 1)];
        row.betti = row.kernel - row.image_prev;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace algc
