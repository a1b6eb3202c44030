#include "algc/groupoid.hpp"

#include "algc/jet.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace algc {

namespace {

std::vector<std::string> block(const std::string& stem, int index, int count) {
    std::vector<std::string> out;
    for (int j = 1; j <= count; ++j)
        out.push_back(stem + std::to_string(index) + "_" + std::to_string(j));
    return out;
}

} // namespace

struct GroupoidChartAccess {
    static GroupoidPtr build(GroupoidChart::Family fam, int n, int k,
                             std::vector<Polynomial> action) {
        auto g = std::make_shared<GroupoidChart>();
        g->family_ = fam;
        g->n_ = n;
        g->k_ = k;
        for (int j = 1; j <= n; ++j) g->base_chart_.push_back("x" + std::to_string(j));
        g->action_ = std::move(action);
        g->check_axioms();
        if (fam == GroupoidChart::Family::Pair) {
            std::vector<std::string> frame;
            for (int j = 1; j <= n; ++j) frame.push_back("e" + std::to_string(j));
            std::vector<std::vector<Polynomial>> anchor(
                static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n),
                                                                Polynomial(g->base_chart_)));
            for (int j = 0; j < n; ++j)
                anchor[static_cast<size_t>(j)][static_cast<size_t>(j)] =
                    Polynomial::constant(g->base_chart_, 1);
            g->algebroid_ = make_algebroid(g->base_chart_, frame, std::move(anchor), {});
        } else {
            std::vector<std::string> frame;
            for (int a = 1; a <= k; ++a) frame.push_back("e" + std::to_string(a));
            // Anchor row a = d a(v, x) / d v_a at v = 0: the action fields.
            std::vector<std::vector<Polynomial>> anchor;
            std::vector<Polynomial> at_zero;
            for (int a = 0; a < k; ++a) at_zero.push_back(Polynomial(g->base_chart_));
            for (int j = 0; j < n; ++j)
                at_zero.push_back(Polynomial::variable(g->base_chart_, g->base_chart_[static_cast<size_t>(j)]));
            for (int a = 0; a < k; ++a) {
                std::vector<Polynomial> row;
                for (int j = 0; j < n; ++j)
                    row.push_back(
                        g->action_[static_cast<size_t>(j)].derivative(static_cast<size_t>(a)).substitute(at_zero));
                anchor.push_back(std::move(row));
            }
            g->algebroid_ = make_algebroid(g->base_chart_, frame, std::move(anchor), {});
        }
        auto report = validate_algebroid(g->algebroid_);
        if (!report.valid())
            throw ValidationError("derived algebroid failed validation (action fields must commute)");
        return g;
    }
};

GroupoidPtr GroupoidChart::pair_groupoid(int base_dim) {
    if (base_dim < 1) throw Error("pair groupoid needs a positive base dimension");
    return GroupoidChartAccess::build(Family::Pair, base_dim, 0, {});
}

GroupoidPtr GroupoidChart::abelian_action(int group_dim, int base_dim,
                                          std::vector<Polynomial> action) {
    if (group_dim < 1 || base_dim < 1) throw Error("action groupoid needs positive dimensions");
    if (static_cast<int>(action.size()) != base_dim)
        throw Error("action map needs one component per base coordinate");
    std::vector<std::string> chart;
    for (int a = 1; a <= group_dim; ++a) chart.push_back("v" + std::to_string(a));
    for (int j = 1; j <= base_dim; ++j) chart.push_back("x" + std::to_string(j));
    for (auto& p : action) p = p.on_chart(chart);
    return GroupoidChartAccess::build(Family::AbelianAction, base_dim, group_dim,
                                      std::move(action));
}

void GroupoidChart::check_axioms() const {
    if (family_ == Family::Pair) return; // all structure maps are projections
    // Chart (v, x) of the action input.
    std::vector<std::string> vx;
    for (int a = 1; a <= k_; ++a) vx.push_back("v" + std::to_string(a));
    for (int j = 1; j <= n_; ++j) vx.push_back("x" + std::to_string(j));
    // a(0, x) = x.
    std::vector<Polynomial> zero_subst;
    for (int a = 0; a < k_; ++a) zero_subst.push_back(Polynomial(base_chart_));
    for (int j = 0; j < n_; ++j)
        zero_subst.push_back(Polynomial::variable(base_chart_, base_chart_[static_cast<size_t>(j)]));
    for (int j = 0; j < n_; ++j) {
        if (action_[static_cast<size_t>(j)].substitute(zero_subst) !=
            Polynomial::variable(base_chart_, base_chart_[static_cast<size_t>(j)]))
            throw ValidationError("action axiom a(0, x) = x fails");
    }
    // a(v, a(w, x)) = a(v + w, x) over the chart (v, w, x).
    std::vector<std::string> vwx;
    for (int a = 1; a <= k_; ++a) vwx.push_back("v" + std::to_string(a));
    for (int a = 1; a <= k_; ++a) vwx.push_back("w" + std::to_string(a));
    for (int j = 1; j <= n_; ++j) vwx.push_back("x" + std::to_string(j));
    std::vector<Polynomial> inner; // a(w, x) components over vwx
    {
        std::vector<Polynomial> subst;
        for (int a = 1; a <= k_; ++a) subst.push_back(Polynomial::variable(vwx, "w" + std::to_string(a)));
        for (int j = 1; j <= n_; ++j) subst.push_back(Polynomial::variable(vwx, "x" + std::to_string(j)));
        for (int j = 0; j < n_; ++j) inner.push_back(action_[static_cast<size_t>(j)].substitute(subst));
    }
    for (int j = 0; j < n_; ++j) {
        std::vector<Polynomial> outer;
        for (int a = 1; a <= k_; ++a) outer.push_back(Polynomial::variable(vwx, "v" + std::to_string(a)));
        for (int jj = 0; jj < n_; ++jj) outer.push_back(inner[static_cast<size_t>(jj)]);
        Polynomial lhs = action_[static_cast<size_t>(j)].substitute(outer);
        std::vector<Polynomial> sum;
        for (int a = 1; a <= k_; ++a)
            sum.push_back(Polynomial::variable(vwx, "v" + std::to_string(a)) +
                          Polynomial::variable(vwx, "w" + std::to_string(a)));
        for (int jj = 1; jj <= n_; ++jj) sum.push_back(Polynomial::variable(vwx, "x" + std::to_string(jj)));
        Polynomial rhs = action_[static_cast<size_t>(j)].substitute(sum);
        if (lhs != rhs) throw ValidationError("action axiom a(v, a(w, x)) = a(v+w, x) fails");
    }
    // Derived inverse law a(-v, a(v, x)) = x.
    for (int j = 0; j < n_; ++j) {
        std::vector<Polynomial> inner2;
        for (int a = 1; a <= k_; ++a) inner2.push_back(Polynomial::variable(vx, "v" + std::to_string(a)));
        for (int jj = 1; jj <= n_; ++jj) inner2.push_back(Polynomial::variable(vx, "x" + std::to_string(jj)));
        std::vector<Polynomial> comps;
        for (int jj = 0; jj < n_; ++jj) comps.push_back(action_[static_cast<size_t>(jj)].substitute(inner2));
        std::vector<Polynomial> outer;
        for (int a = 1; a <= k_; ++a) outer.push_back(-Polynomial::variable(vx, "v" + std::to_string(a)));
        for (int jj = 0; jj < n_; ++jj) outer.push_back(comps[static_cast<size_t>(jj)]);
        if (action_[static_cast<size_t>(j)].substitute(outer) != Polynomial::variable(vx, "x" + std::to_string(j + 1)))
            throw ValidationError("inverse law a(-v, a(v, x)) = x fails");
    }
}

std::vector<std::string> GroupoidChart::nerve_chart(int p) const {
    if (p < 0) throw Error("negative nerve degree");
    if (p == 0) return base_chart_;
    std::vector<std::string> out;
    if (family_ == Family::Pair) {
        for (int i = 0; i <= p; ++i) {
            auto b = block("x", i, n_);
            out.insert(out.end(), b.begin(), b.end());
        }
    } else {
        for (int i = 1; i <= p; ++i) {
            auto b = block("v", i, k_);
            out.insert(out.end(), b.begin(), b.end());
        }
        for (int j = 1; j <= n_; ++j) out.push_back("x" + std::to_string(j));
    }
    return out;
}

std::vector<Polynomial> GroupoidChart::nerve_head(int p) const {
    auto chart = nerve_chart(p);
    std::vector<Polynomial> out;
    if (family_ == Family::Pair && p >= 1) {
        for (const auto& name : block("x", 0, n_)) out.push_back(Polynomial::variable(chart, name));
    } else {
        for (int j = 1; j <= n_; ++j)
            out.push_back(Polynomial::variable(chart, "x" + std::to_string(j)));
    }
    return out;
}

std::vector<std::vector<Polynomial>> GroupoidChart::nerve_arrows(int p) const {
    if (p < 1) return {};
    auto chart = nerve_chart(p);
    std::vector<std::vector<Polynomial>> arrows;
    if (family_ == Family::Pair) {
        for (int i = 1; i <= p; ++i) {
            std::vector<Polynomial> g;
            for (const auto& name : block("x", i - 1, n_)) g.push_back(Polynomial::variable(chart, name));
            for (const auto& name : block("x", i, n_)) g.push_back(Polynomial::variable(chart, name));
            arrows.push_back(std::move(g));
        }
    } else {
        // base slot of g_i: a(v_{i-1}, base(g_{i-1})), starting at x.
        std::vector<Polynomial> base;
        for (int j = 1; j <= n_; ++j) base.push_back(Polynomial::variable(chart, "x" + std::to_string(j)));
        for (int i = 1; i <= p; ++i) {
            std::vector<Polynomial> g;
            for (const auto& name : block("v", i, k_)) g.push_back(Polynomial::variable(chart, name));
            g.insert(g.end(), base.begin(), base.end());
            arrows.push_back(g);
            if (i < p) {
                std::vector<Polynomial> subst;
                for (const auto& name : block("v", i, k_)) subst.push_back(Polynomial::variable(chart, name));
                subst.insert(subst.end(), base.begin(), base.end());
                std::vector<Polynomial> next;
                for (int j = 0; j < n_; ++j) next.push_back(action_[static_cast<size_t>(j)].substitute(subst));
                base = std::move(next);
            }
        }
    }
    return arrows;
}

std::vector<Polynomial> GroupoidChart::face_substitution(int p, int face) const {
    if (face < 0 || face > p + 1) throw Error("face index out of range");
    auto target = nerve_chart(p + 1);
    auto source = nerve_chart(p);
    std::vector<Polynomial> subst;
    if (family_ == Family::Pair) {
        if (p == 0) {
            // Simplicial faces of an arrow: face 0 deletes the head (alpha
            // remains), face 1 deletes the tail (beta remains).
            const int from = face == 0 ? 1 : 0;
            for (const auto& name : block("x", from, n_)) subst.push_back(Polynomial::variable(target, name));
            return subst;
        }
        // Deleting the point x_m realizes the faces: face 0 -> m = 0,
        // merge face i -> m = i, last face -> m = p+1.
        int skip = face;
        for (int i = 0; i <= p + 1; ++i) {
            if (i == skip) continue;
            for (const auto& name : block("x", i, n_)) subst.push_back(Polynomial::variable(target, name));
        }
        return subst;
    }
    // Action family.
    auto tvar = [&](int i, int a) {
        return Polynomial::variable(target, "v" + std::to_string(i) + "_" + std::to_string(a));
    };
    auto xvar = [&](int j) { return Polynomial::variable(target, "x" + std::to_string(j)); };
    auto apply_action = [&](const std::vector<Polynomial>& v, const std::vector<Polynomial>& x) {
        std::vector<Polynomial> args = v;
        args.insert(args.end(), x.begin(), x.end());
        std::vector<Polynomial> out;
        for (int j = 0; j < n_; ++j) out.push_back(action_[static_cast<size_t>(j)].substitute(args));
        return out;
    };
    std::vector<Polynomial> xblock;
    for (int j = 1; j <= n_; ++j) xblock.push_back(xvar(j));
    if (p == 0) {
        if (face == 1) return xblock; // beta
        std::vector<Polynomial> v1;
        for (int a = 1; a <= k_; ++a) v1.push_back(tvar(1, a));
        return apply_action(v1, xblock); // alpha
    }
    if (face == 0) {
        // Drop g_1: v_i -> v_{i+1}, x -> a(v_1, x).
        for (int i = 1; i <= p; ++i)
            for (int a = 1; a <= k_; ++a) subst.push_back(tvar(i + 1, a));
        std::vector<Polynomial> v1;
        for (int a = 1; a <= k_; ++a) v1.push_back(tvar(1, a));
        auto moved = apply_action(v1, xblock);
        subst.insert(subst.end(), moved.begin(), moved.end());
        return subst;
    }
    if (face == p + 1) {
        for (int i = 1; i <= p; ++i)
            for (int a = 1; a <= k_; ++a) subst.push_back(tvar(i, a));
        subst.insert(subst.end(), xblock.begin(), xblock.end());
        return subst;
    }
    // Merge g_face and g_{face+1}.
    for (int i = 1; i <= p; ++i) {
        for (int a = 1; a <= k_; ++a) {
            if (i < face)
                subst.push_back(tvar(i, a));
            else if (i == face)
                subst.push_back(tvar(face, a) + tvar(face + 1, a));
            else
                subst.push_back(tvar(i + 1, a));
        }
    }
    subst.insert(subst.end(), xblock.begin(), xblock.end());
    return subst;
}

GroupoidCochain::GroupoidCochain(GroupoidPtr groupoid, int degree, Polynomial value)
    : groupoid_(std::move(groupoid)), degree_(degree), value_(std::move(value)) {
    value_ = value_.on_chart(groupoid_->nerve_chart(degree_));
}

GroupoidCochain GroupoidCochain::operator+(const GroupoidCochain& o) const {
    if (groupoid_ != o.groupoid_ || degree_ != o.degree_) throw Error("cochain shape mismatch");
    return GroupoidCochain(groupoid_, degree_, value_ + o.value_);
}

GroupoidCochain GroupoidCochain::operator-(const GroupoidCochain& o) const {
    if (groupoid_ != o.groupoid_ || degree_ != o.degree_) throw Error("cochain shape mismatch");
    return GroupoidCochain(groupoid_, degree_, value_ - o.value_);
}

bool GroupoidCochain::operator==(const GroupoidCochain& o) const {
    return groupoid_ == o.groupoid_ && degree_ == o.degree_ && value_ == o.value_;
}

GroupoidCochain groupoid_differential(const GroupoidCochain& c) {
    const auto& g = c.groupoid();
    const int p = c.degree();
    Polynomial out(g->nerve_chart(p + 1));
    for (int face = 0; face <= p + 1; ++face) {
        Polynomial term = c.value().substitute(g->face_substitution(p, face));
        out += face % 2 == 0 ? term : -term;
    }
    return GroupoidCochain(g, p + 1, std::move(out));
}

GroupoidCochain cup_product(const GroupoidCochain& c1, const GroupoidCochain& c2) {
    if (c1.groupoid() != c2.groupoid()) throw Error("cup product over different groupoids");
    const auto& g = c1.groupoid();
    const int p = c1.degree(), q = c2.degree();
    auto target = g->nerve_chart(p + q);
    std::vector<Polynomial> front, back;
    if (g->family() == GroupoidChart::Family::Pair) {
        const int n = g->base_dim();
        // Point block `i` of the full string, named on the target chart.
        auto point = [&](int i) {
            std::vector<Polynomial> out;
            if (p + q == 0) {
                for (const auto& name : g->base_chart()) out.push_back(Polynomial::variable(target, name));
            } else {
                for (const auto& name : block("x", i, n)) out.push_back(Polynomial::variable(target, name));
            }
            return out;
        };
        // Front substring uses points 0..p, back substring points p..p+q.
        for (int i = 0; i <= (p == 0 ? 0 : p); ++i) {
            auto b = point(i);
            front.insert(front.end(), b.begin(), b.end());
            if (p == 0) break;
        }
        for (int i = p; i <= (q == 0 ? p : p + q); ++i) {
            auto b = point(i);
            back.insert(back.end(), b.begin(), b.end());
            if (q == 0) break;
        }
    } else {
        const int k = g->group_dim();
        auto xvars = [&] {
            std::vector<Polynomial> out;
            for (const auto& name : g->base_chart()) out.push_back(Polynomial::variable(target, name));
            return out;
        }();
        // Head of the substring after `steps` arrows: a(v_1+..+v_steps, x).
        auto transported = [&](int steps) {
            if (steps == 0) return xvars;
            std::vector<Polynomial> args;
            for (int a = 1; a <= k; ++a) {
                Polynomial sum(target);
                for (int i = 1; i <= steps; ++i)
                    sum += Polynomial::variable(target, "v" + std::to_string(i) + "_" + std::to_string(a));
                args.push_back(std::move(sum));
            }
            args.insert(args.end(), xvars.begin(), xvars.end());
            std::vector<Polynomial> out;
            for (int j = 0; j < g->base_dim(); ++j)
                out.push_back(g->action_map()[static_cast<size_t>(j)].substitute(args));
            return out;
        };
        for (int i = 1; i <= p; ++i)
            for (int a = 1; a <= k; ++a)
                front.push_back(Polynomial::variable(target, "v" + std::to_string(i) + "_" + std::to_string(a)));
        auto fh = transported(0);
        front.insert(front.end(), fh.begin(), fh.end());
        for (int i = p + 1; i <= p + q; ++i)
            for (int a = 1; a <= k; ++a)
                back.push_back(Polynomial::variable(target, "v" + std::to_string(i) + "_" + std::to_string(a)));
        auto bh = transported(p);
        back.insert(back.end(), bh.begin(), bh.end());
    }
    Polynomial prod = c1.value().substitute(front) * c2.value().substitute(back);
    return GroupoidCochain(g, p + q, std::move(prod));
}

GroupoidCochain r_x(const GroupoidCochain& c, const Section& x) {
    const auto& g = c.groupoid();
    const int p = c.degree();
    if (p < 1) throw Error("R_X needs a positive-degree cochain");
    if (x.algebroid != g->algebroid()) throw Error("section is not on the derived algebroid");
    auto out_chart = g->nerve_chart(p - 1);
    std::vector<std::string> ext = out_chart;
    ext.push_back("t_");
    const std::vector<std::string> tvars = {"t_"};
    Polynomial t = Polynomial::variable(ext, "t_");

    std::vector<Polynomial> subst;
    if (g->family() == GroupoidChart::Family::Pair) {
        const int n = g->base_dim();
        // Head of the shortened string, named on the output chart.
        std::vector<Polynomial> y0;
        if (p - 1 == 0) {
            for (const auto& name : g->base_chart()) y0.push_back(Polynomial::variable(ext, name));
        } else {
            for (const auto& name : block("x", 0, n)) y0.push_back(Polynomial::variable(ext, name));
        }
        // x0 -> y0 + t X(y0); x_i -> block i-1 of the output.
        for (int j = 0; j < n; ++j) {
            Polynomial xj = x.coeffs[static_cast<size_t>(j)].substitute(y0);
            subst.push_back(y0[static_cast<size_t>(j)] + t * xj);
        }
        for (int i = 1; i <= p; ++i) {
            if (p - 1 == 0) {
                for (const auto& name : g->base_chart()) subst.push_back(Polynomial::variable(ext, name));
            } else {
                int oi = i - 1;
                for (const auto& name : block("x", oi, n)) subst.push_back(Polynomial::variable(ext, name));
            }
        }
    } else {
        const int n = g->base_dim();
        const int k = g->group_dim();
        std::vector<Polynomial> y;
        for (const auto& name : g->base_chart()) y.push_back(Polynomial::variable(ext, name));
        if (p - 1 >= 1) {
            y.clear();
            for (int j = 1; j <= n; ++j) y.push_back(Polynomial::variable(ext, "x" + std::to_string(j)));
        }
        // The alpha-fiber through the unit is {(v, a(-v, y))}; the
        // representative of X~ with d(beta) = +rho(X) sits at v = -tX.
        // So: v_1 -> -t X(y); v_i -> output v_{i-1}; x -> a(t X(y), y).
        std::vector<Polynomial> xv;
        for (int a = 0; a < k; ++a) xv.push_back(x.coeffs[static_cast<size_t>(a)].substitute(y));
        for (int a = 0; a < k; ++a) subst.push_back(-(t * xv[static_cast<size_t>(a)]));
        for (int i = 2; i <= p; ++i)
            for (int a = 1; a <= k; ++a)
                subst.push_back(Polynomial::variable(ext, "v" + std::to_string(i - 1) + "_" +
                                                              std::to_string(a)));
        std::vector<Polynomial> args;
        for (int a = 0; a < k; ++a) args.push_back(t * xv[static_cast<size_t>(a)]);
        args.insert(args.end(), y.begin(), y.end());
        for (int j = 0; j < n; ++j)
            subst.push_back(jet_truncate(
                jet_substitute(g->action_map()[static_cast<size_t>(j)], args, tvars), tvars));
    }
    Polynomial moved = jet_substitute(c.value(), subst, tvars);
    Polynomial coeff = jet_mixed_coefficient(moved, tvars);
    return GroupoidCochain(g, p - 1, coeff.on_chart(out_chart));
}

Polynomial van_est_eval(const GroupoidCochain& c, const std::vector<Section>& args) {
    const auto& g = c.groupoid();
    const int p = c.degree();
    if (static_cast<int>(args.size()) != p) throw Error("argument count must equal the degree");
    if (p == 0) return c.value();
    Polynomial out(g->base_chart());
    std::vector<int> perm(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int inversions = 0;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        GroupoidCochain cur = c;
        // Innermost operator first: R_{X_sigma(1)}, then R_{X_sigma(2)}, ...
        for (int i = 0; i < p; ++i) cur = r_x(cur, args[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
        out += inversions % 2 == 0 ? cur.value() : -cur.value();
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

AlgebroidCochain van_est(const GroupoidCochain& c) {
    const auto& g = c.groupoid();
    const auto& a = g->algebroid();
    const int p = c.degree();
    AlgebroidCochain out(a, p);
    if (p == 0) {
        out.set_component({}, {c.value().on_chart(a->chart())});
        return out;
    }
    if (p > a->rank()) return out;
    std::vector<int> tuple;
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == p) {
            std::vector<Section> args;
            for (int i : tuple) args.push_back(Section::frame_element(a, i));
            out.set_component(tuple, {van_est_eval(c, args)});
            return;
        }
        for (int i = start; i < a->rank(); ++i) {
            tuple.push_back(i);
            rec(i + 1, depth + 1);
            tuple.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

namespace {

Polynomial random_nerve_poly(std::mt19937_64& rng, const std::vector<std::string>& chart,
                             int max_deg) {
    Polynomial out(chart);
    int terms = 2 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Exponents e(chart.size(), 0);
        int budget = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        for (int d = 0; d < budget; ++d) e[rng() % chart.size()] += 1;
        long num = static_cast<long>(rng() % 9) - 4;
        if (num == 0) num = 1;
        out.add_term(e, Rational(num));
    }
    return out;
}

} // namespace

HarnessReport property_harness(const GroupoidPtr& g, int trials, unsigned seed, int max_degree,
                               int max_poly_degree) {
    HarnessReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    const auto& a = g->algebroid();
    for (int trial = 0; trial < trials; ++trial) {
        // Degree 0 joins the pool: the chain-map identity is the only
        // meaningful check there (Phi restricts functions to units).
        int p = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
        GroupoidCochain c(g, p, random_nerve_poly(rng, g->nerve_chart(p), max_poly_degree));
        ++report.trials;

        // (p1) chain map with one global sign.
        AlgebroidCochain lhs = van_est(groupoid_differential(c));
        AlgebroidCochain rhs = differential(van_est(c));
        if (report.chain_sign == 0) {
            if (lhs == rhs && lhs == rhs.scaled(Rational(-1))) {
                // both sides zero; keep the sign undetermined
            } else if (lhs == rhs) {
                report.chain_sign = 1;
            } else if (lhs == rhs.scaled(Rational(-1))) {
                report.chain_sign = -1;
            } else {
                report.pass = false;
                report.counterexample = "chain map fails at degree " + std::to_string(p) +
                                        " on c = " + c.value().str();
                return report;
            }
        } else if (lhs != rhs.scaled(Rational(report.chain_sign))) {
            report.pass = false;
            report.counterexample = "chain-map sign flips at degree " + std::to_string(p) +
                                    " on c = " + c.value().str();
            return report;
        }

        if (p == 0) continue;

        // (p2) cochains independent of the first arrow map to zero:
        // pull a random cochain back along face 0 (drop g_1).
        GroupoidCochain pulled(g, p, random_nerve_poly(rng, g->nerve_chart(p - 1), max_poly_degree)
                                         .substitute(g->face_substitution(p - 1, 0)));
        if (!van_est(pulled).is_zero()) {
            report.pass = false;
            report.counterexample = "first-slot-independent cochain with nonzero image, degree " +
                                    std::to_string(p);
            return report;
        }

        // (p3) the recursion identity, on frame tuples of length p.
        if (p <= a->rank()) {
            std::vector<int> tuple;
            bool ok = true;
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (!ok) return;
                if (depth == p) {
                    std::vector<Section> args;
                    for (int i : tuple) args.push_back(Section::frame_element(a, i));
                    Polynomial direct = van_est_eval(c, args);
                    Polynomial sum(a->chart());
                    for (int i = 0; i < p; ++i) {
                        std::vector<Section> rest;
                        for (int j = 0; j < p; ++j)
                            if (j != i) rest.push_back(args[static_cast<size_t>(j)]);
                        Polynomial term = van_est_eval(r_x(c, args[static_cast<size_t>(i)]), rest);
                        sum += (i % 2 == 0) ? term : -term;
                    }
                    if (sum != direct) ok = false;
                    return;
                }
                for (int i = start; i < a->rank(); ++i) {
                    tuple.push_back(i);
                    rec(i + 1, depth + 1);
                    tuple.pop_back();
                }
            };
            rec(0, 0);
            if (!ok) {
                report.pass = false;
                report.counterexample = "recursion identity fails at degree " + std::to_string(p) +
                                        " on c = " + c.value().str();
                return report;
            }
        }
    }
    return report;
}

std::vector<SurjectivityWitness> surjectivity_witnesses(const GroupoidPtr& g) {
    if (g->family() != GroupoidChart::Family::Pair)
        throw Error("surjectivity witnesses are defined for the pair family");
    const auto& a = g->algebroid();
    std::vector<SurjectivityWitness> out;
    for (int i = 0; i < g->base_dim(); ++i) {
        auto chart = g->nerve_chart(1);
        Polynomial c = Polynomial::variable(chart, "x0_" + std::to_string(i + 1)) -
                       Polynomial::variable(chart, "x1_" + std::to_string(i + 1));
        AlgebroidCochain covector(a, 1);
        covector.set_component({i}, {a->constant(1)});
        SurjectivityWitness w;
        w.coordinate = i;
        for (int sign : {1, -1}) {
            GroupoidCochain cand(g, 1, sign > 0 ? c : -c);
            if (van_est(cand) == covector) {
                w.sign = sign;
                w.ok = true;
                break;
            }
        }
        out.push_back(w);
    }
    return out;
}

} // namespace algc
