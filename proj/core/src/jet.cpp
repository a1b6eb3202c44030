#include "algc/jet.hpp"

#include <algorithm>

namespace algc {

namespace {

std::vector<size_t> tvar_positions(const std::vector<std::string>& coords,
                                   const std::vector<std::string>& tvars) {
    std::vector<size_t> pos;
    pos.reserve(tvars.size());
    for (const auto& t : tvars) {
        auto it = std::find(coords.begin(), coords.end(), t);
        if (it == coords.end()) throw AlignmentError("jet parameter '" + t + "' not on chart");
        pos.push_back(static_cast<size_t>(it - coords.begin()));
    }
    return pos;
}

} // namespace

Polynomial jet_truncate(const Polynomial& p, const std::vector<std::string>& tvars) {
    auto pos = tvar_positions(p.coordinates(), tvars);
    Polynomial out(p.coordinates());
    for (const auto& [e, c] : p.terms()) {
        bool dead = false;
        for (size_t k : pos)
            if (e[k] >= 2) {
                dead = true;
                break;
            }
        if (!dead) out.add_term(e, c);
    }
    return out;
}

Polynomial jet_mul(const Polynomial& a, const Polynomial& b, const std::vector<std::string>& tvars) {
    return jet_truncate(a * b, tvars);
}

Polynomial jet_substitute(const Polynomial& p, const std::vector<Polynomial>& subs,
                          const std::vector<std::string>& tvars) {
    if (subs.size() != p.coordinates().size()) throw Error("jet substitution arity mismatch");
    std::vector<std::string> target =
        subs.empty() ? std::vector<std::string>{} : subs[0].coordinates();
    Polynomial out(target);
    std::vector<std::vector<Polynomial>> powers(subs.size());
    auto power = [&](size_t k, int e) -> const Polynomial& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(jet_mul(cache.back(), subs[k], tvars));
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [e, c] : p.terms()) {
        Polynomial m = Polynomial::constant(target, c);
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) m = jet_mul(m, power(k, e[k]), tvars);
        out += m;
    }
    return out;
}

Polynomial jet_mixed_coefficient(const Polynomial& p, const std::vector<std::string>& tvars) {
    const auto& coords = p.coordinates();
    auto pos = tvar_positions(coords, tvars);
    std::vector<std::string> base;
    for (const auto& name : coords)
        if (std::find(tvars.begin(), tvars.end(), name) == tvars.end()) base.push_back(name);
    std::vector<size_t> base_pos;
    for (size_t k = 0; k < coords.size(); ++k)
        if (std::find(pos.begin(), pos.end(), k) == pos.end()) base_pos.push_back(k);

    Polynomial out(base);
    for (const auto& [e, c] : p.terms()) {
        bool match = true;
        for (size_t k : pos)
            if (e[k] != 1) {
                match = false;
                break;
            }
        if (!match) continue;
        Exponents ne(base.size());
        for (size_t k = 0; k < base_pos.size(); ++k) ne[k] = e[base_pos[k]];
        out.add_term(ne, c);
    }
    return out;
}

Polynomial directional_jet(const Polynomial& p, const std::vector<Polynomial>& base,
                           const std::vector<std::vector<Polynomial>>& dirs,
                           const std::vector<std::string>& tvars) {
    if (base.size() != p.coordinates().size()) throw Error("directional jet arity mismatch");
    if (dirs.size() != tvars.size()) throw Error("one direction per jet parameter required");
    std::vector<std::string> target =
        base.empty() ? std::vector<std::string>{} : base[0].coordinates();
    std::vector<Polynomial> subs;
    subs.reserve(base.size());
    for (size_t i = 0; i < base.size(); ++i) {
        Polynomial s = base[i].on_chart(target);
        for (size_t j = 0; j < dirs.size(); ++j) {
            if (dirs[j].size() != base.size()) throw Error("direction arity mismatch");
            s += Polynomial::variable(target, tvars[j]) * dirs[j][i].on_chart(target);
        }
        subs.push_back(s);
    }
    return jet_mixed_coefficient(jet_substitute(p, subs, tvars), tvars);
}

} // namespace algc
