#ifndef ALGC_JET_HPP
#define ALGC_JET_HPP

#include "algc/polynomial.hpp"

namespace algc {

// First-order jet arithmetic: the parameters listed in `tvars` square to
// zero. Values live on a chart of the form (base coordinates ++ tvars).

// Drops every term carrying t_i^2 or higher.
Polynomial jet_truncate(const Polynomial& p, const std::vector<std::string>& tvars);

// Truncated product.
Polynomial jet_mul(const Polynomial& a, const Polynomial& b, const std::vector<std::string>& tvars);

// Substitutes each coordinate of `p` by the jet polynomial of the same
// index (all over one chart containing `tvars`), truncating along the way.
Polynomial jet_substitute(const Polynomial& p, const std::vector<Polynomial>& subs,
                          const std::vector<std::string>& tvars);

// Coefficient of t_1*...*t_k (exponent exactly one on every listed jet
// parameter), returned on the chart with the jet parameters removed.
Polynomial jet_mixed_coefficient(const Polynomial& p, const std::vector<std::string>& tvars);

// Mixed first derivative of `p` along the substituted curves at t = 0:
// coordinate i is replaced by base[i] + sum_j tvars[j]*dirs[j][i].
Polynomial directional_jet(const Polynomial& p, const std::vector<Polynomial>& base,
                           const std::vector<std::vector<Polynomial>>& dirs,
                           const std::vector<std::string>& tvars);

} // namespace algc

#endif
