#ifndef SOLIDUS_FACTOR_HPP
#define SOLIDUS_FACTOR_HPP

#include <vector>

#include "solidus/mpoly.hpp"
#include "solidus/upoly.hpp"

namespace solidus {

template <typename Poly>
struct factored {
  rational content{1};
  std::vector<std::pair<Poly, int>> factors;  // (irreducible, multiplicity)
};

/// Irreducible factorization over Q of a univariate polynomial of degree
/// >= 1. Factors are integer-primitive with positive leading coefficient;
/// content * prod(factor^mult) reproduces the input exactly.
factored<upoly<rational>> factor_univariate(const upoly<rational>& f);

/// Irreducible factorization over Q of a bivariate polynomial, desk-scale
/// guard total degree <= 8. Same conventions as factor_univariate.
factored<mpoly<rational>> factor_bivariate(const mpoly<rational>& f);

/// Rational roots plus the irreducible nonlinear factors that would require
/// a field extension.
struct q_root_split {
  std::vector<rational> roots;
  std::vector<upoly<rational>> nonlinear;  // irreducible, degree >= 2
};
q_root_split rational_roots(const upoly<rational>& f);

}  // namespace solidus

#endif
