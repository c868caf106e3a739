#ifndef SOLIDUS_RESULTANT_HPP
#define SOLIDUS_RESULTANT_HPP

#include "solidus/matrix.hpp"
#include "solidus/mpoly.hpp"

namespace solidus {

/// Sylvester matrix of two univariate polynomials (tests use its determinant
/// as an independent oracle for resultant values).
template <typename K>
matrix<K> sylvester_matrix(const upoly<K>& f, const upoly<K>& g) {
  int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) throw kernel_error("sylvester of zero polynomial");
  matrix<K> s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s.at(i, i + j) = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = g.coeff(n - j);
  return s;
}

namespace detail {

template <typename K>
mpoly<K> pow_poly(const mpoly<K>& base, int n, const mpoly<K>& one) {
  mpoly<K> r = one;
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

inline rational eval_point(int k) {
  if (k == 0) return rational(0);
  int half = (k + 1) / 2;
  return (k % 2 == 1) ? rational(half) : rational(-half);
}

template <typename K>
mpoly<K> resultant_rec(const mpoly<K>& f, const mpoly<K>& g, int v) {
  int df = f.degree_in(v), dg = g.degree_in(v);
  const mpoly<K> one = mpoly<K>::constant(f.vars(), field_traits<K>::one());
  if (df == 0 && dg == 0) return one;
  if (df == 0) return pow_poly(f, dg, one);
  if (dg == 0) return pow_poly(g, df, one);

  int w = -1;
  for (size_t i = 0; i < f.vars().size(); ++i) {
    if (int(i) == v) continue;
    if (f.degree_in(int(i)) > 0 || g.degree_in(int(i)) > 0) {
      w = int(i);
      break;
    }
  }
  if (w < 0) {
    upoly<K> uf = to_upoly(f, v), ug = to_upoly(g, v);
    return mpoly<K>::constant(f.vars(), resultant(uf, ug));
  }

  int bound = f.degree_in(w) * dg + df * g.degree_in(w);
  mpoly<K> lf = f.coeffs_by(v)[df], lg = g.coeffs_by(v)[dg];
  std::vector<K> points;
  std::vector<mpoly<K>> values;
  for (int k = 0; int(points.size()) <= bound; ++k) {
    K a = K(eval_point(k));
    if (lf.subs(w, a).is_zero() || lg.subs(w, a).is_zero()) continue;
    values.push_back(resultant_rec(f.subs(w, a), g.subs(w, a), v));
    points.push_back(a);
  }
  // Lagrange interpolation in w
  int n = int(points.size());
  mpoly<K> master = one;
  mpoly<K> wvar = mpoly<K>::var(f.vars(), f.vars()[w], 1);
  for (int i = 0; i < n; ++i)
    master = master * (wvar - mpoly<K>::constant(f.vars(), points[i]));
  mpoly<K> acc(f.vars());
  for (int i = 0; i < n; ++i) {
    auto mc = master.coeffs_by(w);
    std::vector<mpoly<K>> qc(mc.size() - 1, mpoly<K>(f.vars()));
    mpoly<K> carry(f.vars());
    for (int k = int(mc.size()) - 1; k >= 1; --k) {
      carry = mc[k] + points[i] * carry;
      qc[k - 1] = carry;
    }
    mpoly<K> li = mpoly<K>::from_coeffs_by(w, qc, f.vars());
    K denom = field_traits<K>::one();
    for (int j = 0; j < n; ++j)
      if (j != i) denom = denom * (points[i] - points[j]);
    acc = acc + (field_traits<K>::one() / denom) * (values[i] * li);
  }
  return acc;
}

}  // namespace detail

/// Sylvester resultant of f and g with respect to one variable, computed by
/// recursive evaluation/interpolation on the remaining variables. The result
/// lives in the same variable list with degree 0 in `var`.
template <typename K>
mpoly<K> resultant(const mpoly<K>& f, const mpoly<K>& g, int var) {
  if (f.is_zero() || g.is_zero())
    throw kernel_error("resultant of zero polynomial");
  return detail::resultant_rec(f, g, var);
}

template <typename K>
mpoly<K> resultant(const mpoly<K>& f, const mpoly<K>& g, const std::string& var) {
  return resultant(f, g, f.var_index(var));
}

}  // namespace solidus

#endif
