#ifndef SOLIDUS_UPOLY_HPP
#define SOLIDUS_UPOLY_HPP

#include <algorithm>
#include <vector>

#include "solidus/number_field.hpp"
#include "solidus/rational.hpp"

namespace solidus {

/// Dense univariate polynomial over a field K (rational or nf_element).
template <typename K>
class upoly {
 public:
  upoly() = default;
  explicit upoly(std::vector<K> coeff) : c_(std::move(coeff)) { trim(); }
  static upoly constant(K v) { return upoly(std::vector<K>{std::move(v)}); }
  static upoly monomial(K v, int n) {
    std::vector<K> c(n + 1, field_traits<K>::zero());
    c[n] = std::move(v);
    return upoly(std::move(c));
  }
  static upoly x() { return monomial(field_traits<K>::one(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const K& lc() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i]
                                                       : field_traits<K>::zero();
  }

  friend upoly operator+(const upoly& a, const upoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), field_traits<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return upoly(std::move(r));
  }
  friend upoly operator-(const upoly& a, const upoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), field_traits<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return upoly(std::move(r));
  }
  friend upoly operator*(const upoly& a, const upoly& b) {
    if (a.is_zero() || b.is_zero()) return upoly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, field_traits<K>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (solidus::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return upoly(std::move(r));
  }
  friend upoly operator*(const K& s, const upoly& a) {
    std::vector<K> r = a.c_;
    for (auto& v : r) v = s * v;
    return upoly(std::move(r));
  }
  friend bool operator==(const upoly& a, const upoly& b) {
    return (a - b).is_zero();
  }

  /// Euclidean division; requires b != 0.
  static std::pair<upoly, upoly> divmod(upoly a, const upoly& b) {
    if (b.is_zero()) throw kernel_error("upoly: division by zero polynomial");
    int db = b.degree();
    K inv_lc = field_traits<K>::one() / b.lc();
    std::vector<K> q(std::max(0, a.degree() - db + 1), field_traits<K>::zero());
    while (a.degree() >= db) {
      int shift = a.degree() - db;
      K f = a.lc() * inv_lc;
      q[shift] = f;
      for (int i = 0; i <= db; ++i)
        a.c_[shift + i] = a.c_[shift + i] - f * b.c_[i];
      a.trim();
    }
    return {upoly(std::move(q)), std::move(a)};
  }
  friend upoly operator/(const upoly& a, const upoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw kernel_error("upoly: inexact division");
    return q;
  }
  friend upoly operator%(const upoly& a, const upoly& b) {
    return divmod(a, b).second;
  }

  upoly monic() const {
    if (is_zero()) return *this;
    K inv = field_traits<K>::one() / lc();
    return inv * *this;
  }

  upoly derivative() const {
    if (degree() < 1) return upoly();
    std::vector<K> r(c_.size() - 1, field_traits<K>::zero());
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(long(i)) * c_[i];
    return upoly(std::move(r));
  }

  K eval(const K& v) const {
    K r = field_traits<K>::zero();
    for (int i = degree(); i >= 0; --i) r = r * v + c_[i];
    return r;
  }

  /// p(x + s)
  upoly shifted(const K& s) const {
    upoly r;
    upoly xs = upoly(std::vector<K>{s, field_traits<K>::one()});
    for (int i = degree(); i >= 0; --i) r = r * xs + constant(c_[i]);
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (solidus::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + field_traits<K>::str(c_[i]) + ")";
      if (i >= 1) s += "*t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && solidus::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;  // c_[i] multiplies x^i; invariant: no zero leading coeff
};

template <typename K>
upoly<K> gcd(upoly<K> a, upoly<K> b) {
  while (!b.is_zero()) {
    auto r = upoly<K>::divmod(a, b).second;
    if (!r.is_zero()) r = r.monic();  // keeps number-field coefficients small
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline upoly<rational> primitive_over_z(const upoly<rational>& a);

/// gcd over Q: small-prime images plus CRT reconstruction for large inputs,
/// primitive pseudo-remainder sequences as the exact fallback. Monic output.
upoly<rational> gcd(const upoly<rational>& a, const upoly<rational>& b);

/// Squarefree part a / gcd(a, a') (characteristic zero).
template <typename K>
upoly<K> squarefree_part(const upoly<K>& a) {
  if (a.degree() < 1) return a;
  auto g = gcd(a, a.derivative());
  return (a / g).monic();
}

/// Resultant of two nonzero polynomials over the field K, Euclid-style with
/// the Sylvester sign convention.
template <typename K>
K resultant(upoly<K> a, upoly<K> b) {
  if (a.is_zero() || b.is_zero()) throw kernel_error("resultant of zero polynomial");
  K sign = field_traits<K>::one();
  K acc = field_traits<K>::one();
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      K r = acc;
      K l = b.lc();
      for (int i = 0; i < da; ++i) r = r * l;
      return sign * r;
    }
    if (da < db) {
      std::swap(a, b);
      if ((da % 2) == 1 && (db % 2) == 1) sign = -sign;
      continue;
    }
    auto r = a % b;
    if (r.is_zero()) return field_traits<K>::zero();
    // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b,r)
    K l = b.lc();
    for (int i = 0; i < da - r.degree(); ++i) acc = acc * l;
    if ((da % 2) == 1 && (db % 2) == 1) sign = -sign;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Discriminant via res(f, f') / lc, with the standard sign.
template <typename K>
K discriminant(const upoly<K>& f) {
  int n = f.degree();
  if (n < 1) throw kernel_error("discriminant needs degree >= 1");
  if (f.derivative().is_zero()) return field_traits<K>::zero();
  K r = resultant(f, f.derivative()) / f.lc();
  if ((n % 4 == 2) || (n % 4 == 3)) r = field_traits<K>::zero() - r;
  return r;
}

// --- integer-coefficient helpers for rational upolys ----------------------

/// Clears denominators and the integer content; leading coefficient positive.
inline upoly<rational> primitive_over_z(const upoly<rational>& a) {
  if (a.is_zero()) return a;
  integer l = 1;
  for (const auto& c : a.coeffs()) l = den_lcm(l, c);
  integer content = 0;
  std::vector<integer> zc;
  zc.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    zc.push_back(v);
  }
  if (sgn(zc.back()) < 0) content = -content;
  std::vector<rational> out;
  out.reserve(zc.size());
  for (auto& v : zc) out.emplace_back(rational(v / content));
  return upoly<rational>(std::move(out));
}

}  // namespace solidus

#endif
