#ifndef SOLIDUS_NUMBER_FIELD_HPP
#define SOLIDUS_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "solidus/rational.hpp"

namespace solidus {

/// A simple extension Q(a) presented by a monic irreducible minimal
/// polynomial m over Q. Degree-1 contexts are never created; plain Q is
/// represented by a null context on nf_element.
class number_field {
 public:
  /// minpoly: coefficients c0..c_{d} of a monic m = t^d + ... + c0, d >= 2.
  explicit number_field(std::vector<rational> minpoly)
      : min_(std::move(minpoly)) {
    if (min_.size() < 3) throw kernel_error("number_field: degree must be >= 2");
    if (!is_one(min_.back())) throw kernel_error("number_field: minpoly not monic");
    // alpha^d = -(c0 + c1 a + ... + c_{d-1} a^{d-1})
    reduction_.assign(degree(), rational(0));
    for (int i = 0; i < degree(); ++i) reduction_[i] = -min_[i];
  }

  int degree() const { return static_cast<int>(min_.size()) - 1; }
  const std::vector<rational>& minpoly() const { return min_; }

  /// "t^2-2" style text, with generator symbol `a` in element printing.
  std::string minpoly_str() const {
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const rational& c = min_[i];
      if (is_zero(c) && i != degree()) continue;
      std::string term;
      if (i == 0)
        term = rat_str(c);
      else {
        rational abs_c = abs(c);
        term = (is_one(abs_c) ? "" : rat_str(abs_c) + "*");
        term += "t";
        if (i > 1) term += "^" + std::to_string(i);
        if (sgn(c) < 0) term = "-" + term;
      }
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    return s;
  }

  /// a^d expressed in the power basis 1..a^{d-1}.
  const std::vector<rational>& alpha_power_reduction() const { return reduction_; }

 private:
  std::vector<rational> min_;
  std::vector<rational> reduction_;
};

using field_ptr = std::shared_ptr<const number_field>;

/// Element of Q or of one Q(a). A null field context means plain Q and the
/// coefficient vector has size 1; otherwise the vector has size deg(m).
class nf_element {
 public:
  nf_element() : coeff_(1, rational(0)) {}
  nf_element(rational r) : coeff_{std::move(r)} {}  // NOLINT: implicit by design
  nf_element(long n) : coeff_{rational(n)} {}       // NOLINT
  nf_element(int n) : coeff_{rational(n)} {}        // NOLINT
  nf_element(field_ptr f, std::vector<rational> coeff)
      : field_(std::move(f)), coeff_(std::move(coeff)) {
    if (field_ && static_cast<int>(coeff_.size()) != field_->degree())
      throw kernel_error("nf_element: coefficient vector size mismatch");
  }

  /// The generator a of Q(a).
  static nf_element generator(const field_ptr& f) {
    std::vector<rational> c(f->degree(), rational(0));
    c[1] = 1;
    return nf_element(f, std::move(c));
  }

  const field_ptr& field() const { return field_; }
  const std::vector<rational>& coeffs() const { return coeff_; }

  bool is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
      if (!solidus::is_zero(coeff_[i])) return false;
    return true;
  }
  const rational& rat_value() const {
    if (!is_rational()) throw kernel_error("nf_element: not rational");
    return coeff_[0];
  }

  bool is_zero() const {
    for (const auto& c : coeff_)
      if (!solidus::is_zero(c)) return false;
    return true;
  }

  friend nf_element operator+(const nf_element& x, const nf_element& y) {
    auto [a, b, f] = aligned(x, y);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return nf_element(f, std::move(a));
  }
  friend nf_element operator-(const nf_element& x, const nf_element& y) {
    auto [a, b, f] = aligned(x, y);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return nf_element(f, std::move(a));
  }
  nf_element operator-() const {
    auto c = coeff_;
    for (auto& v : c) v = -v;
    return nf_element(field_, std::move(c));
  }
  friend nf_element operator*(const nf_element& x, const nf_element& y) {
    auto [a, b, f] = aligned(x, y);
    if (!f) return nf_element(a[0] * b[0]);
    int d = f->degree();
    std::vector<rational> prod(2 * d - 1, rational(0));
    for (int i = 0; i < d; ++i) {
      if (solidus::is_zero(a[i])) continue;
      for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce a^k for k >= d using a^d = reduction
    const auto& red = f->alpha_power_reduction();
    for (int k = 2 * d - 2; k >= d; --k) {
      if (solidus::is_zero(prod[k])) continue;
      rational c = prod[k];
      prod[k] = 0;
      for (int j = 0; j < d; ++j) prod[k - d + j] += c * red[j];
    }
    prod.resize(d);
    return nf_element(f, std::move(prod));
  }
  friend nf_element operator/(const nf_element& x, const nf_element& y) {
    return x * y.inverse();
  }
  nf_element& operator+=(const nf_element& o) { return *this = *this + o; }
  nf_element& operator-=(const nf_element& o) { return *this = *this - o; }
  nf_element& operator*=(const nf_element& o) { return *this = *this * o; }
  nf_element& operator/=(const nf_element& o) { return *this = *this / o; }

  friend bool operator==(const nf_element& x, const nf_element& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const nf_element& x, const nf_element& y) {
    return !(x == y);
  }

  /// Inverse modulo the minimal polynomial (extended Euclid in Q[t]).
  nf_element inverse() const;

  std::string str() const {
    if (!field_ || is_rational()) return rat_str(coeff_[0]);
    std::string s;
    for (int i = 0; i < static_cast<int>(coeff_.size()); ++i) {
      const rational& c = coeff_[i];
      if (solidus::is_zero(c)) continue;
      std::string term;
      rational abs_c = abs(c);
      if (i == 0)
        term = rat_str(abs_c);
      else {
        term = is_one(abs_c) ? "" : rat_str(abs_c) + "*";
        term += "a";
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (s.empty())
        s = (sgn(c) < 0 ? "-" : "") + term;
      else
        s += (sgn(c) < 0 ? "-" : "+") + term;
    }
    return s.empty() ? "0" : s;
  }

 private:
  // Brings both operands into a common context; throws on two distinct fields.
  static std::tuple<std::vector<rational>, std::vector<rational>, field_ptr>
  aligned(const nf_element& x, const nf_element& y) {
    field_ptr f;
    if (x.field_ && y.field_) {
      if (x.field_ != y.field_ && x.field_->minpoly() != y.field_->minpoly())
        throw kernel_error("nf_element: mixing distinct number fields");
      f = x.field_;
    } else {
      f = x.field_ ? x.field_ : y.field_;
    }
    auto lift = [&](const nf_element& e) {
      std::vector<rational> c = e.coeff_;
      if (f) c.resize(f->degree(), rational(0));
      return c;
    };
    return {lift(x), lift(y), f};
  }

  field_ptr field_;
  std::vector<rational> coeff_;
};

// --- tiny field-concept helpers used by the templated containers ---------

inline bool is_zero(const nf_element& a) { return a.is_zero(); }
inline bool is_one(const nf_element& a) { return a == nf_element(1); }

template <typename K>
struct field_traits;

template <>
struct field_traits<rational> {
  static rational zero() { return rational(0); }
  static rational one() { return rational(1); }
  static std::string str(const rational& a) { return rat_str(a); }
};

template <>
struct field_traits<nf_element> {
  static nf_element zero() { return nf_element(0); }
  static nf_element one() { return nf_element(1); }
  static std::string str(const nf_element& a) { return a.str(); }
};

}  // namespace solidus

#endif
