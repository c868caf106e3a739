#include "solidus/number_field.hpp"

namespace solidus {

namespace {

using vec = std::vector<rational>;

int deg(const vec& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!is_zero(p[i])) return i;
  return -1;
}

vec rem(vec a, const vec& b) {
  int db = deg(b);
  for (int da = deg(a); da >= db; da = deg(a)) {
    rational q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
  }
  return a;
}

}  // namespace

nf_element nf_element::inverse() const {
  if (is_zero()) throw kernel_error("nf_element: division by zero");
  if (!field_ || is_rational()) {
    nf_element r(rational(1) / coeff_[0]);
    return field_ ? nf_element(field_, [&] {
      std::vector<rational> c(field_->degree(), rational(0));
      c[0] = r.rat_value();
      return c;
    }()) : r;
  }
  // Extended Euclid: s*this + t*m = 1 in Q[t]; the inverse is s mod m.
  vec r0 = field_->minpoly();
  vec r1 = coeff_;
  vec s0(1, rational(0)), s1(1, rational(1));
  while (deg(r1) > 0) {
    int d0 = deg(r0), d1 = deg(r1);
    vec q(d0 - d1 + 1, rational(0));
    vec a = r0;
    for (int da = deg(a); da >= d1; da = deg(a)) {
      rational c = a[da] / r1[d1];
      q[da - d1] = c;
      for (int i = 0; i <= d1; ++i) a[da - d1 + i] -= c * r1[i];
    }
    // (r0, r1) <- (r1, r0 - q r1); same for s.
    vec s2(std::max(s0.size(), q.size() + s1.size()), rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    r0 = std::move(r1);
    r1 = std::move(a);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r1) != 0)
    throw kernel_error("nf_element: element not invertible (minpoly reducible?)");
  rational unit = r1[0];
  std::vector<rational> inv(field_->degree(), rational(0));
  vec s = rem(std::move(s1), field_->minpoly());
  for (int i = 0; i <= deg(s); ++i) inv[i] = s[i] / unit;
  return nf_element(field_, std::move(inv));
}

}  // namespace solidus
