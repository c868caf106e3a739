#ifndef SOLIDUS_RATIONAL_HPP
#define SOLIDUS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace solidus {

using integer = mpz_class;

/// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>0.
using rational = mpq_class;

inline bool is_zero(const rational& a) { return sgn(a) == 0; }
inline bool is_one(const rational& a) { return a == 1; }

inline rational rat(long n, long d = 1) { return rational(n, d); }

/// Canonical decimal-free text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

/// Parses "p", "-p", or "p/q". Returns nullopt on malformed input.
inline std::optional<rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto ok_digits = [](const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!ok_digits(num, start)) return std::nullopt;
  rational r;
  if (slash == std::string::npos) {
    r = rational(num);
  } else {
    std::string den = text.substr(slash + 1);
    if (!ok_digits(den, 0)) return std::nullopt;
    rational d(den);
    if (is_zero(d)) return std::nullopt;
    r = rational(num) / d;
  }
  r.canonicalize();
  return r;
}

/// Least common multiple of denominators; used to clear fractions row-wise.
inline integer den_lcm(const integer& acc, const rational& a) {
  integer l;
  mpz_lcm(l.get_mpz_t(), acc.get_mpz_t(), a.get_den().get_mpz_t());
  return l;
}

struct kernel_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computed quantity contradicts an identity the theory
/// guarantees; callers map it to the dedicated process exit code.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace solidus

#endif
