#include "solidus/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "solidus/polygcd.hpp"

namespace solidus {

namespace {

// ---------------------------------------------------------------------------
// arithmetic in Fp[x], p a word-size odd prime
// ---------------------------------------------------------------------------

using u64 = unsigned long long;
using fpoly = std::vector<u64>;  // c[i] * x^i, trimmed

u64 mulmod(u64 a, u64 b, u64 p) { return u64((unsigned __int128)(a)*b % p); }
u64 powmod_u(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod_u(a, p - 2, p); }

void ftrim(fpoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int fdeg(const fpoly& f) { return int(f.size()) - 1; }

fpoly fmul(const fpoly& a, const fpoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  fpoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = u64(((unsigned __int128)(a[i]) * b[j] + r[i + j]) % p);
  }
  ftrim(r);
  return r;
}

fpoly fsub(fpoly a, const fpoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  ftrim(a);
  return a;
}

std::pair<fpoly, fpoly> fdivmod(fpoly a, const fpoly& b, u64 p) {
  int db = fdeg(b);
  u64 inv = invmod(b.back(), p);
  fpoly q(std::max(0, fdeg(a) - db + 1), 0);
  while (fdeg(a) >= db) {
    u64 c = mulmod(a.back(), inv, p);
    int shift = fdeg(a) - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    ftrim(a);
  }
  ftrim(q);
  return {std::move(q), std::move(a)};
}

fpoly frem(fpoly a, const fpoly& b, u64 p) {
  return fdivmod(std::move(a), b, p).second;
}

fpoly fmonic(fpoly f, u64 p) {
  if (f.empty()) return f;
  u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

fpoly fgcd(fpoly a, fpoly b, u64 p) {
  while (!b.empty()) {
    fpoly r = frem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(std::move(a), p);
}

fpoly fderiv(const fpoly& f, u64 p) {
  if (f.size() <= 1) return {};
  fpoly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], u64(i % p), p);
  ftrim(r);
  return r;
}

fpoly fpowmod(fpoly base, integer e, const fpoly& mod, u64 p) {
  fpoly r{1};
  base = frem(std::move(base), mod, p);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = frem(fmul(r, base, p), mod, p);
    base = frem(fmul(base, base, p), mod, p);
    e /= 2;
  }
  return r;
}

void equal_degree(const fpoly& f, int d, u64 p, std::mt19937_64& rng,
                  std::vector<fpoly>& out) {
  int n = fdeg(f);
  if (n == d) {
    out.push_back(fmonic(f, p));
    return;
  }
  integer exp;
  mpz_ui_pow_ui(exp.get_mpz_t(), p, d);
  exp = (exp - 1) / 2;
  while (true) {
    fpoly a(n);
    for (auto& c : a) c = rng() % p;
    ftrim(a);
    if (fdeg(a) < 1) continue;
    fpoly g = fgcd(a, f, p);
    if (!(fdeg(g) > 0 && fdeg(g) < n)) {
      fpoly b = fpowmod(a, exp, f, p);
      if (b.empty()) continue;
      b[0] = (b[0] + p - 1) % p;
      ftrim(b);
      g = fgcd(b, f, p);
      if (!(fdeg(g) > 0 && fdeg(g) < n)) continue;
    }
    equal_degree(g, d, p, rng, out);
    equal_degree(fdivmod(f, g, p).first, d, p, rng, out);
    return;
  }
}

/// Monic squarefree factorization over Fp via distinct-degree + CZ.
std::vector<fpoly> factor_fp(fpoly f, u64 p) {
  std::vector<fpoly> out;
  std::mt19937_64 rng(0x51deb00cULL ^ (p * 1315423911ULL) ^ u64(fdeg(f)));
  f = fmonic(std::move(f), p);
  fpoly h{0, 1};  // x
  int d = 0;
  while (fdeg(f) > 0) {
    ++d;
    if (2 * d > fdeg(f)) {
      out.push_back(f);
      break;
    }
    h = fpowmod(std::move(h), integer((unsigned long)p), f, p);
    fpoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    ftrim(hx);
    fpoly g = fgcd(hx, f, p);
    if (fdeg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      f = fdivmod(std::move(f), g, p).first;
      h = frem(std::move(h), f, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Z[x] / (Z/m)[x] on mpz coefficient vectors
// ---------------------------------------------------------------------------

using zpoly = std::vector<integer>;

void ztrim(zpoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}
int zdeg(const zpoly& f) { return int(f.size()) - 1; }

zpoly zmul(const zpoly& a, const zpoly& b) {
  if (a.empty() || b.empty()) return {};
  zpoly r(a.size() + b.size() - 1, integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

zpoly zmod(zpoly f, const integer& m) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(f);
  return f;
}

zpoly zsym(zpoly f, const integer& m) {
  integer half = m / 2;
  for (auto& c : f) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(f);
  return f;
}

zpoly zadd(zpoly a, const zpoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}
zpoly zsub(zpoly a, const zpoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

// division with remainder by a monic polynomial, coefficients mod m
std::pair<zpoly, zpoly> zdivmod_monic(zpoly a, const zpoly& b, const integer& m) {
  int db = zdeg(b);
  zpoly q(std::max(0, zdeg(a) - db + 1), integer(0));
  while (zdeg(a) >= db) {
    integer c = a.back();
    int shift = zdeg(a) - db;
    q[shift] += c;
    for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    a = zmod(std::move(a), m);
  }
  return {zmod(std::move(q), m), std::move(a)};
}

// one quadratic Hensel step: from (g,h,s,t) valid mod m to valid mod m^2;
// f and g,h monic, s g + t h = 1 (mod m), deg s < deg h, deg t < deg g.
void hensel_step(const zpoly& f, zpoly& g, zpoly& h, zpoly& s, zpoly& t,
                 const integer& m) {
  integer m2 = m * m;
  zpoly e = zmod(zsub(f, zmul(g, h)), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
  zpoly g1 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
  zpoly h1 = zmod(zadd(h, r), m2);
  zpoly b = zmod(zsub(zadd(zmul(s, g1), zmul(t, h1)), zpoly{integer(1)}), m2);
  auto [c, d] = zdivmod_monic(zmul(s, b), h1, m2);
  zpoly s1 = zmod(zsub(s, d), m2);
  zpoly t1 = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g1)), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Bezout pair over Fp lifted into zpoly form.
void bezout_fp(const zpoly& g, const zpoly& h, u64 p, zpoly& s_out, zpoly& t_out) {
  auto to_fp = [&](const zpoly& f) {
    fpoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      integer c = f[i] % integer((unsigned long)p);
      if (sgn(c) < 0) c += integer((unsigned long)p);
      r[i] = c.get_ui();
    }
    ftrim(r);
    return r;
  };
  fpoly r0 = to_fp(g), r1 = to_fp(h);
  fpoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fdivmod(r0, r1, p);
    fpoly s2 = fsub(s0, fmul(q, s1, p), p);
    fpoly t2 = fsub(t0, fmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fdeg(r0) != 0) throw kernel_error("hensel: factors not coprime mod p");
  u64 inv = invmod(r0[0], p);
  auto to_z = [&](const fpoly& f) {
    zpoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = integer((unsigned long)mulmod(f[i], inv, p));
    ztrim(r);
    return r;
  };
  s_out = to_z(s0);
  t_out = to_z(t0);
}

// Lifts the monic factorization f = prod(facs) (mod p) to mod p^2^k >= target.
// f monic over Z; returns factors mod `modulus` (monic).
void multifactor_lift(const zpoly& f, const std::vector<fpoly>& facs, u64 p,
                      const integer& target, std::vector<zpoly>& out,
                      integer& modulus_out) {
  // modulus ladder
  integer m = integer((unsigned long)p);
  int steps = 0;
  while (m < target) {
    m = m * m;
    ++steps;
  }
  std::function<void(const zpoly&, size_t, size_t)> rec = [&](const zpoly& fcur,
                                                              size_t lo, size_t hi) {
    if (hi - lo == 1) {
      out[lo] = fcur;
      return;
    }
    size_t mid = lo + (hi - lo) / 2;
    auto prod_range = [&](size_t a, size_t b) {
      zpoly r{integer(1)};
      for (size_t i = a; i < b; ++i) {
        zpoly zi(facs[i].size());
        for (size_t j = 0; j < facs[i].size(); ++j) zi[j] = integer((unsigned long)facs[i][j]);
        r = zmul(r, zi);
      }
      return zmod(std::move(r), integer((unsigned long)p));
    };
    zpoly g = prod_range(lo, mid), h = prod_range(mid, hi);
    zpoly s, t;
    bezout_fp(g, h, p, s, t);
    integer mm = integer((unsigned long)p);
    for (int i = 0; i < steps; ++i) {
      hensel_step(fcur, g, h, s, t, mm);
      mm = mm * mm;
    }
    g = zmod(std::move(g), m);
    h = zmod(std::move(h), m);
    rec(g, lo, mid);
    rec(h, mid, hi);
  };
  out.assign(facs.size(), {});
  rec(zmod(f, m), 0, facs.size());
  modulus_out = m;
}

// ---------------------------------------------------------------------------
// Zassenhaus for a monic squarefree integer polynomial
// ---------------------------------------------------------------------------

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    u64 x = powmod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<zpoly> zassenhaus_monic(const zpoly& f) {
  int n = zdeg(f);
  if (n <= 0) return {};
  if (n == 1) return {f};

  // choose a prime with squarefree reduction and few modular factors
  u64 best_p = 0;
  std::vector<fpoly> best_facs;
  u64 p = 10007;
  int tried = 0;
  while (tried < 4) {
    while (!is_prime_u64(p)) ++p;
    fpoly fp(f.size());
    bool lc_ok = true;
    for (size_t i = 0; i < f.size(); ++i) {
      integer c = f[i] % integer((unsigned long)p);
      if (sgn(c) < 0) c += integer((unsigned long)p);
      fp[i] = c.get_ui();
    }
    ftrim(fp);
    if (fdeg(fp) != n) lc_ok = false;  // cannot happen for monic f
    if (lc_ok) {
      fpoly g = fgcd(fp, fderiv(fp, p), p);
      if (fdeg(g) == 0) {
        auto facs = factor_fp(fp, p);
        if (best_p == 0 || facs.size() < best_facs.size()) {
          best_p = p;
          best_facs = std::move(facs);
        }
        ++tried;
        if (best_facs.size() == 1) break;
      }
    }
    ++p;
  }
  if (best_facs.size() == 1) return {f};

  // coefficient bound for monic factors: 2^n * (sum |c_i| + 1)
  integer height(0);
  for (const auto& c : f) height += abs(c);
  integer bound = (height + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);  // extra margin

  std::vector<zpoly> lifted;
  integer modulus;
  multifactor_lift(f, best_facs, best_p, 2 * bound + 1, lifted, modulus);

  // subset recombination
  std::vector<zpoly> result;
  zpoly rem_f = f;
  std::vector<int> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = int(i);

  auto try_subset = [&](const std::vector<int>& subset) -> bool {
    zpoly prod{integer(1)};
    for (int i : subset) prod = zmod(zmul(prod, lifted[i]), modulus);
    prod = zsym(std::move(prod), modulus);
    // exact division test over Q
    std::vector<rational> fa(rem_f.size()), fb(prod.size());
    for (size_t i = 0; i < rem_f.size(); ++i) fa[i] = rational(rem_f[i]);
    for (size_t i = 0; i < prod.size(); ++i) fb[i] = rational(prod[i]);
    upoly<rational> A{std::vector<rational>(fa)}, B{std::vector<rational>(fb)};
    if (B.degree() < 1) return false;
    auto [q, r] = upoly<rational>::divmod(A, B);
    if (!r.is_zero()) return false;
    result.push_back(prod);
    zpoly qq(q.coeffs().size());
    for (size_t i = 0; i < qq.size(); ++i) {
      if (q.coeffs()[i].get_den() != 1) return false;  // should not happen
      qq[i] = q.coeffs()[i].get_num();
    }
    rem_f = std::move(qq);
    return true;
  };

  size_t card = 1;
  while (2 * card <= live.size()) {
    bool extracted = false;
    std::vector<int> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = int(i);
    while (true) {
      std::vector<int> subset(card);
      for (size_t i = 0; i < card; ++i) subset[i] = live[idx[i]];
      if (try_subset(subset)) {
        std::vector<int> nl;
        for (int v : live)
          if (std::find(subset.begin(), subset.end(), v) == subset.end())
            nl.push_back(v);
        live = std::move(nl);
        extracted = true;
        break;
      }
      // next combination
      int i = int(card) - 1;
      while (i >= 0 && idx[i] == int(live.size()) - int(card) + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!extracted) ++card;
  }
  if (zdeg(rem_f) > 0) result.push_back(rem_f);
  return result;
}

// ---------------------------------------------------------------------------
// public univariate factorization over Q
// ---------------------------------------------------------------------------

upoly<rational> from_zpoly(const zpoly& f) {
  std::vector<rational> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = rational(f[i]);
  return upoly<rational>(std::move(c));
}

zpoly to_zpoly_primitive(const upoly<rational>& f) {
  upoly<rational> p = primitive_over_z(f);
  zpoly r(p.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i].get_num();
  return r;
}

// monicize F(x) = lc^(n-1) f(x/lc), factor, map factors back primitive.
std::vector<upoly<rational>> factor_squarefree_primitive(const zpoly& f) {
  int n = zdeg(f);
  if (n == 1) return {from_zpoly(f)};
  integer lc = f.back();
  // monicize: fm[k] = f[k] * lc^(n-1-k), fm[n] = 1
  zpoly fm(f.size());
  fm[n] = 1;
  integer pw(1);
  for (int k = n - 1; k >= 0; --k) {
    fm[k] = f[k] * pw;
    pw *= lc;
  }
  auto monic_factors = zassenhaus_monic(fm);
  std::vector<upoly<rational>> out;
  for (const auto& gz : monic_factors) {
    // g(lc * x), then primitive part
    upoly<rational> g = from_zpoly(gz);
    std::vector<rational> c(g.coeffs());
    rational s(1);
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] *= s;
      s *= rational(lc);
    }
    out.push_back(primitive_over_z(upoly<rational>(std::move(c))));
  }
  return out;
}

}  // namespace

factored<upoly<rational>> factor_univariate(const upoly<rational>& f) {
  if (f.degree() < 1) throw kernel_error("factor_univariate: degree must be >= 1");
  factored<upoly<rational>> out;
  upoly<rational> s = squarefree_part(primitive_over_z(f));
  zpoly sz = to_zpoly_primitive(s);
  auto irr = factor_squarefree_primitive(sz);
  // multiplicities by repeated exact division
  upoly<rational> rest = f;
  for (const auto& q : irr) {
    int mult = 0;
    while (true) {
      auto [qq, rr] = upoly<rational>::divmod(rest, q);
      if (!rr.is_zero()) break;
      rest = qq;
      ++mult;
    }
    out.factors.emplace_back(q, mult);
  }
  if (rest.degree() != 0)
    throw kernel_error("factor_univariate: internal factor loss");
  out.content = rest.coeff(0);
  // multiply-back check
  upoly<rational> check = upoly<rational>::constant(out.content);
  for (const auto& [q, m] : out.factors)
    for (int i = 0; i < m; ++i) check = check * q;
  if (!(check == f)) throw kernel_error("factor_univariate: multiply-back failed");
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i) {
                if (a.first.coeff(i) != b.first.coeff(i))
                  return a.first.coeff(i) < b.first.coeff(i);
              }
              return false;
            });
  return out;
}

q_root_split rational_roots(const upoly<rational>& f) {
  q_root_split out;
  if (f.degree() < 1) return out;
  auto fac = factor_univariate(f);
  for (const auto& [q, m] : fac.factors) {
    if (q.degree() == 1) {
      out.roots.push_back(-q.coeff(0) / q.coeff(1));
    } else {
      out.nonlinear.push_back(q);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// bivariate factorization: shift, univariate factor, (y-y0)-adic Hensel lift,
// subset recombination
// ---------------------------------------------------------------------------

namespace {

// truncated power series ring Q[yhat]/(yhat^P)
struct series {
  std::vector<rational> c;  // size <= P
};

series strunc(series a, int P) {
  if (int(a.c.size()) > P) a.c.resize(P);
  while (!a.c.empty() && is_zero(a.c.back())) a.c.pop_back();
  return a;
}
series sadd(series a, const series& b, int P) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), rational(0));
  for (size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
  return strunc(std::move(a), P);
}
series ssub(series a, const series& b, int P) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), rational(0));
  for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
  return strunc(std::move(a), P);
}
series smul(const series& a, const series& b, int P) {
  series r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(std::min<size_t>(a.c.size() + b.c.size() - 1, P), rational(0));
  for (size_t i = 0; i < a.c.size() && int(i) < P; ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size() && int(i + j) < P; ++j)
      r.c[i + j] += a.c[i] * b.c[j];
  }
  return strunc(std::move(r), P);
}
bool sis_zero(const series& a) { return a.c.empty(); }
series sconst(rational v) {
  series s;
  if (!is_zero(v)) s.c.push_back(std::move(v));
  return s;
}
// inverse of a unit series
series sinv(const series& a, int P) {
  if (a.c.empty() || is_zero(a.c[0])) throw kernel_error("series not a unit");
  series r = sconst(rational(1) / a.c[0]);
  // Newton: r <- r(2 - a r), doubling precision
  int prec = 1;
  while (prec < P) {
    prec *= 2;
    series ar = smul(a, r, std::min(prec, P));
    series two = sconst(rational(2));
    series corr = ssub(two, ar, std::min(prec, P));
    r = smul(r, corr, std::min(prec, P));
  }
  return strunc(std::move(r), P);
}

// polynomial in x with series coefficients
struct xpoly {
  std::vector<series> c;  // c[i] * x^i
};
void xtrim(xpoly& f) {
  while (!f.c.empty() && sis_zero(f.c.back())) f.c.pop_back();
}
int xdeg(const xpoly& f) { return int(f.c.size()) - 1; }

xpoly xmul(const xpoly& a, const xpoly& b, int P) {
  xpoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, series{});
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = sadd(std::move(r.c[i + j]), smul(a.c[i], b.c[j], P), P);
  xtrim(r);
  return r;
}
xpoly xadd(xpoly a, const xpoly& b, int P) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), series{});
  for (size_t i = 0; i < b.c.size(); ++i)
    a.c[i] = sadd(std::move(a.c[i]), b.c[i], P);
  xtrim(a);
  return a;
}
xpoly xsub(xpoly a, const xpoly& b, int P) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), series{});
  for (size_t i = 0; i < b.c.size(); ++i)
    a.c[i] = ssub(std::move(a.c[i]), b.c[i], P);
  xtrim(a);
  return a;
}
// division with remainder by x-monic polynomial
std::pair<xpoly, xpoly> xdivmod(xpoly a, const xpoly& b, int P) {
  int db = xdeg(b);
  xpoly q;
  q.c.assign(std::max(0, xdeg(a) - db + 1), series{});
  while (xdeg(a) >= db) {
    series f = a.c.back();
    int shift = xdeg(a) - db;
    q.c[shift] = sadd(std::move(q.c[shift]), f, P);
    for (int i = 0; i <= db; ++i)
      a.c[shift + i] = ssub(std::move(a.c[shift + i]), smul(f, b.c[i], P), P);
    xtrim(a);
  }
  xtrim(q);
  return {std::move(q), std::move(a)};
}

// Hensel step in the series world (exactly the integer version with the
// modulus replaced by truncation order doubling).
struct lift_state {
  xpoly g, h, s, t;
};

void hensel_step_series(const xpoly& f, lift_state& st, int P) {
  xpoly e = xsub(f, xmul(st.g, st.h, P), P);
  auto [q, r] = xdivmod(xmul(st.s, e, P), st.h, P);
  xpoly g1 = xadd(xadd(st.g, xmul(st.t, e, P), P), xmul(q, st.g, P), P);
  xpoly h1 = xadd(st.h, r, P);
  xpoly one;
  one.c.push_back(sconst(rational(1)));
  xpoly b = xsub(xadd(xmul(st.s, g1, P), xmul(st.t, h1, P), P), one, P);
  auto [c, d] = xdivmod(xmul(st.s, b, P), h1, P);
  xpoly s1 = xsub(st.s, d, P);
  xpoly t1 = xsub(xsub(st.t, xmul(st.t, b, P), P), xmul(c, g1, P), P);
  st = {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Bezout pair at yhat = 0 (plain univariate extended Euclid over Q).
void bezout_q(const upoly<rational>& g, const upoly<rational>& h,
              upoly<rational>& s_out, upoly<rational>& t_out) {
  upoly<rational> r0 = g, r1 = h;
  upoly<rational> s0 = upoly<rational>::constant(rational(1)), s1;
  upoly<rational> t0, t1 = upoly<rational>::constant(rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = upoly<rational>::divmod(r0, r1);
    auto s2 = s0 - q * s1;
    auto t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw kernel_error("bezout: inputs not coprime");
  rational inv = rational(1) / r0.coeff(0);
  s_out = inv * s0;
  t_out = inv * t0;
}

xpoly to_xpoly(const upoly<rational>& u) {
  xpoly f;
  f.c.reserve(u.coeffs().size());
  for (const auto& cc : u.coeffs()) f.c.push_back(sconst(cc));
  xtrim(f);
  return f;
}

// recursive multifactor lift over the series ring
void multilift_series(const xpoly& f, const std::vector<upoly<rational>>& facs,
                      size_t lo, size_t hi, int P, int steps,
                      std::vector<xpoly>& out) {
  if (hi - lo == 1) {
    out[lo] = f;
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  upoly<rational> g0 = upoly<rational>::constant(rational(1));
  upoly<rational> h0 = upoly<rational>::constant(rational(1));
  for (size_t i = lo; i < mid; ++i) g0 = g0 * facs[i];
  for (size_t i = mid; i < hi; ++i) h0 = h0 * facs[i];
  upoly<rational> s0, t0;
  bezout_q(g0, h0, s0, t0);
  lift_state st{to_xpoly(g0), to_xpoly(h0), to_xpoly(s0), to_xpoly(t0)};
  for (int i = 0; i < steps; ++i) hensel_step_series(f, st, P);
  multilift_series(st.g, facs, lo, mid, P, steps, out);
  multilift_series(st.h, facs, mid, hi, P, steps, out);
}

}  // namespace

factored<mpoly<rational>> factor_bivariate(const mpoly<rational>& f_in) {
  using P2 = mpoly<rational>;
  if (f_in.is_zero()) throw kernel_error("factor_bivariate: zero polynomial");
  if (f_in.total_degree() > 8)
    throw kernel_error("factor_bivariate: degree guard (<= 8) exceeded");
  // identify the two active variables (others must be inert)
  std::vector<int> active;
  for (size_t v = 0; v < f_in.vars().size(); ++v)
    if (f_in.degree_in(int(v)) > 0) active.push_back(int(v));
  if (active.size() > 2)
    throw kernel_error("factor_bivariate: more than two active variables");

  factored<P2> out;
  if (f_in.total_degree() == 0) {
    out.content = f_in.terms().begin()->second;
    return out;
  }
  int vx = active[0];
  int vy = active.size() > 1 ? active[1] : active[0];

  std::vector<P2> irreducibles;

  // squarefree part, then split off the content free of x
  P2 s = squarefree_part(f_in);
  if (active.size() == 1 || s.degree_in(vx) == 0 || s.degree_in(vy) == 0) {
    // effectively univariate
    int v = s.degree_in(vx) > 0 ? vx : vy;
    auto uf = factor_univariate(to_upoly(s, v));
    for (const auto& [q, m] : uf.factors)
      irreducibles.push_back(from_upoly(q, s.vars(), v));
  } else {
    auto coeffs = s.coeffs_by(vx);
    P2 cont = coeffs[0];
    for (size_t i = 1; i < coeffs.size() && cont.total_degree() != 0; ++i)
      cont = coeffs[i].is_zero() ? cont : poly_gcd(cont, coeffs[i]);
    if (cont.total_degree() > 0) {
      auto cf = factor_univariate(to_upoly(cont, vy));
      for (const auto& [q, m] : cf.factors)
        irreducibles.push_back(from_upoly(q, s.vars(), vy));
      s = *divide_exact(s, cont);
    }
    s = normalize_primitive(s);

    if (s.degree_in(vx) == 0) {
      // everything was content
    } else if (s.total_degree() == 0) {
      // unit
    } else {
      int n = s.degree_in(vx);
      // monicize in x: S = lc^(n-1) * s(x/lc), i.e. Sc[k] = sc[k]*lc^(n-1-k)
      auto sc = s.coeffs_by(vx);
      P2 lc = sc[n];
      std::vector<P2> Sc(n + 1, P2(s.vars()));
      std::vector<P2> lcpow(n + 1, P2::constant(s.vars(), rational(1)));
      for (int i = 1; i <= n; ++i) lcpow[i] = lcpow[i - 1] * lc;
      for (int k = 0; k <= n; ++k)
        Sc[k] = k == n ? P2::constant(s.vars(), rational(1))
                       : sc[k] * lcpow[n - 1 - k];
      P2 S = P2::from_coeffs_by(vx, Sc, s.vars());

      int degy = S.degree_in(vy);
      int Pprec = degy + 1;

      // choose a shift y0 with squarefree specialization
      rational y0;
      upoly<rational> u0;
      for (int k = 0;; ++k) {
        rational a = (k == 0) ? rational(0)
                              : (k % 2 ? rational((k + 1) / 2)
                                       : rational(-(k + 1) / 2));
        P2 spec = S.subs(vy, a);
        upoly<rational> u = to_upoly(spec, vx);
        if (u.degree() == n && gcd(u, u.derivative()).degree() == 0) {
          y0 = a;
          u0 = u;
          break;
        }
        if (k > 200) throw kernel_error("factor_bivariate: no good shift found");
      }

      auto uf = factor_univariate(u0);
      std::vector<upoly<rational>> base;
      for (const auto& [q, m] : uf.factors) base.push_back(q.monic());

      if (base.size() == 1) {
        irreducibles.push_back(normalize_primitive(s));
      } else {
        // S(x, y0 + yhat) as xpoly with series coefficients
        P2 yvar = P2::var(S.vars(), S.vars()[vy], 1);
        P2 shifted = S.subs_poly(vy, yvar + P2::constant(S.vars(), y0));
        auto shc = shifted.coeffs_by(vx);
        xpoly F;
        F.c.assign(shc.size(), series{});
        for (size_t k = 0; k < shc.size(); ++k) {
          series se;
          auto yc = shc[k].coeffs_by(vy);
          se.c.resize(yc.size());
          for (size_t j = 0; j < yc.size(); ++j) {
            if (yc[j].is_zero())
              se.c[j] = rational(0);
            else
              se.c[j] = yc[j].terms().begin()->second;
          }
          F.c[k] = strunc(std::move(se), Pprec);
        }
        xtrim(F);

        int steps = 1;
        while ((1 << steps) < Pprec) ++steps;

        std::vector<xpoly> lifted(base.size());
        multilift_series(F, base, 0, base.size(), Pprec, steps, lifted);

        // recombination
        std::vector<int> live(base.size());
        for (size_t i = 0; i < live.size(); ++i) live[i] = int(i);
        P2 Srem = S;

        auto xpoly_to_mpoly = [&](const xpoly& g) {
          // back-substitute yhat = y - y0
          P2 acc(S.vars());
          P2 yhat = yvar - P2::constant(S.vars(), y0);
          for (size_t k = 0; k < g.c.size(); ++k) {
            P2 coeff(S.vars());
            P2 yp = P2::constant(S.vars(), rational(1));
            for (size_t j = 0; j < g.c[k].c.size(); ++j) {
              coeff = coeff + g.c[k].c[j] * yp;
              yp = yp * yhat;
            }
            P2 xv = P2::var(S.vars(), S.vars()[vx], int(k));
            if (k == 0) xv = P2::constant(S.vars(), rational(1));
            acc = acc + coeff * xv;
          }
          return acc;
        };

        auto try_subset = [&](const std::vector<int>& subset) -> bool {
          xpoly prod;
          prod.c.push_back(sconst(rational(1)));
          for (int i : subset) prod = xmul(prod, lifted[i], Pprec);
          P2 cand = xpoly_to_mpoly(prod);
          auto q = divide_exact(Srem, cand);
          if (!q) return false;
          // undo monicization on the extracted factor
          P2 sub = cand;
          {
            auto cc = sub.coeffs_by(vx);
            std::vector<P2> lcpow(cc.size(), P2::constant(s.vars(), rational(1)));
            for (size_t i = 1; i < cc.size(); ++i) lcpow[i] = lcpow[i - 1] * lc;
            for (size_t k = 0; k < cc.size(); ++k) cc[k] = cc[k] * lcpow[k];
            sub = P2::from_coeffs_by(vx, cc, s.vars());
            auto cbx = sub.coeffs_by(vx);
            P2 c2 = cbx[0];
            for (size_t i = 1; i < cbx.size(); ++i)
              if (!cbx[i].is_zero())
                c2 = c2.is_zero() ? cbx[i] : poly_gcd(c2, cbx[i]);
            if (!c2.is_zero() && c2.total_degree() >= 0) sub = *divide_exact(sub, c2);
          }
          irreducibles.push_back(normalize_primitive(sub));
          Srem = *q;
          return true;
        };

        size_t card = 1;
        while (2 * card <= live.size()) {
          bool extracted = false;
          std::vector<int> idx(card);
          for (size_t i = 0; i < card; ++i) idx[i] = int(i);
          while (true) {
            std::vector<int> subset(card);
            for (size_t i = 0; i < card; ++i) subset[i] = live[idx[i]];
            if (try_subset(subset)) {
              std::vector<int> nl;
              for (int v : live)
                if (std::find(subset.begin(), subset.end(), v) == subset.end())
                  nl.push_back(v);
              live = std::move(nl);
              extracted = true;
              break;
            }
            int i = int(card) - 1;
            while (i >= 0 && idx[i] == int(live.size()) - int(card) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
          }
          if (!extracted) ++card;
        }
        if (Srem.degree_in(vx) > 0) {
          // remaining part corresponds to the unused lifted factors
          P2 sub = Srem;
          auto cc = sub.coeffs_by(vx);
          std::vector<P2> lcpow(cc.size(), P2::constant(s.vars(), rational(1)));
          for (size_t i = 1; i < cc.size(); ++i) lcpow[i] = lcpow[i - 1] * lc;
          for (size_t k = 0; k < cc.size(); ++k) cc[k] = cc[k] * lcpow[k];
          sub = P2::from_coeffs_by(vx, cc, s.vars());
          auto cbx = sub.coeffs_by(vx);
          P2 c2(s.vars());
          for (size_t i = 0; i < cbx.size(); ++i)
            if (!cbx[i].is_zero())
              c2 = c2.is_zero() ? cbx[i] : poly_gcd(c2, cbx[i]);
          if (c2.total_degree() > 0) sub = *divide_exact(sub, c2);
          irreducibles.push_back(normalize_primitive(sub));
        }
      }
    }
  }

  // multiplicities against the original input
  P2 rest = f_in;
  for (const auto& q : irreducibles) {
    int mult = 0;
    while (true) {
      auto d = divide_exact(rest, q);
      if (!d) break;
      rest = *d;
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(q, mult);
  }
  if (rest.total_degree() != 0)
    throw kernel_error("factor_bivariate: internal factor loss");
  out.content = rest.terms().begin()->second;
  // multiply-back identity, exact
  P2 check = P2::constant(f_in.vars(), out.content);
  for (const auto& [q, m] : out.factors)
    for (int i = 0; i < m; ++i) check = check * q;
  if (!(check == f_in))
    throw kernel_error("factor_bivariate: multiply-back failed");
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
  return out;
}

}  // namespace solidus
