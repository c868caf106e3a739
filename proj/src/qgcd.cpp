#include "solidus/upoly.hpp"

namespace solidus {

namespace {

using u64 = unsigned long long;

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

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL})
    if (n % d == 0) return n == d;
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

using fpoly = std::vector<u64>;

void ftrim(fpoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int fdeg(const fpoly& f) { return int(f.size()) - 1; }

fpoly frem(fpoly a, const fpoly& b, u64 p) {
  int db = fdeg(b);
  u64 inv = invmod(b.back(), p);
  while (fdeg(a) >= db) {
    u64 c = mulmod(a.back(), inv, p);
    int shift = fdeg(a) - db;
    for (int i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    ftrim(a);
  }
  return a;
}

fpoly fgcd_monic(fpoly a, fpoly b, u64 p) {
  while (!b.empty()) {
    fpoly r = frem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

// integer coefficient image mod p
fpoly reduce_mod(const std::vector<integer>& f, u64 p) {
  fpoly r(f.size());
  integer ip((unsigned long)p);
  for (size_t i = 0; i < f.size(); ++i) {
    integer c = f[i] % ip;
    if (sgn(c) < 0) c += ip;
    r[i] = c.get_ui();
  }
  ftrim(r);
  return r;
}

std::vector<integer> to_z(const upoly<rational>& p) {
  upoly<rational> q = primitive_over_z(p);
  std::vector<integer> out(q.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = q.coeffs()[i].get_num();
  return out;
}

upoly<rational> gcd_prs(const upoly<rational>& a0, const upoly<rational>& b0) {
  upoly<rational> a = primitive_over_z(a0), b = primitive_over_z(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    int db = b.degree();
    upoly<rational> r = a;
    rational lb = b.coeff(db);
    while (!r.is_zero() && r.degree() >= db) {
      int shift = r.degree() - db;
      rational f = r.lc();
      std::vector<rational> c(r.coeffs());
      for (auto& v : c) v *= lb;
      for (int i = 0; i <= db; ++i) c[shift + i] -= f * b.coeff(i);
      r = upoly<rational>(std::move(c));
    }
    if (!r.is_zero()) r = primitive_over_z(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool divides_exactly(const upoly<rational>& d, const upoly<rational>& f) {
  return upoly<rational>::divmod(f, d).second.is_zero();
}

}  // namespace

upoly<rational> gcd(const upoly<rational>& a0, const upoly<rational>& b0) {
  if (a0.is_zero()) return b0.is_zero() ? b0 : b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (std::min(a0.degree(), b0.degree()) <= 8) return gcd_prs(a0, b0);

  std::vector<integer> f = to_z(a0), g = to_z(b0);
  integer gamma;
  mpz_gcd(gamma.get_mpz_t(), f.back().get_mpz_t(), g.back().get_mpz_t());

  u64 p = (1ULL << 59) + 55;  // walk odd numbers from here
  int best_deg = std::min(a0.degree(), b0.degree()) + 1;
  std::vector<integer> acc;  // CRT-accumulated gamma * monic gcd
  integer modulus = 1;
  std::vector<integer> prev_lift;

  for (int used = 0, tried = 0; tried < 400 && used < 64; ++tried, p += 2) {
    if (!is_prime_u64(p)) continue;
    if (sgn(f.back() % integer((unsigned long)p)) == 0) continue;
    if (sgn(g.back() % integer((unsigned long)p)) == 0) continue;
    fpoly hp = fgcd_monic(reduce_mod(f, p), reduce_mod(g, p), p);
    int d = fdeg(hp);
    if (d == 0) return upoly<rational>::constant(rational(1));
    if (d > best_deg) continue;  // unlucky prime
    if (d < best_deg) {
      best_deg = d;
      acc.assign(d + 1, integer(0));
      modulus = 1;
      prev_lift.clear();
    }
    // scale to gamma * hp mod p and CRT-combine
    integer ip((unsigned long)p);
    u64 gam = [&] {
      integer c = gamma % ip;
      if (sgn(c) < 0) c += ip;
      return c.get_ui();
    }();
    ++used;
    std::vector<integer> target(d + 1);
    for (int i = 0; i <= d; ++i)
      target[i] = integer((unsigned long)mulmod(hp[i], gam, p));
    if (modulus == 1) {
      acc = target;
      modulus = ip;
    } else {
      // combine: x = acc (mod modulus), x = target (mod p)
      integer minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), ip.get_mpz_t());
      for (int i = 0; i <= d; ++i) {
        integer diff = ((target[i] - acc[i]) % ip + ip) % ip;
        acc[i] = acc[i] + modulus * ((diff * minv) % ip);
      }
      modulus *= ip;
    }
    // symmetric lift and stability check
    std::vector<integer> lift(d + 1);
    integer half = modulus / 2;
    for (int i = 0; i <= d; ++i) {
      integer c = acc[i] % modulus;
      if (sgn(c) < 0) c += modulus;
      if (c > half) c -= modulus;
      lift[i] = c;
    }
    if (lift == prev_lift) {
      std::vector<rational> rc(d + 1);
      for (int i = 0; i <= d; ++i) rc[i] = rational(lift[i]);
      upoly<rational> h = primitive_over_z(upoly<rational>(std::move(rc)));
      if (!h.is_zero() && divides_exactly(h, a0) && divides_exactly(h, b0))
        return h.monic();
    }
    prev_lift = std::move(lift);
  }
  return gcd_prs(a0, b0);
}

}  // namespace solidus
