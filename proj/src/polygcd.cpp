#include "solidus/polygcd.hpp"

#include <random>

namespace solidus {

namespace {

using P = mpoly<rational>;
using exps = P::exps;

bool exp_divides(const exps& d, const exps& f) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > f[i]) return false;
  return true;
}

// Degree in v of the lex-leading structure, used to pick main variables.
int first_active_var(const P& f, const P& g) {
  for (size_t v = 0; v < f.vars().size(); ++v)
    if (f.degree_in(int(v)) > 0 || g.degree_in(int(v)) > 0) return int(v);
  return -1;
}

P content_in(const P& f, int v);

// gcd over the list of coefficients
P list_gcd(const std::vector<P>& polys) {
  P g(polys.front().vars());
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize_primitive(p) : poly_gcd(g, p);
    if (g.total_degree() == 0) break;
  }
  return g;
}

P content_in(const P& f, int v) { return list_gcd(f.coeffs_by(v)); }

// one primitive pseudo-remainder step w.r.t. v
P pseudo_rem(P a, const P& b, int v) {
  int db = b.degree_in(v);
  auto bc = b.coeffs_by(v);
  P lb = bc[db];
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    auto ac = a.coeffs_by(v);
    P la = ac[da];
    // a <- lb*a - la*b*v^(da-db)
    P shift = P::var(a.vars(), a.vars()[v], 1);
    P vb = b;
    for (int i = 0; i < da - db; ++i) vb = vb * shift;
    a = lb * a - la * vb;
  }
  return a;
}

}  // namespace

std::optional<P> divide_exact(const P& f, const P& d) {
  if (d.is_zero()) return std::nullopt;
  if (f.is_zero()) return P(f.vars());
  P rem = f;
  P q(f.vars());
  const auto& dt = *d.terms().rbegin();  // lex-leading term of d
  while (!rem.is_zero()) {
    const auto& rt = *rem.terms().rbegin();
    if (!exp_divides(dt.first, rt.first)) return std::nullopt;
    exps e(rt.first.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = rt.first[i] - dt.first[i];
    rational c = rt.second / dt.second;
    P mono(f.vars());
    mono.add_term(e, c);
    q = q + mono;
    rem = rem - mono * d;
  }
  return q;
}

P normalize_primitive(const P& f) {
  if (f.is_zero()) return f;
  integer l = 1;
  for (const auto& [e, c] : f.terms()) l = den_lcm(l, c);
  integer content = 0;
  for (const auto& [e, c] : f.terms()) {
    integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (sgn(f.terms().rbegin()->second) < 0) content = -content;
  rational scale = rational(l) / rational(content);
  scale.canonicalize();
  return scale * f;
}

P poly_gcd(const P& f, const P& g) {
  if (f.is_zero()) return normalize_primitive(g);
  if (g.is_zero()) return normalize_primitive(f);
  int v = first_active_var(f, g);
  if (v < 0) return P::constant(f.vars(), rational(1));
  if (f.degree_in(v) == 0 || g.degree_in(v) == 0) {
    // one input is free of the main variable: gcd divides its content
    const P& free_one = f.degree_in(v) == 0 ? f : g;
    const P& other = f.degree_in(v) == 0 ? g : f;
    return poly_gcd(free_one, content_in(other, v));
  }
  P cf = content_in(f, v), cg = content_in(g, v);
  P a = *divide_exact(f, cf), b = *divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    P r = pseudo_rem(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = P(f.vars());
    } else {
      b = *divide_exact(r, content_in(r, v));
    }
  }
  P cont = poly_gcd(cf, cg);
  return normalize_primitive(cont * a);
}

bool is_squarefree(const P& f) {
  return squarefree_part(f).total_degree() == f.total_degree();
}

bool is_squarefree_form(const P& f) {
  if (f.is_zero()) return false;
  int deg = f.total_degree();
  if (deg <= 1) return true;
  // restriction to a line: x_i = a_i s + b_i u; a repeated factor of f stays
  // repeated on every line, so one squarefree restriction is a certificate
  std::mt19937_64 rng(0x5f3759df);
  const std::vector<std::string> su{"s", "u"};
  for (int trial = 0; trial < 8; ++trial) {
    mpoly<rational> g = P::constant(su, rational(0));
    {
      mpoly<rational> s = P::var(su, "s", 1), u = P::var(su, "u", 1);
      std::vector<mpoly<rational>> images;
      for (size_t i = 0; i < f.vars().size(); ++i) {
        long a = long(rng() % 11) - 5, b = long(rng() % 11) - 5;
        images.push_back(rational(a) * s + rational(b) * u);
      }
      for (const auto& [e, c] : f.terms()) {
        mpoly<rational> m = P::constant(su, c);
        for (size_t i = 0; i < e.size(); ++i)
          for (int k = 0; k < e[i]; ++k) m = m * images[i];
        g = g + m;
      }
    }
    if (g.total_degree() != deg) continue;  // degenerate line
    // binary form: squarefree iff u-multiplicity <= 1 and g(s,1) squarefree
    int umult = deg;
    for (const auto& [e, c] : g.terms()) umult = std::min(umult, e[1]);
    if (umult > 1) continue;
    upoly<rational> gs = to_upoly(g.dehomogenize(1).with_vars(su), 0);
    if (gcd(gs, gs.derivative()).degree() == 0) return true;
  }
  return is_squarefree(f);  // exact verdict on the (rare) slow path
}

P squarefree_part(const P& f) {
  if (f.is_zero() || f.total_degree() == 0) return normalize_primitive(f);
  P g(f.vars());
  for (size_t v = 0; v < f.vars().size(); ++v) {
    P d = f.derivative(int(v));
    if (d.is_zero()) continue;
    g = g.is_zero() ? poly_gcd(f, d) : poly_gcd(g, d);
    if (g.total_degree() == 0) return normalize_primitive(f);
  }
  if (g.is_zero() || g.total_degree() == 0) return normalize_primitive(f);
  return normalize_primitive(*divide_exact(normalize_primitive(f), g));
}

}  // namespace solidus
