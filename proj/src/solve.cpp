#include "solidus/solve.hpp"

#include <algorithm>
#include <random>

#include "solidus/polygcd.hpp"
#include "solidus/resultant.hpp"

namespace solidus {

namespace {

using NP = mpoly<nf_element>;

struct partial {
  field_ptr fld;
  std::vector<std::pair<int, nf_element>> assign;  // (var index, value)
};

struct level_ctx {
  field_registry* reg;
  bool positive_dimensional = false;  // authoritative (top-level evidence)
  bool underdetermined = false;       // derived system had a cylinder: retry
  std::vector<std::string> unresolved;
};

NP substituted(const NP& p, const partial& sigma) {
  NP r = p;
  for (const auto& [v, val] : sigma.assign) r = r.subs(v, val);
  return r;
}

bool all_vanish(const std::vector<NP>& sys, const partial& sigma) {
  for (const auto& p : sys)
    if (!substituted(p, sigma).is_zero()) return false;
  return true;
}

// gcd of the nonzero univariate restrictions; rational inputs go through the
// primitive PRS to keep eliminant coefficients in check.
upoly<nf_element> gcd_chain(const std::vector<upoly<nf_element>>& polys,
                            const field_ptr& fld) {
  if (!fld) {
    bool rational_ok = true;
    for (const auto& p : polys)
      for (const auto& c : p.coeffs())
        if (!c.is_rational()) rational_ok = false;
    if (rational_ok) {
      upoly<rational> g;
      for (const auto& p : polys) {
        std::vector<rational> c(p.coeffs().size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].rat_value();
        upoly<rational> q{std::move(c)};
        g = g.is_zero() ? q.monic() : gcd(g, q);
        if (g.degree() == 0) break;
      }
      return lift_to_field(g);
    }
  }
  upoly<nf_element> g;
  for (const auto& p : polys) {
    g = g.is_zero() ? p.monic() : gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

// Solves the system restricted to `active` variables over field `fld` and
// returns assignments verified against the whole level system. `top` marks
// the original (chart) system, where dimension evidence is authoritative.
std::vector<partial> solve_level(const std::vector<NP>& sys_in,
                                 std::vector<int> active, field_ptr fld,
                                 bool top, level_ctx& ctx) {
  std::vector<NP> sys;
  for (const auto& p : sys_in)
    if (!p.is_zero()) sys.push_back(p);

  if (sys.empty()) {
    if (!active.empty()) {
      (top ? ctx.positive_dimensional : ctx.underdetermined) = true;
      return {};
    }
    return {partial{fld, {}}};
  }
  if (active.empty()) return {};  // nonzero constant equations: no solution

  // variables not appearing in any equation are free
  {
    std::vector<int> constrained, free_vars;
    for (int v : active) {
      bool used = false;
      for (const auto& p : sys) used |= (p.degree_in(v) > 0);
      (used ? constrained : free_vars).push_back(v);
    }
    if (!free_vars.empty()) {
      level_ctx sub{ctx.reg};
      auto below = solve_level(sys, constrained, fld, false, sub);
      for (auto& s : sub.unresolved) ctx.unresolved.push_back(std::move(s));
      if (!below.empty() || sub.positive_dimensional || sub.underdetermined)
        (top ? ctx.positive_dimensional : ctx.underdetermined) = true;
      return {};
    }
  }

  std::vector<partial> found;

  if (active.size() == 1) {
    int u = active[0];
    std::vector<upoly<nf_element>> uni;
    for (const auto& p : sys) uni.push_back(to_upoly(p, u));
    upoly<nf_element> h = gcd_chain(uni, fld);
    if (h.degree() < 1) return {};
    root_report rep = roots_of(h, fld, *ctx.reg, fld == nullptr);
    for (auto& r : rep.in_field)
      found.push_back(partial{fld, {{u, std::move(r)}}});
    for (auto& [nf, gen] : rep.in_extension)
      found.push_back(partial{nf, {{u, gen}}});
    for (auto& s : rep.unresolved) ctx.unresolved.push_back(std::move(s));
    return found;  // roots of the gcd satisfy every input by construction
  }

  int u = active.back();
  std::vector<int> rest(active.begin(), active.end() - 1);

  std::vector<NP> d0, dplus;
  for (const auto& p : sys)
    (p.degree_in(u) == 0 ? d0 : dplus).push_back(p);
  // every active variable appears somewhere, so dplus is nonempty here

  // eliminate u: resultants of the smallest-degree poly against the rest
  std::sort(dplus.begin(), dplus.end(), [u](const NP& a, const NP& b) {
    return a.degree_in(u) < b.degree_in(u);
  });
  std::vector<NP> reduced = d0;
  size_t reduced_d0 = reduced.size();
  auto add_resultants = [&](bool all_pairs) {
    size_t upper = all_pairs ? dplus.size() : 1;
    for (size_t i = 0; i < upper; ++i)
      for (size_t j = i + 1; j < dplus.size(); ++j) {
        NP r = resultant(dplus[i], dplus[j], u);
        if (!r.is_zero()) reduced.push_back(r);
      }
  };
  add_resultants(false);
  if (reduced.size() == reduced_d0 && dplus.size() > 2) add_resultants(true);
  if (reduced.empty()) {
    if (dplus.size() == 1) {
      // one nonconstant equation in >= 2 variables cuts a hypersurface
      (top ? ctx.positive_dimensional : ctx.underdetermined) = true;
      return {};
    }
    // all pairs share u-factors; a common divisor of everything means a
    // whole hypersurface of solutions
    if (!fld) {
      mpoly<rational> g;
      bool first = true;
      for (const auto& p : dplus) {
        mpoly<rational> pq = map_coeffs<rational>(
            p, [](const nf_element& c) { return c.rat_value(); });
        g = first ? pq : poly_gcd(g, pq);
        first = false;
      }
      if (g.total_degree() > 0) {
        (top ? ctx.positive_dimensional : ctx.underdetermined) = true;
        return {};
      }
    }
    ctx.underdetermined = true;
    return {};
  }

  auto partials = solve_level(reduced, rest, fld, false, ctx);

  for (const auto& sigma : partials) {
    std::vector<upoly<nf_element>> uni;
    bool saw_nonzero = false;
    for (const auto& p : dplus) {
      NP q = substituted(p, sigma);
      if (q.is_zero()) continue;
      saw_nonzero = true;
      uni.push_back(to_upoly(q, u));
    }
    if (!saw_nonzero) {
      // the fiber over sigma is a full line; sigma satisfies d0 already
      if (top && all_vanish(d0, sigma))
        ctx.positive_dimensional = true;
      else
        ctx.underdetermined = true;
      continue;
    }
    upoly<nf_element> h = gcd_chain(uni, sigma.fld);
    if (h.degree() < 1) continue;  // spurious resultant root
    root_report rep = roots_of(h, sigma.fld, *ctx.reg, sigma.fld == nullptr);
    auto emit = [&](const field_ptr& f2, const nf_element& val) {
      partial full = sigma;
      full.fld = f2;
      full.assign.emplace_back(u, val);
      found.push_back(std::move(full));
    };
    for (const auto& r : rep.in_field) emit(sigma.fld, r);
    for (const auto& [nf, gen] : rep.in_extension) emit(nf, gen);
    for (auto& s : rep.unresolved) ctx.unresolved.push_back(std::move(s));
  }

  // verify against the full level system
  std::vector<partial> verified;
  for (auto& cand : found)
    if (all_vanish(sys, cand)) verified.push_back(std::move(cand));
  return verified;
}

point_orbit to_orbit(const partial& sol, int chart, int nvars,
                     const std::vector<int>& affine_vars) {
  point_orbit o;
  o.field = sol.fld;
  o.coords.assign(nvars, nf_element(0));
  o.coords[chart] = nf_element(1);
  for (const auto& [v, val] : sol.assign) o.coords[affine_vars[v]] = val;
  int first = -1;
  for (int i = 0; i < nvars; ++i)
    if (!o.coords[i].is_zero()) {
      first = i;
      break;
    }
  nf_element inv = o.coords[first].inverse();
  for (auto& c : o.coords) c = c * inv;
  if (o.field) {
    bool all_rat = true;
    for (const auto& c : o.coords) all_rat &= c.is_rational();
    if (all_rat) {
      o.field = nullptr;
      for (auto& c : o.coords) c = nf_element(c.rat_value());
    }
  }
  return o;
}

// deterministic small unimodular-ish matrices for the retry path
std::vector<std::vector<rational>> retry_matrix(int n, int attempt) {
  std::mt19937_64 rng(0xc0ffee ^ ((unsigned long)(attempt) * 0x9e3779b97f4a7c15ULL));
  while (true) {
    std::vector<std::vector<rational>> a(n, std::vector<rational>(n));
    matrix<rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long v = long(rng() % 5) - 2;
        a[i][j] = rational(v);
        m.at(i, j) = a[i][j];
      }
    if (!is_zero(bareiss_det(m))) return a;
  }
}

struct chart_pass {
  std::vector<point_orbit> orbits;
  bool positive_dimensional = false;
  bool underdetermined = false;
  std::vector<std::string> unresolved;
};

chart_pass run_charts(const std::vector<mpoly<rational>>& forms,
                      field_registry& reg) {
  chart_pass out;
  int nvars = int(forms.front().vars().size());
  for (int chart = 0; chart < nvars; ++chart) {
    std::vector<NP> sys;
    std::vector<int> affine_vars;
    for (int i = 0; i < nvars; ++i)
      if (i != chart) affine_vars.push_back(i);
    bool any = false;
    for (const auto& f : forms) {
      mpoly<rational> d = f.dehomogenize(chart);
      if (!d.is_zero()) any = true;
      sys.push_back(to_nf(d));
    }
    if (!any) {
      out.positive_dimensional = true;  // every form vanishes on this chart
      continue;
    }
    std::vector<int> active(affine_vars.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = int(i);

    level_ctx ctx{&reg};
    auto sols = solve_level(sys, active, nullptr, true, ctx);
    out.positive_dimensional |= ctx.positive_dimensional;
    out.underdetermined |= ctx.underdetermined;
    for (auto& s : ctx.unresolved) out.unresolved.push_back(std::move(s));

    for (const auto& sol : sols) {
      point_orbit o = to_orbit(sol, chart, nvars, affine_vars);
      bool dup = false;
      for (const auto& seen : out.orbits)
        if (orbit_equal(o, seen, reg)) {
          dup = true;
          break;
        }
      if (!dup) out.orbits.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace

bool orbit_equal(const point_orbit& a, const point_orbit& b, field_registry& reg) {
  if (!a.field && !b.field) {
    for (size_t i = 0; i < a.coords.size(); ++i)
      if (!(a.coords[i] == b.coords[i])) return false;
    return true;
  }
  if (!a.field || !b.field) return false;
  if (a.field->degree() != b.field->degree()) return false;
  const auto& roots = a.field->minpoly() == b.field->minpoly()
                          ? reg.conjugates_in(b.field)
                          : reg.roots_of_minpoly_in(a.field, b.field);
  for (const auto& r : roots) {
    bool match = true;
    for (size_t i = 0; i < a.coords.size() && match; ++i) {
      nf_element mapped = conjugate_map(a.coords[i], r, b.field);
      match = (mapped == b.coords[i]);
    }
    if (match) return true;
  }
  return false;
}

solve_result solve_projective(const std::vector<mpoly<rational>>& forms,
                              field_registry& reg) {
  solve_result out;
  if (forms.empty()) throw kernel_error("solve_projective: empty system");
  int nvars = int(forms.front().vars().size());

  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<mpoly<rational>> use = forms;
    std::vector<std::vector<rational>> a;
    if (attempt > 0) {
      a = retry_matrix(nvars, attempt);
      for (auto& f : use) f = f.linear_change(a);
    }
    chart_pass pass = run_charts(use, reg);
    if (pass.underdetermined && !pass.positive_dimensional && attempt + 1 < 4)
      continue;  // unlucky projection: retry in new coordinates

    out.positive_dimensional = pass.positive_dimensional;
    out.unresolved = std::move(pass.unresolved);
    if (pass.underdetermined)
      out.unresolved.push_back("elimination stayed degenerate after retries");
    for (auto& o : pass.orbits) {
      if (attempt > 0) {
        // map the point back: original = A * transformed
        std::vector<nf_element> mapped(nvars, nf_element(0));
        for (int i = 0; i < nvars; ++i)
          for (int j = 0; j < nvars; ++j)
            mapped[i] = mapped[i] + nf_element(a[i][j]) * o.coords[j];
        int first = -1;
        for (int i = 0; i < nvars && first < 0; ++i)
          if (!mapped[i].is_zero()) first = i;
        nf_element inv = mapped[first].inverse();
        for (auto& c : mapped) c = c * inv;
        o.coords = std::move(mapped);
      }
      out.orbits.push_back(std::move(o));
    }
    break;
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const point_orbit& x, const point_orbit& y) {
              return x.key() < y.key();
            });
  std::sort(out.unresolved.begin(), out.unresolved.end());
  out.unresolved.erase(std::unique(out.unresolved.begin(), out.unresolved.end()),
                       out.unresolved.end());
  return out;
}

affine_result solve_affine_system(const std::vector<mpoly<rational>>& polys,
                                  field_registry& reg) {
  affine_result out;
  if (polys.empty()) throw kernel_error("solve_affine_system: empty system");
  int nvars = int(polys.front().vars().size());
  std::vector<NP> sys;
  for (const auto& p : polys) sys.push_back(to_nf(p));
  std::vector<int> active(nvars);
  for (int i = 0; i < nvars; ++i) active[i] = i;
  level_ctx ctx{&reg};
  auto sols = solve_level(sys, active, nullptr, true, ctx);
  out.positive_dimensional = ctx.positive_dimensional || ctx.underdetermined;
  out.unresolved = std::move(ctx.unresolved);
  for (const auto& s : sols) {
    affine_solution a;
    a.field = s.fld;
    a.values.assign(nvars, nf_element(0));
    for (const auto& [v, val] : s.assign) a.values[v] = val;
    out.solutions.push_back(std::move(a));
  }
  return out;
}

}  // namespace solidus
