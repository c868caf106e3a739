#include "solidus/quartic.hpp"

#include <random>

#include "solidus/matrix.hpp"
#include "solidus/parse.hpp"
#include "solidus/polygcd.hpp"

namespace solidus {

quartic_surface make_quartic(mpoly<rational> form) {
  if (form.is_zero()) throw parse_error("quartic form is identically zero");
  int deg = 0;
  if (!form.is_homogeneous(&deg)) throw parse_error("form is not homogeneous");
  if (deg != 4) throw parse_error("form has degree " + std::to_string(deg) +
                                  ", expected 4");
  if (!is_squarefree_form(form))
    throw parse_error("form has a repeated factor (not squarefree)");
  return quartic_surface{std::move(form)};
}

quartic_surface parse_quartic(const std::string& text) {
  return make_quartic(parse_poly(text, p3_vars()));
}

std::vector<rational> normalize_projective(std::vector<rational> v) {
  for (auto& c : v)
    if (!is_zero(c)) {
      rational inv = 1 / c;
      for (auto& x : v) x *= inv;
      return v;
    }
  throw kernel_error("zero vector is not a projective point");
}

point_type classify_point(const quartic_surface& s,
                          const std::vector<nf_element>& point,
                          const field_ptr& fld) {
  const auto& f = s.form;
  int n = int(f.vars().size());
  // locate a nonzero coordinate to serve as the affine chart
  int chart = -1;
  for (int i = 0; i < n && chart < 0; ++i)
    if (!point[i].is_zero()) chart = i;
  if (chart < 0) throw kernel_error("classify_point: zero tuple");

  nf_element inv = point[chart].inverse();
  std::vector<nf_element> p(point);
  for (auto& c : p) c = c * inv;

  mpoly<nf_element> germ = to_nf(f).dehomogenize(chart);
  // translate p to the origin: var_j -> var_j + p_j
  std::vector<int> amap;  // affine var -> original index
  for (int i = 0; i < n; ++i)
    if (i != chart) amap.push_back(i);
  for (size_t j = 0; j < amap.size(); ++j) {
    mpoly<nf_element> xj = mpoly<nf_element>::var(germ.vars(), germ.vars()[j], 1);
    germ = germ.subs_poly(int(j), xj + mpoly<nf_element>::constant(
                                           germ.vars(), p[amap[j]]));
  }
  // constant term must vanish: p lies on S
  typename mpoly<nf_element>::exps zero_e(germ.vars().size(), 0);
  if (!germ.coeff(zero_e).is_zero())
    throw kernel_error("classify_point: point does not lie on the surface");
  // linear part
  for (size_t j = 0; j < amap.size(); ++j) {
    typename mpoly<nf_element>::exps e(germ.vars().size(), 0);
    e[j] = 1;
    if (!germ.coeff(e).is_zero()) return point_type::smooth;
  }
  // quadratic part as a symmetric matrix over the field
  const int msz = int(amap.size());
  matrix<nf_element> q(msz, msz);
  for (size_t i = 0; size_t(i) < size_t(msz); ++i)
    for (size_t j = i; j < size_t(msz); ++j) {
      typename mpoly<nf_element>::exps e(germ.vars().size(), 0);
      e[i] += 1;
      e[j] += 1;
      nf_element c = germ.coeff(e);
      if (i == j) {
        q.at(int(i), int(j)) = c;
      } else {
        nf_element half = c * nf_element(rational(1, 2));
        q.at(int(i), int(j)) = half;
        q.at(int(j), int(i)) = half;
      }
    }
  int rank = q.rank();
  return rank == msz ? point_type::node : point_type::worse;
}

nodality_report singular_points(const quartic_surface& s, field_registry& reg) {
  std::vector<mpoly<rational>> grads;
  for (size_t v = 0; v < s.form.vars().size(); ++v)
    grads.push_back(s.form.derivative(int(v)));
  solve_result sol = solve_projective(grads, reg);
  if (sol.positive_dimensional)
    throw not_nodal_error("singular locus is positive-dimensional");

  nodality_report rep;
  if (!sol.unresolved.empty()) {
    rep.mode = completeness::heuristic;
    for (const auto& u : sol.unresolved)
      rep.warnings.push_back("unresolved factor: " + u);
  }
  if (sol.fields_used().size() > 1) {
    rep.mode = completeness::heuristic;
    rep.warnings.push_back(
        "singular points span more than one extension field");
  }

  bool all_nodes = true;
  int id = 0;
  for (const auto& orbit : sol.orbits) {
    // Euler consistency: a critical point of a form lies on the surface
    nf_element value = to_nf(s.form).eval(orbit.coords);
    if (!value.is_zero())
      throw inconsistency_error("gradient zero but f(p) != 0");
    point_type t = classify_point(s, orbit.coords, orbit.field);
    if (t == point_type::smooth)
      throw inconsistency_error("solver returned a smooth point");
    all_nodes &= (t == point_type::node);
    rep.points.push_back(singular_point_record{orbit, t, id++});
  }
  rep.is_nodal = all_nodes;
  if (rep.is_nodal && rep.mode == completeness::proved && rep.node_count() > 16)
    throw inconsistency_error(
        "more than 16 nodes on a quartic surface is impossible");
  return rep;
}

quartic_surface make_nodal_quartic(const nodal_quartic_request& req,
                                   field_registry& reg) {
  if (req.points.size() > 8)
    throw kernel_error("make_nodal_quartic: at most 8 points supported");
  std::vector<std::vector<rational>> pts;
  for (const auto& p : req.points) {
    if (p.size() != 4) throw kernel_error("make_nodal_quartic: need 4-tuples");
    pts.push_back(normalize_projective(p));
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw kernel_error("make_nodal_quartic: points must be distinct");

  // quartic monomial basis in deterministic (map) order
  std::vector<mpoly<rational>::exps> basis;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        basis.push_back({a, b, c, 4 - a - b - c});
  const int ncols = int(basis.size());  // 35

  std::vector<std::vector<rational>> rows;
  for (const auto& p : pts) {
    for (int v = 0; v < 4; ++v) {
      std::vector<rational> row(ncols);
      for (int c = 0; c < ncols; ++c) {
        mpoly<rational> mono(p3_vars());
        mono.add_term(basis[c], rational(1));
        row[c] = mono.derivative(v).eval(p);
      }
      rows.push_back(std::move(row));
    }
  }
  for (const auto& e : req.zero_coeffs) {
    std::vector<rational> row(ncols);
    for (int c = 0; c < ncols; ++c)
      if (basis[c] == e) row[c] = 1;
    rows.push_back(std::move(row));
  }

  matrix<rational> m(int(rows.size()), ncols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < ncols; ++j) m.at(int(i), j) = rows[i][j];
  auto basis_vecs = m.nullspace();
  if (basis_vecs.empty())
    throw kernel_error("make_nodal_quartic: nullspace too small");

  std::mt19937_64 rng(req.seed * 0x9e3779b97f4a7c15ULL + 0x1234567);
  for (int attempt = 0; attempt < req.max_attempts; ++attempt) {
    std::vector<rational> coeff(ncols, rational(0));
    bool nonzero = false;
    for (const auto& v : basis_vecs) {
      long w = long(rng() % 7) - 3;
      if (w == 0) continue;
      nonzero = true;
      for (int c = 0; c < ncols; ++c) coeff[c] += rational(w) * v[c];
    }
    if (!nonzero) continue;
    mpoly<rational> form(p3_vars());
    for (int c = 0; c < ncols; ++c) form.add_term(basis[c], coeff[c]);
    if (form.is_zero()) continue;

    quartic_surface s;
    try {
      s = make_quartic(form);
    } catch (const parse_error&) {
      continue;  // degenerate draw (e.g. not squarefree)
    }
    nodality_report rep;
    try {
      rep = singular_points(s, reg);
    } catch (const not_nodal_error&) {
      continue;
    }
    if (!rep.is_nodal || rep.mode != completeness::proved) continue;
    if (int(rep.points.size()) != int(pts.size())) continue;
    // the singular set must be exactly the prescribed one
    bool exact = true;
    for (const auto& p : pts) {
      bool found = false;
      for (const auto& rec : rep.points) {
        if (rec.orbit.field) continue;
        bool same = true;
        for (int i = 0; i < 4; ++i)
          same &= (rec.orbit.coords[i] == nf_element(p[i]));
        found |= same;
      }
      exact &= found;
    }
    if (!exact) continue;
    return s;
  }
  throw kernel_error("make_nodal_quartic: retries exhausted "
                     "(configuration too special?)");
}

}  // namespace solidus
