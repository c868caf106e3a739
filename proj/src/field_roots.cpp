#include "solidus/field_roots.hpp"

#include "solidus/factor.hpp"
#include "solidus/resultant.hpp"

namespace solidus {

namespace {

std::string minpoly_key(const std::vector<rational>& coeffs) {
  std::string s;
  for (const auto& c : coeffs) s += rat_str(c) + ";";
  return s;
}

upoly<rational> assert_rational(const upoly<nf_element>& p) {
  std::vector<rational> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].rat_value();
  return upoly<rational>(std::move(c));
}

}  // namespace

field_ptr field_registry::intern(const upoly<rational>& q_in) {
  upoly<rational> q = q_in.monic();
  if (q.degree() < 2) throw kernel_error("field_registry: degree must be >= 2");
  std::vector<rational> coeffs(q.coeffs());
  std::string key = minpoly_key(coeffs);
  auto it = fields_.find(key);
  if (it != fields_.end()) return it->second;
  auto fld = std::make_shared<number_field>(coeffs);
  fields_.emplace(key, fld);
  return fld;
}

const std::vector<nf_element>& field_registry::conjugates_in(const field_ptr& fld) {
  return roots_of_minpoly_in(fld, fld);
}

const std::vector<nf_element>& field_registry::roots_of_minpoly_in(
    const field_ptr& other, const field_ptr& fld) {
  auto key = std::make_pair(minpoly_key(other->minpoly()), minpoly_key(fld->minpoly()));
  auto it = roots_.find(key);
  if (it != roots_.end()) return it->second;
  upoly<nf_element> m = lift_to_field(upoly<rational>(other->minpoly()));
  // re-tag coefficients into fld's context by multiplying with fld's one
  field_registry dummy;
  root_report rep = roots_of(m, fld, dummy, false);
  return roots_.emplace(key, std::move(rep.in_field)).first->second;
}

upoly<nf_element> lift_to_field(const upoly<rational>& p) {
  std::vector<nf_element> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = nf_element(p.coeffs()[i]);
  return upoly<nf_element>(std::move(c));
}

nf_element conjugate_map(const nf_element& v, const nf_element& image_of_gen,
                         const field_ptr& target) {
  // v = sum c_j a^j evaluated at a -> image_of_gen
  nf_element acc(0);
  for (int j = int(v.coeffs().size()) - 1; j >= 0; --j)
    acc = acc * image_of_gen + nf_element(v.coeffs()[j]);
  (void)target;
  return acc;
}

std::vector<upoly<nf_element>> field_factor_squarefree(const upoly<nf_element>& p_in,
                                                       const field_ptr& fld) {
  if (!fld) throw kernel_error("field_factor_squarefree: null field");
  upoly<nf_element> p = squarefree_part(p_in).monic();
  if (p.degree() < 1) return {};
  const std::vector<std::string> ta_vars{"T", "A"};

  // minimal polynomial as mpoly in A
  mpoly<rational> m_a(ta_vars);
  for (size_t i = 0; i < fld->minpoly().size(); ++i)
    m_a.add_term({0, int(i)}, fld->minpoly()[i]);

  for (int s = 0;; ++s) {
    if (s > 60) throw kernel_error("field_factor: no squarefree norm shift found");
    // p~(T - s*A, A) expanded over Q
    mpoly<rational> shifted(ta_vars);
    mpoly<rational> tvar = mpoly<rational>::var(ta_vars, "T", 1);
    mpoly<rational> avar = mpoly<rational>::var(ta_vars, "A", 1);
    mpoly<rational> tsub = tvar - rational(s) * avar;
    mpoly<rational> tp = mpoly<rational>::constant(ta_vars, rational(1));
    for (int i = 0; i <= p.degree(); ++i) {
      // coefficient i as polynomial in A
      mpoly<rational> ci(ta_vars);
      nf_element pc = p.coeff(i);
      for (size_t j = 0; j < pc.coeffs().size(); ++j)
        ci.add_term({0, int(j)}, pc.coeffs()[j]);
      shifted = shifted + ci * tp;
      tp = tp * tsub;
    }
    mpoly<rational> norm = resultant(m_a, shifted, "A");
    upoly<rational> q = to_upoly(norm, 0);
    if (q.degree() < 1) continue;
    if (gcd(q, q.derivative()).degree() != 0) continue;  // unlucky shift

    auto fac = factor_univariate(q);
    std::vector<upoly<nf_element>> out;
    nf_element gen = nf_element::generator(fld);
    nf_element shift_val = nf_element(rational(s)) * gen;
    for (const auto& [fj, mult] : fac.factors) {
      upoly<nf_element> fj_k = lift_to_field(fj).shifted(shift_val);
      upoly<nf_element> gj = gcd(p, fj_k);
      if (gj.degree() >= 1) out.push_back(gj.monic());
    }
    // sanity: degrees must add up to deg p
    int total = 0;
    for (const auto& g : out) total += g.degree();
    if (total != p.degree())
      throw kernel_error("field_factor: factor degrees inconsistent");
    return out;
  }
}

root_report roots_of(const upoly<nf_element>& p, const field_ptr& fld,
                     field_registry& reg, bool allow_extension) {
  root_report rep;
  if (p.degree() < 1) return rep;
  if (!fld) {
    upoly<rational> q = assert_rational(p);
    auto fac = factor_univariate(q);
    for (const auto& [f, m] : fac.factors) {
      if (f.degree() == 1) {
        rep.in_field.push_back(nf_element(-f.coeff(0) / f.coeff(1)));
      } else if (allow_extension) {
        field_ptr nf = reg.intern(f);
        rep.in_extension.emplace_back(nf, nf_element::generator(nf));
      } else {
        rep.unresolved.push_back(f.str());
      }
    }
    return rep;
  }
  auto factors = field_factor_squarefree(p, fld);
  for (const auto& g : factors) {
    if (g.degree() == 1) {
      rep.in_field.push_back(nf_element(0) - g.coeff(0));  // monic: root = -c0
    } else {
      rep.unresolved.push_back(g.str());
    }
  }
  return rep;
}

}  // namespace solidus
