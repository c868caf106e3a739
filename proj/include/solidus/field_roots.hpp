#ifndef SOLIDUS_FIELD_ROOTS_HPP
#define SOLIDUS_FIELD_ROOTS_HPP

#include <map>
#include <string>
#include <vector>

#include "solidus/mpoly.hpp"

namespace solidus {

/// Interns number fields by minimal polynomial so that identical extensions
/// share one context, and caches conjugate data.
class field_registry {
 public:
  /// q: irreducible over Q, degree >= 2 (any scalar multiple accepted).
  field_ptr intern(const upoly<rational>& q);

  /// Roots of fld's own minimal polynomial inside fld (always contains the
  /// generator); cached.
  const std::vector<nf_element>& conjugates_in(const field_ptr& fld);

  /// Roots of `other`'s minimal polynomial inside fld; cached.
  const std::vector<nf_element>& roots_of_minpoly_in(const field_ptr& other,
                                                     const field_ptr& fld);

 private:
  std::map<std::string, field_ptr> fields_;
  std::map<std::pair<std::string, std::string>, std::vector<nf_element>> roots_;
};

/// Root finding for a univariate polynomial with coefficients in Q or in one
/// Q(a). Roots inside the coefficient field are always found; over Q, each
/// irreducible nonlinear factor may open a fresh extension (one per factor).
struct root_report {
  // roots in the input's own field (field null for rational inputs)
  std::vector<nf_element> in_field;
  // for rational inputs only: (new field, the canonical generator root)
  std::vector<std::pair<field_ptr, nf_element>> in_extension;
  // irreducible factors over the field that did not split (tower needed)
  std::vector<std::string> unresolved;
};

root_report roots_of(const upoly<nf_element>& p, const field_ptr& fld,
                     field_registry& reg, bool allow_extension);

/// Trager-style factor split of p over Q(a): gcds of p against the rational
/// factors of the shifted norm. Returns monic irreducible factors over the
/// field (without multiplicity; p is made squarefree first).
std::vector<upoly<nf_element>> field_factor_squarefree(const upoly<nf_element>& p,
                                                       const field_ptr& fld);

/// Coefficient-wise embedding helpers.
upoly<nf_element> lift_to_field(const upoly<rational>& p);
nf_element conjugate_map(const nf_element& v, const nf_element& image_of_gen,
                         const field_ptr& target);

}  // namespace solidus

#endif
