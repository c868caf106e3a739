#ifndef SOLIDUS_SOLVE_HPP
#define SOLIDUS_SOLVE_HPP

#include <set>
#include <string>
#include <vector>

#include "solidus/field_roots.hpp"
#include "solidus/mpoly.hpp"

namespace solidus {

/// One Galois orbit of solutions: a point with coordinates in Q (null field)
/// or in Q(a); an orbit over a degree-s field stands for s conjugate points.
struct point_orbit {
  field_ptr field;                 // null for a rational point
  std::vector<nf_element> coords;  // projective, first nonzero coordinate = 1

  int size() const { return field ? field->degree() : 1; }
  std::string key() const {
    std::string s = field ? field->minpoly_str() : "";
    s += "|";
    for (const auto& c : coords) s += c.str() + ",";
    return s;
  }
};

struct solve_result {
  std::vector<point_orbit> orbits;
  bool positive_dimensional = false;
  std::vector<std::string> unresolved;  // factors needing a second extension
  std::vector<std::string> notes;

  int total_points() const {
    int n = 0;
    for (const auto& o : orbits) n += o.size();
    return n;
  }
  std::set<std::string> fields_used() const {
    std::set<std::string> s;
    for (const auto& o : orbits)
      if (o.field) s.insert(o.field->minpoly_str());
    return s;
  }
  bool complete() const {
    return !positive_dimensional && unresolved.empty() && fields_used().size() <= 1;
  }
};

/// Common zeros in P^(n-1) of a finite set of forms in n >= 2 variables over
/// Q, by chartwise resultant elimination, univariate factoring and
/// back-substitution. Candidates are verified against every input form;
/// orbits are deduplicated across charts and conjugate representations.
solve_result solve_projective(const std::vector<mpoly<rational>>& forms,
                              field_registry& reg);

/// Same machinery on an affine system (all variables of the list active).
struct affine_solution {
  field_ptr field;
  std::vector<nf_element> values;  // one per variable of the system's list
};
struct affine_result {
  std::vector<affine_solution> solutions;
  bool positive_dimensional = false;
  std::vector<std::string> unresolved;
};
affine_result solve_affine_system(const std::vector<mpoly<rational>>& polys,
                                  field_registry& reg);

/// Orbit equality across possibly different stem-field representations.
bool orbit_equal(const point_orbit& a, const point_orbit& b, field_registry& reg);

}  // namespace solidus

#endif
