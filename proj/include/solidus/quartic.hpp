#ifndef SOLIDUS_QUARTIC_HPP
#define SOLIDUS_QUARTIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "solidus/solve.hpp"

namespace solidus {

struct not_nodal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The branch surface: a squarefree quartic form in x,y,z,t.
struct quartic_surface {
  mpoly<rational> form;  // homogeneous of degree 4 over Q
};

/// Validates the defining form: degree-4 homogeneous, nonzero, squarefree.
quartic_surface parse_quartic(const std::string& text);
quartic_surface make_quartic(mpoly<rational> form);

enum class point_type { smooth, node, worse };

struct singular_point_record {
  point_orbit orbit;       // exact coordinates, normalized
  point_type local_type;   // node iff the quadratic part has rank 3
  int orbit_id;
};

enum class completeness { proved, heuristic };

struct nodality_report {
  std::vector<singular_point_record> points;
  bool is_nodal = false;
  completeness mode = completeness::proved;
  std::vector<std::string> warnings;

  int node_count() const {
    int n = 0;
    for (const auto& p : points) n += p.orbit.size();
    return n;
  }
};

/// Common zeros of the four partials in P^3 (chartwise resultant
/// elimination), each classified by the rank of its quadratic part.
/// Throws not_nodal_error when the singular locus is positive-dimensional.
nodality_report singular_points(const quartic_surface& s, field_registry& reg);

/// Local type of one point of S: smooth / node / worse.
point_type classify_point(const quartic_surface& s,
                          const std::vector<nf_element>& point,
                          const field_ptr& fld);

/// Random quartic with nodes exactly at the prescribed rational points
/// (each point imposes vanishing of the gradient: 4 linear conditions on the
/// 35 quartic coefficients). Extra linear constraints pin named coefficients
/// to zero, e.g. to force a line into the surface. Retries a bounded number
/// of seeded draws and verifies the result end to end.
struct nodal_quartic_request {
  std::vector<std::vector<rational>> points;  // projective 4-tuples
  std::uint64_t seed = 0;
  std::vector<mpoly<rational>::exps> zero_coeffs;  // monomials forced to 0
  int max_attempts = 24;
};
quartic_surface make_nodal_quartic(const nodal_quartic_request& req,
                                   field_registry& reg);

/// Normalizes a projective rational tuple (first nonzero coordinate 1).
std::vector<rational> normalize_projective(std::vector<rational> v);

}  // namespace solidus

#endif
