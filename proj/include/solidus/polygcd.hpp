#ifndef SOLIDUS_POLYGCD_HPP
#define SOLIDUS_POLYGCD_HPP

#include <optional>

#include "solidus/mpoly.hpp"

namespace solidus {

/// Exact multivariate division; nullopt when d does not divide f.
std::optional<mpoly<rational>> divide_exact(const mpoly<rational>& f,
                                            const mpoly<rational>& d);

/// Canonical associate: integer-primitive with positive leading coefficient
/// in the lexicographic term order.
mpoly<rational> normalize_primitive(const mpoly<rational>& f);

/// Multivariate gcd over Q via primitive pseudo-remainder sequences,
/// returned in normalized primitive form (1 for coprime inputs).
mpoly<rational> poly_gcd(const mpoly<rational>& f, const mpoly<rational>& g);

/// True when the polynomial has no repeated factor over the algebraic
/// closure, i.e. gcd(f, all partials) is constant.
bool is_squarefree(const mpoly<rational>& f);

/// Squarefreeness of a homogeneous form, tested on restrictions to generic
/// lines (a squarefree binary restriction certifies the form; persistent
/// degenerate restrictions fall back to the exact gcd computation).
bool is_squarefree_form(const mpoly<rational>& f);

/// f / gcd(f, partials): the reduced polynomial with the same zero set.
mpoly<rational> squarefree_part(const mpoly<rational>& f);

}  // namespace solidus

#endif
