#ifndef QNP_STRUCTURE_HPP
#define QNP_STRUCTURE_HPP

#include <vector>

#include <qnp/pick.hpp>
#include <qnp/power_series.hpp>
#include <qnp/slice.hpp>

namespace qnp
{

/// Largest entry of P + P (I - A)^{-1} A + A* (I - A)^{-*} P - (I - A)^{-*} C* J C (I - A)^{-1}.
double r1_structural_check(const pick_system &sys);

/// Coefficient vector A (I - A)^{-1} xi: the backward shift at 1 acting on F(p) xi.
std::vector<quaternion> r1_apply(const std::vector<quaternion> &xi, const pick_system &sys);

/// F(p) xi as a 2-vector (closed form).
std::vector<quaternion> model_function(const pick_system &sys, const std::vector<quaternion> &xi,
                                       const quaternion &p);

/// (f(p) - f(1)) / (p - 1) for a polynomial f, by synthetic division.
power_series backward_shift_at_one(const power_series &poly);

/// Coefficients of a polynomial in powers of (p - c), c real.
power_series taylor_shift(const power_series &poly, double c);

} // namespace qnp

#endif
