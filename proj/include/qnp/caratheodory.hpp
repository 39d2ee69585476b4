#ifndef QNP_CARATHEODORY_HPP
#define QNP_CARATHEODORY_HPP

#include <cstddef>
#include <vector>

#include <qnp/problem.hpp>
#include <qnp/slice.hpp>
#include <qnp/solution.hpp>

namespace qnp
{

struct caratheodory_result {
    quaternion derivative; // a_u in s(r p_u) = s_u + (r - 1) a_u + O((r - 1)^2)
    quaternion lhs;        // radial limit of sum_t r^t p_u^t (s_u - s(r p_u)) conj(s_u) conj(p_u)^t
    quaternion rhs;        // (a_u conj(s_u) - conj(p_u) a_u conj(s_u) conj(p_u)) (1 - conj(p_u)^2)^{-1}
    quaternion naive;      // a_u conj(s_u), the commutative guess
    double gap = 0.0;      // |lhs - rhs|
    bool non_analytic_warning = false;
};

/// Radial derivative at r = 1 by central differences with one Richardson step.
/// Requires s to be defined on both sides of the boundary along the ray (rational continuation).
quaternion radial_derivative(const slice_function &s, const quaternion &node, double step, bool *disagree = nullptr);

/// The lhs uses (s_u - s) conj(s_u), which equals 1 - s conj(s_u) for unimodular s_u.
caratheodory_result caratheodory_limit(const slice_function &s, const quaternion &node, const quaternion &value,
                                       const std::vector<double> &grid = {0.9, 0.99, 0.999, 0.9999},
                                       double step = 1e-4);

caratheodory_result caratheodory_limit(const schur_solution &sol, const interpolation_problem &prob, std::size_t u);

} // namespace qnp

#endif
