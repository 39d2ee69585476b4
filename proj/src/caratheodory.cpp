#include <cmath>

#include <qnp/caratheodory.hpp>
#include <qnp/error.hpp>
#include <qnp/qmatrix.hpp>
#include <qnp/verify.hpp>

namespace qnp
{

quaternion radial_derivative(const slice_function &s, const quaternion &node, double step, bool *disagree)
{
    const auto central = [&](double h) { return (s((1.0 + h) * node) - s((1.0 - h) * node)) / (2.0 * h); };
    const quaternion coarse = central(step);
    const quaternion fine = central(0.5 * step);
    const quaternion extrapolated = (4.0 * fine - coarse) / 3.0;
    if (disagree != nullptr) {
        *disagree = distance(extrapolated, fine) > 1e-3;
    }
    return extrapolated;
}

caratheodory_result caratheodory_limit(const slice_function &s, const quaternion &node, const quaternion &value,
                                       const std::vector<double> &grid, double step)
{
    if (grid.size() < 2) {
        throw error(error_code::domain_error, "caratheodory_limit: need at least two radii");
    }
    caratheodory_result out;
    out.derivative = radial_derivative(s, node, step, &out.non_analytic_warning);
    const quaternion pc = node.conj();
    const quaternion sc = value.conj();
    out.naive = out.derivative * sc;
    out.rhs = (out.naive - pc * out.naive * pc) * (1.0 - pc * pc).inverse();

    std::vector<double> h;
    std::vector<quaternion> sums;
    for (double r : grid) {
        const quaternion x = (value - s(r * node)) * sc;
        h.push_back(1.0 - r);
        sums.push_back(geometric_sum(r * node, x, pc));
    }
    out.lhs = richardson_limit(h, sums);
    out.gap = distance(out.lhs, out.rhs);
    return out;
}

caratheodory_result caratheodory_limit(const schur_solution &sol, const interpolation_problem &prob, std::size_t u)
{
    if (u >= prob.size()) {
        throw error(error_code::domain_error, "caratheodory_limit: node index out of range");
    }
    return caratheodory_limit(sol.as_function(), prob.nodes[u], prob.values[u], prob.options.radius_grid);
}

} // namespace qnp
