#ifndef QNP_PROBLEM_HPP
#define QNP_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <qnp/power_series.hpp>
#include <qnp/quaternion.hpp>

namespace qnp
{

struct solver_options {
    std::size_t truncation = default_truncation;
    double tol = default_tol;
    std::vector<double> radius_grid{0.9, 0.99, 0.999, 0.9999};
    std::uint64_t seed = 0;

    friend bool operator==(const solver_options &, const solver_options &) = default;
};

/// Schur parameter e of the linear fractional transformation: a unitary constant or a series.
using schur_parameter = std::variant<quaternion, power_series>;

/// Boundary interpolation data: nodes p_u, values s_u, bounds kappa_u.
struct interpolation_problem {
    std::vector<quaternion> nodes;
    std::vector<quaternion> values;
    std::vector<double> kappas;
    schur_parameter parameter = quaternion{1.0};
    solver_options options;

    std::size_t size() const noexcept
    {
        return nodes.size();
    }

    /// Throws invalid_problem (shape, modulus, node = 1, kappa sign) or sphere_collision.
    void validate() const;
};

} // namespace qnp

#endif
