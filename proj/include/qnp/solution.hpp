#ifndef QNP_SOLUTION_HPP
#define QNP_SOLUTION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <qnp/pick.hpp>
#include <qnp/power_series.hpp>
#include <qnp/problem.hpp>

namespace qnp
{

enum class provenance { nondegenerate, degenerate, rank_zero, external };

const char *to_string(provenance p) noexcept;
provenance provenance_from_string(const std::string &s);

/// Pointwise value of (a * e + b) * (c * e + d)^{-*} through slice matrices; e is sampled by the callback.
quaternion lft_value(const theta_function &theta, const slice_function &e, const quaternion &p);

/// Schur function s with series coefficients and, when the pieces are known, a closed-form evaluator.
class schur_solution
{
public:
    /// Series-only candidate (no closed form).
    static schur_solution from_series(power_series coeffs);
    static schur_solution constant(const quaternion &value, std::size_t truncation);
    /// s = (a e + b)(c e + d)^{-*} for the given theta and parameter.
    static schur_solution from_lft(std::shared_ptr<const theta_function> theta, schur_parameter e,
                                   std::size_t truncation, provenance prov);

    quaternion operator()(const quaternion &p) const;
    quaternion eval_series(const quaternion &p) const
    {
        return eval(m_coeffs, p);
    }
    slice_function as_function() const;

    bool has_closed_form() const noexcept
    {
        return m_prov != provenance::external;
    }
    /// Closed form of a constant-parameter (or constant) solution: inner, with a radial limit at every node.
    bool constant_parameter() const noexcept;

    const power_series &coeffs() const noexcept
    {
        return m_coeffs;
    }
    const power_series &numerator() const noexcept
    {
        return m_numerator;
    }
    const power_series &denominator() const noexcept
    {
        return m_denominator;
    }
    provenance origin() const noexcept
    {
        return m_prov;
    }
    const std::optional<schur_parameter> &parameter() const noexcept
    {
        return m_parameter;
    }
    const std::shared_ptr<const theta_function> &theta() const noexcept
    {
        return m_theta;
    }

    std::size_t rank = 0;
    /// Problem indices whose Pick minor built theta (degenerate branch).
    std::vector<std::size_t> nodes_used;
    /// Largest |s(p)| over the interior samples, and whether it stayed within 1 + 1e-6.
    double schur_max_modulus = 0.0;
    bool schur_violation = false;
    /// Largest ||s(p)| - 1| over boundary samples (constant parameters only).
    double boundary_modulus_deviation = 0.0;

private:
    power_series m_coeffs;
    power_series m_numerator;
    power_series m_denominator;
    provenance m_prov = provenance::external;
    std::optional<schur_parameter> m_parameter;
    std::shared_ptr<const theta_function> m_theta;
    quaternion m_constant;
};

/// Triangular solve of s * den = num; requires an invertible den(0).
power_series series_quotient(const power_series &num, const power_series &den, double tol = default_tol);

/// Maximum of |f(p)| over n samples drawn uniformly from the ball of the given radius.
double sample_max_modulus(const slice_function &f, std::size_t n, double radius, std::uint64_t seed);
/// Maximum of ||f(p)| - 1| over n samples on the unit sphere.
double sample_boundary_deviation(const slice_function &f, std::size_t n, std::uint64_t seed);

inline constexpr std::size_t schur_samples = 10000;
inline constexpr double schur_sample_radius = 0.99;

/// Greedy pivoted-Cholesky order on a PSD matrix; the first r indices give an invertible principal minor.
std::vector<std::size_t> pivoted_cholesky_order(const qmatrix &p);

/// Full pipeline: PSD check, then nondegenerate or degenerate construction.
schur_solution solve(const interpolation_problem &prob);

/// Singular Pick matrix: rank 0 gives a constant, rank r > 0 a degree-r Blaschke product.
schur_solution degenerate_solve(const interpolation_problem &prob);

/// Unitary parameter forced by one node outside the theta data: s(p_v) = s_v solved for e.
quaternion parameter_from_node(const theta_function &theta, const quaternion &node, const quaternion &value);

} // namespace qnp

#endif
