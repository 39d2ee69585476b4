#ifndef QNP_VERIFY_HPP
#define QNP_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <qnp/problem.hpp>
#include <qnp/solution.hpp>

namespace qnp
{

// Thresholds of the radial verification.
inline constexpr double limit_tol = 1e-5;
inline constexpr double beta_real_tol = 1e-6;
inline constexpr double kappa_tol = 1e-6;
inline constexpr double bastille_tol = 1e-6;
inline constexpr double warning_gap = 1e-2;
inline constexpr double derivative_step = 1e-4;

/// Richardson extrapolation of f(h), h = 1 - r, to h = 0 through all samples (Neville table).
quaternion richardson_limit(const std::vector<double> &h, const std::vector<quaternion> &f);

struct node_verification {
    std::size_t index = 0;
    std::vector<double> grid;
    std::vector<quaternion> values;    // s(r p_u)
    std::vector<double> gaps;          // |s(r p_u) - s_u|
    std::vector<quaternion> quotients; // (1 - s(r p_u) conj(s_u)) / (1 - r)
    quaternion limit;
    double limit_error = 0.0;
    quaternion beta;      // limit of the quotients, from beta_source
    quaternion beta_grid; // extrapolated through the grid quotients
    std::string beta_source; // "radial-grid" or "boundary-derivative"
    bool beta_real = false;
    double kappa_margin = 0.0; // kappa_u - Re(beta), meaningful when beta_real
    double bastille_lhs = 0.0; // |beta - conj(p) beta conj(p)|^2 / |1 - conj(p)^2|^2
    double bastille_rhs = 0.0; // Re(beta) kappa_u
    double bastille_margin = 0.0;
    bool gaps_decreasing = false;
    bool converged = false;
    bool bounds_ok = false;
    std::string mode; // "kappa" or "bastille-only"
};

enum class verification_status { verified, warnings, failed };

const char *to_string(verification_status s) noexcept;

struct verification_report {
    std::vector<node_verification> nodes;
    verification_status status = verification_status::failed;
};

/// Radial sweep of every node over prob.options.radius_grid.
verification_report verify(const schur_solution &sol, const interpolation_problem &prob);

} // namespace qnp

#endif
