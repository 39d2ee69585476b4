#include <algorithm>
#include <cmath>

#include <qnp/caratheodory.hpp>
#include <qnp/error.hpp>
#include <qnp/verify.hpp>

namespace qnp
{

const char *to_string(verification_status s) noexcept
{
    switch (s) {
        case verification_status::verified:
            return "verified";
        case verification_status::warnings:
            return "warnings";
        case verification_status::failed:
            return "failed";
    }
    return "failed";
}

quaternion richardson_limit(const std::vector<double> &h, const std::vector<quaternion> &f)
{
    if (h.size() != f.size() || h.empty()) {
        throw error(error_code::domain_error, "richardson_limit: need matching non-empty samples");
    }
    if (h.size() == 1) {
        return f.front();
    }
    // Neville table evaluated at h = 0: each column removes the next power of h.
    std::vector<quaternion> t(f);
    const std::size_t n = h.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t k = n - 1; k >= level; --k) {
            const double hi = h[k - level];
            const double lo = h[k];
            t[k] = (hi * t[k] - lo * t[k - 1]) / (hi - lo);
        }
    }
    return t[n - 1];
}

verification_report verify(const schur_solution &sol, const interpolation_problem &prob)
{
    const auto &grid = prob.options.radius_grid;
    if (grid.empty()) {
        throw error(error_code::invalid_problem, "verify: empty radius grid");
    }
    for (double r : grid) {
        if (!(r > 0.0 && r < 1.0)) {
            throw error(error_code::invalid_problem, "verify: radii must lie in (0, 1)");
        }
    }
    std::vector<double> h(grid.size());
    std::transform(grid.begin(), grid.end(), h.begin(), [](double r) { return 1.0 - r; });

    const slice_function evaluate = sol.as_function();
    verification_report rep;
    bool all_ok = true;
    bool all_bounded = true;
    for (std::size_t u = 0; u < prob.size(); ++u) {
        const quaternion pu = prob.nodes[u];
        const quaternion su = prob.values[u];
        node_verification nv;
        nv.index = u;
        nv.grid = grid;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const quaternion v = sol(grid[k] * pu);
            nv.values.push_back(v);
            nv.gaps.push_back(distance(v, su));
            nv.quotients.push_back((1.0 - v * su.conj()) / h[k]);
        }
        nv.limit = richardson_limit(h, nv.values);
        nv.limit_error = distance(nv.limit, su);
        nv.beta_grid = richardson_limit(h, nv.quotients);
        nv.beta = nv.beta_grid;
        nv.beta_source = "radial-grid";
        if (sol.constant_parameter()) {
            // Closed forms continue past the sphere, so the limit a_u conj(s_u) of the quotient is read off the
            // two-sided radial derivative; the one-sided grid loses digits when s has a pole close to r = 1.
            nv.beta = radial_derivative(evaluate, pu, derivative_step) * su.conj();
            nv.beta_source = "boundary-derivative";
        }
        nv.beta_real = nv.beta.imag_norm() <= beta_real_tol;
        nv.kappa_margin = prob.kappas[u] - nv.beta.real();
        const quaternion pc = pu.conj();
        // Squared denominator: the r -> 1 limit of the kernel bound on g_u gives |1 - conj(p)^2|^2 here.
        nv.bastille_lhs = (nv.beta - pc * nv.beta * pc).norm2() / (1.0 - pc * pc).norm2();
        nv.bastille_rhs = nv.beta.real() * prob.kappas[u];
        nv.bastille_margin = nv.bastille_rhs - nv.bastille_lhs;

        nv.gaps_decreasing = true;
        for (std::size_t k = 0; k + 1 < nv.gaps.size(); ++k) {
            if (!(nv.gaps[k + 1] < nv.gaps[k] || nv.gaps[k] <= 1e-15)) {
                nv.gaps_decreasing = false;
            }
        }
        nv.converged = nv.gaps_decreasing && nv.limit_error <= limit_tol;

        const bool check_bastille = sol.constant_parameter();
        const bool bastille_ok = !check_bastille || nv.bastille_margin >= -bastille_tol;
        if (nv.beta_real) {
            nv.mode = "kappa";
            nv.bounds_ok = nv.kappa_margin >= -kappa_tol && bastille_ok;
        } else {
            nv.mode = "bastille-only";
            nv.bounds_ok = bastille_ok;
        }
        all_ok = all_ok && nv.converged && nv.bounds_ok;
        all_bounded = all_bounded && nv.gaps.back() <= warning_gap;
        rep.nodes.push_back(std::move(nv));
    }
    rep.status = all_ok ? verification_status::verified
                        : (all_bounded ? verification_status::warnings : verification_status::failed);
    return rep;
}

} // namespace qnp
