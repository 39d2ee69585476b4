#ifndef QNP_TESTS_SUPPORT_HPP
#define QNP_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>
#include <vector>

#include <qnp/pick.hpp>
#include <qnp/power_series.hpp>
#include <qnp/problem.hpp>
#include <qnp/quaternion.hpp>
#include <qnp/slice.hpp>

namespace qnp::test
{

using rng_t = std::mt19937_64;

inline quaternion random_quaternion(rng_t &rng, double scale = 1.0)
{
    std::normal_distribution<double> n(0.0, scale);
    return {n(rng), n(rng), n(rng), n(rng)};
}

inline quaternion random_unit(rng_t &rng)
{
    const quaternion q = random_quaternion(rng);
    return q / q.norm();
}

inline quaternion random_imaginary_unit(rng_t &rng)
{
    const quaternion q = random_quaternion(rng).imag();
    return q / q.norm();
}

/// Uniform in the ball of the given radius.
inline quaternion random_in_ball(rng_t &rng, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return (radius * std::pow(u(rng), 0.25)) * random_unit(rng);
}

/// Truncated sum_{t <= T} p^t alpha q^t, the brute-force oracle for geometric sums.
inline quaternion truncated_geometric_sum(const quaternion &p, const quaternion &alpha, const quaternion &q,
                                          std::size_t T)
{
    quaternion sum;
    quaternion term = alpha;
    for (std::size_t t = 0; t <= T; ++t) {
        sum += term;
        term = p * term * q;
    }
    return sum;
}

/// Random boundary data: well separated non-real nodes, unimodular values, kappas that make P diagonally dominant.
inline interpolation_problem random_problem(rng_t &rng, std::size_t n, double slack = 0.5)
{
    interpolation_problem prob;
    while (prob.size() < n) {
        const quaternion p = random_unit(rng);
        bool ok = std::abs(p.w) < 0.8;
        for (const auto &o : prob.nodes) {
            ok = ok && companion_value(o, p) > 0.3;
        }
        if (ok) {
            prob.nodes.push_back(p);
            prob.values.push_back(random_unit(rng));
            prob.kappas.push_back(0.0);
        }
    }
    const pick_system sys = build_system(prob);
    for (std::size_t u = 0; u < n; ++u) {
        double off = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            if (v != u) {
                off += sys.P(u, v).norm();
            }
        }
        prob.kappas[u] = off + slack;
    }
    return prob;
}

/// Interpolation data read off a Blaschke factor: s_u = b(p_u), kappa_u = its kernel diagonal at p_u.
inline interpolation_problem blaschke_problem(const blaschke_factor &b, const std::vector<quaternion> &nodes)
{
    interpolation_problem prob;
    for (const auto &p : nodes) {
        prob.nodes.push_back(p);
        prob.values.push_back(b(p));
        prob.kappas.push_back(b.kernel_diagonal(p));
    }
    return prob;
}

inline std::vector<quaternion> separated_nodes(rng_t &rng, std::size_t n)
{
    return random_problem(rng, n).nodes;
}

inline qmatrix random_matrix(rng_t &rng, std::size_t r, std::size_t c, double scale = 1.0)
{
    qmatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = random_quaternion(rng, scale);
        }
    }
    return m;
}

inline power_series random_series(rng_t &rng, std::size_t T, double decay = 0.8)
{
    power_series f;
    double scale = 1.0;
    for (std::size_t n = 0; n <= T; ++n) {
        f.coeffs.push_back(random_quaternion(rng, scale));
        scale *= decay;
    }
    return f;
}

inline slice_function as_fn(const power_series &f)
{
    return [f](const quaternion &p) { return eval(f, p); };
}

// Product of slice restrictions: f = F + G J, g = H + L J on C_I give
// f * g = (F H - G conj(L(conj z))) + (F L + G conj(H(conj z))) J.
inline quaternion split_product(const power_series &f, const power_series &g, const slice_frame &fr,
                         const std::complex<double> &z)
{
    const slice_sample fz = sample_slice(as_fn(f), fr, z);
    const slice_sample gz = sample_slice(as_fn(g), fr, z);
    const slice_sample gc = sample_slice(as_fn(g), fr, std::conj(z));
    const std::complex<double> first = fz.F * gz.F - fz.G * std::conj(gc.G);
    const std::complex<double> second = fz.F * gz.G + fz.G * std::conj(gc.F);
    return fr.merge(first, second);
}

inline double max_coeff_diff(const power_series &a, const power_series &b, std::size_t upto)
{
    double m = 0.0;
    for (std::size_t n = 0; n <= upto; ++n) {
        m = std::max(m, distance(a.coeff(n), b.coeff(n)));
    }
    return m;
}

} // namespace qnp::test

#endif
