#include <algorithm>
#include <cmath>
#include <string>

#include <qnp/error.hpp>
#include <qnp/pick.hpp>

namespace qnp
{

namespace
{

bool finite(const quaternion &q)
{
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

constexpr double unit_tol = 1e-12;

} // namespace

void interpolation_problem::validate() const
{
    const std::size_t n = nodes.size();
    if (n == 0) {
        throw error(error_code::invalid_problem, "problem has no nodes");
    }
    if (values.size() != n || kappas.size() != n) {
        throw error(error_code::invalid_problem, "nodes, values and kappas must have equal length");
    }
    for (std::size_t u = 0; u < n; ++u) {
        const std::string at = " at index " + std::to_string(u);
        if (!finite(nodes[u]) || !finite(values[u]) || !std::isfinite(kappas[u])) {
            throw error(error_code::invalid_problem, "non-finite data" + at);
        }
        if (std::abs(nodes[u].norm() - 1.0) > unit_tol) {
            throw error(error_code::invalid_problem, "node is not of modulus one" + at);
        }
        if (distance(nodes[u], quaternion{1.0}) <= unit_tol) {
            throw error(error_code::invalid_problem, "node equals 1" + at);
        }
        if (std::abs(values[u].norm() - 1.0) > unit_tol) {
            throw error(error_code::invalid_problem, "value is not of modulus one" + at);
        }
        if (kappas[u] < 0.0) {
            throw error(error_code::invalid_problem, "negative kappa" + at);
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (same_sphere(nodes[u], nodes[v], options.tol)) {
                throw error(error_code::sphere_collision, "nodes " + std::to_string(u) + " and " + std::to_string(v)
                                                              + " lie on the same sphere");
            }
        }
    }
    if (const auto *e = std::get_if<quaternion>(&parameter)) {
        if (!finite(*e) || std::abs(e->norm() - 1.0) > default_tol) {
            throw error(error_code::invalid_problem, "constant parameter must be a unit quaternion");
        }
    } else {
        const auto &series = std::get<power_series>(parameter);
        if (series.coeffs.empty()
            || !std::all_of(series.coeffs.begin(), series.coeffs.end(), [](const quaternion &q) { return finite(q); })) {
            throw error(error_code::invalid_problem, "series parameter must have finite coefficients");
        }
    }
}

qmatrix pick_system::stein_residual() const
{
    return P - A.adjoint() * P * A - C.adjoint() * J * C;
}

pick_system build_system(const interpolation_problem &prob)
{
    prob.validate();
    const std::size_t n = prob.size();
    pick_system sys;
    sys.nodes = prob.nodes;
    std::vector<quaternion> diag(n);
    std::transform(prob.nodes.begin(), prob.nodes.end(), diag.begin(), [](const quaternion &p) { return p.conj(); });
    sys.A = qmatrix::diagonal(diag);
    sys.C = qmatrix(2, n);
    for (std::size_t u = 0; u < n; ++u) {
        sys.C(0, u) = quaternion{1.0};
        sys.C(1, u) = prob.values[u].conj();
    }
    sys.J = qmatrix::diagonal({quaternion{1.0}, quaternion{-1.0}});
    sys.P = qmatrix(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        sys.P(u, u) = quaternion{prob.kappas[u]};
        for (std::size_t v = u + 1; v < n; ++v) {
            const quaternion rhs = 1.0 - prob.values[u] * prob.values[v].conj();
            try {
                sys.P(u, v) = solve_sylvester({prob.nodes[u], prob.nodes[v].conj(), rhs});
            } catch (const error &) {
                throw error(error_code::sphere_collision,
                            "nodes " + std::to_string(u) + " and " + std::to_string(v) + " lie on the same sphere");
            }
            sys.P(v, u) = sys.P(u, v).conj();
        }
    }
    return sys;
}

double companion_value(const quaternion &pu, const quaternion &pv)
{
    const quaternion pvc = pv.conj();
    return (1.0 - 2.0 * pu.real() * pvc + pvc * pvc).norm();
}

qmatrix pick_matrix_at_radius(const std::vector<quaternion> &nodes, const slice_function &s, double r)
{
    const std::size_t n = nodes.size();
    std::vector<quaternion> sv(n);
    for (std::size_t u = 0; u < n; ++u) {
        sv[u] = s(r * nodes[u]);
    }
    qmatrix out(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const quaternion g = 1.0 - sv[u] * sv[v].conj();
            out(u, v) = geometric_sum(r * nodes[u], g, r * nodes[v].conj());
        }
    }
    return out;
}

necessity_report necessity_check(const interpolation_problem &prob, const slice_function *candidate,
                                 const std::vector<double> &radii)
{
    const pick_system sys = build_system(prob);
    necessity_report rep;
    rep.eigenvalues = hermitian_eigs(sys.P);
    rep.psd = rep.eigenvalues.empty() || rep.eigenvalues.front() >= -prob.options.tol;
    rep.rank = rank(sys.P, prob.options.tol);
    if (candidate != nullptr) {
        rep.radii = radii;
        for (double r : radii) {
            const qmatrix pr = pick_matrix_at_radius(prob.nodes, *candidate, r);
            double dist = 0.0;
            for (std::size_t u = 0; u < sys.size(); ++u) {
                for (std::size_t v = 0; v < sys.size(); ++v) {
                    if (u != v) {
                        dist = std::max(dist, distance(pr(u, v), sys.P(u, v)));
                    }
                }
            }
            rep.off_diagonal_distance.push_back(dist);
            // P(r) is Hermitian only up to rounding in the closed forms.
            const qmatrix sym = 0.5 * (pr + pr.adjoint());
            rep.min_eigenvalue_at_radius.push_back(hermitian_eigs(sym, 1e-6).front());
        }
    }
    return rep;
}

theta_function::theta_function(pick_system sys) : m_sys(std::move(sys))
{
    const std::size_t n = m_sys.size();
    qmatrix p_inv;
    try {
        p_inv = invert(m_sys.P);
    } catch (const error &) {
        throw error(error_code::singular_matrix, "theta_function: Pick matrix is singular");
    }
    // (I - A)^{-*} = diag((1 - p_u)^{-1}).
    std::vector<quaternion> d(n);
    for (std::size_t u = 0; u < n; ++u) {
        d[u] = (1.0 - m_sys.nodes[u]).inverse();
    }
    m_weight = p_inv * qmatrix::diagonal(d) * m_sys.C.adjoint() * m_sys.J;
}

qmatrix theta_function::model_matrix(const quaternion &p) const
{
    const std::size_t n = m_sys.size();
    qmatrix f(2, n);
    for (std::size_t u = 0; u < n; ++u) {
        const quaternion q = m_sys.A(u, u);
        for (std::size_t i = 0; i < 2; ++i) {
            f(i, u) = geometric_sum(p, m_sys.C(i, u), q);
        }
    }
    return f;
}

qmatrix theta_function::operator()(const quaternion &p) const
{
    return qmatrix::identity(2) - (1.0 - p) * (model_matrix(p) * m_weight);
}

std::vector<qmatrix> theta_function::coefficients(std::size_t truncation) const
{
    const std::size_t n = m_sys.size();
    std::vector<qmatrix> out;
    out.reserve(truncation + 1);
    qmatrix ca = m_sys.C; // C A^t
    out.push_back(qmatrix::identity(2) - ca * m_weight);
    for (std::size_t t = 1; t <= truncation; ++t) {
        qmatrix next(2, n);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t u = 0; u < n; ++u) {
                next(i, u) = ca(i, u) * m_sys.A(u, u);
            }
        }
        out.push_back(quaternion{-1.0} * ((next - ca) * m_weight));
        ca = std::move(next);
    }
    return out;
}

power_series theta_function::entry_series(std::size_t i, std::size_t j, std::size_t truncation) const
{
    const auto coeffs = coefficients(truncation);
    std::vector<quaternion> c(coeffs.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        c[t] = coeffs[t](i, j);
    }
    return power_series(std::move(c));
}

qmatrix theta_function::eval_coefficients(const std::vector<qmatrix> &coeffs, const quaternion &p)
{
    if (coeffs.empty()) {
        return {};
    }
    qmatrix acc = coeffs.back();
    for (std::size_t t = coeffs.size() - 1; t-- > 0;) {
        acc = coeffs[t] + p * acc;
    }
    return acc;
}

qmatrix theta_function::model_kernel(const quaternion &p, const quaternion &q) const
{
    return model_matrix(p) * invert(m_sys.P) * model_matrix(q).adjoint();
}

qmatrix theta_function::kernel(const quaternion &p, const quaternion &q) const
{
    const qmatrix x = m_sys.J - (*this)(p) * m_sys.J * (*this)(q).adjoint();
    qmatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = geometric_sum(p, x(i, j), q.conj());
        }
    }
    return out;
}

} // namespace qnp
