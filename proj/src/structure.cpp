#include <qnp/error.hpp>
#include <qnp/structure.hpp>

namespace qnp
{

namespace
{

qmatrix shift_inverse(const pick_system &sys)
{
    const std::size_t n = sys.size();
    std::vector<quaternion> d(n);
    for (std::size_t u = 0; u < n; ++u) {
        const quaternion one_minus = 1.0 - sys.A(u, u);
        if (one_minus.norm() == 0.0) {
            throw error(error_code::singular_matrix, "I - A is singular (a node equals 1)");
        }
        d[u] = one_minus.inverse();
    }
    return qmatrix::diagonal(d);
}

} // namespace

double r1_structural_check(const pick_system &sys)
{
    const qmatrix inv = shift_inverse(sys); // (I - A)^{-1}
    const qmatrix inv_adj = inv.adjoint();  // (I - A)^{-*}
    const qmatrix lhs = sys.P + sys.P * inv * sys.A + sys.A.adjoint() * inv_adj * sys.P;
    const qmatrix rhs = inv_adj * sys.C.adjoint() * sys.J * sys.C * inv;
    return max_abs_diff(lhs, rhs);
}

std::vector<quaternion> r1_apply(const std::vector<quaternion> &xi, const pick_system &sys)
{
    if (xi.size() != sys.size()) {
        throw error(error_code::domain_error, "r1_apply: vector length mismatch");
    }
    const qmatrix d = sys.A * shift_inverse(sys);
    std::vector<quaternion> out(xi.size());
    for (std::size_t u = 0; u < xi.size(); ++u) {
        out[u] = d(u, u) * xi[u];
    }
    return out;
}

std::vector<quaternion> model_function(const pick_system &sys, const std::vector<quaternion> &xi,
                                       const quaternion &p)
{
    if (xi.size() != sys.size()) {
        throw error(error_code::domain_error, "model_function: vector length mismatch");
    }
    std::vector<quaternion> out(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t u = 0; u < sys.size(); ++u) {
            out[i] += geometric_sum(p, sys.C(i, u), sys.A(u, u)) * xi[u];
        }
    }
    return out;
}

power_series backward_shift_at_one(const power_series &poly)
{
    const std::size_t t = poly.truncation();
    if (t == 0) {
        return power_series::constant(quaternion{}, 0);
    }
    std::vector<quaternion> q(t);
    q[t - 1] = poly.coeffs[t];
    for (std::size_t k = t - 1; k >= 1; --k) {
        q[k - 1] = poly.coeffs[k] + q[k];
    }
    return power_series(std::move(q));
}

power_series taylor_shift(const power_series &poly, double c)
{
    // Repeated synthetic division by (p - c).
    std::vector<quaternion> work = poly.coeffs;
    const std::size_t n = work.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) {
            work[k - 1] += c * work[k];
        }
    }
    return power_series(std::move(work));
}

} // namespace qnp
