#ifndef QNP_PICK_HPP
#define QNP_PICK_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <qnp/power_series.hpp>
#include <qnp/problem.hpp>
#include <qnp/qmatrix.hpp>
#include <qnp/slice.hpp>

namespace qnp
{

/// Stein data P - A* P A = C* J C with A = diag(conj p_u), C = [1 ... 1; conj s_1 ... conj s_N], J = diag(1, -1).
struct pick_system {
    std::vector<quaternion> nodes;
    qmatrix A;
    qmatrix C;
    qmatrix J;
    qmatrix P;

    std::size_t size() const noexcept
    {
        return nodes.size();
    }

    /// P - A* P A - C* J C.
    qmatrix stein_residual() const;
};

/// Off-diagonal entries from x - p_u x conj(p_v) = 1 - s_u conj(s_v); diagonal entries are the kappas.
pick_system build_system(const interpolation_problem &prob);

/// |1 - 2 Re(p_u) conj(p_v) + conj(p_v)^2| for u != v; nonzero exactly when the spheres are disjoint.
double companion_value(const quaternion &pu, const quaternion &pv);

/// P(r)_{uv} = sum_t r^{2t} p_u^t (1 - s(r p_u) conj(s(r p_v))) conj(p_v)^t for a candidate s.
qmatrix pick_matrix_at_radius(const std::vector<quaternion> &nodes, const slice_function &s, double r);

struct necessity_report {
    std::vector<double> eigenvalues;
    std::size_t rank = 0;
    bool psd = false;

    // Filled only when a candidate was supplied.
    std::vector<double> radii;
    std::vector<double> off_diagonal_distance; // max_{u != v} |P_uv(r) - P_uv| per radius
    std::vector<double> min_eigenvalue_at_radius;
};

necessity_report necessity_check(const interpolation_problem &prob, const slice_function *candidate = nullptr,
                                 const std::vector<double> &radii = {0.9, 0.99, 0.999});

/// 2x2 J-inner function Theta(p) = I - (1 - p) F(p) P^{-1} (I - A)^{-*} C* J with F(p) = sum p^t C A^t.
class theta_function
{
public:
    /// Throws singular_matrix when P is not invertible.
    explicit theta_function(pick_system sys);

    const pick_system &system() const noexcept
    {
        return m_sys;
    }
    /// W = P^{-1} (I - A)^{-*} C* J, so that Theta(p) = I - (1 - p) F(p) W.
    const qmatrix &weight() const noexcept
    {
        return m_weight;
    }

    /// F(p), entrywise sum_t p^t C_{iu} conj(p_u)^t in closed form.
    qmatrix model_matrix(const quaternion &p) const;

    /// Closed-form value; defined off the node spheres, including |p| >= 1.
    qmatrix operator()(const quaternion &p) const;

    /// Theta_0 = I - C W, Theta_t = -(C A^t - C A^{t-1}) W.
    std::vector<qmatrix> coefficients(std::size_t truncation) const;

    /// Entry (i, j) of Theta as a series.
    power_series entry_series(std::size_t i, std::size_t j, std::size_t truncation) const;

    /// Horner evaluation of the coefficient series.
    static qmatrix eval_coefficients(const std::vector<qmatrix> &coeffs, const quaternion &p);

    /// F(p) P^{-1} F(q)*.
    qmatrix model_kernel(const quaternion &p, const quaternion &q) const;

    /// K_Theta(p, q) = sum_t p^t (J - Theta(p) J Theta(q)*) conj(q)^t in closed form.
    qmatrix kernel(const quaternion &p, const quaternion &q) const;

private:
    pick_system m_sys;
    qmatrix m_weight;
};

} // namespace qnp

#endif
