#ifndef QNP_QMATRIX_HPP
#define QNP_QMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include <qnp/quaternion.hpp>

namespace qnp
{

// Lift condition number above which a matrix is treated as singular.
inline constexpr double singular_condition = 1e14;

/// Dense row-major quaternion matrix.
class qmatrix
{
public:
    qmatrix() = default;
    qmatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
    qmatrix(std::initializer_list<std::initializer_list<quaternion>> rows);

    static qmatrix identity(std::size_t n);
    static qmatrix diagonal(const std::vector<quaternion> &d);

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    bool square() const noexcept
    {
        return m_rows == m_cols;
    }

    quaternion &operator()(std::size_t r, std::size_t c)
    {
        return m_data[r * m_cols + c];
    }
    const quaternion &operator()(std::size_t r, std::size_t c) const
    {
        return m_data[r * m_cols + c];
    }
    const std::vector<quaternion> &data() const noexcept
    {
        return m_data;
    }

    qmatrix adjoint() const;
    qmatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    qmatrix select(const std::vector<std::size_t> &row_idx, const std::vector<std::size_t> &col_idx) const;

    /// Largest entry modulus.
    double max_abs() const;
    /// Operator 2-norm, computed on the complex lift.
    double op_norm() const;

    qmatrix &operator+=(const qmatrix &o);
    qmatrix &operator-=(const qmatrix &o);

    friend bool operator==(const qmatrix &, const qmatrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<quaternion> m_data;
};

qmatrix operator+(qmatrix a, const qmatrix &b);
qmatrix operator-(qmatrix a, const qmatrix &b);
qmatrix operator*(const qmatrix &a, const qmatrix &b);
/// Left scalar multiplication (q M)_{ij} = q M_{ij}.
qmatrix operator*(const quaternion &q, const qmatrix &m);
/// Right scalar multiplication (M q)_{ij} = M_{ij} q.
qmatrix operator*(const qmatrix &m, const quaternion &q);

/// Blockwise complex lift; an n x m matrix becomes 2n x 2m.
Eigen::MatrixXcd lift(const qmatrix &m);
/// Inverse of lift; reads the first row of every 2x2 block.
qmatrix unlift(const Eigen::MatrixXcd &m);

/// 2-norm condition number of the lift (infinity when singular).
double condition_number(const qmatrix &m);

qmatrix invert(const qmatrix &m);

bool is_hermitian(const qmatrix &m, double tol = default_tol);

/// The n eigenvalues of a Hermitian matrix (ascending), obtained from the doubled spectrum of its lift.
std::vector<double> hermitian_eigs(const qmatrix &m, double tol = default_tol);

bool is_psd(const qmatrix &m, double tol = default_tol);
std::size_t rank(const qmatrix &m, double tol = default_tol);

/// x - a x b = rhs.
struct sylvester_problem {
    quaternion a;
    quaternion b;
    quaternion rhs;
};

quaternion solve_sylvester(const sylvester_problem &prob);

/// Membership of s in the S-spectrum: A^2 - 2 Re(s) A + |s|^2 I numerically singular.
bool s_spectrum_member(const qmatrix &a, const quaternion &s, double tol = default_tol);

/// Closed form of sum_n p^n A^n: (I - conj(p) A)(|p|^2 A^2 - 2 Re(p) A + I)^{-1}.
qmatrix star_resolvent(const quaternion &p, const qmatrix &a);

/// Closed form of sum_t p^t alpha q^t beta; singular when I - left(p) right(q) is.
quaternion geometric_sum(const quaternion &p, const quaternion &alpha, const quaternion &q,
                         const quaternion &beta = quaternion{1.0});

/// Entrywise sum_t p^t G A^t for arbitrary square A via (G - conj(p) G A)(I - 2 Re(p) A + |p|^2 A^2)^{-1}.
qmatrix geometric_matrix_sum(const quaternion &p, const qmatrix &g, const qmatrix &a);

/// Largest entry modulus of a - b.
double max_abs_diff(const qmatrix &a, const qmatrix &b);

} // namespace qnp

#endif
