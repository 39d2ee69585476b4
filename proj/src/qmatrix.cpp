#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <qnp/error.hpp>
#include <qnp/qmatrix.hpp>

namespace qnp
{

qmatrix::qmatrix(std::initializer_list<std::initializer_list<quaternion>> rows)
{
    m_rows = rows.size();
    m_cols = m_rows == 0 ? 0 : rows.begin()->size();
    m_data.reserve(m_rows * m_cols);
    for (const auto &r : rows) {
        if (r.size() != m_cols) {
            throw error(error_code::domain_error, "ragged initializer for qmatrix");
        }
        m_data.insert(m_data.end(), r.begin(), r.end());
    }
}

qmatrix qmatrix::identity(std::size_t n)
{
    qmatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = quaternion{1.0};
    }
    return m;
}

qmatrix qmatrix::diagonal(const std::vector<quaternion> &d)
{
    qmatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

qmatrix qmatrix::adjoint() const
{
    qmatrix out(m_cols, m_rows);
    for (std::size_t r = 0; r < m_rows; ++r) {
        for (std::size_t c = 0; c < m_cols; ++c) {
            out(c, r) = (*this)(r, c).conj();
        }
    }
    return out;
}

qmatrix qmatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    qmatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) {
            out(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return out;
}

qmatrix qmatrix::select(const std::vector<std::size_t> &row_idx, const std::vector<std::size_t> &col_idx) const
{
    qmatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            out(r, c) = (*this)(row_idx[r], col_idx[c]);
        }
    }
    return out;
}

double qmatrix::max_abs() const
{
    double m = 0.0;
    for (const auto &q : m_data) {
        m = std::max(m, q.norm());
    }
    return m;
}

double qmatrix::op_norm() const
{
    if (m_data.empty()) {
        return 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(lift(*this));
    return svd.singularValues()(0);
}

qmatrix &qmatrix::operator+=(const qmatrix &o)
{
    if (o.m_rows != m_rows || o.m_cols != m_cols) {
        throw error(error_code::domain_error, "qmatrix addition: shape mismatch");
    }
    for (std::size_t i = 0; i < m_data.size(); ++i) {
        m_data[i] += o.m_data[i];
    }
    return *this;
}

qmatrix &qmatrix::operator-=(const qmatrix &o)
{
    if (o.m_rows != m_rows || o.m_cols != m_cols) {
        throw error(error_code::domain_error, "qmatrix subtraction: shape mismatch");
    }
    for (std::size_t i = 0; i < m_data.size(); ++i) {
        m_data[i] -= o.m_data[i];
    }
    return *this;
}

qmatrix operator+(qmatrix a, const qmatrix &b)
{
    a += b;
    return a;
}

qmatrix operator-(qmatrix a, const qmatrix &b)
{
    a -= b;
    return a;
}

qmatrix operator*(const qmatrix &a, const qmatrix &b)
{
    if (a.cols() != b.rows()) {
        throw error(error_code::domain_error, "qmatrix product: shape mismatch");
    }
    qmatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const quaternion &ark = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

qmatrix operator*(const quaternion &q, const qmatrix &m)
{
    qmatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = q * m(r, c);
        }
    }
    return out;
}

qmatrix operator*(const qmatrix &m, const quaternion &q)
{
    qmatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c) * q;
        }
    }
    return out;
}

Eigen::MatrixXcd lift(const qmatrix &m)
{
    const auto nr = static_cast<Eigen::Index>(m.rows());
    const auto nc = static_cast<Eigen::Index>(m.cols());
    Eigen::MatrixXcd out(2 * nr, 2 * nc);
    for (Eigen::Index r = 0; r < nr; ++r) {
        for (Eigen::Index c = 0; c < nc; ++c) {
            out.block<2, 2>(2 * r, 2 * c) = chi_embed(m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
        }
    }
    return out;
}

qmatrix unlift(const Eigen::MatrixXcd &m)
{
    if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
        throw error(error_code::domain_error, "unlift: odd dimensions");
    }
    qmatrix out(static_cast<std::size_t>(m.rows() / 2), static_cast<std::size_t>(m.cols() / 2));
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            const auto r2 = static_cast<Eigen::Index>(2 * r);
            const auto c2 = static_cast<Eigen::Index>(2 * c);
            out(r, c) = quaternion{m(r2, c2).real(), m(r2, c2).imag(), m(r2, c2 + 1).real(), m(r2, c2 + 1).imag()};
        }
    }
    return out;
}

double condition_number(const qmatrix &m)
{
    if (!m.square()) {
        throw error(error_code::domain_error, "condition number of a non-square matrix");
    }
    if (m.rows() == 0) {
        return 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(lift(m));
    const auto &sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sv(0) / smin;
}

qmatrix invert(const qmatrix &m)
{
    if (!m.square()) {
        throw error(error_code::domain_error, "invert: matrix is not square");
    }
    const double cond = condition_number(m);
    if (!(cond <= singular_condition)) {
        throw error(error_code::singular_matrix,
                    "invert: lift condition number " + std::to_string(cond) + " exceeds threshold");
    }
    return unlift(lift(m).partialPivLu().inverse());
}

bool is_hermitian(const qmatrix &m, double tol)
{
    if (!m.square()) {
        return false;
    }
    const double scale = std::max(1.0, m.max_abs());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            if (distance(m(r, c), m(c, r).conj()) > tol * scale) {
                return false;
            }
        }
    }
    return true;
}

std::vector<double> hermitian_eigs(const qmatrix &m, double tol)
{
    if (!is_hermitian(m, tol)) {
        throw error(error_code::not_hermitian, "hermitian_eigs: matrix is not Hermitian");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return {};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(lift(m), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues(); // ascending
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = ev(static_cast<Eigen::Index>(2 * i));
        const double hi = ev(static_cast<Eigen::Index>(2 * i + 1));
        if (hi - lo > 1e-8 * scale) {
            throw error(error_code::not_hermitian, "hermitian_eigs: lift eigenvalues are not paired");
        }
        out[i] = 0.5 * (lo + hi);
    }
    return out;
}

bool is_psd(const qmatrix &m, double tol)
{
    const auto eigs = hermitian_eigs(m);
    return eigs.empty() || eigs.front() >= -tol;
}

std::size_t rank(const qmatrix &m, double tol)
{
    const auto eigs = hermitian_eigs(m);
    double lmax = 0.0;
    for (double e : eigs) {
        lmax = std::max(lmax, std::abs(e));
    }
    const double threshold = tol * std::max(1.0, lmax);
    return static_cast<std::size_t>(std::count_if(eigs.begin(), eigs.end(), [&](double e) { return e > threshold; }));
}

namespace
{

// Solves (I - left(p) right(q)) v = rhs, reporting singularity through the condition number.
Eigen::Vector4d solve_shift_operator(const quaternion &p, const quaternion &q, const Eigen::Vector4d &rhs,
                                     const char *what)
{
    const Eigen::Matrix4d op
        = Eigen::Matrix4d::Identity() - mul_ops(p, mul_side::left).matrix * mul_ops(q, mul_side::right).matrix;
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(op, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    if (sv(3) == 0.0 || sv(0) / sv(3) > singular_condition) {
        throw error(error_code::singular_matrix, what);
    }
    return svd.solve(rhs);
}

} // namespace

quaternion solve_sylvester(const sylvester_problem &prob)
{
    return quaternion::from_vector(solve_shift_operator(
        prob.a, prob.b, prob.rhs.to_vector(), "solve_sylvester: homogeneous equation has nonzero solutions"));
}

bool s_spectrum_member(const qmatrix &a, const quaternion &s, double tol)
{
    if (!a.square()) {
        throw error(error_code::domain_error, "s_spectrum_member: matrix is not square");
    }
    const qmatrix q = a * a - (2.0 * s.real()) * a + s.norm2() * qmatrix::identity(a.rows());
    return condition_number(q) > 1.0 / tol;
}

qmatrix star_resolvent(const quaternion &p, const qmatrix &a)
{
    if (!a.square()) {
        throw error(error_code::domain_error, "star_resolvent: matrix is not square");
    }
    const std::size_t n = a.rows();
    const qmatrix id = qmatrix::identity(n);
    const qmatrix companion = p.norm2() * (a * a) - (2.0 * p.real()) * a + id;
    qmatrix inv;
    try {
        inv = invert(companion);
    } catch (const error &) {
        throw error(error_code::singular_matrix, "star_resolvent: companion polynomial is singular");
    }
    return (id - p.conj() * a) * inv;
}

quaternion geometric_sum(const quaternion &p, const quaternion &alpha, const quaternion &q, const quaternion &beta)
{
    // sum p^t alpha q^t = (alpha - conj(p) alpha q)(1 - 2 Re(p) q + |p|^2 q^2)^{-1}. The quadratic is factored in the
    // slice of q as (1 - w q)(1 - conj(w) q) with w the copy of p in that slice, so that factors such as 1 - r are
    // formed directly instead of by cancellation.
    quaternion unit = quaternion::i();
    if (!q.is_real()) {
        unit = q.unit_imag();
    } else if (!p.is_real()) {
        unit = p.unit_imag();
    }
    const quaternion w = p.real() + p.imag_norm() * unit;
    const quaternion f1 = 1.0 - w * q;
    const quaternion f2 = 1.0 - w.conj() * q;
    const double smallest = std::min(f1.norm(), f2.norm());
    if (!(smallest * singular_condition > 1.0 + p.norm() * q.norm())) {
        throw error(error_code::singular_matrix, "geometric_sum: I - left(p) right(q) is singular");
    }
    return (alpha - p.conj() * alpha * q) * (f1 * f2).inverse() * beta;
}

qmatrix geometric_matrix_sum(const quaternion &p, const qmatrix &g, const qmatrix &a)
{
    if (!a.square() || g.cols() != a.rows()) {
        throw error(error_code::domain_error, "geometric_matrix_sum: shape mismatch");
    }
    const qmatrix id = qmatrix::identity(a.rows());
    const qmatrix companion = id - (2.0 * p.real()) * a + p.norm2() * (a * a);
    return (g - p.conj() * (g * a)) * invert(companion);
}

double max_abs_diff(const qmatrix &a, const qmatrix &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw error(error_code::domain_error, "max_abs_diff: shape mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, distance(a.data()[i], b.data()[i]));
    }
    return m;
}

} // namespace qnp
