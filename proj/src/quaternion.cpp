#include <ostream>

#include <qnp/error.hpp>
#include <qnp/quaternion.hpp>

namespace qnp
{

const char *to_string(error_code code) noexcept
{
    switch (code) {
        case error_code::degenerate_input:
            return "degenerate-input";
        case error_code::singular_matrix:
            return "singular-matrix";
        case error_code::not_hermitian:
            return "not-hermitian";
        case error_code::sphere_collision:
            return "sphere-collision";
        case error_code::zero_constant_term:
            return "zero-constant-term";
        case error_code::domain_error:
            return "domain-error";
        case error_code::invalid_problem:
            return "invalid-problem";
        case error_code::denominator_degenerate:
            return "denominator-degenerate";
        case error_code::inconsistent_data:
            return "inconsistent-data";
        case error_code::no_unitary_parameter:
            return "no-unitary-parameter";
        case error_code::infeasible:
            return "infeasible";
        case error_code::non_real_symmetrization:
            return "non-real-symmetrization";
        case error_code::parse_error:
            return "parse-error";
    }
    return "unknown";
}

quaternion quaternion::inverse() const
{
    const double n2 = norm2();
    if (n2 == 0.0) {
        throw error(error_code::degenerate_input, "inverse of the zero quaternion");
    }
    return conj() / n2;
}

quaternion quaternion::unit_imag() const
{
    const double n = imag_norm();
    if (n == 0.0) {
        throw error(error_code::degenerate_input, "imaginary unit of a real quaternion is not unique");
    }
    return {0.0, x / n, y / n, z / n};
}

quaternion &quaternion::operator*=(const quaternion &o)
{
    *this = *this * o;
    return *this;
}

quaternion pow(const quaternion &p, unsigned n)
{
    quaternion result{1.0};
    quaternion base = p;
    while (n != 0u) {
        if ((n & 1u) != 0u) {
            result = result * base;
        }
        base = base * base;
        n >>= 1u;
    }
    return result;
}

bool same_sphere(const quaternion &p, const quaternion &q, double tol)
{
    return std::abs(p.real() - q.real()) <= tol && std::abs(p.norm() - q.norm()) <= tol;
}

std::ostream &operator<<(std::ostream &os, const quaternion &q)
{
    return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

complex_lift2 chi_embed(const quaternion &p)
{
    const std::complex<double> z1{p.w, p.x};
    const std::complex<double> z2{p.y, p.z};
    complex_lift2 m;
    m << z1, z2, -std::conj(z2), std::conj(z1);
    return m;
}

quaternion chi_unembed(const complex_lift2 &m)
{
    return {m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag()};
}

real_mul_op4 mul_ops(const quaternion &p, mul_side side)
{
    static const quaternion basis[4] = {quaternion{1.0}, quaternion::i(), quaternion::j(), quaternion::k()};
    real_mul_op4 op{Eigen::Matrix4d::Zero(), side};
    for (int c = 0; c < 4; ++c) {
        const quaternion image = side == mul_side::left ? p * basis[c] : basis[c] * p;
        op.matrix.col(c) = image.to_vector();
    }
    return op;
}

} // namespace qnp
