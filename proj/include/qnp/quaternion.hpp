#ifndef QNP_QUATERNION_HPP
#define QNP_QUATERNION_HPP

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

#include <Eigen/Dense>

namespace qnp
{

inline constexpr double default_tol = 1e-10;

/// Real quaternion w + x i + y j + z k.
struct quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr quaternion() = default;
    constexpr quaternion(double re) : w(re) {}
    constexpr quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr quaternion i()
    {
        return {0.0, 1.0, 0.0, 0.0};
    }
    static constexpr quaternion j()
    {
        return {0.0, 0.0, 1.0, 0.0};
    }
    static constexpr quaternion k()
    {
        return {0.0, 0.0, 0.0, 1.0};
    }

    static quaternion from_array(const std::array<double, 4> &a)
    {
        return {a[0], a[1], a[2], a[3]};
    }
    std::array<double, 4> to_array() const
    {
        return {w, x, y, z};
    }
    Eigen::Vector4d to_vector() const
    {
        return {w, x, y, z};
    }
    static quaternion from_vector(const Eigen::Vector4d &v)
    {
        return {v[0], v[1], v[2], v[3]};
    }

    constexpr double real() const
    {
        return w;
    }
    constexpr quaternion imag() const
    {
        return {0.0, x, y, z};
    }
    constexpr quaternion conj() const
    {
        return {w, -x, -y, -z};
    }
    constexpr double norm2() const
    {
        return w * w + x * x + y * y + z * z;
    }
    double norm() const
    {
        return std::sqrt(norm2());
    }
    double imag_norm() const
    {
        return std::sqrt(x * x + y * y + z * z);
    }
    bool is_real(double tol = 0.0) const
    {
        return imag_norm() <= tol;
    }

    quaternion inverse() const;

    /// The unit imaginary I_p with p = Re(p) + I_p |Im(p)|. Throws degenerate_input for real p.
    quaternion unit_imag() const;

    quaternion &operator+=(const quaternion &o)
    {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    quaternion &operator-=(const quaternion &o)
    {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    quaternion &operator*=(double s)
    {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    quaternion &operator*=(const quaternion &o);

    friend bool operator==(const quaternion &, const quaternion &) = default;
};

constexpr quaternion operator+(const quaternion &a, const quaternion &b)
{
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr quaternion operator-(const quaternion &a, const quaternion &b)
{
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr quaternion operator-(const quaternion &a)
{
    return {-a.w, -a.x, -a.y, -a.z};
}
constexpr quaternion operator*(double s, const quaternion &a)
{
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}
constexpr quaternion operator*(const quaternion &a, double s)
{
    return s * a;
}
constexpr quaternion operator/(const quaternion &a, double s)
{
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product.
constexpr quaternion operator*(const quaternion &p, const quaternion &q)
{
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z, p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x, p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

inline quaternion mul(const quaternion &p, const quaternion &q)
{
    return p * q;
}

inline double dot(const quaternion &a, const quaternion &b)
{
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance(const quaternion &a, const quaternion &b)
{
    return (a - b).norm();
}

/// Integer power p^n, n >= 0.
quaternion pow(const quaternion &p, unsigned n);

/// True iff p and q lie on the same 2-sphere x + S y: equal real parts and moduli within tol.
bool same_sphere(const quaternion &p, const quaternion &q, double tol = default_tol);

std::ostream &operator<<(std::ostream &, const quaternion &);

// Complex 2x2 lift p = z1 + z2 j  ->  [[z1, z2], [-conj(z2), conj(z1)]].
using complex_lift2 = Eigen::Matrix2cd;

complex_lift2 chi_embed(const quaternion &p);

/// Inverse of chi_embed; reads the first row only.
quaternion chi_unembed(const complex_lift2 &m);

enum class mul_side { left, right };

/// 4x4 real matrix realizing x -> p x (left) or x -> x p (right) on component vectors.
struct real_mul_op4 {
    Eigen::Matrix4d matrix;
    mul_side side;

    quaternion apply(const quaternion &q) const
    {
        return quaternion::from_vector(matrix * q.to_vector());
    }
};

real_mul_op4 mul_ops(const quaternion &p, mul_side side);

} // namespace qnp

#endif
