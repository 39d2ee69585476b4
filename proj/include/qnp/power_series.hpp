#ifndef QNP_POWER_SERIES_HPP
#define QNP_POWER_SERIES_HPP

#include <cstddef>
#include <vector>

#include <qnp/quaternion.hpp>

namespace qnp
{

inline constexpr std::size_t default_truncation = 512;

/// Truncated series f(p) = sum_{n <= T} p^n a_n with coefficients written to the right of the powers.
struct power_series {
    std::vector<quaternion> coeffs;

    power_series() = default;
    explicit power_series(std::vector<quaternion> c) : coeffs(std::move(c)) {}

    static power_series constant(const quaternion &a, std::size_t truncation = 0);
    /// The identity function p (coefficients [0, 1]).
    static power_series variable(std::size_t truncation = 1);

    std::size_t truncation() const noexcept
    {
        return coeffs.empty() ? 0 : coeffs.size() - 1;
    }
    const quaternion &operator[](std::size_t n) const
    {
        return coeffs[n];
    }
    quaternion coeff(std::size_t n) const
    {
        return n < coeffs.size() ? coeffs[n] : quaternion{};
    }

    double max_abs_coeff() const;
    /// Copy truncated (or zero-padded) to order t.
    power_series truncated(std::size_t t) const;
    bool has_real_coeffs(double tol = 0.0) const;
};

power_series operator+(const power_series &f, const power_series &g);
power_series operator-(const power_series &f, const power_series &g);
/// Coefficientwise right multiplication by a constant: (f q)(p) = f(p) q.
power_series operator*(const power_series &f, const quaternion &q);

struct series_value {
    quaternion value;
    double tail_bound;  // |p|^{T+1} max|a_n| / (1 - |p|); infinite when |p| >= 1
    bool converges;     // false when |p| >= 1
};

/// Horner evaluation of sum p^n a_n. No convergence check.
quaternion eval(const power_series &f, const quaternion &p);
series_value eval_bounded(const power_series &f, const quaternion &p);

/// Cauchy convolution c_n = sum_r a_r b_{n-r}, truncated at min(T_f, T_g).
power_series star_mul(const power_series &f, const power_series &g);

power_series conjugate_series(const power_series &f);
/// f^s = f^c * f; its coefficients are real.
power_series symmetrize(const power_series &f);

/// Reciprocal of a series with real coefficients (imaginary parts ignored).
power_series real_series_reciprocal(const power_series &f);

/// f^{-*} = (f^s)^{-1} f^c.
power_series star_inverse(const power_series &f);

/// Pointwise value (f * g)(p) = f(p) g(f(p)^{-1} p f(p)) for f(p) != 0, and 0 when f(p) = 0.
/// Evaluation oracle only; the primary route is star_mul.
quaternion star_product_value(const power_series &f, const power_series &g, const quaternion &p);

/// Elementary Blaschke factor b_a(p) = (1 - p conj(a))^{-*} * (a - p) conj(a)/|a|.
class blaschke_factor
{
public:
    explicit blaschke_factor(const quaternion &a);

    const quaternion &zero() const noexcept
    {
        return m_a;
    }

    /// Closed form through geometric sums; valid on the closed ball.
    quaternion operator()(const quaternion &p) const;

    power_series series(std::size_t truncation = default_truncation) const;

    /// Reproducing-kernel diagonal (1 - |b(p)|^2)/(1 - |p|^2) in closed form, also valid as |p| -> 1.
    double kernel_diagonal(const quaternion &p) const;

private:
    quaternion m_a;
    quaternion m_unit;  // conj(a)/|a|
};

} // namespace qnp

#endif
