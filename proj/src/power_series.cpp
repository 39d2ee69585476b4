#include <algorithm>
#include <cmath>
#include <limits>

#include <qnp/error.hpp>
#include <qnp/power_series.hpp>
#include <qnp/qmatrix.hpp>

namespace qnp
{

power_series power_series::constant(const quaternion &a, std::size_t truncation)
{
    std::vector<quaternion> c(truncation + 1);
    c[0] = a;
    return power_series(std::move(c));
}

power_series power_series::variable(std::size_t truncation)
{
    std::vector<quaternion> c(std::max<std::size_t>(truncation, 1) + 1);
    c[1] = quaternion{1.0};
    return power_series(std::move(c));
}

double power_series::max_abs_coeff() const
{
    double m = 0.0;
    for (const auto &a : coeffs) {
        m = std::max(m, a.norm());
    }
    return m;
}

power_series power_series::truncated(std::size_t t) const
{
    std::vector<quaternion> c(t + 1);
    std::copy_n(coeffs.begin(), std::min(coeffs.size(), t + 1), c.begin());
    return power_series(std::move(c));
}

bool power_series::has_real_coeffs(double tol) const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [tol](const quaternion &a) { return a.is_real(tol); });
}

power_series operator+(const power_series &f, const power_series &g)
{
    std::vector<quaternion> c(std::max(f.coeffs.size(), g.coeffs.size()));
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = f.coeff(n) + g.coeff(n);
    }
    return power_series(std::move(c));
}

power_series operator-(const power_series &f, const power_series &g)
{
    std::vector<quaternion> c(std::max(f.coeffs.size(), g.coeffs.size()));
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = f.coeff(n) - g.coeff(n);
    }
    return power_series(std::move(c));
}

power_series operator*(const power_series &f, const quaternion &q)
{
    std::vector<quaternion> c(f.coeffs.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = f.coeffs[n] * q;
    }
    return power_series(std::move(c));
}

quaternion eval(const power_series &f, const quaternion &p)
{
    if (f.coeffs.empty()) {
        return {};
    }
    quaternion acc = f.coeffs.back();
    for (std::size_t n = f.coeffs.size() - 1; n-- > 0;) {
        acc = f.coeffs[n] + p * acc;
    }
    return acc;
}

series_value eval_bounded(const power_series &f, const quaternion &p)
{
    const double r = p.norm();
    series_value out{eval(f, p), std::numeric_limits<double>::infinity(), r < 1.0};
    if (out.converges) {
        out.tail_bound
            = std::pow(r, static_cast<double>(f.truncation() + 1)) * f.max_abs_coeff() / (1.0 - r);
    }
    return out;
}

power_series star_mul(const power_series &f, const power_series &g)
{
    if (f.coeffs.empty() || g.coeffs.empty()) {
        return {};
    }
    const std::size_t t = std::min(f.truncation(), g.truncation());
    std::vector<quaternion> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        quaternion acc;
        for (std::size_t r = 0; r <= n; ++r) {
            acc += f.coeffs[r] * g.coeffs[n - r];
        }
        c[n] = acc;
    }
    return power_series(std::move(c));
}

power_series conjugate_series(const power_series &f)
{
    std::vector<quaternion> c(f.coeffs.size());
    std::transform(f.coeffs.begin(), f.coeffs.end(), c.begin(), [](const quaternion &a) { return a.conj(); });
    return power_series(std::move(c));
}

power_series symmetrize(const power_series &f)
{
    return star_mul(conjugate_series(f), f);
}

power_series real_series_reciprocal(const power_series &f)
{
    if (f.coeffs.empty() || f.coeffs[0].w == 0.0) {
        throw error(error_code::zero_constant_term, "reciprocal of a series with zero constant term");
    }
    const std::size_t t = f.truncation();
    std::vector<double> h(t + 1);
    const double c0 = f.coeffs[0].w;
    h[0] = 1.0 / c0;
    for (std::size_t n = 1; n <= t; ++n) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += f.coeffs[k].w * h[n - k];
        }
        h[n] = -acc / c0;
    }
    std::vector<quaternion> c(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        c[n] = quaternion{h[n]};
    }
    return power_series(std::move(c));
}

power_series star_inverse(const power_series &f)
{
    if (f.coeffs.empty() || f.coeffs[0].norm2() == 0.0) {
        throw error(error_code::zero_constant_term, "star_inverse: constant term vanishes");
    }
    const power_series fs = symmetrize(f);
    const double scale = std::max(1.0, fs.max_abs_coeff());
    if (!fs.has_real_coeffs(1e-12 * scale)) {
        throw error(error_code::non_real_symmetrization, "star_inverse: symmetrized series is not real");
    }
    return star_mul(real_series_reciprocal(fs), conjugate_series(f));
}

quaternion star_product_value(const power_series &f, const power_series &g, const quaternion &p)
{
    const quaternion fp = eval(f, p);
    if (fp.norm2() == 0.0) {
        return {};
    }
    return fp * eval(g, fp.inverse() * p * fp);
}

blaschke_factor::blaschke_factor(const quaternion &a) : m_a(a)
{
    const double r = a.norm();
    if (!(r > 0.0 && r < 1.0)) {
        throw error(error_code::domain_error, "blaschke_factor: zero must satisfy 0 < |a| < 1");
    }
    m_unit = a.conj() / r;
}

quaternion blaschke_factor::operator()(const quaternion &p) const
{
    // (k * (a - p))(p) = k(p) a - p k(p) with k(p) = sum p^t conj(a)^t.
    const quaternion k = geometric_sum(p, quaternion{1.0}, m_a.conj());
    return (k * m_a - p * k) * m_unit;
}

power_series blaschke_factor::series(std::size_t truncation) const
{
    std::vector<quaternion> c(truncation + 1);
    const quaternion abar = m_a.conj();
    quaternion abar_pow{1.0}; // conj(a)^{n-1}
    c[0] = m_a * m_unit;
    for (std::size_t n = 1; n <= truncation; ++n) {
        const quaternion next = abar_pow * abar;
        c[n] = (next * m_a - abar_pow) * m_unit;
        abar_pow = next;
    }
    return power_series(std::move(c));
}

double blaschke_factor::kernel_diagonal(const quaternion &p) const
{
    const quaternion k = geometric_sum(p, quaternion{1.0}, m_a.conj());
    return (1.0 - m_a.norm2()) * k.norm2();
}

} // namespace qnp
