#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <qnp/error.hpp>
#include <qnp/solution.hpp>

namespace qnp
{

const char *to_string(provenance p) noexcept
{
    switch (p) {
        case provenance::nondegenerate:
            return "nondegenerate";
        case provenance::degenerate:
            return "degenerate";
        case provenance::rank_zero:
            return "rank-zero";
        case provenance::external:
            return "external";
    }
    return "external";
}

provenance provenance_from_string(const std::string &s)
{
    if (s == "nondegenerate") {
        return provenance::nondegenerate;
    }
    if (s == "degenerate") {
        return provenance::degenerate;
    }
    if (s == "rank-zero") {
        return provenance::rank_zero;
    }
    if (s == "external") {
        return provenance::external;
    }
    throw error(error_code::parse_error, "unknown provenance '" + s + "'");
}

quaternion lft_value(const theta_function &theta, const slice_function &e, const quaternion &p)
{
    const slice_frame frame = slice_frame::through(p);
    const quaternion pc = p.conj();
    const qmatrix tp = theta(p);
    const qmatrix tc = theta(pc);
    const auto phi = [&](std::size_t i, std::size_t j) { return slice_matrix(tp(i, j), tc(i, j), frame); };
    const Eigen::Matrix2cd phi_e = slice_matrix(e(p), e(pc), frame);
    const Eigen::Matrix2cd num = phi(0, 0) * phi_e + phi(0, 1);
    const Eigen::Matrix2cd den = phi(1, 0) * phi_e + phi(1, 1);
    return slice_matrix_value(num * den.inverse(), frame);
}

schur_solution schur_solution::from_series(power_series coeffs)
{
    schur_solution s;
    s.m_coeffs = std::move(coeffs);
    s.m_prov = provenance::external;
    return s;
}

schur_solution schur_solution::constant(const quaternion &value, std::size_t truncation)
{
    schur_solution s;
    s.m_coeffs = power_series::constant(value, truncation);
    s.m_numerator = s.m_coeffs;
    s.m_denominator = power_series::constant(quaternion{1.0}, truncation);
    s.m_prov = provenance::rank_zero;
    s.m_constant = value;
    s.m_parameter = value;
    return s;
}

schur_solution schur_solution::from_lft(std::shared_ptr<const theta_function> theta, schur_parameter e,
                                        std::size_t truncation, provenance prov)
{
    schur_solution s;
    const power_series a = theta->entry_series(0, 0, truncation);
    const power_series b = theta->entry_series(0, 1, truncation);
    const power_series c = theta->entry_series(1, 0, truncation);
    const power_series d = theta->entry_series(1, 1, truncation);
    if (const auto *ec = std::get_if<quaternion>(&e)) {
        s.m_numerator = a * *ec + b;
        s.m_denominator = c * *ec + d;
    } else {
        const power_series es = std::get<power_series>(e).truncated(truncation);
        s.m_numerator = star_mul(a, es) + b;
        s.m_denominator = star_mul(c, es) + d;
    }
    s.m_coeffs = series_quotient(s.m_numerator, s.m_denominator);
    s.m_theta = std::move(theta);
    s.m_parameter = std::move(e);
    s.m_prov = prov;
    return s;
}

bool schur_solution::constant_parameter() const noexcept
{
    return m_prov != provenance::external && m_parameter.has_value()
           && std::holds_alternative<quaternion>(*m_parameter);
}

quaternion schur_solution::operator()(const quaternion &p) const
{
    switch (m_prov) {
        case provenance::rank_zero:
            return m_constant;
        case provenance::external:
            return eval(m_coeffs, p);
        case provenance::nondegenerate:
        case provenance::degenerate:
            break;
    }
    if (const auto *ec = std::get_if<quaternion>(&*m_parameter)) {
        const quaternion e = *ec;
        return lft_value(*m_theta, [e](const quaternion &) { return e; }, p);
    }
    const power_series &es = std::get<power_series>(*m_parameter);
    return lft_value(*m_theta, [&es](const quaternion &q) { return eval(es, q); }, p);
}

slice_function schur_solution::as_function() const
{
    return [self = *this](const quaternion &p) { return self(p); };
}

power_series series_quotient(const power_series &num, const power_series &den, double tol)
{
    if (den.coeffs.empty() || num.coeffs.empty()) {
        throw error(error_code::denominator_degenerate, "series_quotient: empty series");
    }
    if (den.coeffs[0].norm() <= tol) {
        throw error(error_code::denominator_degenerate, "series_quotient: denominator vanishes at the origin");
    }
    const std::size_t t = std::min(num.truncation(), den.truncation());
    const quaternion d0_inv = den.coeffs[0].inverse();
    std::vector<quaternion> s(t + 1);
    for (std::size_t n = 0; n <= t; ++n) {
        quaternion acc = num.coeffs[n];
        for (std::size_t k = 0; k < n; ++k) {
            acc -= s[k] * den.coeffs[n - k];
        }
        s[n] = acc * d0_inv;
    }
    return power_series(std::move(s));
}

namespace
{

quaternion random_unit(std::mt19937_64 &rng)
{
    std::normal_distribution<double> gauss;
    quaternion q;
    do {
        q = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    } while (q.norm() < 1e-8);
    return q / q.norm();
}

} // namespace

double sample_max_modulus(const slice_function &f, std::size_t n, double radius, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const quaternion dir = random_unit(rng);
        const double r = radius * std::pow(unif(rng), 0.25);
        m = std::max(m, f(r * dir).norm());
    }
    return m;
}

double sample_boundary_deviation(const slice_function &f, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        m = std::max(m, std::abs(f(random_unit(rng)).norm() - 1.0));
    }
    return m;
}

std::vector<std::size_t> pivoted_cholesky_order(const qmatrix &p)
{
    const std::size_t n = p.rows();
    qmatrix s = p;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<bool> used(n, false);
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        double best_val = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && s(i, i).w > best_val) {
                best = i;
                best_val = s(i, i).w;
            }
        }
        used[best] = true;
        out.push_back(best);
        if (best_val <= 0.0) {
            continue;
        }
        // Schur complement update S <- S - S_{:,k} S_kk^{-1} S_{k,:}.
        const qmatrix col = s.select(order, {best});
        const qmatrix row = s.select({best}, order);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                s(i, j) -= col(i, 0) * row(0, j) / best_val;
            }
        }
    }
    return out;
}

namespace
{

void check_schur_parameter(const interpolation_problem &prob)
{
    const auto *es = std::get_if<power_series>(&prob.parameter);
    if (es == nullptr) {
        return;
    }
    const power_series e = *es;
    const double m = sample_max_modulus([&e](const quaternion &p) { return eval(e, p); }, schur_samples,
                                        schur_sample_radius, prob.options.seed);
    if (m > 1.0 + 1e-8) {
        throw error(error_code::invalid_problem, "series parameter is not a Schur function (sampled modulus "
                                                     + std::to_string(m) + ")");
    }
}

void attach_diagnostics(schur_solution &s, std::uint64_t seed)
{
    const slice_function f = s.as_function();
    s.schur_max_modulus = sample_max_modulus(f, schur_samples, schur_sample_radius, seed);
    s.schur_violation = s.schur_max_modulus > 1.0 + 1e-6;
    if (s.constant_parameter()) {
        s.boundary_modulus_deviation = sample_boundary_deviation(f, 100, seed + 1);
    }
}

} // namespace

quaternion parameter_from_node(const theta_function &theta, const quaternion &node, const quaternion &value)
{
    const quaternion rotated = value.inverse() * node * value;
    const qmatrix at_node = theta(node);
    const qmatrix at_rotated = theta(rotated);
    const quaternion lhs = value * at_rotated(1, 0) - at_node(0, 0);
    const quaternion rhs = at_node(0, 1) - value * at_rotated(1, 1);
    if (lhs.norm() <= default_tol) {
        throw error(error_code::no_unitary_parameter, "parameter equation at the extra node is degenerate");
    }
    return lhs.inverse() * rhs;
}

schur_solution degenerate_solve(const interpolation_problem &prob)
{
    const pick_system sys = build_system(prob);
    const double tol = prob.options.tol;
    const std::size_t n = sys.size();
    const std::size_t r = rank(sys.P, tol);
    if (r >= n) {
        throw error(error_code::domain_error, "degenerate_solve: Pick matrix is invertible");
    }
    if (r == 0) {
        for (std::size_t u = 1; u < n; ++u) {
            if (distance(prob.values[u], prob.values[0]) > 1e-10) {
                throw error(error_code::inconsistent_data,
                            "rank-zero Pick matrix but the interpolation values differ");
            }
        }
        schur_solution s = schur_solution::constant(prob.values[0], prob.options.truncation);
        s.rank = 0;
        attach_diagnostics(s, prob.options.seed);
        return s;
    }

    const auto order = pivoted_cholesky_order(sys.P);
    std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(r));
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::size_t> extra;
    for (std::size_t u = 0; u < n; ++u) {
        if (!std::binary_search(chosen.begin(), chosen.end(), u)) {
            extra.push_back(u);
        }
    }

    interpolation_problem sub;
    sub.options = prob.options;
    for (std::size_t u : chosen) {
        sub.nodes.push_back(prob.nodes[u]);
        sub.values.push_back(prob.values[u]);
        sub.kappas.push_back(prob.kappas[u]);
    }
    auto theta = std::make_shared<const theta_function>(build_system(sub));

    quaternion e = parameter_from_node(*theta, prob.nodes[extra.front()], prob.values[extra.front()]);
    if (std::abs(e.norm() - 1.0) > 1e-8) {
        throw error(error_code::no_unitary_parameter,
                    "extra-node constraint gives |e| = " + std::to_string(e.norm()) + ", not 1");
    }
    e = e / e.norm();

    schur_solution s = schur_solution::from_lft(theta, e, prob.options.truncation, provenance::degenerate);
    s.rank = r;
    s.nodes_used = chosen;
    for (std::size_t v : extra) {
        const double miss = distance(s(prob.nodes[v]), prob.values[v]);
        if (miss > 1e-6) {
            throw error(error_code::inconsistent_data, "degenerate solution misses node " + std::to_string(v)
                                                           + " by " + std::to_string(miss));
        }
    }
    attach_diagnostics(s, prob.options.seed);
    if (s.boundary_modulus_deviation > 1e-6) {
        throw error(error_code::inconsistent_data, "degenerate solution is not unimodular on the boundary");
    }
    return s;
}

schur_solution solve(const interpolation_problem &prob)
{
    const pick_system sys = build_system(prob);
    const auto eigs = hermitian_eigs(sys.P);
    if (eigs.front() < -prob.options.tol) {
        throw error(error_code::infeasible, "Pick matrix is not positive semidefinite (min eigenvalue "
                                                + std::to_string(eigs.front()) + ")");
    }
    if (rank(sys.P, prob.options.tol) < sys.size()) {
        return degenerate_solve(prob);
    }
    check_schur_parameter(prob);
    auto theta = std::make_shared<const theta_function>(sys);
    schur_solution s
        = schur_solution::from_lft(std::move(theta), prob.parameter, prob.options.truncation, provenance::nondegenerate);
    s.rank = sys.size();
    s.nodes_used.resize(sys.size());
    std::iota(s.nodes_used.begin(), s.nodes_used.end(), std::size_t{0});
    attach_diagnostics(s, prob.options.seed);
    return s;
}

} // namespace qnp
