#include <doctest.h>

#include <qnp/error.hpp>
#include <qnp/slice.hpp>
#include <qnp/solution.hpp>
#include <qnp/verify.hpp>

#include "support.hpp"

using namespace qnp;

namespace
{

double max_interior_distance(const slice_function &f, const slice_function &g, test::rng_t &rng, int n,
                             double radius = 0.95)
{
    double m = 0.0;
    for (int k = 0; k < n; ++k) {
        const quaternion p = test::random_in_ball(rng, radius);
        m = std::max(m, distance(f(p), g(p)));
    }
    return m;
}

// Boundary kernel diagonal from two radial difference quotients, combined to cancel the O(1 - r) term.
double kernel_estimate(const slice_function &f, const quaternion &p)
{
    const auto q = [&](double h) {
        const double r = 1.0 - h;
        return (1.0 - f(r * p).norm2()) / (1.0 - r * r);
    };
    return 2.0 * q(1e-4) - q(2e-4);
}

} // namespace

TEST_CASE("single node with e = 1")
{
    interpolation_problem prob;
    prob.nodes = {quaternion::i()};
    prob.values = {quaternion{1.0}};
    prob.kappas = {1.0};
    const schur_solution sol = solve(prob);
    CHECK(sol.origin() == provenance::nondegenerate);
    CHECK(sol.rank == 1);
    double last = 1e300;
    for (double r : {0.9, 0.99, 0.999}) {
        const double gap = distance(sol(r * prob.nodes[0]), prob.values[0]);
        CHECK(gap <= last);
        last = gap;
    }
    CHECK(last <= 1e-2);
}

TEST_CASE("nondegenerate solutions")
{
    test::rng_t rng(40);
    for (int n = 0; n < 6; ++n) {
        interpolation_problem prob = test::random_problem(rng, 1 + static_cast<std::size_t>(n % 4));
        prob.parameter = test::random_unit(rng);
        const schur_solution sol = solve(prob);
        CHECK(sol.has_closed_form());
        CHECK(sol.constant_parameter());
        CHECK(sol.schur_max_modulus <= 1.0 + 1e-8);
        CHECK_FALSE(sol.schur_violation);
        // Unit parameter: the solution is inner.
        CHECK(sol.boundary_modulus_deviation < 1e-6);

        // s * D = N coefficientwise.
        const power_series lhs = star_mul(sol.coeffs(), sol.denominator());
        double worst = 0.0;
        for (std::size_t k = 0; k <= prob.options.truncation; ++k) {
            worst = std::max(worst, distance(lhs.coeff(k), sol.numerator().coeff(k)));
        }
        CHECK(worst <= 1e-9 * std::max(1.0, sol.numerator().max_abs_coeff()));

        // Closed form and series agree inside.
        for (int k = 0; k < 10; ++k) {
            const quaternion p = test::random_in_ball(rng, 0.6);
            CHECK(distance(sol(p), sol.eval_series(p)) < 1e-9);
        }
        // The closed form is the LFT evaluated through slice matrices.
        const quaternion e = std::get<quaternion>(prob.parameter);
        const quaternion p = test::random_in_ball(rng, 0.9);
        CHECK(distance(sol(p), lft_value(*sol.theta(), [e](const quaternion &) { return e; }, p)) < 1e-14);
    }
}

TEST_CASE("series Schur parameter")
{
    test::rng_t rng(41);
    interpolation_problem prob = test::random_problem(rng, 2);
    // e(p) = p u with |u| = 1/2 is a Schur function.
    const quaternion u = 0.5 * test::random_unit(rng);
    prob.parameter = power_series({quaternion{}, u});
    const schur_solution sol = solve(prob);
    CHECK_FALSE(sol.constant_parameter());
    CHECK(sol.schur_max_modulus <= 1.0 + 1e-8);
    for (std::size_t v = 0; v < prob.size(); ++v) {
        const double g1 = distance(sol(0.99 * prob.nodes[v]), prob.values[v]);
        const double g2 = distance(sol(0.9999 * prob.nodes[v]), prob.values[v]);
        CHECK(g2 < g1);
        CHECK(g2 < 1e-3);
    }
    // A series that leaves the unit ball is rejected.
    prob.parameter = power_series({quaternion{}, quaternion{3.0}});
    CHECK_THROWS_AS(solve(prob), error);
}

TEST_CASE("infeasible data")
{
    interpolation_problem prob;
    prob.nodes = {quaternion::i(), quaternion{std::cos(1.0), 0.0, 0.0, std::sin(1.0)}};
    prob.values = {quaternion{1.0}, quaternion::j()};
    prob.kappas = {0.0, 0.0};
    try {
        (void)solve(prob);
        FAIL("expected infeasible");
    } catch (const error &e) {
        CHECK(e.code() == error_code::infeasible);
    }
}

TEST_CASE("rank zero")
{
    interpolation_problem prob;
    prob.nodes = {quaternion::i(), quaternion{std::cos(1.0), 0.0, 0.0, std::sin(1.0)}, quaternion{0.6, 0, 0, 0.8}};
    const quaternion s{0.0, 0.0, 0.6, 0.8};
    prob.values = {s, s, s};
    prob.kappas = {0.0, 0.0, 0.0};
    const schur_solution sol = solve(prob);
    CHECK(sol.origin() == provenance::rank_zero);
    CHECK(sol.rank == 0);
    for (const auto &p : prob.nodes) {
        for (double r : {0.9, 0.99, 0.999, 0.9999}) {
            CHECK(sol(r * p) == s);
        }
    }
    const verification_report rep = verify(sol, prob);
    for (const auto &n : rep.nodes) {
        for (double g : n.gaps) {
            CHECK(g == 0.0);
        }
        CHECK(n.beta == quaternion{});
    }

    // Values that differ by less than the rank tolerance but more than 1e-10.
    prob.values[1] = quaternion{0.0, 0.0, 0.6, 0.8 + 5e-9};
    prob.values[1] = prob.values[1] / prob.values[1].norm();
    prob.options.tol = 1e-8;
    try {
        (void)solve(prob);
        FAIL("expected inconsistent data");
    } catch (const error &e) {
        CHECK(e.code() == error_code::inconsistent_data);
    }
}

TEST_CASE("Blaschke recovery")
{
    test::rng_t rng(42);
    const quaternion a = 0.9 * quaternion{0.3, 0.0, 0.4, 0.0};
    const blaschke_factor b(a);
    const slice_function bf = [&](const quaternion &p) { return b(p); };
    for (std::size_t n : {2, 3}) {
        const interpolation_problem prob = test::blaschke_problem(b, test::separated_nodes(rng, n));
        const schur_solution sol = solve(prob);
        CHECK(sol.origin() == provenance::degenerate);
        CHECK(sol.rank == 1);
        CHECK(max_interior_distance(sol.as_function(), bf, rng, 50) <= 1e-7);
        CHECK(sample_boundary_deviation(sol.as_function(), 100, 7) <= 1e-6);
        CHECK(sol(a).norm() < 1e-7);
    }

    SUBCASE("forward generation by radial difference quotients")
    {
        interpolation_problem prob;
        for (const auto &p : test::separated_nodes(rng, 2)) {
            prob.nodes.push_back(p);
            prob.values.push_back(b(p));
            prob.kappas.push_back(kernel_estimate(bf, p));
        }
        // The estimates carry an O(1e-8) error, so rank is decided at that scale.
        prob.options.tol = 1e-6;
        const schur_solution sol = solve(prob);
        CHECK(sol.rank == 1);
        CHECK(max_interior_distance(sol.as_function(), bf, rng, 50) <= 1e-7);
    }
}

TEST_CASE("degenerate uniqueness")
{
    test::rng_t rng(43);
    const blaschke_factor b(test::random_in_ball(rng, 0.7));
    const interpolation_problem prob = test::blaschke_problem(b, test::separated_nodes(rng, 3));
    // Theta from each single node; e forced by each of the other two nodes.
    std::vector<schur_solution> sols;
    for (std::size_t base = 0; base < 3; ++base) {
        interpolation_problem sub;
        sub.nodes = {prob.nodes[base]};
        sub.values = {prob.values[base]};
        sub.kappas = {prob.kappas[base]};
        auto theta = std::make_shared<const theta_function>(build_system(sub));
        for (std::size_t v = 0; v < 3; ++v) {
            if (v == base) {
                continue;
            }
            const quaternion e = parameter_from_node(*theta, prob.nodes[v], prob.values[v]);
            CHECK(std::abs(e.norm() - 1.0) < 1e-8);
            sols.push_back(schur_solution::from_lft(theta, e / e.norm(), 64, provenance::degenerate));
        }
    }
    for (std::size_t k = 1; k < sols.size(); ++k) {
        CHECK(max_interior_distance(sols[0].as_function(), sols[k].as_function(), rng, 50) <= 1e-7);
    }
}

TEST_CASE("degree two Blaschke product")
{
    test::rng_t rng(44);
    const blaschke_factor b1(quaternion{0.2, 0.3, 0.0, 0.1});
    const blaschke_factor b2(quaternion{-0.1, 0.0, 0.4, -0.2});
    const slice_function f1 = [&](const quaternion &p) { return b1(p); };
    const slice_function f2 = [&](const quaternion &p) { return b2(p); };
    const slice_function product = [&](const quaternion &p) { return star_eval(f1, f2, p); };
    interpolation_problem prob;
    for (const auto &p : test::separated_nodes(rng, 4)) {
        prob.nodes.push_back(p);
        prob.values.push_back(product(p));
        prob.kappas.push_back(kernel_estimate(product, p));
    }
    prob.options.tol = 1e-6;
    const schur_solution sol = solve(prob);
    CHECK(sol.rank == 2);
    CHECK(sol.origin() == provenance::degenerate);
    // Estimated kappas: the O(1e-8) data error is amplified by the conditioning of the 2x2 minor.
    CHECK(max_interior_distance(sol.as_function(), product, rng, 50) <= 1e-6);
}

TEST_CASE("series quotient and helpers")
{
    const power_series num({quaternion{1.0}, quaternion::i()});
    CHECK_THROWS_AS(series_quotient(num, power_series({quaternion{}, quaternion{1.0}})), error);
    const power_series den({quaternion{2.0}, quaternion::j()});
    const power_series q = series_quotient(num, den.truncated(10));
    const power_series back = star_mul(q, den.truncated(10));
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(distance(back.coeff(n), num.coeff(n)) < 1e-14);
    }

    qmatrix p = qmatrix::diagonal({quaternion{1.0}, quaternion{3.0}, quaternion{0.0}});
    const auto order = pivoted_cholesky_order(p);
    CHECK(order[0] == 1);
    CHECK(order[1] == 0);

    CHECK(provenance_from_string("rank-zero") == provenance::rank_zero);
    CHECK(std::string(to_string(provenance::degenerate)) == "degenerate");
    CHECK_THROWS_AS(provenance_from_string("other"), error);

    // Sampling is reproducible.
    const slice_function f = [](const quaternion &x) { return x * x; };
    CHECK(sample_max_modulus(f, 500, 0.99, 3) == sample_max_modulus(f, 500, 0.99, 3));
    CHECK(sample_max_modulus(f, 2000, 0.99, 3) <= 0.99 * 0.99);
}
