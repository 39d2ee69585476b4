#include <limits>

#include <doctest.h>

#include <qnp/error.hpp>
#include <qnp/pick.hpp>
#include <qnp/solution.hpp>

#include "support.hpp"

using namespace qnp;

namespace
{

interpolation_problem two_nodes()
{
    interpolation_problem prob;
    prob.nodes = {quaternion::i(), quaternion{std::cos(1.0), 0.0, 0.0, std::sin(1.0)}};
    prob.values = {quaternion{1.0}, quaternion::j()};
    prob.kappas = {0.0, 0.0};
    const double off = build_system(prob).P(0, 1).norm();
    prob.kappas = {off + 0.5, off + 0.5};
    return prob;
}

error_code code_of(const interpolation_problem &prob)
{
    try {
        prob.validate();
    } catch (const error &e) {
        return e.code();
    }
    return error_code::parse_error; // sentinel: accepted
}

} // namespace

TEST_CASE("problem validation")
{
    const interpolation_problem ok = two_nodes();
    CHECK_NOTHROW(ok.validate());

    auto bad = ok;
    bad.nodes[0] = quaternion{0.0, 1.1, 0.0, 0.0};
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.nodes[0] = quaternion{1.0};
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.values[1] = quaternion{0.5};
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.kappas[0] = -1e-3;
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.kappas.pop_back();
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.kappas[1] = std::numeric_limits<double>::quiet_NaN();
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.parameter = quaternion{0.5};
    CHECK(code_of(bad) == error_code::invalid_problem);
    bad = ok;
    bad.nodes[1] = quaternion::k(); // same sphere as i
    CHECK(code_of(bad) == error_code::sphere_collision);
    CHECK_THROWS_AS(build_system(bad), error);
}

TEST_CASE("Pick system construction")
{
    SUBCASE("single node")
    {
        interpolation_problem prob;
        prob.nodes = {quaternion::j()};
        prob.values = {quaternion::k()};
        prob.kappas = {0.7};
        const pick_system sys = build_system(prob);
        CHECK(sys.P.rows() == 1);
        CHECK(sys.P(0, 0) == quaternion{0.7});
    }
    SUBCASE("two nodes: entry equation")
    {
        const interpolation_problem prob = two_nodes();
        const pick_system sys = build_system(prob);
        const quaternion p1 = prob.nodes[0], p2 = prob.nodes[1];
        const quaternion x = sys.P(0, 1);
        CHECK(distance(x - p1 * x * p2.conj(), 1.0 - prob.values[0] * prob.values[1].conj()) < 1e-12);
        CHECK(sys.P(0, 0) == quaternion{prob.kappas[0]});
        CHECK(is_hermitian(sys.P));
        CHECK(companion_value(p1, p2) > 1e-8);
    }
    SUBCASE("Stein identity and structure")
    {
        test::rng_t rng(30);
        for (int n = 0; n < 30; ++n) {
            const interpolation_problem prob = test::random_problem(rng, 2 + static_cast<std::size_t>(n % 5));
            const pick_system sys = build_system(prob);
            CHECK(sys.stein_residual().max_abs() < 1e-10);
            for (std::size_t u = 0; u < sys.size(); ++u) {
                CHECK(sys.A(u, u) == prob.nodes[u].conj());
                CHECK(sys.C(0, u) == quaternion{1.0});
                CHECK(sys.C(1, u) == prob.values[u].conj());
                CHECK(s_spectrum_member(sys.A, prob.nodes[u].conj()));
            }
            CHECK(sys.J(0, 0) == quaternion{1.0});
            CHECK(sys.J(1, 1) == quaternion{-1.0});
        }
    }
}

TEST_CASE("necessity check")
{
    test::rng_t rng(31);
    SUBCASE("identity-like P")
    {
        interpolation_problem prob = two_nodes();
        prob.values = {quaternion::j(), quaternion::j()};
        prob.kappas = {1.0, 1.0};
        const necessity_report rep = necessity_check(prob);
        CHECK(rep.psd);
        CHECK(rep.rank == 2);
        CHECK(rep.eigenvalues == std::vector<double>{1.0, 1.0});
    }
    SUBCASE("zero kappas with distinct values")
    {
        interpolation_problem prob = two_nodes();
        prob.kappas = {0.0, 0.0};
        const necessity_report rep = necessity_check(prob);
        CHECK_FALSE(rep.psd);
        // Trace zero, nonzero off-diagonal: eigenvalues are +-|P12|.
        const double off = build_system(prob).P(0, 1).norm();
        CHECK(rep.eigenvalues.front() == doctest::Approx(-off).epsilon(1e-12));
    }
    SUBCASE("forward-generated Blaschke data")
    {
        const blaschke_factor b(quaternion{0.3, 0.0, 0.4, 0.0});
        const interpolation_problem prob = test::blaschke_problem(b, test::separated_nodes(rng, 3));
        const necessity_report rep = necessity_check(prob);
        CHECK(rep.psd);
        CHECK(rep.rank == 1);
    }
    SUBCASE("P(r) of a solution converges to P")
    {
        // The distance behaves like c (1 - r); c grows with the kappas, so only the linear rate is checked.
        const interpolation_problem prob = two_nodes();
        const schur_solution sol = solve(prob);
        const slice_function s = sol.as_function();
        const necessity_report rep = necessity_check(prob, &s, {0.99, 0.999, 0.9999});
        REQUIRE(rep.off_diagonal_distance.size() == 3);
        CHECK(rep.off_diagonal_distance[1] <= 0.15 * rep.off_diagonal_distance[0]);
        CHECK(rep.off_diagonal_distance[2] <= 0.15 * rep.off_diagonal_distance[1]);
        CHECK(rep.off_diagonal_distance[2] <= 1e-2);
        for (double m : rep.min_eigenvalue_at_radius) {
            CHECK(m >= -1e-8);
        }
        for (int n = 0; n < 5; ++n) {
            const interpolation_problem rp = test::random_problem(rng, 2 + static_cast<std::size_t>(n % 3));
            const schur_solution rs = solve(rp);
            const slice_function f = rs.as_function();
            const necessity_report rr = necessity_check(rp, &f);
            CHECK(rr.off_diagonal_distance[1] < rr.off_diagonal_distance[0]);
            CHECK(rr.off_diagonal_distance[2] < rr.off_diagonal_distance[1]);
        }
    }
}

TEST_CASE("Theta")
{
    test::rng_t rng(32);
    for (int n = 0; n < 10; ++n) {
        const interpolation_problem prob = test::random_problem(rng, 1 + static_cast<std::size_t>(n % 4));
        const pick_system sys = build_system(prob);
        const theta_function theta(sys);
        CHECK(max_abs_diff(theta(quaternion{1.0}), qmatrix::identity(2)) < 1e-10);

        // J-unitary on the real boundary point -1.
        const qmatrix tm = theta(quaternion{-1.0});
        CHECK(max_abs_diff(tm * sys.J * tm.adjoint(), sys.J) < 1e-8);

        const auto coeffs = theta.coefficients(600);
        CHECK(max_abs_diff(coeffs[0], qmatrix::identity(2) - sys.C * theta.weight()) < 1e-15);
        for (const quaternion &p : {quaternion{0.0, 0.0, 0.5, 0.0}, test::random_in_ball(rng, 0.9)}) {
            CHECK(max_abs_diff(theta_function::eval_coefficients(coeffs, p), theta(p)) < 1e-9);
        }
        const power_series t01 = theta.entry_series(0, 1, 600);
        const quaternion p = test::random_in_ball(rng, 0.8);
        CHECK(distance(eval(t01, p), theta(p)(0, 1)) < 1e-9);

        // Kernel identity F(p) P^{-1} F(q)* = sum_t p^t (J - Theta(p) J Theta(q)*) conj(q)^t.
        for (int k = 0; k < 20; ++k) {
            const quaternion a = test::random_in_ball(rng, 0.9);
            const quaternion b = test::random_in_ball(rng, 0.9);
            const qmatrix x = sys.J - theta(a) * sys.J * theta(b).adjoint();
            qmatrix truncated(2, 2);
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    truncated(i, j) = test::truncated_geometric_sum(a, x(i, j), b.conj(), 2000);
                }
            }
            CHECK(max_abs_diff(theta.model_kernel(a, b), truncated) < 1e-8);
            CHECK(max_abs_diff(theta.kernel(a, b), truncated) < 1e-8);
        }
    }
}

TEST_CASE("Theta needs an invertible P")
{
    const blaschke_factor b(quaternion{0.0, 0.5, 0.0, 0.0});
    const interpolation_problem prob
        = test::blaschke_problem(b, {quaternion::j(), quaternion{std::cos(2.0), 0.0, 0.0, std::sin(2.0)}});
    CHECK_THROWS_AS(theta_function(build_system(prob)), error);
}
