#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <qnp/cli.hpp>
#include <qnp/error.hpp>
#include <qnp/io.hpp>

using namespace qnp;

namespace
{

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::filesystem::path fixtures{QNP_FIXTURES};

error_code code_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return error_code::domain_error;
}

} // namespace

TEST_CASE("fixture round trip")
{
    for (const char *name : {"n1.json", "n2.json", "n2_tight.json", "rank0.json", "kappa0.json", "blaschke.json",
                             "degenerate_inconsistent.json", "collision.json"}) {
        CAPTURE(name);
        const std::string text = slurp(fixtures / name);
        const interpolation_problem prob = problem_from_json(parse_text(text));
        CHECK(dump_canonical(to_json(prob)) == text);
    }
}

TEST_CASE("quaternions survive serialization exactly")
{
    const quaternion q{0.1, -1.0 / 3.0, 2.0e-300, 12345.678901234567};
    const quaternion back = quaternion_from_json(parse_text(to_json(q).dump()));
    CHECK(back == q);
}

TEST_CASE("parse errors")
{
    CHECK(code_of([] { (void)read_json_file((fixtures / "malformed.json").string()); }) == error_code::parse_error);
    CHECK(code_of([] { (void)read_json_file("/nonexistent/problem.json"); }) == error_code::parse_error);
    CHECK(code_of([] { (void)problem_from_json(parse_text(R"({"nodes": []})")); }) == error_code::parse_error);
    CHECK(code_of([] {
              (void)problem_from_json(parse_text(R"({"nodes": [[0,1,0]], "values": [[1,0,0,0]], "kappas": [1]})"));
          })
          == error_code::parse_error);
    CHECK(code_of([] {
              (void)problem_from_json(parse_text(
                  R"({"nodes": [[0,1,0,0]], "values": [[1,0,0,0]], "kappas": [1], "options": {"truncation": -3}})"));
          })
          == error_code::parse_error);
    CHECK(code_of([] {
              (void)problem_from_json(parse_text(
                  R"({"nodes": [[0,1,0,0]], "values": [[1,0,0,0]], "kappas": [1], "parameter": {"type": "matrix"}})"));
          })
          == error_code::parse_error);
}

TEST_CASE("solve reports are deterministic and reload")
{
    const interpolation_problem prob = problem_from_json(read_json_file((fixtures / "n2.json").string()));
    const command_result a = cmd_solve(prob);
    const command_result b = cmd_solve(prob);
    CHECK(a.exit_code == exit_ok);
    CHECK(dump_canonical(a.report) == dump_canonical(b.report));

    // Reload through text and verify: the closed form is restored.
    const json reloaded = parse_text(dump_canonical(a.report));
    const command_result v = cmd_verify(prob, reloaded["solution"]);
    CHECK(v.exit_code == exit_ok);
    CHECK(v.report["solution"]["closed_form"] == true);
    CHECK(v.report["verification"]["status"] == "verified");

    // A tampered record falls back to its coefficients.
    json tampered = reloaded["solution"];
    tampered["coeffs"][3][1] = tampered["coeffs"][3][1].get<double>() + 1e-3;
    const command_result t = cmd_verify(prob, tampered);
    CHECK(t.report["solution"]["closed_form"] == false);
}

TEST_CASE("verify-only reports")
{
    const interpolation_problem prob = problem_from_json(read_json_file((fixtures / "n2.json").string()));
    const command_result solved = cmd_solve(prob);
    const json record = parse_text(dump_canonical(solved.report))["solution"];
    CHECK(dump_canonical(cmd_verify(prob, record).report["verification"])
          == dump_canonical(solved.report["verification"]));

    // Negated candidate: the gaps do not shrink.
    json negated = record;
    for (auto &c : negated["coeffs"]) {
        for (auto &x : c) {
            x = -x.get<double>();
        }
    }
    const command_result neg = cmd_verify(prob, negated);
    CHECK(neg.exit_code == exit_inconsistent);
    CHECK(neg.report["status"] == "inconsistent");

    // Truncated candidates: bounded gaps; the tighter problem no longer verifies outright.
    for (const char *name : {"n2.json", "n2_tight.json"}) {
        CAPTURE(name);
        const interpolation_problem p = problem_from_json(read_json_file((fixtures / name).string()));
        json cut = cmd_solve(p).report["solution"];
        cut["coeffs"].erase(cut["coeffs"].begin() + 65, cut["coeffs"].end());
        const command_result r = cmd_verify(p, cut);
        CHECK(r.exit_code == exit_ok);
        CHECK(r.report["solution"]["closed_form"] == false);
        for (const auto &n : r.report["verification"]["nodes"]) {
            CHECK(n["gaps"].back().get<double>() <= 1e-2);
        }
        if (std::string(name) == "n2_tight.json") {
            CHECK(r.report["status"] == "solved-with-warnings");
        }
    }
}
