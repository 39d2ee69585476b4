#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <qnp/cli.hpp>

namespace
{

struct overrides {
    std::optional<std::size_t> truncation;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::string radius_grid;
};

std::vector<double> parse_grid(const std::string &text)
{
    std::vector<double> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double r = 0.0;
        try {
            r = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !(r > 0.0 && r < 1.0)) {
            throw qnp::error(qnp::error_code::parse_error, "--radius-grid: bad radius \"" + item + "\"");
        }
        grid.push_back(r);
    }
    if (grid.size() < 2) {
        throw qnp::error(qnp::error_code::parse_error, "--radius-grid needs at least two radii");
    }
    return grid;
}

qnp::interpolation_problem load_problem(const std::string &path, const overrides &o)
{
    qnp::interpolation_problem prob = qnp::problem_from_json(qnp::read_json_file(path));
    if (o.truncation) {
        prob.options.truncation = *o.truncation;
    }
    if (o.tol) {
        prob.options.tol = *o.tol;
    }
    if (o.seed) {
        prob.options.seed = *o.seed;
    }
    if (!o.radius_grid.empty()) {
        prob.options.radius_grid = parse_grid(o.radius_grid);
    }
    return prob;
}

int emit(const qnp::command_result &res, const std::string &out_path)
{
    if (!res.message.empty()) {
        std::cerr << "qnp: " << res.message << "\n";
    }
    if (res.report.is_null()) {
        return res.exit_code;
    }
    const std::string text = qnp::dump_canonical(res.report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "qnp: cannot write " << out_path << "\n";
            return qnp::exit_parse;
        }
        out << text;
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Boundary Nevanlinna-Pick interpolation for quaternionic Schur functions"};
    app.require_subcommand(1);

    overrides o;
    std::string out_path;
    app.add_option("--truncation", o.truncation, "Series truncation order");
    app.add_option("--tol", o.tol, "Numerical tolerance");
    app.add_option("--seed", o.seed, "Sampling seed");
    app.add_option("--radius-grid", o.radius_grid, "Comma-separated radii of the verification sweep");
    app.add_option("-o,--output", out_path, "Write the JSON report here instead of stdout");

    std::string problem_path;
    std::string solution_path;
    auto *check = app.add_subcommand("check", "Build the Pick matrix and report its spectrum");
    check->add_option("file", problem_path)->required();
    auto *solve = app.add_subcommand("solve", "Solve and verify an interpolation problem");
    solve->add_option("file", problem_path)->required();
    auto *verify = app.add_subcommand("verify", "Verify a candidate solution against a problem");
    verify->add_option("problem", problem_path)->required();
    verify->add_option("solution", solution_path)->required();
    for (auto *sub : {check, solve, verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? qnp::exit_ok : qnp::exit_parse;
    }

    try {
        const qnp::interpolation_problem prob = load_problem(problem_path, o);
        if (check->parsed()) {
            return emit(qnp::cmd_check(prob), out_path);
        }
        if (solve->parsed()) {
            return emit(qnp::cmd_solve(prob), out_path);
        }
        const qnp::json candidate = qnp::read_json_file(solution_path);
        // A full solve report is accepted as well as a bare solution record.
        const qnp::json &record = candidate.contains("solution") && candidate["solution"].is_object()
                                      ? candidate["solution"]
                                      : candidate;
        return emit(qnp::cmd_verify(prob, record), out_path);
    } catch (const qnp::error &e) {
        std::cerr << "qnp: " << qnp::to_string(e.code()) << ": " << e.what() << "\n";
        return qnp::exit_code_for(e.code());
    }
}
