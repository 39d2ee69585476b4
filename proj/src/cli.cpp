#include <qnp/cli.hpp>
#include <qnp/solution.hpp>
#include <qnp/verify.hpp>

namespace qnp
{

int exit_code_for(error_code code) noexcept
{
    switch (code) {
        case error_code::parse_error:
        case error_code::invalid_problem:
        case error_code::domain_error:
        case error_code::degenerate_input:
            return exit_parse;
        case error_code::sphere_collision:
            return exit_collision;
        case error_code::infeasible:
        case error_code::not_hermitian:
            return exit_infeasible;
        default:
            return exit_inconsistent;
    }
}

namespace
{

command_result rejected(const error &e)
{
    command_result out;
    out.exit_code = exit_code_for(e.code());
    out.message = std::string(to_string(e.code())) + ": " + e.what();
    return out;
}

const char *solved_status(const schur_solution &sol, verification_status v)
{
    switch (v) {
        case verification_status::verified:
            return sol.origin() == provenance::nondegenerate || sol.origin() == provenance::external
                       ? "solved"
                       : "degenerate-solved";
        case verification_status::warnings:
            return "solved-with-warnings";
        case verification_status::failed:
            break;
    }
    return "inconsistent";
}

} // namespace

command_result cmd_check(const interpolation_problem &prob)
{
    try {
        const pick_system sys = build_system(prob);
        command_result out;
        out.report["pick"] = pick_section(sys, prob.options.tol);
        const bool psd = out.report["pick"]["psd"].get<bool>();
        out.report["status"] = psd ? "feasible" : "infeasible";
        out.exit_code = psd ? exit_ok : exit_infeasible;
        return out;
    } catch (const error &e) {
        return rejected(e);
    }
}

command_result cmd_solve(const interpolation_problem &prob)
{
    pick_system sys;
    try {
        sys = build_system(prob);
    } catch (const error &e) {
        return rejected(e);
    }

    command_result out;
    out.report["pick"] = pick_section(sys, prob.options.tol);
    out.report["theta"] = nullptr;
    out.report["solution"] = nullptr;
    out.report["verification"] = nullptr;
    try {
        const schur_solution sol = solve(prob);
        if (sol.theta()) {
            out.report["theta"] = theta_section(*sol.theta(), prob.options.truncation);
        }
        out.report["solution"] = to_json(sol);
        const verification_report rep = verify(sol, prob);
        out.report["verification"] = to_json(rep);
        out.report["status"] = solved_status(sol, rep.status);
        out.exit_code = rep.status == verification_status::failed ? exit_inconsistent : exit_ok;
    } catch (const error &e) {
        const int code = exit_code_for(e.code());
        if (code == exit_parse || code == exit_collision) {
            return rejected(e);
        }
        out.exit_code = code;
        out.report["status"] = code == exit_infeasible ? "infeasible" : "inconsistent";
        out.report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
        out.message = std::string(to_string(e.code())) + ": " + e.what();
    }
    return out;
}

command_result cmd_verify(const interpolation_problem &prob, const json &solution)
{
    try {
        prob.validate();
        const schur_solution sol = solution_from_json(solution, prob);
        const verification_report rep = verify(sol, prob);
        command_result out;
        out.report["solution"] = {{"provenance", to_string(sol.origin())},
                                  {"closed_form", sol.has_closed_form()},
                                  {"coeff_count", sol.coeffs().coeffs.size()}};
        out.report["verification"] = to_json(rep);
        out.report["status"] = solved_status(sol, rep.status);
        out.exit_code = rep.status == verification_status::failed ? exit_inconsistent : exit_ok;
        return out;
    } catch (const error &e) {
        return rejected(e);
    }
}

} // namespace qnp
