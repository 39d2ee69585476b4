#ifndef QNP_CLI_HPP
#define QNP_CLI_HPP

#include <string>

#include <qnp/error.hpp>
#include <qnp/io.hpp>

namespace qnp
{

// Process exit statuses of the qnp tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_inconsistent = 3;
inline constexpr int exit_parse = 64;
inline constexpr int exit_collision = 65;

int exit_code_for(error_code code) noexcept;

struct command_result {
    int exit_code = exit_ok;
    json report; // null when the input was rejected before any report could be built
    std::string message;
};

command_result cmd_check(const interpolation_problem &prob);
command_result cmd_solve(const interpolation_problem &prob);
command_result cmd_verify(const interpolation_problem &prob, const json &solution);

} // namespace qnp

#endif
