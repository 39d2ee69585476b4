#ifndef QNP_IO_HPP
#define QNP_IO_HPP

#include <string>

#include <json.hpp>

#include <qnp/pick.hpp>
#include <qnp/problem.hpp>
#include <qnp/solution.hpp>
#include <qnp/verify.hpp>

namespace qnp
{

using json = nlohmann::json;

json to_json(const quaternion &q);
quaternion quaternion_from_json(const json &j);

json to_json(const power_series &f); // {"coeffs": [[w,x,y,z], ...]}
power_series series_from_json(const json &j);

json to_json(const qmatrix &m);

json to_json(const interpolation_problem &prob);
/// Throws error(parse_error) on malformed input; the problem is not validated here.
interpolation_problem problem_from_json(const json &j);

/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string dump_canonical(const json &j);
json parse_text(const std::string &text);
json read_json_file(const std::string &path);

json pick_section(const pick_system &sys, double tol);
json theta_section(const theta_function &theta, std::size_t truncation);
json to_json(const schur_solution &sol);
json to_json(const verification_report &rep);

/// Rebuilds a solution record. Closed forms are restored when the record is cut at the problem truncation and its
/// provenance and parameter reproduce its coefficients on this problem; otherwise the coefficients are used as an
/// external series candidate.
schur_solution solution_from_json(const json &j, const interpolation_problem &prob);

} // namespace qnp

#endif
