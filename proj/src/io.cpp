#include <cmath>
#include <fstream>
#include <sstream>

#include <qnp/error.hpp>
#include <qnp/io.hpp>

namespace qnp
{

namespace
{

[[noreturn]] void parse_fail(const std::string &what)
{
    throw error(error_code::parse_error, what);
}

double number(const json &j, const char *what)
{
    if (!j.is_number()) {
        parse_fail(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

std::vector<quaternion> quaternion_list(const json &j, const char *what)
{
    if (!j.is_array()) {
        parse_fail(std::string(what) + ": expected an array of quaternions");
    }
    std::vector<quaternion> out;
    out.reserve(j.size());
    for (const auto &q : j) {
        out.push_back(quaternion_from_json(q));
    }
    return out;
}

json parameter_to_json(const schur_parameter &e)
{
    if (const auto *c = std::get_if<quaternion>(&e)) {
        return {{"type", "constant"}, {"value", to_json(*c)}};
    }
    return {{"type", "series"}, {"coeffs", to_json(std::get<power_series>(e))["coeffs"]}};
}

schur_parameter parameter_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        parse_fail("parameter: expected an object with a string \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "constant") {
        if (!j.contains("value")) {
            parse_fail("parameter: constant needs \"value\"");
        }
        return quaternion_from_json(j["value"]);
    }
    if (type == "series") {
        if (!j.contains("coeffs")) {
            parse_fail("parameter: series needs \"coeffs\"");
        }
        return power_series(quaternion_list(j["coeffs"], "parameter.coeffs"));
    }
    parse_fail("parameter: unknown type \"" + type + "\"");
}

} // namespace

json to_json(const quaternion &q)
{
    return json::array({q.w, q.x, q.y, q.z});
}

quaternion quaternion_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 4) {
        parse_fail("quaternion: expected [w, x, y, z]");
    }
    return {number(j[0], "quaternion"), number(j[1], "quaternion"), number(j[2], "quaternion"),
            number(j[3], "quaternion")};
}

json to_json(const power_series &f)
{
    json c = json::array();
    for (const auto &a : f.coeffs) {
        c.push_back(to_json(a));
    }
    return {{"coeffs", c}};
}

power_series series_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("coeffs")) {
        parse_fail("series: expected {\"coeffs\": [...]}");
    }
    return power_series(quaternion_list(j["coeffs"], "coeffs"));
}

json to_json(const qmatrix &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

json to_json(const interpolation_problem &prob)
{
    json nodes = json::array();
    json values = json::array();
    for (const auto &p : prob.nodes) {
        nodes.push_back(to_json(p));
    }
    for (const auto &s : prob.values) {
        values.push_back(to_json(s));
    }
    return {{"nodes", nodes},
            {"values", values},
            {"kappas", prob.kappas},
            {"parameter", parameter_to_json(prob.parameter)},
            {"options",
             {{"truncation", prob.options.truncation},
              {"tol", prob.options.tol},
              {"radius_grid", prob.options.radius_grid},
              {"seed", prob.options.seed}}}};
}

interpolation_problem problem_from_json(const json &j)
{
    if (!j.is_object()) {
        parse_fail("problem: expected a JSON object");
    }
    for (const char *key : {"nodes", "values", "kappas"}) {
        if (!j.contains(key)) {
            parse_fail(std::string("problem: missing \"") + key + "\"");
        }
    }
    interpolation_problem prob;
    prob.nodes = quaternion_list(j["nodes"], "nodes");
    prob.values = quaternion_list(j["values"], "values");
    if (!j["kappas"].is_array()) {
        parse_fail("kappas: expected an array of numbers");
    }
    for (const auto &k : j["kappas"]) {
        prob.kappas.push_back(number(k, "kappas"));
    }
    if (j.contains("parameter")) {
        prob.parameter = parameter_from_json(j["parameter"]);
    }
    if (j.contains("options")) {
        const json &o = j["options"];
        if (!o.is_object()) {
            parse_fail("options: expected an object");
        }
        if (o.contains("truncation")) {
            if (!o["truncation"].is_number_unsigned()) {
                parse_fail("options.truncation: expected a non-negative integer");
            }
            prob.options.truncation = o["truncation"].get<std::size_t>();
        }
        if (o.contains("tol")) {
            prob.options.tol = number(o["tol"], "options.tol");
        }
        if (o.contains("radius_grid")) {
            if (!o["radius_grid"].is_array()) {
                parse_fail("options.radius_grid: expected an array of numbers");
            }
            prob.options.radius_grid.clear();
            for (const auto &r : o["radius_grid"]) {
                prob.options.radius_grid.push_back(number(r, "options.radius_grid"));
            }
        }
        if (o.contains("seed")) {
            if (!o["seed"].is_number_unsigned()) {
                parse_fail("options.seed: expected a non-negative integer");
            }
            prob.options.seed = o["seed"].get<std::uint64_t>();
        }
    }
    return prob;
}

std::string dump_canonical(const json &j)
{
    // nlohmann::json objects are std::map backed, so keys come out sorted.
    return j.dump(2) + "\n";
}

json parse_text(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        parse_fail("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

json pick_section(const pick_system &sys, double tol)
{
    const auto eigs = hermitian_eigs(sys.P, tol);
    return {{"matrix", to_json(sys.P)},
            {"eigenvalues", eigs},
            {"rank", rank(sys.P, tol)},
            {"psd", eigs.empty() || eigs.front() >= -tol}};
}

json theta_section(const theta_function &theta, std::size_t truncation)
{
    const qmatrix at_one = theta(quaternion{1.0});
    return {{"coeff_count", truncation + 1},
            {"theta_at_1_residual", max_abs_diff(at_one, qmatrix::identity(2))},
            {"nodes", theta.system().size()}};
}

json to_json(const schur_solution &sol)
{
    json out = {{"coeffs", to_json(sol.coeffs())["coeffs"]},
                {"provenance", to_string(sol.origin())},
                {"rank", sol.rank},
                {"nodes_used", sol.nodes_used},
                {"schur_max_modulus", sol.schur_max_modulus},
                {"boundary_modulus_deviation", sol.boundary_modulus_deviation}};
    out["parameter"] = sol.parameter() ? parameter_to_json(*sol.parameter()) : json(nullptr);
    return out;
}

json to_json(const verification_report &rep)
{
    json nodes = json::array();
    for (const auto &n : rep.nodes) {
        json values = json::array();
        json quotients = json::array();
        for (const auto &v : n.values) {
            values.push_back(to_json(v));
        }
        for (const auto &q : n.quotients) {
            quotients.push_back(to_json(q));
        }
        nodes.push_back({{"index", n.index},
                         {"radii", n.grid},
                         {"values", values},
                         {"gaps", n.gaps},
                         {"quotients", quotients},
                         {"limit", to_json(n.limit)},
                         {"limit_error", n.limit_error},
                         {"beta", to_json(n.beta)},
                         {"beta_grid", to_json(n.beta_grid)},
                         {"beta_source", n.beta_source},
                         {"beta_real", n.beta_real},
                         {"kappa_margin", n.kappa_margin},
                         {"bastille", {{"lhs", n.bastille_lhs}, {"rhs", n.bastille_rhs}, {"margin", n.bastille_margin}}},
                         {"gaps_decreasing", n.gaps_decreasing},
                         {"converged", n.converged},
                         {"bounds_ok", n.bounds_ok},
                         {"mode", n.mode}});
    }
    return {{"status", to_string(rep.status)}, {"nodes", nodes}};
}

schur_solution solution_from_json(const json &j, const interpolation_problem &prob)
{
    if (!j.is_object() || !j.contains("coeffs")) {
        parse_fail("solution: expected an object with \"coeffs\"");
    }
    power_series coeffs(quaternion_list(j["coeffs"], "solution.coeffs"));
    if (coeffs.coeffs.empty()) {
        parse_fail("solution: empty coefficient list");
    }
    provenance prov = provenance::external;
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string()) {
            parse_fail("solution.provenance: expected a string");
        }
        try {
            prov = provenance_from_string(j["provenance"].get<std::string>());
        } catch (const error &) {
            parse_fail("solution.provenance: unknown value");
        }
    }

    std::vector<std::size_t> used;
    if (j.contains("nodes_used")) {
        if (!j["nodes_used"].is_array()) {
            parse_fail("solution.nodes_used: expected an array of indices");
        }
        for (const auto &u : j["nodes_used"]) {
            if (!u.is_number_unsigned()) {
                parse_fail("solution.nodes_used: expected non-negative integers");
            }
            used.push_back(u.get<std::size_t>());
        }
    }
    std::size_t rank_value = 0;
    if (j.contains("rank") && j["rank"].is_number_unsigned()) {
        rank_value = j["rank"].get<std::size_t>();
    }

    const auto fallback = [&] {
        schur_solution s = schur_solution::from_series(coeffs);
        s.rank = rank_value;
        s.nodes_used = used;
        return s;
    };
    // A record cut to another order than the problem asks for is a different candidate: evaluate its series.
    if (prov == provenance::external || !j.contains("parameter") || j["parameter"].is_null()
        || coeffs.truncation() != prob.options.truncation) {
        return fallback();
    }
    const schur_parameter e = parameter_from_json(j["parameter"]);
    const std::size_t truncation = coeffs.truncation();

    std::optional<schur_solution> rebuilt;
    try {
        if (prov == provenance::rank_zero) {
            const auto *c = std::get_if<quaternion>(&e);
            if (c == nullptr) {
                return fallback();
            }
            rebuilt = schur_solution::constant(*c, truncation);
        } else {
            interpolation_problem sub;
            sub.options = prob.options;
            if (prov == provenance::nondegenerate) {
                sub = prob;
            } else {
                for (std::size_t u : used) {
                    if (u >= prob.size()) {
                        return fallback();
                    }
                    sub.nodes.push_back(prob.nodes[u]);
                    sub.values.push_back(prob.values[u]);
                    sub.kappas.push_back(prob.kappas[u]);
                }
            }
            auto theta = std::make_shared<const theta_function>(build_system(sub));
            rebuilt = schur_solution::from_lft(std::move(theta), e, truncation, prov);
        }
    } catch (const error &) {
        return fallback();
    }

    // The record must describe the closed form it claims; otherwise only its coefficients are trusted.
    const double scale = std::max(1.0, coeffs.max_abs_coeff());
    for (std::size_t n = 0; n <= truncation; ++n) {
        if (distance(rebuilt->coeffs().coeff(n), coeffs.coeff(n)) > 1e-8 * scale) {
            return fallback();
        }
    }
    rebuilt->rank = rank_value;
    rebuilt->nodes_used = used;
    return *rebuilt;
}

} // namespace qnp
