#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <qnp/cli.hpp>
#include <qnp/error.hpp>
#include <qnp/io.hpp>
#include <qnp/solution.hpp>

namespace py = pybind11;
using namespace qnp;

namespace
{

interpolation_problem problem_from_text(const std::string &text)
{
    return problem_from_json(parse_text(text));
}

py::tuple result_tuple(const command_result &r)
{
    return py::make_tuple(r.exit_code, dump_canonical(r.report), r.message);
}

} // namespace

PYBIND11_MODULE(_qnp, m)
{
    m.doc() = "Quaternionic boundary Nevanlinna-Pick interpolation";

    static py::exception<error> qnp_error(m, "QnpError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const error &e) {
            // args = (code, message)
            PyErr_SetObject(qnp_error.ptr(), py::make_tuple(to_string(e.code()), e.what()).ptr());
        }
    });

    py::class_<quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x") = 0.0, py::arg("y") = 0.0,
             py::arg("z") = 0.0)
        .def_readwrite("w", &quaternion::w)
        .def_readwrite("x", &quaternion::x)
        .def_readwrite("y", &quaternion::y)
        .def_readwrite("z", &quaternion::z)
        .def("conj", &quaternion::conj)
        .def("norm", &quaternion::norm)
        .def("inverse", &quaternion::inverse)
        .def("to_tuple", [](const quaternion &q) { return py::make_tuple(q.w, q.x, q.y, q.z); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const quaternion &q) {
            return "Quaternion(" + std::to_string(q.w) + ", " + std::to_string(q.x) + ", " + std::to_string(q.y)
                   + ", " + std::to_string(q.z) + ")";
        });

    py::class_<schur_solution>(m, "Solution")
        .def("__call__", &schur_solution::operator(), py::arg("p"))
        .def("eval_series", &schur_solution::eval_series, py::arg("p"))
        .def_property_readonly("coeffs", [](const schur_solution &s) { return s.coeffs().coeffs; })
        .def_property_readonly("provenance", [](const schur_solution &s) { return std::string(to_string(s.origin())); })
        .def_readonly("rank", &schur_solution::rank)
        .def_readonly("nodes_used", &schur_solution::nodes_used)
        .def_readonly("schur_max_modulus", &schur_solution::schur_max_modulus)
        .def_property_readonly("has_closed_form", &schur_solution::has_closed_form)
        .def("to_json", [](const schur_solution &s) { return dump_canonical(to_json(s)); });

    m.def("geometric_sum", &geometric_sum, py::arg("p"), py::arg("alpha"), py::arg("q"),
          py::arg("beta") = quaternion{1.0}, "Closed form of sum_t p^t alpha q^t beta.");

    m.def(
        "solve", [](const std::string &problem) { return solve(problem_from_text(problem)); }, py::arg("problem"),
        "Solve a problem given as JSON text.");
    m.def(
        "check_command", [](const std::string &problem) { return result_tuple(cmd_check(problem_from_text(problem))); },
        py::arg("problem"));
    m.def(
        "solve_command", [](const std::string &problem) { return result_tuple(cmd_solve(problem_from_text(problem))); },
        py::arg("problem"));
    m.def(
        "verify_command",
        [](const std::string &problem, const std::string &solution) {
            return result_tuple(cmd_verify(problem_from_text(problem), parse_text(solution)));
        },
        py::arg("problem"), py::arg("solution"));
}
