#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dox/pipeline.hpp"

namespace py = pybind11;

namespace {

// Reports cross the boundary as plain Python objects via their JSON text.
py::object to_py(const dox::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

dox::Json from_py(const py::object& o) {
    return dox::Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(pydox, m) {
    m.doc() = "Exact kernel for graded double Ore extensions of Koszul AS-regular algebras";

    py::register_exception<dox::Error>(m, "Error", PyExc_ValueError);

    py::class_<dox::ProblemSpec>(m, "Problem")
        .def_property_readonly("generators", [](const dox::ProblemSpec& s) { return s.pres.alpha.names; })
        .def_property_readonly("field", [](const dox::ProblemSpec& s) { return s.pres.field == dox::Field::QI ? "Q(i)" : "Q"; })
        .def_property_readonly("relation_count", [](const dox::ProblemSpec& s) { return s.pres.R.dim(); })
        .def("emit", &dox::emit_problem);

    m.def("parse", &dox::parse_problem, py::arg("text"), "Parse a problem from its text form.");
    m.def("load", &dox::parse_problem_file, py::arg("path"), "Parse a problem file.");

    m.def(
        "run",
        [](const std::string& command, const dox::ProblemSpec& spec, int degree, int randomized) {
            dox::Outcome o;
            {
                py::gil_scoped_release release;
                o = dox::run_command(command, spec, dox::RunOptions{degree, randomized});
            }
            return py::make_tuple(to_py(o.doc), o.exit_code);
        },
        py::arg("command"), py::arg("problem"), py::arg("degree") = -1, py::arg("randomized") = -1,
        "Run a CLI command; returns (report, exit_code).");

    py::class_<dox::Session>(m, "Session")
        .def(py::init<dox::ProblemSpec, int>(), py::arg("problem"), py::arg("degree") = -1)
        .def("certificate", [](dox::Session& s) { return to_py(dox::certificate_json(s)); })
        .def("validation", [](dox::Session& s) { s.regular(); return to_py(dox::validation_json(s)); })
        .def("quadruple", [](dox::Session& s, bool through_top) { return to_py(dox::quadruple_json(s, s.quadruple(through_top))); },
             py::arg("through_top") = false)
        .def("nakayama", [](dox::Session& s) { return to_py(dox::nakayama_json(s)); })
        .def("superpotential", [](dox::Session& s) { return to_py(dox::superpotential_json(s)); })
        .def("resolution", [](dox::Session& s) { return to_py(dox::resolution_json(s)); })
        .def("randomized", [](dox::Session& s, int count) { return to_py(dox::randomized_json(s, count)); },
             py::arg("count"))
        .def_property_readonly("d", [](dox::Session& s) { return s.regular().d; });

    m.def("render_text", [](const py::object& doc) { return dox::render_text(from_py(doc)); });
    m.def("render_latex", [](const py::object& doc) { return dox::render_latex(from_py(doc)); });
}
