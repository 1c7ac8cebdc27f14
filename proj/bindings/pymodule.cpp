#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "qgalois/parse.hpp"
#include "qgalois/suites.hpp"

namespace py = pybind11;
using namespace qgalois;

namespace {

// One configuration with the lazily built A / X / reflection tower.
class PySession {
  public:
    PySession(int n, int m, int lambda_exp, const std::string& mu, int window) {
        RunConfig cfg;
        cfg.n = n;
        cfg.m = m;
        cfg.lambda_exp = lambda_exp;
        cfg.mu_text = mu;
        cfg.window = window;
        s_ = std::make_unique<Session>(cfg);
    }

    PresentationPtr pres(const std::string& algebra) {
        if (algebra == "A") return s_->hopf_a()->pres();
        if (algebra == "X") return s_->galois()->pres_x();
        if (algebra == "C") return s_->reflection()->c_context().pres_c;
        throw ConfigError("algebra must be A, X or C");
    }

    std::string parse(const std::string& text, const std::string& algebra) {
        return parse_element(text, pres(algebra)).str();
    }

    std::string multiply_literals(const std::string& a, const std::string& b,
                                  const std::string& algebra) {
        PresentationPtr p = pres(algebra);
        return multiply(parse_element(a, p), parse_element(b, p)).str();
    }

    std::string add_literals(const std::string& a, const std::string& b,
                             const std::string& algebra) {
        PresentationPtr p = pres(algebra);
        return (parse_element(a, p) + parse_element(b, p)).str();
    }

    std::string eval_map(const std::string& map, const std::string& expr) {
        return apply_structure_map(*s_, map, expr);
    }

    std::string verify_json(const std::vector<std::string>& suites) {
        Report report;
        const auto& cfg = s_->config();
        report.n = cfg.n;
        report.m = cfg.m;
        report.lambda_exp = cfg.lambda_exp;
        report.mu = cfg.mu_text;
        report.window = cfg.window;
        report.suites = suites;
        run_suites(*s_, suites, report);
        return report.to_json();
    }

    std::string table_json() {
        Report report;
        fill_structure_table(*s_, report);
        return report.to_json();
    }

  private:
    std::unique_ptr<Session> s_;
};

}  // namespace

PYBIND11_MODULE(_qgalois, m) {
    m.doc() = "exact arithmetic for a q-deformed quantum-group family, its "
              "Galois objects and the reflected quantum group";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<ParseError>(m, "ParseLiteralError");
    py::register_exception<SolverError>(m, "SolverError");
    py::register_exception<VerificationError>(m, "VerificationError");

    py::class_<PySession>(m, "Session")
        .def(py::init<int, int, int, const std::string&, int>(), py::arg("n"), py::arg("m"),
             py::arg("lambda_exp") = 1, py::arg("mu") = "0", py::arg("window") = 3)
        .def("parse", &PySession::parse, py::arg("text"), py::arg("algebra") = "A",
             "normalize an element literal")
        .def("multiply", &PySession::multiply_literals, py::arg("a"), py::arg("b"),
             py::arg("algebra") = "A")
        .def("add", &PySession::add_literals, py::arg("a"), py::arg("b"),
             py::arg("algebra") = "A")
        .def("eval_map", &PySession::eval_map, py::arg("map"), py::arg("expr"),
             "apply a named structure map to a literal")
        .def("_verify_json", &PySession::verify_json, py::arg("suites"))
        .def("_table_json", &PySession::table_json);

    m.def("structure_maps", &structure_map_names, "names accepted by eval_map");
    m.def(
        "gaussian_binomial",
        [](int k, int j, const std::string& q, int order) {
            return gaussian_binomial(k, j, parse_scalar(q, order)).str();
        },
        py::arg("k"), py::arg("j"), py::arg("q"), py::arg("order"));
    m.def(
        "scalar",
        [](const std::string& text, int order) { return parse_scalar(text, order).str(); },
        py::arg("text"), py::arg("order"), "normalize a scalar literal in Q(zeta_order)");
}
