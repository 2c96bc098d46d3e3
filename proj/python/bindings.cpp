#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirsym/classify.hpp"
#include "dirsym/model_io.hpp"
#include "dirsym/report.hpp"

namespace py = pybind11;
using namespace dirsym;

namespace {

AuditOptions options(unsigned seed, double tol) {
    AuditOptions o;
    o.seed = seed;
    o.tol = tol;
    return o;
}

} // namespace

PYBIND11_MODULE(_dirsym, m) {
    m.doc() = "Discrete-symmetry solver for momentum-polynomial Dirac Hamiltonians";

    py::register_exception<Error>(m, "DirsymError", PyExc_ValueError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::parse), py::arg("text"))
        .def_property_readonly("label", &PauliString::label)
        .def_property_readonly("phase", &PauliString::phase)
        .def("matrix", &PauliString::matrix)
        .def("is_hermitian", &PauliString::is_hermitian)
        .def("__mul__", &PauliString::operator*)
        .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; })
        .def("__str__", &PauliString::to_string)
        .def("__repr__", [](const PauliString& p) { return "PauliString('" + p.to_string() + "')"; });

    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("pauli_decompose", [](const ComplexMatrix& mat) { return pauli_decompose(mat); }, py::arg("m"));
    m.def("is_unitary", &is_unitary, py::arg("m"), py::arg("tol") = kDefaultTol);

    py::class_<HamiltonianModel>(m, "HamiltonianModel")
        .def_property_readonly("name", &HamiltonianModel::name)
        .def_property_readonly("d", &HamiltonianModel::dimension)
        .def_property_readonly("n", &HamiltonianModel::size)
        .def_property_readonly("mass", &HamiltonianModel::mass)
        .def_property_readonly("flavour_factors", &HamiltonianModel::flavour_factors)
        .def("with_mass", &HamiltonianModel::with_mass, py::arg("mass"))
        .def("evaluate", [](const HamiltonianModel& h, std::vector<double> p) { return evaluate(h, p); },
             py::arg("p"))
        .def("spectrum", [](const HamiltonianModel& h, std::vector<double> p) { return spectrum(h, p); },
             py::arg("p"))
        .def("spin_z", [](const HamiltonianModel& h) { return spin_z(h); })
        .def("full_turn", [](const HamiltonianModel& h) { return full_turn(h); })
        .def(
            "eigenspinor",
            [](const HamiltonianModel& h, int branch, std::vector<double> p) {
                return eigenspinor(h, branch >= 0 ? Branch::Positive : Branch::Negative, p);
            },
            py::arg("branch"), py::arg("p"))
        .def("__repr__", [](const HamiltonianModel& h) {
            return "<HamiltonianModel " + h.name() + " d=" + std::to_string(h.dimension()) +
                   " n=" + std::to_string(h.size()) + ">";
        });

    m.def("zoo", &zoo, py::arg("name"), py::arg("mass") = 1.0);
    m.def("zoo_names", &zoo_names);
    m.def("load_model", &resolve_model, py::arg("source"));
    m.def(
        "model_from_json",
        [](const std::string& text) { return model_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));

    py::class_<Representative>(m, "Representative")
        .def_property_readonly("pauli", [](const Representative& r) { return r.string.to_string(); })
        .def_property_readonly("square", [](const Representative& r) -> py::object {
            switch (r.square) {
            case SquareSign::Plus: return py::int_(1);
            case SquareSign::Minus: return py::int_(-1);
            default: return py::none();
            }
        })
        .def("matrix", &Representative::matrix);

    py::class_<SymmetrySolution>(m, "SymmetrySolution")
        .def_readonly("nullity", &SymmetrySolution::nullity)
        .def_readonly("representatives", &SymmetrySolution::representatives)
        .def_property_readonly("exists", &SymmetrySolution::exists)
        .def_property_readonly("symmetry", [](const SymmetrySolution& s) { return symbol(s.query.kind); })
        .def_property_readonly("massless", [](const SymmetrySolution& s) { return s.query.massless; });

    m.def(
        "solve",
        [](const HamiltonianModel& h, const std::string& sym, bool massless, double tol) {
            return solve(h, SymmetryQuery::make(kind_from_symbol(sym), h.dimension(), massless), tol);
        },
        py::arg("model"), py::arg("symmetry"), py::arg("massless") = false, py::arg("tol") = kDefaultTol);

    m.def(
        "classify_square",
        [](const ComplexMatrix& d, bool conjugate) -> py::object {
            switch (classify_square(d, conjugate)) {
            case SquareSign::Plus: return py::int_(1);
            case SquareSign::Minus: return py::int_(-1);
            default: return py::none();
            }
        },
        py::arg("d"), py::arg("conjugate"));

    m.def(
        "audit_json",
        [](const HamiltonianModel& h, unsigned seed, double tol) { return to_json(audit(h, options(seed, tol))).dump(); },
        py::arg("model"), py::arg("seed") = 42u, py::arg("tol") = kDefaultTol);
    m.def(
        "table_json",
        [](unsigned seed, double tol) { return to_json(reproduce_operator_table(options(seed, tol))).dump(); },
        py::arg("seed") = 42u, py::arg("tol") = kDefaultTol);
    m.def(
        "perturb_json",
        [](const HamiltonianModel& h, int max_degree, unsigned seed, double tol) {
            return to_json(enumerate_perturbations(h, max_degree, options(seed, tol))).dump();
        },
        py::arg("model"), py::arg("max_degree") = 0, py::arg("seed") = 42u, py::arg("tol") = kDefaultTol);
    m.def(
        "classify_perturbation_json",
        [](const HamiltonianModel& h, const std::string& pauli, std::vector<int> exponents, double coefficient,
           unsigned seed) {
            if (exponents.empty()) exponents.assign(static_cast<std::size_t>(h.dimension()), 0);
            const PerturbationTerm term{Monomial{exponents}, PauliString::parse(pauli), coefficient};
            return to_json(classify_perturbation(h, term, options(seed, kDefaultTol))).dump();
        },
        py::arg("model"), py::arg("pauli"), py::arg("exponents") = std::vector<int>{},
        py::arg("coefficient") = 1.0, py::arg("seed") = 42u);
}
