#include "fockhaus/classify.hpp"
#include "fockhaus/error.hpp"
#include "fockhaus/focknorm.hpp"
#include "fockhaus/harness.hpp"
#include "fockhaus/hausdorff.hpp"
#include "fockhaus/spec_io.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fockhaus;

namespace {

CoeffFunction as_function(const std::vector<cplx>& coeffs) {
    if (coeffs.empty()) throw SpecError("coefficient list must not be empty");
    return CoeffFunction(coeffs);
}

// Measures cross the boundary as built-in names or JSON text; the Python
// wrapper serializes dicts before calling in.
MeasureSpec as_measure(const std::string& spec) { return load_measure(spec); }

py::dict support_dict(const SupportReport& s) {
    py::dict d;
    d["inf_support"] = s.inf_support;
    d["mass_below_1"] = s.mass_below_1;
    d["mass_at_1"] = s.mass_at_1;
    d["mass_unit_interval"] = s.mass_unit_interval;
    d["total_weighted_mass"] = s.total_weighted_mass;
    d["masses_exact"] = s.masses_exact;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fockhaus, m) {
    m.doc() = "Hausdorff operators on Fock spaces";

    static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const MathError& e) {
            py::set_error(math_error, e.what());
        }
    });

    m.def("moments", [](const std::string& measure, int count) {
        if (count < 0) throw SpecError("count must be non-negative");
        return MomentSequence(as_measure(measure)).values(count);
    }, py::arg("measure"), py::arg("count"));

    m.def("support", [](const std::string& measure) { return support_dict(support_report(as_measure(measure))); },
          py::arg("measure"));

    m.def("measure_json", [](const std::string& measure) { return measure_to_json(as_measure(measure)).dump(); },
          py::arg("measure"), "Canonical JSON of a parsed measure spec.");

    m.def("fock_norm", [](const std::vector<cplx>& coeffs, double p, double alpha) {
        return fock_norm(as_function(coeffs), Exponent(p), alpha);
    }, py::arg("coeffs"), py::arg("p"), py::arg("alpha") = 1.0);

    m.def("mixed_norm", [](const std::vector<cplx>& coeffs, double p, double q, double alpha) {
        return mixed_norm(as_function(coeffs), {Exponent(p), Exponent(q), alpha});
    }, py::arg("coeffs"), py::arg("p"), py::arg("q"), py::arg("alpha") = 1.0);

    m.def("monomial_norm", [](int n, double p, double alpha) { return monomial_norm_closed(n, Exponent(p), alpha); },
          py::arg("n"), py::arg("p"), py::arg("alpha") = 1.0);

    m.def("kernel_norm", [](double beta, cplx a, double p, double alpha) {
        return kernel_norm_closed(beta, a, Exponent(p), alpha);
    }, py::arg("beta"), py::arg("a"), py::arg("p"), py::arg("alpha") = 1.0);

    m.def("function", [](const std::string& descriptor, double alpha) {
        return parse_function(descriptor, alpha).coeffs();
    }, py::arg("descriptor"), py::arg("alpha") = 1.0, "Coefficients of monomial:n, kernel:beta:re:im or peak:n.");

    m.def("apply_spectral", [](const std::string& measure, const std::vector<cplx>& coeffs) {
        return apply_spectral(HausdorffOperator(as_measure(measure)), as_function(coeffs)).coeffs();
    }, py::arg("measure"), py::arg("coeffs"));

    m.def("apply_quadrature", [](const std::string& measure, const std::vector<cplx>& coeffs,
                                 const std::vector<cplx>& points) {
        return apply_quadrature(HausdorffOperator(as_measure(measure)), as_function(coeffs), points);
    }, py::arg("measure"), py::arg("coeffs"), py::arg("points"));

    m.def("classify_json", [](const std::string& measure, double p, double q, double alpha) {
        const Classifier c(as_measure(measure));
        json arr = json::array();
        const auto e = c.entire();
        arr.push_back(to_json(e.continuity));
        arr.push_back(to_json(e.compactness));
        arr.push_back(to_json(c.bounded(Exponent(p), Exponent(q), alpha)));
        arr.push_back(to_json(c.compact(Exponent(p), Exponent(q), alpha)));
        return arr.dump();
    }, py::arg("measure"), py::arg("p") = 2.0, py::arg("q") = 2.0, py::arg("alpha") = 1.0);

    m.def("smoothing_json", [](const std::string& measure, double p, double q, double alpha) {
        json arr = json::array();
        for (const auto& r : smoothing_criteria(as_measure(measure), Exponent(p), Exponent(q), alpha)) {
            arr.push_back(to_json(r));
        }
        return arr.dump();
    }, py::arg("measure"), py::arg("p"), py::arg("q"), py::arg("alpha") = 1.0);

    m.def("summing_json", [](const std::string& measure, double p, double q) {
        json arr = json::array();
        for (const auto& r : summing_criteria(as_measure(measure), Exponent(p), Exponent(q))) arr.push_back(to_json(r));
        return arr.dump();
    }, py::arg("measure"), py::arg("p"), py::arg("q"));

    m.def("verify_csv", [](const std::string& suite, std::uint64_t seed) {
        std::string out = csv_header() + "\n";
        for (const auto& r : run_suite(suite, seed)) out += to_csv_row(r) + "\n";
        return out;
    }, py::arg("suite"), py::arg("seed") = 42, py::call_guard<py::gil_scoped_release>());
}
