#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unckit/beurling.hpp"
#include "unckit/mellin.hpp"
#include "unckit/recover.hpp"
#include "unckit/spec_io.hpp"

namespace py = pybind11;
using namespace unckit;

namespace {

py::dict outcome_to_dict(const QuadrantOutcome& out) {
    py::dict d;
    if (const auto* r = std::get_if<QuadResult>(&out)) {
        d["diverged"] = false;
        d["value"] = r->value;
        d["err_estimate"] = r->err_estimate;
        d["evaluations"] = r->evaluations;
    } else {
        const auto& div = std::get<Divergence>(out);
        d["diverged"] = true;
        d["lambda"] = div.lambda;
        d["witness_scale"] = div.witness_scale;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_unckit, m) {
    m.doc() = "Numerical toolkit for the gaussian uncertainty integral";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<MixedWidthError>(m, "MixedWidthError",
                                            PyExc_ValueError);
    py::register_exception<DegenerateData>(m, "DegenerateData",
                                           PyExc_ValueError);
    py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet",
                                            PyExc_RuntimeError);

    py::class_<GaussPoly>(m, "GaussPoly")
        .def_static("single", &GaussPoly::single, py::arg("coeffs"),
                    py::arg("width"))
        .def("eval", &GaussPoly::eval, py::arg("x"))
        .def("eval_real", &GaussPoly::eval_real, py::arg("x"))
        .def("degree", &GaussPoly::degree)
        .def("min_width", &GaussPoly::min_width)
        .def("max_width", &GaussPoly::max_width)
        .def("common_width", &GaussPoly::common_width)
        .def("is_real", &GaussPoly::is_real, py::arg("tol") = 0.0)
        .def("to_json", &function_spec_to_json)
        .def("__repr__", [](const GaussPoly& f) {
            return "GaussPoly(" + function_spec_to_json(f) + ")";
        });

    py::class_<ThetaFit>(m, "ThetaFit")
        .def_readonly("poly_coeffs", &ThetaFit::poly_coeffs)
        .def_readonly("exp_rate", &ThetaFit::exp_rate)
        .def_readonly("residual", &ThetaFit::residual);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("lambdas", &ScanResult::lambdas)
        .def_readonly("values", &ScanResult::values)
        .def_readonly("errs", &ScanResult::errs)
        .def_readonly("exponent", &ScanResult::exponent)
        .def_readonly("residual", &ScanResult::residual)
        .def_readonly("diverged_at", &ScanResult::diverged_at);

    m.def("parse_function_spec", &parse_function_spec, py::arg("document"));
    m.def("fourier", &fourier, py::arg("f"));
    m.def("exp_moment", &exp_moment, py::arg("f"), py::arg("eps"),
          py::arg("tol") = 1e-10);
    m.def("autocorr_eval", &autocorr_eval, py::arg("f"), py::arg("lam"));
    m.def(
        "autocorr_closed",
        [](const GaussPoly& f) {
            const PartialFractionF pf = autocorr_closed(f);
            return py::make_tuple(pf.t, pf.u);
        },
        py::arg("f"));
    m.def("reflection_residual", &reflection_residual, py::arg("f"),
          py::arg("lam"));

    m.def("default_schedule", &default_schedule);
    m.def(
        "uncertainty_integral",
        [](const GaussPoly& f, double lam, double tol) {
            return outcome_to_dict(uncertainty_integral(f, lam, tol));
        },
        py::arg("f"), py::arg("lam"), py::arg("tol") = 1e-8);
    m.def("scan_growth", &scan_growth, py::arg("f"), py::arg("schedule"),
          py::arg("tol") = 1e-8, py::arg("threads") = 1);
    m.def("mixed_blowup_threshold", &mixed_blowup_threshold, py::arg("a"),
          py::arg("b"));
    m.def("bdj_max_bound", &bdj_max_bound, py::arg("big_n"), py::arg("lam"));

    m.def("mellin_closed", &mellin_gausspoly_closed, py::arg("f"), py::arg("k"),
          py::arg("z"));
    m.def("theta", &theta, py::arg("f"), py::arg("k"), py::arg("z"));
    m.def("verify_product_identity", &verify_product_identity, py::arg("f"),
          py::arg("t_grid"));
    m.def("theta_hat_relation", &theta_hat_relation, py::arg("f"), py::arg("k"),
          py::arg("z"));
    m.def("theta_product_poly", &theta_product_poly, py::arg("f"), py::arg("k"),
          py::arg("z_grid"));

    m.def(
        "fit_gaussian_width",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            return fit_gaussian_width(SampledFn(xs, ys));
        },
        py::arg("xs"), py::arg("ys"));
    m.def(
        "recover_polynomial",
        [](const std::vector<double>& xs, const std::vector<double>& ys,
           double a) { return recover_polynomial(SampledFn(xs, ys), a); },
        py::arg("xs"), py::arg("ys"), py::arg("a"));
    m.def("fit_theta_exponent", &fit_theta_exponent, py::arg("values"));
    m.def("width_from_rate", &width_from_rate, py::arg("rate"));
}
