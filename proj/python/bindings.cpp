#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vacpol/couplings.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/heatkernel.hpp"
#include "vacpol/reflecting.hpp"
#include "vacpol/semitransparent.hpp"
#include "vacpol/specialfns.hpp"
#include "vacpol/validation.hpp"

namespace py = pybind11;
using namespace vacpol;

namespace {

void bind_types(py::module_& m) {
    py::class_<FieldConfig>(m, "FieldConfig")
        .def(py::init([](int d, double mass, double kappa) { return FieldConfig{d, mass, kappa}; }),
             py::arg("d") = 1, py::arg("m") = 1.0, py::arg("kappa") = 1.0)
        .def_readwrite("d", &FieldConfig::d)
        .def_readwrite("m", &FieldConfig::m)
        .def_readwrite("kappa", &FieldConfig::kappa)
        .def("__repr__", [](const FieldConfig& c) {
            return "FieldConfig(d=" + std::to_string(c.d) + ", m=" + std::to_string(c.m) +
                   ", kappa=" + std::to_string(c.kappa) + ")";
        });

    py::class_<RobinCoefficient>(m, "RobinCoefficient")
        .def(py::init([](double b) { return RobinCoefficient::finite(b); }), py::arg("value") = 0.0)
        .def_static("dirichlet", &RobinCoefficient::dirichlet_marker)
        .def_readonly("value", &RobinCoefficient::value)
        .def_readonly("is_dirichlet", &RobinCoefficient::dirichlet)
        .def_property_readonly("is_neumann", &RobinCoefficient::is_neumann);

    py::class_<ReflectingBC>(m, "ReflectingBC")
        .def(py::init([](RobinCoefficient p, RobinCoefficient q) { return ReflectingBC{p, q}; }),
             py::arg("plus"), py::arg("minus"))
        .def_static("symmetric", &ReflectingBC::symmetric)
        .def_readwrite("plus", &ReflectingBC::plus)
        .def_readwrite("minus", &ReflectingBC::minus);

    py::class_<SemitransparentBC>(m, "SemitransparentBC")
        .def(py::init([](std::complex<double> omega, double alpha, double beta, double gamma, double sigma) {
                 SemitransparentBC bc{omega, alpha, beta, gamma, sigma};
                 validate(bc);
                 return bc;
             }),
             py::arg("omega") = std::complex<double>(1.0, 0.0), py::arg("alpha") = 1.0,
             py::arg("beta") = 0.0, py::arg("gamma") = 0.0, py::arg("sigma") = 1.0)
        .def_readonly("omega", &SemitransparentBC::omega)
        .def_readonly("alpha", &SemitransparentBC::alpha)
        .def_readonly("beta", &SemitransparentBC::beta)
        .def_readonly("gamma", &SemitransparentBC::gamma_coupling)
        .def_readonly("sigma", &SemitransparentBC::sigma);

    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("continuous_threshold", &SpectrumReport::continuous_threshold)
        .def_readonly("lambda_plus", &SpectrumReport::lambda_plus)
        .def_readonly("lambda_minus", &SpectrumReport::lambda_minus)
        .def_readonly("point_eigenvalues", &SpectrumReport::point_eigenvalues)
        .def_readonly("positive", &SpectrumReport::positive);

    py::class_<PolarizationValue>(m, "PolarizationValue")
        .def_readonly("free_term", &PolarizationValue::free_term)
        .def_readonly("plane_term", &PolarizationValue::plane_term)
        .def_readonly("total", &PolarizationValue::total)
        .def_readonly("branch", &PolarizationValue::branch)
        .def_readonly("warnings", &PolarizationValue::warnings);

    py::class_<DiagonalCoefficients>(m, "DiagonalCoefficients")
        .def_readonly("beta_branch", &DiagonalCoefficients::beta_branch)
        .def_readonly("L", &DiagonalCoefficients::L)
        .def_readonly("M_plus", &DiagonalCoefficients::M_plus)
        .def_readonly("M_minus", &DiagonalCoefficients::M_minus);

    py::class_<LaurentFit>(m, "LaurentFit")
        .def_readonly("c_minus1", &LaurentFit::c_minus1)
        .def_readonly("c0", &LaurentFit::c0)
        .def_readonly("c1", &LaurentFit::c1)
        .def_readonly("residual", &LaurentFit::residual);

    py::class_<validation::Check>(m, "Check")
        .def_readonly("suite", &validation::Check::suite)
        .def_readonly("name", &validation::Check::name)
        .def_readonly("measured", &validation::Check::measured)
        .def_readonly("tolerance", &validation::Check::tolerance)
        .def_readonly("passed", &validation::Check::pass)
        .def_readonly("note", &validation::Check::note);
}

void bind_specialfns(py::module_& m) {
    m.def("frak_k", &specialfns::frak_k, py::arg("nu"), py::arg("w"));
    m.def("frak_k_scaled", &specialfns::frak_k_scaled, py::arg("nu"), py::arg("w"));
    m.def("bessel_k", &specialfns::bessel_k, py::arg("nu"), py::arg("w"));
    m.def("upper_inc_gamma", &specialfns::upper_inc_gamma, py::arg("a"), py::arg("z"));
    m.def("upper_inc_gamma_scaled", &specialfns::upper_inc_gamma_scaled, py::arg("a"), py::arg("z"));
    m.def("expint_e1", &specialfns::expint_e1, py::arg("z"));
    m.def("erf", &specialfns::erf, py::arg("z"));
    m.def("erfc", &specialfns::erfc, py::arg("z"));
    m.def("erfcx", &specialfns::erfcx, py::arg("z"));
    m.def("harmonic", &specialfns::harmonic, py::arg("l"));
    m.def("rgamma", &specialfns::rgamma, py::arg("x"));
}

void bind_heat(py::module_& m) {
    m.def("robin_half_line_kernel", &heat::robin_half_line_kernel, py::arg("tau"), py::arg("x"),
          py::arg("y"), py::arg("b"), py::arg("m"));
    m.def("dirichlet_half_line_kernel", &heat::dirichlet_half_line_kernel, py::arg("tau"), py::arg("x"),
          py::arg("y"), py::arg("m"));
    m.def("spectral_oracle_robin",
          [](double tau, double x, double y, double b, double mass) {
              const auto r = heat::spectral_oracle_robin(tau, x, y, b, mass);
              return py::make_tuple(r.value, r.error);
          },
          py::arg("tau"), py::arg("x"), py::arg("y"), py::arg("b"), py::arg("m"));
    m.def("reflecting_kernel", &heat::reflecting_kernel, py::arg("tau"), py::arg("x"), py::arg("y"),
          py::arg("bc"), py::arg("m"));
    m.def("semitransparent_kernel", &heat::semitransparent_kernel, py::arg("tau"), py::arg("x"),
          py::arg("y"), py::arg("bc"), py::arg("m"));
}

template <class BC>
void bind_geometry(py::module_& m, const char* name,
                   SpectrumReport (*spectrum)(const BC&, double),
                   double (*plane)(const FieldConfig&, const BC&, double),
                   double (*oracle)(const FieldConfig&, const BC&, double),
                   double (*reg)(const FieldConfig&, const BC&, double, double),
                   LaurentFit (*fit)(const FieldConfig&, const BC&, double, double),
                   PolarizationValue (*renorm)(const FieldConfig&, const BC&, double),
                   PolarizationValue (*eval)(const FieldConfig&, const BC&, double),
                   double (*small)(const FieldConfig&, const BC&, double),
                   double (*large)(const FieldConfig&, const BC&, double),
                   PolarizationValue (*massless)(const FieldConfig&, const BC&, double)) {
    py::module_ s = m.def_submodule(name);
    s.def("spectrum", spectrum, py::arg("bc"), py::arg("m"));
    s.def("plane_term", plane, py::arg("cfg"), py::arg("bc"), py::arg("x1"));
    s.def("plane_term_oracle", oracle, py::arg("cfg"), py::arg("bc"), py::arg("x1"),
          py::call_guard<py::gil_scoped_release>());
    s.def("regularized_polarization", reg, py::arg("cfg"), py::arg("bc"), py::arg("x1"), py::arg("u"));
    s.def("laurent_fit", fit, py::arg("cfg"), py::arg("bc"), py::arg("x1"), py::arg("eps") = 1e-3);
    s.def("renormalize_at_zero", renorm, py::arg("cfg"), py::arg("bc"), py::arg("x1"));
    s.def("evaluate", eval, py::arg("cfg"), py::arg("bc"), py::arg("x1"));
    s.def("small_x_asymptotic", small, py::arg("cfg"), py::arg("bc"), py::arg("x1"));
    s.def("large_x_asymptotic", large, py::arg("cfg"), py::arg("bc"), py::arg("x1"));
    s.def("massless_value", massless, py::arg("cfg"), py::arg("bc"), py::arg("x1"));
    s.def("free_term", name == std::string("reflecting") ? &reflecting::free_term : &semitransparent::free_term,
          py::arg("cfg"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Renormalized vacuum polarization near a flat wall";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParameterError>(m, "ParameterError", base);
    py::register_exception<InfraredDivergence>(m, "InfraredDivergence", base);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", base);

    bind_types(m);
    py::module_ sf = m.def_submodule("specialfns");
    bind_specialfns(sf);
    py::module_ hk = m.def_submodule("heat");
    bind_heat(hk);

    bind_geometry<ReflectingBC>(m, "reflecting", &reflecting::spectrum, &reflecting::plane_term,
                                &reflecting::plane_term_oracle, &reflecting::regularized_polarization,
                                &reflecting::laurent_fit, &reflecting::renormalize_at_zero,
                                &reflecting::evaluate, &reflecting::small_x_asymptotic,
                                &reflecting::large_x_asymptotic, &reflecting::massless_value);
    bind_geometry<SemitransparentBC>(
        m, "semitransparent", &semitransparent::spectrum, &semitransparent::plane_term,
        &semitransparent::plane_term_oracle, &semitransparent::regularized_polarization,
        &semitransparent::laurent_fit, &semitransparent::renormalize_at_zero, &semitransparent::evaluate,
        &semitransparent::small_x_asymptotic, &semitransparent::large_x_asymptotic,
        &semitransparent::massless_value);
    m.attr("semitransparent").attr("diagonal_coefficients") =
        py::cpp_function(&semitransparent::diagonal_coefficients, py::arg("bc"), py::arg("x1"));
    m.attr("reflecting").attr("plane_term_dn") =
        py::cpp_function(&reflecting::plane_term_dn, py::arg("cfg"), py::arg("x1"), py::arg("sign"));

    m.def("validate", &validation::run, py::arg("suite") = "all", py::arg("tol_scale") = 1.0,
          py::call_guard<py::gil_scoped_release>());
}
