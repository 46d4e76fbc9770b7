// Python bindings. Thin: every symbol forwards to the C++ core; conversions
// and exception translation are the only logic here.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twoslit/oracle.hpp"
#include "twoslit/twoparticle.hpp"
#include "twoslit/version.hpp"

namespace py = pybind11;
using namespace twoslit;

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-particle two-slit coincidence simulator core";
  m.attr("__version__") = version_string;

  // Base first so derived translators are consulted before it.
  static py::exception<error> base_exc(m, "TwoSlitError");
  py::register_exception<invalid_parameter_error>(m, "InvalidParameterError", base_exc.ptr());
  py::register_exception<non_normalizable_error>(m, "NonNormalizableError", base_exc.ptr());
  py::register_exception<degenerate_fermion_error>(m, "DegenerateFermionError", base_exc.ptr());
  py::register_exception<convergence_error>(m, "ConvergenceError", base_exc.ptr());
  py::register_exception<internal_consistency_error>(m, "InternalConsistencyError",
                                                     base_exc.ptr());

  py::enum_<Slit>(m, "Slit").value("A", Slit::A).value("B", Slit::B);

  py::enum_<Statistics>(m, "Statistics")
      .value("distinguishable", Statistics::distinguishable)
      .value("boson", Statistics::boson)
      .value("fermion", Statistics::fermion);

  py::class_<PacketParams>(m, "PacketParams")
      .def(py::init<double, double, double>(), py::arg("sigma"), py::arg("tau_s"),
           py::arg("tau_d"))
      .def_readwrite("sigma", &PacketParams::sigma)
      .def_readwrite("tau_s", &PacketParams::tau_s)
      .def_readwrite("tau_d", &PacketParams::tau_d)
      .def("validate", &PacketParams::validate);

  py::class_<SlitGeometry>(m, "SlitGeometry")
      .def(py::init<double, double>(), py::arg("b"), py::arg("x0"))
      .def_readwrite("b", &SlitGeometry::b)
      .def_readwrite("x0", &SlitGeometry::x0)
      .def("validate", &SlitGeometry::validate)
      .def("well_separated", &SlitGeometry::well_separated);

  py::class_<FreeEvolutionCoefficients>(m, "FreeEvolutionCoefficients")
      .def_readonly("c", &FreeEvolutionCoefficients::c)
      .def_readonly("mu", &FreeEvolutionCoefficients::mu);

  py::class_<BeamCoefficients>(m, "BeamCoefficients")
      .def_readonly("d_coef", &BeamCoefficients::d_coef)
      .def_readonly("f_coef", &BeamCoefficients::f_coef)
      .def_readonly("g_coef", &BeamCoefficients::g_coef)
      .def_readonly("h_coef", &BeamCoefficients::h_coef)
      .def_readonly("alpha", &BeamCoefficients::alpha)
      .def_readonly("beta", &BeamCoefficients::beta)
      .def_readonly("gamma", &BeamCoefficients::gamma)
      .def_readonly("delta", &BeamCoefficients::delta)
      .def_readonly("prefactor", &BeamCoefficients::prefactor);

  py::class_<DiffractedState>(m, "DiffractedState")
      .def_readonly("params", &DiffractedState::params)
      .def_readonly("geometry", &DiffractedState::geometry)
      .def_readonly("coeffs", &DiffractedState::coeffs)
      .def_readonly("norm", &DiffractedState::norm)
      .def("beam", &DiffractedState::beam, py::arg("x"), py::arg("slit"))
      .def("amplitude", &DiffractedState::amplitude, py::arg("x"));

  py::class_<TwoParticleSystem>(m, "TwoParticleSystem")
      .def_readonly("psi", &TwoParticleSystem::psi)
      .def_readonly("phi", &TwoParticleSystem::phi)
      .def_readonly("overlap", &TwoParticleSystem::overlap)
      .def_readonly("overlap_sq", &TwoParticleSystem::overlap_sq);

  py::class_<DetectionPattern>(m, "DetectionPattern")
      .def_readonly("x_fixed", &DetectionPattern::x_fixed)
      .def_readonly("y_grid", &DetectionPattern::y_grid)
      .def_readonly("stat", &DetectionPattern::stat)
      .def_readonly("density", &DetectionPattern::density);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("truncation_threshold", &QuadratureSpec::truncation_threshold)
      .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions);

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("error_estimate", &QuadratureResult::error_estimate)
      .def_readonly("subdivisions", &QuadratureResult::subdivisions)
      .def_readonly("evaluations", &QuadratureResult::evaluations);

  m.def("mode_amplitude", &mode_amplitude, py::arg("k"), py::arg("sigma"));
  m.def("free_evolution_coefficients", &free_evolution_coefficients, py::arg("tau"),
        py::arg("sigma"));
  m.def("free_packet", &free_packet, py::arg("x"), py::arg("tau"), py::arg("sigma"));
  m.def("propagator_kernel", &propagator_kernel, py::arg("x"), py::arg("xs"),
        py::arg("tau_d"));
  m.def("slit_beam_coefficients", &slit_beam_coefficients, py::arg("params"),
        py::arg("geometry"), py::arg("slit"));
  m.def("slit_amplitude", &slit_amplitude, py::arg("x"), py::arg("coeffs"), py::arg("slit"));
  m.def("single_particle_norm", &single_particle_norm, py::arg("coeffs"));
  m.def("diffracted_state", &diffracted_state, py::arg("params"), py::arg("geometry"));
  m.def("pair_overlap", &pair_overlap, py::arg("psi"), py::arg("phi"));
  m.def("pair_overlap_terms", &pair_overlap_terms, py::arg("cpsi"), py::arg("cphi"));
  m.def("joint_norm", &joint_norm, py::arg("overlap_sq"), py::arg("stat"));
  m.def("make_two_particle_system", &make_two_particle_system, py::arg("p_psi"),
        py::arg("p_phi"), py::arg("geometry"));
  m.def("joint_density", &joint_density, py::arg("x"), py::arg("y"), py::arg("system"),
        py::arg("stat"));
  m.def("distinguishable_slice", &distinguishable_slice, py::arg("y"), py::arg("system"));
  m.def("exchange_slice", &exchange_slice, py::arg("y"), py::arg("system"));
  m.def("fixed_detector_pattern", &fixed_detector_pattern, py::arg("y_grid"),
        py::arg("system"), py::arg("stat"));
  m.def("initial_overlap", &initial_overlap, py::arg("sigma"), py::arg("sigma_bar"));
  m.def("statistics_name", &statistics_name, py::arg("stat"));
  m.def(
      "integrate_1d",
      [](const ComplexIntegrand& f, double lo, double hi, const QuadratureSpec& spec) {
        return integrate_1d(f, lo, hi, spec);
      },
      py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("spec") = QuadratureSpec{});

  py::module_ o = m.def_submodule("oracle", "brute-force counterparts of the closed forms");
  o.def("fourier_packet", &oracle::fourier_packet, py::arg("x"), py::arg("tau"),
        py::arg("sigma"), py::arg("spec") = QuadratureSpec{});
  o.def("slit_amplitude_by_quadrature", &oracle::slit_amplitude_by_quadrature, py::arg("x"),
        py::arg("params"), py::arg("geometry"), py::arg("slit"),
        py::arg("spec") = QuadratureSpec{});
  o.def("state_truncation_radius", &oracle::state_truncation_radius, py::arg("coeffs"),
        py::arg("threshold"));
  o.def("state_norm_by_quadrature", &oracle::state_norm_by_quadrature, py::arg("state"),
        py::arg("spec") = QuadratureSpec{});
  o.def("overlap_by_quadrature", &oracle::overlap_by_quadrature, py::arg("a"), py::arg("b"),
        py::arg("spec") = QuadratureSpec{});
  o.def("density_normalization_2d", &oracle::density_normalization_2d, py::arg("system"),
        py::arg("stat"), py::arg("spec") = QuadratureSpec{});
  o.def("joint_density_by_exchange_expansion", &oracle::joint_density_by_exchange_expansion,
        py::arg("x"), py::arg("y"), py::arg("system"), py::arg("stat"));
}
