#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quanton/geometry.hpp"
#include "quanton/io.hpp"
#include "quanton/sampler.hpp"
#include "quanton/state.hpp"
#include "quanton/version.hpp"

namespace py = pybind11;
using namespace quanton;

namespace {

StateVector4 state_from_list(const std::array<Complex, 4>& amps) {
    StateVector4 s;
    s.amp = amps;
    s.check_normalized(1e-9);
    return s;
}

}  // namespace

PYBIND11_MODULE(_quanton, m) {
    m.doc() = "Quanton-state geometry: duality parameters, Bures distances, and the "
              "particle-equidistance property of two-arm interferometer states.";
    m.attr("__version__") = kVersion;

    py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
    py::register_exception<NormalizationError>(m, "NormalizationError", PyExc_ValueError);
    py::register_exception<OperatorError>(m, "OperatorError", PyExc_ValueError);

    py::class_<StateVector4>(m, "StateVector4")
        .def(py::init(&state_from_list), py::arg("amplitudes"))
        .def_readonly("amp", &StateVector4::amp)
        .def("norm_sq", &StateVector4::norm_sq)
        .def("path_prob", &StateVector4::path_prob, py::arg("path"))
        .def("__repr__", [](const StateVector4& s) {
            std::string r = "StateVector4([";
            for (int i = 0; i < 4; ++i) {
                r += (i ? ", " : "");
                r += format_number(s.amp[i].real()) + (s.amp[i].imag() < 0 ? "-" : "+") +
                     format_number(std::abs(s.amp[i].imag())) + "j";
            }
            return r + "])";
        });

    py::class_<PolarizationBasis>(m, "PolarizationBasis")
        .def(py::init([](const std::array<Complex, 2>& phi0,
                         const std::array<Complex, 2>& phi0perp) {
                 PolarizationBasis b{phi0, phi0perp};
                 b.check_orthonormal();
                 return b;
             }),
             py::arg("phi0"), py::arg("phi0perp"))
        .def_static("standard", &PolarizationBasis::standard)
        .def_readonly("phi0", &PolarizationBasis::phi0)
        .def_readonly("phi0perp", &PolarizationBasis::phi0perp);

    py::class_<QuantonParams>(m, "QuantonParams")
        .def(py::init([](double d, double v, double c, double alpha, double beta) {
                 QuantonParams p{d, v, c, alpha, beta};
                 p.validate();
                 return p;
             }),
             py::arg("d"), py::arg("v"), py::arg("c"), py::arg("alpha") = 0.0,
             py::arg("beta") = 0.0)
        .def_readonly("d", &QuantonParams::d)
        .def_readonly("v", &QuantonParams::v)
        .def_readonly("c", &QuantonParams::c)
        .def_readonly("alpha", &QuantonParams::alpha)
        .def_readonly("beta", &QuantonParams::beta)
        .def("triality_residual", &QuantonParams::triality_residual);

    py::class_<ExtractionResult>(m, "ExtractionResult")
        .def_readonly("params", &ExtractionResult::params)
        .def_readonly("basis", &ExtractionResult::basis)
        .def_readonly("predictability", &ExtractionResult::predictability)
        .def_readonly("path_swapped", &ExtractionResult::path_swapped);

    py::class_<OverlapParams>(m, "OverlapParams")
        .def(py::init([](double gamma, double xi, double mu) {
                 OverlapParams ov{gamma, xi, mu};
                 ov.validate();
                 return ov;
             }),
             py::arg("gamma"), py::arg("xi") = 0.0, py::arg("mu") = 0.0)
        .def_readonly("gamma", &OverlapParams::gamma)
        .def_readonly("xi", &OverlapParams::xi)
        .def_readonly("mu", &OverlapParams::mu);

    py::class_<ParticleWitness>(m, "ParticleWitness")
        .def_readonly("polarization", &ParticleWitness::polarization)
        .def_readonly("distance", &ParticleWitness::distance);

    py::class_<DensityMatrix2>(m, "DensityMatrix2")
        .def(py::init([](const std::array<std::array<Complex, 2>, 2>& entries) {
                 DensityMatrix2 rho{entries};
                 rho.validate();
                 return rho;
             }),
             py::arg("entries"))
        .def_static("from_ket", &DensityMatrix2::from_ket, py::arg("ket"))
        .def_readonly("m", &DensityMatrix2::m)
        .def("eigenvalues", [](const DensityMatrix2& rho) { return rho.eigenvalues(); });

    py::class_<Unitary2>(m, "Unitary2")
        .def(py::init([](const std::array<std::array<Complex, 2>, 2>& entries) {
                 Unitary2 u{entries};
                 u.validate();
                 return u;
             }),
             py::arg("entries"))
        .def_static("identity", &Unitary2::identity)
        .def_readonly("m", &Unitary2::m);

    py::class_<SampleSeed>(m, "SampleSeed")
        .def(py::init([](std::uint64_t seed, std::uint64_t stream) {
                 return SampleSeed{seed, stream};
             }),
             py::arg("seed"), py::arg("stream") = 0)
        .def_readonly("seed", &SampleSeed::seed)
        .def_readonly("stream", &SampleSeed::stream);

    m.def("build_state", &build_state, py::arg("params"), py::arg("basis"),
          py::arg("tol_triality") = kTolTriality, py::arg("tol_norm") = kTolNorm);
    m.def("extract_params", &extract_params, py::arg("state"), py::arg("tol_norm") = kTolNorm);
    m.def("concurrence", &concurrence, py::arg("state"), py::arg("tol_norm") = kTolNorm);
    m.def("triality_residual", &triality_residual, py::arg("state"),
          py::arg("tol_norm") = kTolNorm);
    m.def("swap_paths", &swap_paths, py::arg("state"));
    m.def("path_conditional_basis", &path_conditional_basis, py::arg("state"), py::arg("path"),
          py::arg("tol_norm") = kTolNorm);

    m.def("trace_distance", &trace_distance, py::arg("rho0"), py::arg("rho1"),
          py::arg("tol") = kTolNorm);
    m.def("englert_visibility", &englert_visibility, py::arg("u0"), py::arg("u1"),
          py::arg("rho_i"), py::arg("tol") = kTolNorm);
    m.def("wwd_duality_pair", &wwd_duality_pair, py::arg("u0"), py::arg("u1"), py::arg("rho_i"),
          py::arg("tol") = kTolNorm);

    m.def("overlap_bruteforce", &overlap_bruteforce, py::arg("s1"), py::arg("s2"),
          py::arg("tol_norm") = kTolNorm);
    m.def("bures_distance", &bures_distance, py::arg("s1"), py::arg("s2"),
          py::arg("tol_norm") = kTolNorm);
    m.def("realize_pair", &realize_pair, py::arg("p1"), py::arg("p2"), py::arg("overlap"));
    m.def("relative_overlap_params", &relative_overlap_params, py::arg("b1"), py::arg("b2"),
          py::arg("tol_norm") = kTolNorm);
    m.def("overlap_closed_form", &overlap_closed_form, py::arg("p1"), py::arg("p2"),
          py::arg("overlap"));
    m.def("particle_distance", &particle_distance, py::arg("gamma"), py::arg("dbar"));
    m.def("min_particle_distance", &min_particle_distance, py::arg("state"),
          py::arg("tol_norm") = kTolNorm);

    m.def("haar_random_state", &haar_random_state, py::arg("key"));
    m.def("random_state_fixed_d", &random_state_fixed_d, py::arg("dbar"), py::arg("key"));
    m.def("random_wwd_instance", &random_wwd_instance, py::arg("key"), py::arg("pure"));
}
