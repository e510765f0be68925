#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "photonbox/bose.hpp"
#include "photonbox/constants.hpp"
#include "photonbox/errors.hpp"
#include "photonbox/experiments.hpp"
#include "photonbox/geometry.hpp"
#include "photonbox/spectrum.hpp"
#include "photonbox/thermo.hpp"

namespace py = pybind11;
using namespace photonbox;

namespace {

std::tuple<int, int, int> as_tuple(ModeIndex n)
{
    return {n.nx, n.ny, n.nz};
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Photon gas thermodynamics in a finite cuboid cavity";
    m.attr("__version__") = "0.1.0";

    py::register_exception<CutoffTooLarge>(m, "CutoffTooLarge", PyExc_RuntimeError);
    py::register_exception<SolverFailure>(m, "SolverFailure", PyExc_RuntimeError);

    py::class_<CuboidGeometry>(m, "CuboidGeometry")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_static("from_shape", &CuboidGeometry::from_shape, py::arg("alpha"),
                    py::arg("beta"), py::arg("a"))
        .def_static("cube", &CuboidGeometry::cube, py::arg("edge"))
        .def_property_readonly("x", &CuboidGeometry::x)
        .def_property_readonly("y", &CuboidGeometry::y)
        .def_property_readonly("z", &CuboidGeometry::z)
        .def_property_readonly("alpha", &CuboidGeometry::alpha)
        .def_property_readonly("beta", &CuboidGeometry::beta)
        .def_property_readonly("volume", &CuboidGeometry::volume)
        .def_property_readonly("scale", &CuboidGeometry::scale)
        .def("__repr__", [](CuboidGeometry const& g) {
            return "CuboidGeometry(" + std::to_string(g.x()) + ", " + std::to_string(g.y())
                   + ", " + std::to_string(g.z()) + ")";
        });

    m.def("merge_inline", &merge_inline, py::arg("cubes"), py::arg("cube_edge"));

    py::class_<ModeRecord>(m, "ModeRecord")
        .def_property_readonly("n", [](ModeRecord const& r) { return as_tuple(r.n); })
        .def_readonly("degeneracy", &ModeRecord::degeneracy)
        .def_readonly("omega", &ModeRecord::omega);

    m.def(
        "polarization_degeneracy",
        [](int nx, int ny, int nz) { return polarization_degeneracy({nx, ny, nz}); },
        py::arg("nx"), py::arg("ny"), py::arg("nz"),
        "1 or 2 polarizations, or None when the triple is not a mode");
    m.def(
        "normalized_frequency",
        [](int nx, int ny, int nz, CuboidGeometry const& g) {
            return normalized_frequency({nx, ny, nz}, g);
        },
        py::arg("nx"), py::arg("ny"), py::arg("nz"), py::arg("geometry"));
    m.def(
        "enumerate_modes",
        [](CuboidGeometry const& g, double cutoff) { return enumerate_modes(g, cutoff); },
        py::arg("geometry"), py::arg("cutoff"));

    py::enum_<TailKind>(m, "TailKind")
        .value("free", TailKind::free)
        .value("energy", TailKind::energy)
        .value("number", TailKind::number)
        .value("heat", TailKind::heat);
    m.def("occupancy", &occupancy, py::arg("x"));
    m.def("tail_integral", &tail_integral, py::arg("kind"), py::arg("x_e"));

    py::class_<FixedCutoff>(m, "FixedCutoff")
        .def(py::init([](double omega) { return FixedCutoff{omega}; }), py::arg("omega"))
        .def_readwrite("omega", &FixedCutoff::omega);
    py::class_<AdaptiveCutoff>(m, "AdaptiveCutoff")
        .def(py::init([](double tol) { return AdaptiveCutoff{tol}; }),
             py::arg("tolerance") = 1e-8)
        .def_readwrite("tolerance", &AdaptiveCutoff::tolerance);

    py::class_<ThermoReport>(m, "ThermoReport")
        .def_readonly("F_red", &ThermoReport::F_red)
        .def_readonly("E_red", &ThermoReport::E_red)
        .def_readonly("S_red", &ThermoReport::S_red)
        .def_readonly("N", &ThermoReport::N)
        .def_readonly("C_red", &ThermoReport::C_red)
        .def_readonly("px_red", &ThermoReport::px_red)
        .def_readonly("py_red", &ThermoReport::py_red)
        .def_readonly("pz_red", &ThermoReport::pz_red)
        .def_readonly("phi", &ThermoReport::phi)
        .def_readonly("omega_e", &ThermoReport::omega_e)
        .def_property_readonly("p_red", &ThermoReport::p_red);

    m.def("stefan_boltzmann_energy", &stefan_boltzmann_energy, py::arg("t"));
    m.def(
        "evaluate",
        [](CuboidGeometry const& g, double t, CutoffPolicy policy) {
            return evaluate(ThermoState(g, t, policy));
        },
        py::arg("geometry"), py::arg("t"), py::arg("policy") = CutoffPolicy{AdaptiveCutoff{}},
        "All thermodynamic functions of the cavity at reduced temperature t");
    m.def(
        "face_pressures",
        [](CuboidGeometry const& g, double t, CutoffPolicy policy) {
            auto p = face_pressures(ThermoState(g, t, policy));
            return std::make_tuple(p.px, p.py, p.pz);
        },
        py::arg("geometry"), py::arg("t"), py::arg("policy") = CutoffPolicy{AdaptiveCutoff{}});
    m.def(
        "shape_forces",
        [](CuboidGeometry const& g, double t, CutoffPolicy policy) {
            auto f = shape_forces(ThermoState(g, t, policy));
            return std::make_tuple(f.alpha, f.beta);
        },
        py::arg("geometry"), py::arg("t"), py::arg("policy") = CutoffPolicy{AdaptiveCutoff{}});

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_readwrite("k_B", &PhysicalConstants::k_B)
        .def_property_readonly("B", &PhysicalConstants::B)
        .def_property_readonly("sigma", &PhysicalConstants::sigma)
        .def("reduced_temperature", &PhysicalConstants::reduced_temperature,
             py::arg("T_kelvin"), py::arg("a_cm"));

    py::class_<Arrangement>(m, "Arrangement")
        .def(py::init([](int mx, int my, int mz) { return Arrangement{mx, my, mz}; }),
             py::arg("mx"), py::arg("my") = 1, py::arg("mz") = 1)
        .def_property_readonly("cubes", &Arrangement::cubes);

    py::class_<MergeResult>(m, "MergeResult")
        .def_readonly("t", &MergeResult::t)
        .def_readonly("T_ratio", &MergeResult::T_ratio)
        .def_readonly("N_ratio", &MergeResult::N_ratio)
        .def_readonly("dE_iso", &MergeResult::dE_iso)
        .def_readonly("t_prime", &MergeResult::t_prime)
        .def_readonly("entropy_residual", &MergeResult::entropy_residual)
        .def_property_readonly("T_drop", &MergeResult::T_drop)
        .def_property_readonly("T_drop_reduced", &MergeResult::T_drop_reduced);

    m.def(
        "solve_temperature_for_entropy",
        [](CuboidGeometry const& g, double S_target, double t_hint, double tol) {
            return solve_temperature_for_entropy(g, S_target, t_hint, AdaptiveCutoff{tol});
        },
        py::arg("geometry"), py::arg("S_target"), py::arg("t_hint") = 1.0,
        py::arg("tolerance") = 1e-8);
    m.def(
        "adiabatic_merge",
        [](Arrangement arr, double t, double edge, double tol) {
            MergeOptions opts;
            opts.cutoff.tolerance = tol;
            return adiabatic_merge(arr, t, edge, opts);
        },
        py::arg("arrangement"), py::arg("t"), py::arg("cube_edge") = 1.0,
        py::arg("tolerance") = 1e-8);
    m.def(
        "merge_effects",
        [](Arrangement arr, double t, double edge, double tol) {
            MergeOptions opts;
            opts.cutoff.tolerance = tol;
            py::gil_scoped_release release;
            return merge_effects(arr, t, edge, opts);
        },
        py::arg("arrangement"), py::arg("t"), py::arg("cube_edge") = 1.0,
        py::arg("tolerance") = 1e-8);
    m.def(
        "isothermal_merge",
        [](Arrangement arr, double t, double edge, double tol) {
            MergeOptions opts;
            opts.cutoff.tolerance = tol;
            return isothermal_merge(arr, t, edge, opts);
        },
        py::arg("arrangement"), py::arg("t"), py::arg("cube_edge") = 1.0,
        py::arg("tolerance") = 1e-8);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("t", &SweepRow::t)
        .def_readonly("T_kelvin", &SweepRow::T_kelvin)
        .def_readonly("report", &SweepRow::report);
    py::class_<PressureRow>(m, "PressureRow")
        .def_readonly("T_kelvin", &PressureRow::T_kelvin)
        .def_readonly("t", &PressureRow::t)
        .def_readonly("px_over_pav", &PressureRow::px_over_pav)
        .def_readonly("py_over_pav", &PressureRow::py_over_pav)
        .def_readonly("pz_over_pav", &PressureRow::pz_over_pav)
        .def_readonly("report", &PressureRow::report);

    m.def(
        "energy_curve",
        [](double alpha, double beta, std::vector<double> const& t_grid, CutoffPolicy policy) {
            py::gil_scoped_release release;
            return energy_curve(alpha, beta, t_grid, policy);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("t_grid"),
        py::arg("policy") = CutoffPolicy{AdaptiveCutoff{}});
    m.def(
        "pressure_curve",
        [](CuboidGeometry const& g, std::vector<double> const& T_grid,
           PhysicalConstants const& constants, CutoffPolicy policy) {
            py::gil_scoped_release release;
            return pressure_curve(g, T_grid, constants, policy);
        },
        py::arg("geometry_cm"), py::arg("T_grid_kelvin"),
        py::arg("constants") = PhysicalConstants{},
        py::arg("policy") = CutoffPolicy{AdaptiveCutoff{}});
}
