"""Thermodynamics of a photon gas in a finite cuboid cavity."""

from ._core import (
    AdaptiveCutoff,
    Arrangement,
    CuboidGeometry,
    CutoffTooLarge,
    FixedCutoff,
    MergeResult,
    ModeRecord,
    PhysicalConstants,
    PressureRow,
    SolverFailure,
    SweepRow,
    TailKind,
    ThermoReport,
    adiabatic_merge,
    energy_curve,
    enumerate_modes,
    evaluate,
    face_pressures,
    isothermal_merge,
    merge_effects,
    merge_inline,
    normalized_frequency,
    occupancy,
    polarization_degeneracy,
    pressure_curve,
    shape_forces,
    solve_temperature_for_entropy,
    stefan_boltzmann_energy,
    tail_integral,
    __version__,
)

__all__ = [
    "AdaptiveCutoff",
    "Arrangement",
    "CuboidGeometry",
    "CutoffTooLarge",
    "FixedCutoff",
    "MergeResult",
    "ModeRecord",
    "PhysicalConstants",
    "PressureRow",
    "SolverFailure",
    "SweepRow",
    "TailKind",
    "ThermoReport",
    "adiabatic_merge",
    "energy_curve",
    "enumerate_modes",
    "evaluate",
    "face_pressures",
    "isothermal_merge",
    "merge_effects",
    "merge_inline",
    "normalized_frequency",
    "occupancy",
    "polarization_degeneracy",
    "pressure_curve",
    "shape_forces",
    "solve_temperature_for_entropy",
    "stefan_boltzmann_energy",
    "tail_integral",
]
