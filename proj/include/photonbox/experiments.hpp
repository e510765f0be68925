#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "photonbox/constants.hpp"
#include "photonbox/geometry.hpp"
#include "photonbox/thermo.hpp"

namespace photonbox {

/// How M cubes are stacked before the partitions are removed.
struct Arrangement
{
    int mx = 1;
    int my = 1;
    int mz = 1;

    int cubes() const noexcept { return mx * my * mz; }
    static Arrangement inline_row(int cubes) { return {cubes, 1, 1}; }
};

struct SolverOptions
{
    /// Relative step (or bracket width) on t' that counts as converged.
    double rel_tolerance = 1e-14;
    /// Relative entropy residual that also counts as converged.
    double entropy_tolerance = 1e-13;
    int max_iterations = 200;
    /// Doublings of the hint allowed while searching for the hot end.
    int max_expansions = 60;
};

struct MergeOptions
{
    AdaptiveCutoff cutoff{};
    SolverOptions solver{};
};

/// Effects of removing the partitions of M identical cubes at reduced temperature t.
struct MergeResult
{
    double t = 0;  // reduced temperature of one initial cube
    double T_ratio = 1;  // T' / T after adiabatic removal
    double N_ratio = 1;  // N_merged(T') / (M N_cube(T))
    double dE_iso = 0;  // isothermal energy supply over M E_SB
    double t_prime = 0;  // merged cavity reduced temperature after adiabatic removal
    double entropy_residual = 0;  // |S_merged(t') - M S_cube(t)| / (M S_cube(t))

    double T_drop() const noexcept { return 1 - T_ratio; }
    /// Absolute drop (T - T') a / B in units of the cube's length scale.
    double T_drop_reduced() const noexcept { return t * (1 - T_ratio); }
};

/*!
 * Reduced temperature at which the cavity holds entropy S_target.
 *
 * S_red(t) increases strictly, so the root is unique. The hint is doubled
 * until S_red reaches the target; the cutoff converged there is then
 * frozen and the root is polished by Newton steps (slope C_red / t) that
 * fall back to bisection whenever they leave the bracket. Throws
 * SolverFailure with diagnostics.
 */
double solve_temperature_for_entropy(CuboidGeometry const& geom, double S_target,
                                     double t_hint, AdaptiveCutoff cutoff = {},
                                     SolverOptions const& opts = {});

/// Adiabatic partition removal: fills t, T_ratio, N_ratio, t_prime, entropy_residual.
MergeResult adiabatic_merge(Arrangement arrangement, double t, double cube_edge,
                            MergeOptions const& opts = {});
MergeResult adiabatic_merge(int cubes, double t, double cube_edge,
                            MergeOptions const& opts = {});

/// Isothermal partition removal: fills t and dE_iso.
MergeResult isothermal_merge(Arrangement arrangement, double t, double cube_edge,
                             MergeOptions const& opts = {});
MergeResult isothermal_merge(int cubes, double t, double cube_edge,
                             MergeOptions const& opts = {});

/// Both removals at once; shares the merged-cavity evaluation at the initial T.
MergeResult merge_effects(Arrangement arrangement, double t, double cube_edge,
                          MergeOptions const& opts = {});

struct SweepRow
{
    double t = 0;
    std::optional<double> T_kelvin;
    ThermoReport report;
};

/// Rows per t for the cuboid of shape (alpha, beta); the grid must increase strictly.
std::vector<SweepRow> energy_curve(double alpha, double beta, std::span<double const> t_grid,
                                   CutoffPolicy policy = AdaptiveCutoff{},
                                   unsigned threads = 0);

struct PressureRow
{
    double T_kelvin = 0;
    double t = 0;
    double px_over_pav = 1;
    double py_over_pav = 1;
    double pz_over_pav = 1;
    ThermoReport report;
};

/// Face pressures over p_av = E / (3 V) for a cavity with edges in cm.
std::vector<PressureRow> pressure_curve(CuboidGeometry const& geom_cm,
                                        std::span<double const> T_grid_kelvin,
                                        PhysicalConstants const& constants = {},
                                        CutoffPolicy policy = AdaptiveCutoff{},
                                        unsigned threads = 0);

/// Adiabatic and isothermal effects at each t of the grid.
std::vector<MergeResult> merge_sweep(Arrangement arrangement, std::span<double const> t_grid,
                                     double cube_edge, MergeOptions const& opts = {},
                                     unsigned threads = 0);

/*!
 * Evaluate fn(i) for i in [0, count) on up to `threads` workers
 * (0 = hardware concurrency) and return results in index order.
 */
template<class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn&& fn);

}  // namespace photonbox

#include "photonbox/detail/parallel_map.hpp"
