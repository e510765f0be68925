#include "photonbox/experiments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "photonbox/errors.hpp"

namespace photonbox {

namespace {

struct EntropySolution
{
    double t = 0;
    double omega_e = 0;
    int iterations = 0;
    ThermoReport report;  // at t, with omega_e
};

[[noreturn]] void fail(char const* what, CuboidGeometry const& geom, double S_target,
                       double lo, double hi)
{
    std::ostringstream os;
    os.precision(17);
    os << "entropy solver: " << what << " (shape alpha=" << geom.alpha()
       << " beta=" << geom.beta() << ", S_target=" << S_target << ", bracket=[" << lo
       << ", " << hi << "])";
    throw SolverFailure(os.str());
}

// Safeguarded Newton on S(t) - S_target with dS/dt = C_red / t. The bracket
// starts as (0, hot end]; a step that leaves it is replaced by bisection.
EntropySolution solve_entropy(CuboidGeometry const& geom, double S_target, double t_hint,
                              ThermoReport hot, AdaptiveCutoff cutoff,
                              SolverOptions const& opts)
{
    double hi = t_hint;
    for (int expansions = 0; hot.S_red < S_target; ++expansions)
    {
        if (expansions >= opts.max_expansions)
            fail("could not bracket from above", geom, S_target, t_hint, hi);
        hi *= 2;
        hot = evaluate(ThermoState(geom, hi, cutoff), Quantity::entropy);
    }

    // Colder states converge at least as fast with this cutoff, and S(t) at
    // a frozen cutoff is smooth.
    double const omega_e = hot.omega_e;
    double lo = 0;
    double t = hi;
    ThermoReport report = hot;
    for (int iteration = 1; iteration <= opts.max_iterations; ++iteration)
    {
        double const r = report.S_red - S_target;
        if (std::abs(r) <= opts.entropy_tolerance * S_target)
            return {t, omega_e, iteration, report};
        if (r > 0)
            hi = t;
        else
            lo = t;
        double const slope = report.C_red / t;
        double next = t - r / slope;
        if (!(slope > 0) || !(next > lo && next < hi))
            next = lo + (hi - lo) / 2;
        if (std::abs(next - t) <= opts.rel_tolerance * t || hi - lo <= opts.rel_tolerance * t)
            return {t, omega_e, iteration, report};
        t = next;
        report = evaluate_at_cutoff(geom, t, omega_e);
    }
    fail("no convergence within the iteration limit", geom, S_target, lo, hi);
}

void check_solver_input(double S_target, double t_hint)
{
    if (!(S_target > 0) || !std::isfinite(S_target))
        throw std::invalid_argument("target entropy must be positive and finite");
    if (!(t_hint > 0) || !std::isfinite(t_hint))
        throw std::invalid_argument("temperature hint must be positive and finite");
}

void check_grid(std::span<double const> grid, char const* name)
{
    if (grid.empty())
        throw std::invalid_argument(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (!(grid[i] > 0) || !std::isfinite(grid[i]))
            throw std::invalid_argument(std::string(name) + " grid values must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument(std::string(name) + " grid must increase strictly");
    }
}

void check_merge_input(Arrangement arrangement, double t, double cube_edge)
{
    if (arrangement.mx < 1 || arrangement.my < 1 || arrangement.mz < 1)
        throw std::invalid_argument("arrangement needs at least one cube per axis");
    if (!(t > 0) || !std::isfinite(t))
        throw std::invalid_argument("reduced temperature must be positive and finite");
    if (!(cube_edge > 0) || !std::isfinite(cube_edge))
        throw std::invalid_argument("cube edge must be positive and finite");
}

}  // namespace

double solve_temperature_for_entropy(CuboidGeometry const& geom, double S_target, double t_hint,
                                     AdaptiveCutoff cutoff, SolverOptions const& opts)
{
    check_solver_input(S_target, t_hint);
    ThermoReport const hot = evaluate(ThermoState(geom, t_hint, cutoff), Quantity::entropy);
    return solve_entropy(geom, S_target, t_hint, hot, cutoff, opts).t;
}

namespace {

MergeResult merge(Arrangement arrangement, double t, double cube_edge, MergeOptions const& opts,
                  bool adiabatic, bool isothermal)
{
    check_merge_input(arrangement, t, cube_edge);
    MergeResult result;
    result.t = t;
    result.t_prime = t;
    int const cubes = arrangement.cubes();
    if (cubes == 1)
        return result;

    auto const cube = CuboidGeometry::cube(cube_edge);
    auto const merged = merge_grid(arrangement.mx, arrangement.my, arrangement.mz, cube_edge);
    ThermoReport const single = evaluate(ThermoState(cube, t, opts.cutoff));
    // same absolute temperature, larger volume scale
    double const t_same_T = t * std::cbrt(double(cubes));
    ThermoReport const same_T = evaluate(ThermoState(merged, t_same_T, opts.cutoff));

    if (isothermal)
        result.dE_iso = (same_T.E_red - cubes * single.E_red)
                        / (cubes * stefan_boltzmann_energy(t));
    if (adiabatic)
    {
        if (!(single.S_red > 0))
            throw SolverFailure("cube entropy underflows at this temperature");
        double const S_total = cubes * single.S_red;
        auto const solution =
            solve_entropy(merged, S_total, t_same_T, same_T, opts.cutoff, opts.solver);
        result.t_prime = solution.t;
        result.T_ratio = solution.t / t_same_T;
        result.N_ratio = solution.report.N / (cubes * single.N);
        result.entropy_residual = std::abs(solution.report.S_red - S_total) / S_total;
    }
    return result;
}

}  // namespace

MergeResult adiabatic_merge(Arrangement arrangement, double t, double cube_edge,
                            MergeOptions const& opts)
{
    return merge(arrangement, t, cube_edge, opts, true, false);
}

MergeResult adiabatic_merge(int cubes, double t, double cube_edge, MergeOptions const& opts)
{
    return adiabatic_merge(Arrangement::inline_row(cubes), t, cube_edge, opts);
}

MergeResult isothermal_merge(Arrangement arrangement, double t, double cube_edge,
                             MergeOptions const& opts)
{
    return merge(arrangement, t, cube_edge, opts, false, true);
}

MergeResult isothermal_merge(int cubes, double t, double cube_edge, MergeOptions const& opts)
{
    return isothermal_merge(Arrangement::inline_row(cubes), t, cube_edge, opts);
}

MergeResult merge_effects(Arrangement arrangement, double t, double cube_edge,
                          MergeOptions const& opts)
{
    return merge(arrangement, t, cube_edge, opts, true, true);
}

std::vector<SweepRow> energy_curve(double alpha, double beta, std::span<double const> t_grid,
                                   CutoffPolicy policy, unsigned threads)
{
    check_grid(t_grid, "reduced temperature");
    auto const geom = CuboidGeometry::from_shape(alpha, beta, 1.0);
    return parallel_map<SweepRow>(t_grid.size(), threads, [&](std::size_t i) {
        SweepRow row;
        row.t = t_grid[i];
        row.report = evaluate(ThermoState(geom, t_grid[i], policy));
        return row;
    });
}

std::vector<PressureRow> pressure_curve(CuboidGeometry const& geom_cm,
                                        std::span<double const> T_grid_kelvin,
                                        PhysicalConstants const& constants,
                                        CutoffPolicy policy, unsigned threads)
{
    check_grid(T_grid_kelvin, "temperature");
    double const a = geom_cm.scale();
    return parallel_map<PressureRow>(T_grid_kelvin.size(), threads, [&](std::size_t i) {
        PressureRow row;
        row.T_kelvin = T_grid_kelvin[i];
        row.t = constants.reduced_temperature(row.T_kelvin, a);
        row.report = evaluate(ThermoState(geom_cm, row.t, policy));
        double const p_av = row.report.p_red();
        row.px_over_pav = row.report.px_red / p_av;
        row.py_over_pav = row.report.py_red / p_av;
        row.pz_over_pav = row.report.pz_red / p_av;
        return row;
    });
}

std::vector<MergeResult> merge_sweep(Arrangement arrangement, std::span<double const> t_grid,
                                     double cube_edge, MergeOptions const& opts,
                                     unsigned threads)
{
    check_grid(t_grid, "reduced temperature");
    return parallel_map<MergeResult>(t_grid.size(), threads, [&](std::size_t i) {
        return merge_effects(arrangement, t_grid[i], cube_edge, opts);
    });
}

}  // namespace photonbox
