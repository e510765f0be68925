#include "photonbox/thermo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "photonbox/bose.hpp"
#include "photonbox/detail/parallel_map.hpp"
#include "photonbox/spectrum.hpp"
#include "photonbox/summation.hpp"

namespace photonbox {

ThermoState::ThermoState(CuboidGeometry geom, double t, CutoffPolicy policy)
    : geom_{geom}, t_{t}, policy_{policy}
{
    if (!(t > 0) || !std::isfinite(t))
        throw std::invalid_argument("reduced temperature must be positive and finite");
    if (auto const* fixed = std::get_if<FixedCutoff>(&policy_))
    {
        if (!(fixed->omega >= 0) || !std::isfinite(fixed->omega))
            throw std::invalid_argument("fixed cutoff must be non-negative and finite");
    }
    else
    {
        double eps = std::get<AdaptiveCutoff>(policy_).tolerance;
        if (!(eps > 0 && eps < 1e-2))
            throw std::invalid_argument("adaptive cutoff tolerance must lie in (0, 1e-2)");
    }
}

namespace {

unsigned initial_threads()
{
    if (char const* env = std::getenv("PHOTONBOX_THREADS"))
    {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& thread_setting()
{
    static std::atomic<unsigned> threads{initial_threads()};
    return threads;
}

}  // namespace

void set_evaluation_threads(unsigned threads)
{
    thread_setting() = threads == 0 ? initial_threads() : threads;
}

unsigned evaluation_threads()
{
    return thread_setting();
}

double stefan_boltzmann_energy(double t)
{
    return std::numbers::pi * std::numbers::pi * t * t * t / 15;
}

namespace {

// exp(-x) is exactly zero beyond this, so such modes add nothing.
constexpr double negligible_x = 746;

struct ModeSums
{
    CompensatedSum free;
    CompensatedSum energy;
    CompensatedSum number;
    CompensatedSum heat;
    // sum g n(x) k_i^2 / omega, divided by t on assembly
    CompensatedSum px;
    CompensatedSum py;
    CompensatedSum pz;

    ModeSums& operator+=(ModeSums const& o)
    {
        free += o.free;
        energy += o.energy;
        number += o.number;
        heat += o.heat;
        px += o.px;
        py += o.py;
        pz += o.pz;
        return *this;
    }
};

// ln(1 - e^{-x}) and 1/(e^x - 1) from a single exponential.
inline void bose_terms(double x, double& log1m, double& occ)
{
    if (x <= std::numbers::ln2)
    {
        double const m = -std::expm1(-x);
        log1m = std::log(m);
        occ = (1 - m) / m;
        return;
    }
    double const e = std::exp(-x);
    log1m = std::log1p(-e);
    occ = e / (1 - e);
}

ModeSums accumulate_slab(FrequencyScale const& freq, double lower, double upper, double t,
                         int nx)
{
    ModeSums sums;
    double const x_limit = negligible_x * t;
    double const inv_t = 1 / t;
    for_each_mode_in_slab(freq, lower, upper, nx, [&](int, int ny, int nz, int g, double omega) {
        if (omega > x_limit)
            return;
        double const x = omega * inv_t;
        double const gd = g;
        double log1m = 0;
        double occ = 0;
        bose_terms(x, log1m, occ);
        double const gocc = gd * occ;
        sums.free += gd * log1m;
        sums.energy += x * gocc;
        sums.number += gocc;
        sums.heat += x * x * gocc * (1 + occ);
        double const w = gocc / omega;
        sums.px += w * freq.kx2(nx);
        sums.py += w * freq.ky2(ny);
        sums.pz += w * freq.kz2(nz);
    });
    return sums;
}

// Below this many modes a shell is summed on the calling thread.
constexpr double parallel_shell_modes = 2e6;

// Slabs of fixed nx are summed separately and combined in nx order, so the
// result does not depend on how many threads did the work.
ModeSums accumulate_shell(FrequencyScale const& freq, double lower, double upper, double t)
{
    ModeSums sums;
    if (!(upper > lower) || upper <= 0)
        return sums;
    int const nx_max = freq.max_nx(upper);
    auto slab = [&](std::size_t nx) {
        return accumulate_slab(freq, lower, upper, t, static_cast<int>(nx));
    };
    unsigned threads = evaluation_threads();
    if (smoothed_mode_count(upper) - smoothed_mode_count(lower) < parallel_shell_modes)
        threads = 1;
    if (threads <= 1)
    {
        for (int nx = 0; nx <= nx_max; ++nx)
            sums += slab(static_cast<std::size_t>(nx));
        return sums;
    }
    for (ModeSums const& part : parallel_map<ModeSums>(nx_max + 1, threads, slab))
        sums += part;
    return sums;
}

ThermoReport assemble(ModeSums const& sums, double t, double omega_e)
{
    double const x_e = omega_e / t;
    double const weight = t * t * t / (std::numbers::pi * std::numbers::pi);
    double const e_tail = weight * tail_integral(TailKind::energy, x_e);

    ThermoReport r;
    r.F_red = sums.free.value() + weight * tail_integral(TailKind::free, x_e);
    r.E_red = sums.energy.value() + e_tail;
    r.N = sums.number.value() + weight * tail_integral(TailKind::number, x_e);
    r.C_red = sums.heat.value() + weight * tail_integral(TailKind::heat, x_e);
    r.px_red = sums.px.value() / t + e_tail / 3;
    r.py_red = sums.py.value() / t + e_tail / 3;
    r.pz_red = sums.pz.value() / t + e_tail / 3;
    r.S_red = r.E_red - r.F_red;
    r.phi = r.E_red / stefan_boltzmann_energy(t);
    r.omega_e = omega_e;
    return r;
}

double relative_change(double now, double before)
{
    double scale = std::max(std::abs(now), std::abs(before));
    if (scale == 0)
        return 0;
    return std::abs(now - before) / scale;
}

double select(ThermoReport const& r, Quantity q)
{
    switch (q)
    {
        case Quantity::free_energy:
            return r.F_red;
        case Quantity::energy:
            return r.E_red;
        case Quantity::entropy:
            return r.S_red;
        case Quantity::photon_number:
            return r.N;
        case Quantity::heat_capacity:
            return r.C_red;
        case Quantity::phi:
            return r.phi;
        case Quantity::all:
            break;
    }
    throw std::invalid_argument("Quantity::all has no single value");
}

double change(ThermoReport const& now, ThermoReport const& before, Quantity q)
{
    if (q != Quantity::all)
        return relative_change(select(now, q), select(before, q));
    // S = E - F follows; C and the face pressures are derived at the same cutoff
    std::array<double, 3> deltas = {
        relative_change(now.F_red, before.F_red),
        relative_change(now.E_red, before.E_red),
        relative_change(now.N, before.N),
    };
    return *std::max_element(deltas.begin(), deltas.end());
}

ThermoReport converge(CuboidGeometry const& geom, double t, double tolerance, Quantity q)
{
    FrequencyScale const freq(geom);
    std::size_t const budget = mode_budget();

    // x_e = cutoff / t >= 8 from the start, well inside the fast tail series
    double cutoff = std::max(4 * std::numbers::pi, 8 * t);

    ModeSums sums;
    double previous_cutoff = 0;
    ThermoReport previous;
    int stable = 0;
    for (int step = 0;; ++step)
    {
        check_mode_budget(cutoff, budget);
        sums += accumulate_shell(freq, previous_cutoff, cutoff, t);
        ThermoReport current = assemble(sums, t, cutoff);
        if (step > 0)
        {
            stable = change(current, previous, q) < tolerance ? stable + 1 : 0;
            if (stable == 2)
                return current;
        }
        previous = current;
        previous_cutoff = cutoff;
        cutoff *= 1.5;
    }
}

}  // namespace

ThermoReport evaluate_at_cutoff(CuboidGeometry const& geom, double t, double omega_e)
{
    if (!(t > 0) || !std::isfinite(t))
        throw std::invalid_argument("reduced temperature must be positive and finite");
    if (!(omega_e >= 0) || !std::isfinite(omega_e))
        throw std::invalid_argument("cutoff must be non-negative and finite");
    check_mode_budget(omega_e, mode_budget());
    return assemble(accumulate_shell(FrequencyScale(geom), 0.0, omega_e, t), t, omega_e);
}

ThermoReport evaluate(ThermoState const& state, Quantity converge_on)
{
    if (auto const* fixed = std::get_if<FixedCutoff>(&state.policy()))
        return evaluate_at_cutoff(state.geometry(), state.t(), fixed->omega);
    double eps = std::get<AdaptiveCutoff>(state.policy()).tolerance;
    return converge(state.geometry(), state.t(), eps, converge_on);
}

CutoffResult auto_cutoff(ThermoState const& state, Quantity quantity)
{
    ThermoReport r = evaluate(state, quantity);
    if (quantity == Quantity::all)
        return {r.E_red, r.omega_e};
    return {select(r, quantity), r.omega_e};
}

double free_energy(ThermoState const& state)
{
    return auto_cutoff(state, Quantity::free_energy).value;
}

double internal_energy(ThermoState const& state)
{
    return auto_cutoff(state, Quantity::energy).value;
}

double entropy(ThermoState const& state)
{
    return auto_cutoff(state, Quantity::entropy).value;
}

double photon_number(ThermoState const& state)
{
    return auto_cutoff(state, Quantity::photon_number).value;
}

double heat_capacity(ThermoState const& state)
{
    return auto_cutoff(state, Quantity::heat_capacity).value;
}

double phi(ThermoState const& state)
{
    return auto_cutoff(state, Quantity::phi).value;
}

FacePressures face_pressures(ThermoState const& state)
{
    ThermoReport r = evaluate(state, Quantity::all);
    return {r.px_red, r.py_red, r.pz_red};
}

ShapeForces shape_forces(ThermoState const& state, double rel_step)
{
    if (!(rel_step > 0 && rel_step < 0.1))
        throw std::invalid_argument("shape force step must lie in (0, 0.1)");
    double omega_e = 0;
    if (auto const* fixed = std::get_if<FixedCutoff>(&state.policy()))
        omega_e = fixed->omega;
    else
        omega_e = auto_cutoff(state, Quantity::free_energy).omega_e;

    auto const& geom = state.geometry();
    double const alpha = geom.alpha();
    double const beta = geom.beta();
    double const a = geom.scale();
    double const t = state.t();
    auto free_at = [&](double al, double be) {
        return evaluate_at_cutoff(CuboidGeometry::from_shape(al, be, a), t, omega_e).F_red;
    };

    double const ha = rel_step * alpha;
    double const hb = rel_step * beta;
    ShapeForces forces;
    forces.alpha = (free_at(alpha + ha, beta) - free_at(alpha - ha, beta)) / (2 * ha);
    forces.beta = (free_at(alpha, beta + hb) - free_at(alpha, beta - hb)) / (2 * hb);
    return forces;
}

}  // namespace photonbox
