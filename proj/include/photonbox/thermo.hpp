#pragma once

#include <variant>

#include "photonbox/geometry.hpp"

namespace photonbox {

/// Sum modes up to a fixed normalized frequency, smooth tail above it.
struct FixedCutoff
{
    double omega = 0;
};

/// Grow the cutoff until the selected quantity stops changing.
struct AdaptiveCutoff
{
    double tolerance = 1e-8;
};

using CutoffPolicy = std::variant<FixedCutoff, AdaptiveCutoff>;

/// Quantity watched by the adaptive cutoff.
enum class Quantity
{
    free_energy,
    energy,
    entropy,
    photon_number,
    heat_capacity,
    phi,
    all,  // F, E and N together
};

/*!
 * Evaluation context: a cavity at reduced temperature t = T a / B.
 *
 * Thermodynamics of a given shape depends on temperature and size only
 * through t.
 */
class ThermoState
{
  public:
    ThermoState(CuboidGeometry geom, double t, CutoffPolicy policy = AdaptiveCutoff{});

    CuboidGeometry const& geometry() const noexcept { return geom_; }
    double t() const noexcept { return t_; }
    CutoffPolicy const& policy() const noexcept { return policy_; }

    ThermoState with_t(double t) const { return {geom_, t, policy_}; }
    ThermoState with_cutoff(double omega) const { return {geom_, t_, FixedCutoff{omega}}; }

  private:
    CuboidGeometry geom_;
    double t_;
    CutoffPolicy policy_;
};

/// Thermodynamic functions of one state, all dimensionless.
struct ThermoReport
{
    double F_red = 0;  // F / (k_B T)
    double E_red = 0;  // E / (k_B T)
    double S_red = 0;  // S / k_B
    double N = 0;  // mean photon number
    double C_red = 0;  // C_V / k_B
    double px_red = 0;  // p_x V / (k_B T)
    double py_red = 0;
    double pz_red = 0;
    double phi = 0;  // E over its Stefan-Boltzmann value
    double omega_e = 0;  // cutoff actually used

    /// Fixed-shape volume-derivative pressure, p V / (k_B T) = E_red / 3.
    double p_red() const noexcept { return E_red / 3; }
};

/*!
 * Threads used inside a single large evaluation. 0 restores the default,
 * PHOTONBOX_THREADS or the hardware concurrency. Results are bit-identical
 * for every setting.
 */
void set_evaluation_threads(unsigned threads);
unsigned evaluation_threads();

/// Stefan-Boltzmann energy pi^2 t^3 / 15 in units of k_B T.
double stefan_boltzmann_energy(double t);

/// All functions at a fixed cutoff (no policy involved).
ThermoReport evaluate_at_cutoff(CuboidGeometry const& geom, double t, double omega_e);

/// All functions; an adaptive policy converges on the selected quantity.
ThermoReport evaluate(ThermoState const& state, Quantity converge_on = Quantity::all);

struct CutoffResult
{
    double value = 0;
    double omega_e = 0;
};

/*!
 * Adaptive cutoff search.
 *
 * Starts at max(4 pi, 8 t) and multiplies by 1.5 until the quantity changes
 * by less than the tolerance on two consecutive enlargements. Returns the
 * last value and cutoff. With a fixed policy it simply evaluates.
 * Throws CutoffTooLarge when the mode budget is exhausted first.
 */
CutoffResult auto_cutoff(ThermoState const& state, Quantity quantity);

double free_energy(ThermoState const& state);
double internal_energy(ThermoState const& state);
double entropy(ThermoState const& state);
double photon_number(ThermoState const& state);
double heat_capacity(ThermoState const& state);
double phi(ThermoState const& state);

struct FacePressures
{
    double px = 0;
    double py = 0;
    double pz = 0;
};

/// Face pressures p_i V / (k_B T); they always sum to E_red.
FacePressures face_pressures(ThermoState const& state);

struct ShapeForces
{
    double alpha = 0;
    double beta = 0;
};

/*!
 * Conjugate forces dF/dalpha and dF/dbeta at fixed t and volume, in units
 * of k_B T.
 *
 * Centered differences with relative step `rel_step`; the cutoff is frozen
 * at the base state's value across the stencil.
 */
ShapeForces shape_forces(ThermoState const& state, double rel_step = 1e-4);

}  // namespace photonbox
