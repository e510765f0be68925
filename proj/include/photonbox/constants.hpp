#pragma once

#include <optional>
#include <string>

namespace photonbox {

/*!
 * Physical constants in CGS units.
 *
 * Defaults are CODATA 2018. The thermal length scale B = hbar c / k_B is
 * derived unless explicitly overridden.
 */
struct PhysicalConstants
{
    double hbar = 1.054571817e-27;  // erg s
    double c = 2.99792458e10;  // cm / s
    double k_B = 1.380649e-16;  // erg / K
    std::optional<double> B_override;  // cm K

    /// hbar c / k_B in cm K (about 0.2290).
    double B() const;
    /// Stefan-Boltzmann constant in erg / (s cm^2 K^4).
    double sigma() const;

    /// Reduced temperature t = T a / B.
    double reduced_temperature(double T_kelvin, double a_cm) const;
    /// Absolute temperature in K for reduced temperature t and length scale a.
    double temperature(double t, double a_cm) const;

    double energy_erg(double E_red, double T_kelvin) const;
    double entropy_erg_per_K(double S_red) const;
    double pressure_dyn_per_cm2(double p_red, double T_kelvin,
                                double volume_cm3) const;

    /*!
     * Load overrides from a JSON object.
     *
     * Recognized keys: "hbar_erg_s", "c_cm_s", "k_B_erg_per_K", "B_cm_K".
     * Missing keys keep their defaults; unknown keys are rejected.
     */
    static PhysicalConstants from_json_file(std::string const& path);
};

}  // namespace photonbox
