#include "photonbox/constants.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace photonbox {

double PhysicalConstants::B() const
{
    if (B_override)
        return *B_override;
    return hbar * c / k_B;
}

double PhysicalConstants::sigma() const
{
    double const pi2 = std::numbers::pi * std::numbers::pi;
    return pi2 * std::pow(k_B, 4) / (60 * std::pow(hbar, 3) * c * c);
}

double PhysicalConstants::reduced_temperature(double T_kelvin, double a_cm) const
{
    return T_kelvin * a_cm / B();
}

double PhysicalConstants::temperature(double t, double a_cm) const
{
    return t * B() / a_cm;
}

double PhysicalConstants::energy_erg(double E_red, double T_kelvin) const
{
    return E_red * k_B * T_kelvin;
}

double PhysicalConstants::entropy_erg_per_K(double S_red) const
{
    return S_red * k_B;
}

double PhysicalConstants::pressure_dyn_per_cm2(double p_red, double T_kelvin,
                                               double volume_cm3) const
{
    return p_red * k_B * T_kelvin / volume_cm3;
}

PhysicalConstants PhysicalConstants::from_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open constants file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_object())
        throw std::runtime_error("constants file must hold a JSON object: " + path);

    PhysicalConstants result;
    for (auto const& [key, value] : doc.items())
    {
        if (!value.is_number())
            throw std::runtime_error("constant '" + key + "' is not a number");
        double v = value.get<double>();
        if (!(v > 0) || !std::isfinite(v))
            throw std::runtime_error("constant '" + key + "' must be positive");
        if (key == "hbar_erg_s")
            result.hbar = v;
        else if (key == "c_cm_s")
            result.c = v;
        else if (key == "k_B_erg_per_K")
            result.k_B = v;
        else if (key == "B_cm_K")
            result.B_override = v;
        else
            throw std::runtime_error("unknown constant '" + key + "'");
    }
    return result;
}

}  // namespace photonbox
