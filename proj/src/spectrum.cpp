#include "photonbox/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "photonbox/errors.hpp"

namespace photonbox {

std::optional<int> polarization_degeneracy(ModeIndex n)
{
    if (n.nx < 0 || n.ny < 0 || n.nz < 0)
        return std::nullopt;
    int zeros = (n.nx == 0) + (n.ny == 0) + (n.nz == 0);
    switch (zeros)
    {
        case 0:
            return 2;
        case 1:
            return 1;
        default:
            return std::nullopt;
    }
}

FrequencyScale::FrequencyScale(CuboidGeometry const& geom)
    : FrequencyScale(geom.alpha(), geom.beta())
{
}

FrequencyScale::FrequencyScale(double alpha, double beta)
{
    double ab13 = std::cbrt(alpha * beta);
    scale_ = std::numbers::pi / (ab13 * ab13);
    scale2_ = scale_ * scale_;
    cx_ = beta * beta;
    cy_ = alpha * alpha;
    cz_ = alpha * alpha * beta * beta;
}

namespace {
int axis_bound(double cutoff, double scale, double coeff)
{
    double bound = std::ceil(cutoff / (scale * std::sqrt(coeff))) + 1;
    if (bound > double(std::numeric_limits<int>::max() / 2))
        return std::numeric_limits<int>::max() / 2;
    return static_cast<int>(bound);
}
}  // namespace

int FrequencyScale::max_nx(double cutoff) const noexcept
{
    return axis_bound(cutoff, scale_, cx_);
}

int FrequencyScale::max_ny(double cutoff) const noexcept
{
    return axis_bound(cutoff, scale_, cy_);
}

int FrequencyScale::max_nz(double cutoff) const noexcept
{
    return axis_bound(cutoff, scale_, cz_);
}

double normalized_frequency(ModeIndex n, CuboidGeometry const& geom)
{
    if (!polarization_degeneracy(n))
        throw NotAMode("(" + std::to_string(n.nx) + ", " + std::to_string(n.ny) + ", "
                       + std::to_string(n.nz) + ") is not a cavity mode");
    return FrequencyScale(geom)(n.nx, n.ny, n.nz);
}

double smoothed_mode_count(double omega)
{
    return omega * omega * omega / (3 * std::numbers::pi * std::numbers::pi);
}

std::size_t predicted_mode_count(double cutoff)
{
    if (!(cutoff > 0))
        return 0;
    // records carry both polarizations at most, so about half the weighted count
    double estimate = 0.55 * smoothed_mode_count(cutoff) + 16;
    if (estimate >= double(std::numeric_limits<std::size_t>::max() / 2))
        return std::numeric_limits<std::size_t>::max() / 2;
    return static_cast<std::size_t>(estimate);
}

namespace {

std::size_t budget_from_env(char const* name, std::size_t fallback)
{
    char const* env = std::getenv(name);
    if (!env || !*env)
        return fallback;
    char* end = nullptr;
    double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value >= 1))
        return fallback;
    if (value >= double(std::numeric_limits<std::size_t>::max() / 2))
        return std::numeric_limits<std::size_t>::max() / 2;
    return static_cast<std::size_t>(value);
}

}  // namespace

std::size_t mode_budget()
{
    return budget_from_env("PHOTONBOX_MODE_BUDGET", 4'000'000'000);
}

std::size_t listing_budget()
{
    return budget_from_env("PHOTONBOX_LISTING_BUDGET", 20'000'000);
}

void check_mode_budget(double cutoff, std::size_t budget)
{
    std::size_t predicted = predicted_mode_count(cutoff);
    if (predicted > budget)
        throw CutoffTooLarge(cutoff, predicted, budget);
}

double weighted_mode_count(CuboidGeometry const& geom, double cutoff)
{
    check_mode_budget(cutoff, mode_budget());
    double count = 0;
    for_each_mode_in_shell(FrequencyScale(geom), 0.0, cutoff,
                           [&](int, int, int, int g, double) { count += g; });
    return count;
}

std::vector<ModeRecord> enumerate_modes(CuboidGeometry const& geom, double cutoff,
                                        std::size_t budget)
{
    if (!(cutoff > 0))
        throw std::invalid_argument("mode cutoff must be positive");
    check_mode_budget(cutoff, budget);

    std::vector<ModeRecord> modes;
    for_each_mode_in_shell(FrequencyScale(geom), 0.0, cutoff,
                           [&](int nx, int ny, int nz, int g, double omega) {
                               modes.push_back({{nx, ny, nz}, g, omega});
                           });
    std::sort(modes.begin(), modes.end(), [](ModeRecord const& a, ModeRecord const& b) {
        if (a.omega != b.omega)
            return a.omega < b.omega;
        return a.n < b.n;
    });
    return modes;
}

}  // namespace photonbox
