#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "photonbox/geometry.hpp"

namespace photonbox {

/// Integer standing-wave indices of a cavity mode.
struct ModeIndex
{
    int nx = 0;
    int ny = 0;
    int nz = 0;

    auto operator<=>(ModeIndex const&) const = default;
};

struct ModeRecord
{
    ModeIndex n;
    int degeneracy;  // polarizations: 1 or 2
    double omega;  // omega a / c
};

/// 1 if exactly one index is zero, 2 if none is, nullopt if it is not a mode.
std::optional<int> polarization_degeneracy(ModeIndex n);

/*!
 * Frequency coefficients of a cuboid shape.
 *
 * omega^2 = scale^2 * (nx^2 beta^2 + ny^2 alpha^2 + nz^2 alpha^2 beta^2),
 * scale = pi (alpha beta)^{-2/3}. Only alpha and beta enter, so the
 * normalized spectrum is independent of the cavity volume.
 */
class FrequencyScale
{
  public:
    explicit FrequencyScale(CuboidGeometry const& geom);
    FrequencyScale(double alpha, double beta);

    /// Squared frequency of an arbitrary lattice point (no mode check).
    double squared(int nx, int ny, int nz) const noexcept
    {
        double s = cx_ * double(nx) * double(nx) + cy_ * double(ny) * double(ny)
                   + cz_ * double(nz) * double(nz);
        return scale2_ * s;
    }

    double operator()(int nx, int ny, int nz) const noexcept
    {
        double s = cx_ * double(nx) * double(nx) + cy_ * double(ny) * double(ny)
                   + cz_ * double(nz) * double(nz);
        return scale_ * std::sqrt(s);
    }

    /// Squared wavevector components (pi a n_i / L_i)^2 of a lattice point.
    double kx2(int nx) const noexcept { return scale2_ * cx_ * double(nx) * double(nx); }
    double ky2(int ny) const noexcept { return scale2_ * cy_ * double(ny) * double(ny); }
    double kz2(int nz) const noexcept { return scale2_ * cz_ * double(nz) * double(nz); }

    /// Largest index along each axis that can lie at or below cutoff, plus one.
    int max_nx(double cutoff) const noexcept;
    int max_ny(double cutoff) const noexcept;
    int max_nz(double cutoff) const noexcept;

  private:
    double scale_;
    double scale2_;
    double cx_;
    double cy_;
    double cz_;
};

/// Normalized eigenfrequency omega a / c; throws NotAMode.
double normalized_frequency(ModeIndex n, CuboidGeometry const& geom);

/// Smooth mode count omega^3 / (3 pi^2) (both polarizations).
double smoothed_mode_count(double omega);

/// Expected number of ModeRecords with omega <= cutoff, with some headroom.
std::size_t predicted_mode_count(double cutoff);

/*!
 * Mode budget: maximum number of modes one streamed evaluation may visit.
 *
 * Read from PHOTONBOX_MODE_BUDGET, default 4e9 (a few minutes of work on
 * one core).
 */
std::size_t mode_budget();

/// Maximum number of records enumerate_modes may hold in memory.
/// Read from PHOTONBOX_LISTING_BUDGET, default 2e7 (about 0.5 GB).
std::size_t listing_budget();

/// Throws CutoffTooLarge when the predicted count exceeds the budget.
void check_mode_budget(double cutoff, std::size_t budget);

/*!
 * Visit every mode with lower < omega <= upper and a fixed nx, in
 * ascending (ny, nz) order.
 *
 * Visitor signature: void(int nx, int ny, int nz, int degeneracy, double omega).
 * The omega comparison is authoritative; loop bounds carry one index of
 * slack on each side.
 */
template<class Visitor>
void for_each_mode_in_slab(FrequencyScale const& freq, double lower, double upper,
                           int nx, Visitor&& visit)
{
    if (!(upper > lower) || upper <= 0)
        return;
    double const upper2 = upper * upper;
    double const lower2 = lower > 0 ? lower * lower : -1.0;
    double const rx = freq.kx2(nx);
    if (rx > upper2 * (1 + 1e-12) && nx > 0)
        return;
    double const kz1 = freq.kz2(1);
    int const ny_max = freq.max_ny(upper);
    for (int ny = 0; ny <= ny_max; ++ny)
    {
        double const rxy = rx + freq.ky2(ny);
        if (rxy > upper2 * (1 + 1e-12) && ny > 0)
            break;
        int const zeros_xy = (nx == 0) + (ny == 0);
        if (zeros_xy == 2)
            continue;
        double const hi_rem = upper2 - rxy;
        int const nz_hi = hi_rem > 0 ? int(std::sqrt(hi_rem / kz1)) + 1 : 1;
        int nz_lo = 0;
        if (lower2 > 0 && lower2 - rxy > 0)
            nz_lo = std::max(0, int(std::sqrt((lower2 - rxy) / kz1)) - 1);
        for (int nz = nz_lo; nz <= nz_hi; ++nz)
        {
            int const zeros = zeros_xy + (nz == 0);
            if (zeros >= 2)
                continue;
            double const omega = freq(nx, ny, nz);
            if (omega <= lower || omega > upper)
                continue;
            visit(nx, ny, nz, zeros == 0 ? 2 : 1, omega);
        }
    }
}

/// Every mode with lower < omega <= upper in lattice order (nx, ny, nz ascending).
template<class Visitor>
void for_each_mode_in_shell(FrequencyScale const& freq, double lower,
                            double upper, Visitor&& visit)
{
    if (!(upper > lower) || upper <= 0)
        return;
    int const nx_max = freq.max_nx(upper);
    for (int nx = 0; nx <= nx_max; ++nx)
        for_each_mode_in_slab(freq, lower, upper, nx, visit);
}

/// Weighted mode count sum of g over modes with omega <= cutoff.
double weighted_mode_count(CuboidGeometry const& geom, double cutoff);

/*!
 * All modes with omega <= cutoff, sorted ascending by omega with
 * lexicographic (nx, ny, nz) tie-break.
 *
 * Coincident frequencies from distinct index triples stay separate records.
 */
std::vector<ModeRecord> enumerate_modes(CuboidGeometry const& geom,
                                        double cutoff,
                                        std::size_t budget = listing_budget());

}  // namespace photonbox
