#include "photonbox/bose.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "photonbox/summation.hpp"

namespace photonbox {

double occupancy(double x)
{
    if (!(x > 0))
        throw std::invalid_argument("occupancy needs a positive photon energy");
    if (x < 1)
        return 1 / std::expm1(x);
    double e = std::exp(-x);
    return e / -std::expm1(-x);
}

double log1m_exp(double x)
{
    if (!(x > 0))
        throw std::invalid_argument("log1m_exp needs a positive argument");
    if (x <= std::numbers::ln2)
        return std::log(-std::expm1(-x));
    return std::log1p(-std::exp(-x));
}

double heat_kernel(double x)
{
    double n = occupancy(x);
    return x * x * n * (1 + n);
}

double complete_integral(TailKind kind)
{
    constexpr double pi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi
                           * std::numbers::pi;
    constexpr double zeta3 = 1.2020569031595942854;
    switch (kind)
    {
        case TailKind::free:
            return -pi4 / 45;
        case TailKind::energy:
            return pi4 / 15;
        case TailKind::number:
            return 2 * zeta3;
        case TailKind::heat:
            return 4 * pi4 / 15;
    }
    return 0;
}

namespace {

constexpr double series_threshold = 0.25;

// Termwise integral of e^{-k x} times the kind's polynomial, from x to infinity.
double series_term(TailKind kind, double x, double k)
{
    double const e = std::exp(-k * x);
    double const x2 = x * x;
    switch (kind)
    {
        case TailKind::free:
            return -e * (x2 / (k * k) + 2 * x / (k * k * k) + 2 / (k * k * k * k));
        case TailKind::energy:
            return e * (x2 * x / k + 3 * x2 / (k * k) + 6 * x / (k * k * k) + 6 / (k * k * k * k));
        case TailKind::number:
            return e * (x2 / k + 2 * x / (k * k) + 2 / (k * k * k));
        case TailKind::heat:
            return e * (x2 * x2 + 4 * x2 * x / k + 12 * x2 / (k * k) + 24 * x / (k * k * k)
                        + 24 / (k * k * k * k));
    }
    return 0;
}

double exponential_series(TailKind kind, double x)
{
    CompensatedSum acc;
    for (int k = 1; k < 1'000'000; ++k)
    {
        double term = series_term(kind, x, k);
        acc += term;
        if (std::abs(term) < 1e-16 * std::abs(acc.value()))
            break;
    }
    return acc.value();
}

// B_0 .. B_20 (B_1 = -1/2); odd entries beyond B_1 vanish.
constexpr std::array<double, 21> bernoulli = {
    1.0, -0.5, 1.0 / 6, 0, -1.0 / 30, 0, 1.0 / 42, 0, -1.0 / 30, 0, 5.0 / 66, 0,
    -691.0 / 2730, 0, 7.0 / 6, 0, -3617.0 / 510, 0, 43867.0 / 798, 0, -174611.0 / 330,
};

// Integral of the kind's integrand over [0, x] from x/(e^x - 1) = sum B_n x^n / n!.
double head_integral(TailKind kind, double x)
{
    if (x == 0)
        return 0;
    CompensatedSum acc;
    if (kind == TailKind::free)
        acc += x * x * x * (std::log(x) / 3 - 1.0 / 9);
    double factorial = 1;
    double power = x * x * x;  // x^{n+3}
    for (std::size_t n = 0; n < bernoulli.size(); ++n)
    {
        if (n > 0)
            factorial *= double(n);
        double const b = bernoulli[n];
        double const nd = double(n);
        double term = 0;
        if (b != 0)
        {
            switch (kind)
            {
                case TailKind::energy:
                    term = b * power / ((nd + 3) * factorial);
                    break;
                case TailKind::number:
                    term = b * (power / x) / ((nd + 2) * factorial);
                    break;
                case TailKind::free:
                    if (n > 0)
                        term = b * power / ((nd + 3) * nd * factorial);
                    break;
                case TailKind::heat:
                    term = b * (1 - nd) * power / ((nd + 3) * factorial);
                    break;
            }
        }
        acc += term;
        power *= x;
    }
    return acc.value();
}

}  // namespace

double tail_integral(TailKind kind, double x_e)
{
    if (!(x_e >= 0) || std::isnan(x_e))
        throw std::invalid_argument("tail integral lower limit must be non-negative");
    if (std::isinf(x_e))
        return 0;
    if (x_e >= series_threshold)
        return exponential_series(kind, x_e);
    return complete_integral(kind) - head_integral(kind, x_e);
}

}  // namespace photonbox
