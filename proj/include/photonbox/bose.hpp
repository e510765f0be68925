#pragma once

namespace photonbox {

/// Mean Bose occupation 1 / (e^x - 1) for x > 0. Underflows to 0, never overflows.
double occupancy(double x);

/// ln(1 - e^{-x}) for x > 0.
double log1m_exp(double x);

/// x^2 e^x / (e^x - 1)^2, the per-mode heat capacity.
double heat_kernel(double x);

enum class TailKind
{
    free,  // int x^2 ln(1 - e^{-x})
    energy,  // int x^3 / (e^x - 1)
    number,  // int x^2 / (e^x - 1)
    heat,  // int x^4 e^x / (e^x - 1)^2
};

/*!
 * Incomplete Bose integral from x_e to infinity.
 *
 * For x_e >= 0.25 the integrand is expanded in e^{-k x} and integrated
 * term by term; the sum stops once a term drops below 1e-16 of the
 * accumulated value. Below that the complete integral (a zeta value) minus
 * a Bernoulli series for the [0, x_e] piece is used, since the exponential
 * series converges only algebraically near x_e = 0.
 */
double tail_integral(TailKind kind, double x_e);

/// Complete integral from 0: pi^4/15, 2 zeta(3), -pi^4/45, 4 pi^4/15.
double complete_integral(TailKind kind);

}  // namespace photonbox
