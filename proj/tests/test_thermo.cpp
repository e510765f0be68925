#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "photonbox/bose.hpp"
#include "photonbox/constants.hpp"
#include "photonbox/errors.hpp"
#include "photonbox/thermo.hpp"

using namespace photonbox;
using oracle::rel;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double zeta3 = 1.2020569031595942854;

ThermoReport at_cutoff(CuboidGeometry const& g, double t, double c)
{
    return evaluate(ThermoState(g, t, FixedCutoff{c}));
}

double tail_weight(double t)
{
    return t * t * t / (pi * pi);
}

}  // namespace

TEST_CASE("state validation")
{
    auto cube = CuboidGeometry::cube(1);
    CHECK_THROWS_AS(ThermoState(cube, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ThermoState(cube, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ThermoState(cube, INFINITY), std::invalid_argument);
    CHECK_THROWS_AS(ThermoState(cube, 1.0, FixedCutoff{-1}), std::invalid_argument);
    CHECK_THROWS_AS(ThermoState(cube, 1.0, AdaptiveCutoff{0}), std::invalid_argument);
    CHECK_THROWS_AS(ThermoState(cube, 1.0, AdaptiveCutoff{1e-2}), std::invalid_argument);
    CHECK_NOTHROW(ThermoState(cube, 1.0, AdaptiveCutoff{9e-3}));
    CHECK_NOTHROW(ThermoState(cube, 1.0, FixedCutoff{0}));
}

TEST_CASE("pure tail gives the blackbody values")
{
    for (double t : {0.3, 1.0, 7.0})
    {
        auto r = at_cutoff(CuboidGeometry::from_shape(3, 0.2, 1), t, 0.0);
        double t3 = t * t * t;
        CHECK(rel(r.F_red, -pi * pi * t3 / 45) < 1e-14);
        CHECK(rel(r.E_red, pi * pi * t3 / 15) < 1e-14);
        CHECK(rel(r.S_red, 4 * pi * pi * t3 / 45) < 1e-14);
        CHECK(rel(r.N, 2 * zeta3 * t3 / (pi * pi)) < 1e-14);
        CHECK(rel(r.C_red, 4 * pi * pi * t3 / 15) < 1e-14);
        CHECK(rel(r.phi, 1.0) < 1e-14);
        CHECK(rel(r.px_red, r.E_red / 3) < 1e-14);
        CHECK(rel(r.pz_red, r.E_red / 3) < 1e-14);
    }
}

TEST_CASE("low temperature cube is two shells")
{
    double const t = 0.1;
    double const x1 = pi * std::sqrt(2.0) / t;
    double const x2 = pi * std::sqrt(3.0) / t;
    double const n1 = 1 / std::expm1(x1);
    double const n2 = 1 / std::expm1(x2);
    auto r = evaluate(ThermoState(CuboidGeometry::cube(1), t));
    CHECK(rel(r.E_red, 3 * x1 * n1 + 2 * x2 * n2) < 1e-6);
    CHECK(rel(r.N, 3 * n1 + 2 * n2) < 1e-6);
    CHECK(rel(r.F_red, 3 * std::log1p(-std::exp(-x1)) + 2 * std::log1p(-std::exp(-x2))) < 1e-6);
    // lowest shell alone; (1,1,1) adds about e^{-10} relative
    CHECK(rel(r.F_red, -3 * std::exp(-x1)) < 1e-4);
    CHECK(rel(r.N, 3 * std::exp(-x1)) < 1e-4);
}

TEST_CASE("fixed-cutoff sums equal an independent triple loop")
{
    struct Case
    {
        double X, Y, Z, t, cutoff;
    };
    for (Case c : {Case{1, 1, 1, 1.0, 60}, Case{0.1, 0.2, 0.3, 0.7, 55},
                   Case{50, 1, 1, 2.0, 45}, Case{1, 1, 0.05, 3.0, 80}})
    {
        CuboidGeometry g(c.X, c.Y, c.Z);
        auto r = at_cutoff(g, c.t, c.cutoff);
        auto brute = oracle::direct_sum(c.X, c.Y, c.Z, c.t, c.cutoff);
        double x_e = c.cutoff / c.t;
        double w = tail_weight(c.t);
        double e_tail = w * tail_integral(TailKind::energy, x_e);
        CHECK(rel(r.F_red - w * tail_integral(TailKind::free, x_e), brute.F) < 1e-12);
        CHECK(rel(r.E_red - e_tail, brute.E) < 1e-12);
        CHECK(rel(r.N - w * tail_integral(TailKind::number, x_e), brute.N) < 1e-12);
        CHECK(rel(r.C_red - w * tail_integral(TailKind::heat, x_e), brute.C) < 1e-12);
        CHECK(rel(r.px_red - e_tail / 3, brute.px) < 1e-12);
        CHECK(rel(r.py_red - e_tail / 3, brute.py) < 1e-12);
        CHECK(rel(r.pz_red - e_tail / 3, brute.pz) < 1e-12);
    }
}

TEST_CASE("adaptive cube at t = 1 matches the brute-force sum to 200")
{
    auto brute = oracle::direct_sum(1, 1, 1, 1.0, 200);
    for (double eps : {1e-6, 1e-8})
    {
        auto r = evaluate(ThermoState(CuboidGeometry::cube(1), 1.0, AdaptiveCutoff{eps}));
        CHECK(rel(r.E_red, brute.E) < 1e-6);
        CHECK(rel(r.F_red, brute.F) < 1e-6);
        CHECK(rel(r.N, brute.N) < 1e-6);
        auto e = auto_cutoff(ThermoState(CuboidGeometry::cube(1), 1.0, AdaptiveCutoff{eps}),
                             Quantity::energy);
        CHECK(rel(e.value, brute.E) < 1e-6);
    }
}

TEST_CASE("adaptive cutoff starts at max(4 pi, 8 t) and grows by 1.5")
{
    for (double t : {0.05, 1.0, 3.0})
    {
        auto r = evaluate(ThermoState(CuboidGeometry::cube(1), t));
        double start = std::max(4 * pi, 8 * t);
        double k = std::log(r.omega_e / start) / std::log(1.5);
        CHECK(k >= 2 - 1e-9);
        CHECK(std::abs(k - std::round(k)) < 1e-9);
    }
}

TEST_CASE("doubling the chosen cutoff changes nothing that matters")
{
    for (double t : {0.2, 1.0, 5.0})
        for (auto g : {CuboidGeometry::cube(1), CuboidGeometry(0.1, 0.2, 0.3)})
        {
            auto r = evaluate(ThermoState(g, t));
            auto d = at_cutoff(g, t, 2 * r.omega_e);
            CHECK(rel(r.E_red, d.E_red) <= 1e-6);
            CHECK(rel(r.S_red, d.S_red) <= 1e-6);
            CHECK(rel(r.N, d.N) <= 1e-6);
            CHECK(rel(r.F_red, d.F_red) <= 1e-6);
        }
}

TEST_CASE("moving the sum/tail boundary converges")
{
    auto g = CuboidGeometry::from_shape(2, 0.5, 1);
    double t = 1.5;
    double prev = at_cutoff(g, t, 10).E_red;
    double prev_gap = INFINITY;
    for (double c : {20.0, 40.0, 80.0})
    {
        double now = at_cutoff(g, t, c).E_red;
        double gap = rel(now, prev);
        CHECK(gap < prev_gap);
        prev_gap = gap;
        prev = now;
    }
    CHECK(prev_gap < 1e-9);
}

TEST_CASE("invariants over shapes and temperatures")
{
    for (auto [alpha, beta] : {std::pair{1.0, 1.0}, {10.0, 10.0}, {1e-2, 1e-2}, {50.0, 1.0}})
        for (double t : {0.05, 0.3, 1.0, 4.0})
        {
            auto r = evaluate(ThermoState(CuboidGeometry::from_shape(alpha, beta, 1), t));
            CHECK(r.E_red >= 0);
            CHECK(r.S_red >= 0);
            CHECK(r.N >= 0);
            CHECK(r.C_red >= 0);
            CHECK(r.F_red <= 0);
            CHECK(rel(r.px_red + r.py_red + r.pz_red, r.E_red) <= 1e-9);
            CHECK(rel(r.S_red, r.E_red - r.F_red) < 1e-15);
            CHECK(rel(r.phi, r.E_red / stefan_boltzmann_energy(t)) < 1e-15);
        }
}

TEST_CASE("energy and heat capacity agree with temperature derivatives")
{
    // at a frozen cutoff: E = -t dF/dt and C = d(t E)/dt; five-point stencils
    for (auto g : {CuboidGeometry::cube(1), CuboidGeometry::from_shape(50, 1, 1),
                   CuboidGeometry(0.1, 0.2, 0.3)})
        for (double t : {0.1, 0.6, 2.5})
        {
            double c = evaluate(ThermoState(g, t)).omega_e;
            double h = 2e-4 * t;
            auto F = [&](double s) { return at_cutoff(g, s, c).F_red; };
            auto tE = [&](double s) { return s * at_cutoff(g, s, c).E_red; };
            auto d5 = [&](auto f) {
                return (f(t - 2 * h) - 8 * f(t - h) + 8 * f(t + h) - f(t + 2 * h)) / (12 * h);
            };
            auto mid = at_cutoff(g, t, c);
            CHECK(rel(-t * d5(F), mid.E_red) < 1e-6);
            CHECK(rel(d5(tE), mid.C_red) < 1e-5);
        }
}

TEST_CASE("similarity: only T a matters")
{
    PhysicalConstants k;
    double T = 1.3, a = 0.37;
    auto g = CuboidGeometry::from_shape(3, 0.4, a);
    auto g2 = CuboidGeometry::from_shape(3, 0.4, a / 2);
    auto r1 = evaluate(ThermoState(g, k.reduced_temperature(T, a)));
    auto r2 = evaluate(ThermoState(g2, k.reduced_temperature(2 * T, a / 2)));
    CHECK(rel(r1.E_red, r2.E_red) <= 1e-12);
    CHECK(rel(r1.F_red, r2.F_red) <= 1e-12);
    CHECK(rel(r1.N, r2.N) <= 1e-12);
    CHECK(rel(r1.px_red, r2.px_red) <= 1e-12);
    CHECK(rel(r1.phi, r2.phi) <= 1e-12);
}

TEST_CASE("exchanging edges permutes the face pressures")
{
    auto r = evaluate(ThermoState(CuboidGeometry(0.1, 0.2, 0.3), 0.8, FixedCutoff{60}));
    auto s = evaluate(ThermoState(CuboidGeometry(0.2, 0.1, 0.3), 0.8, FixedCutoff{60}));
    CHECK(rel(r.E_red, s.E_red) < 1e-13);
    CHECK(rel(r.F_red, s.F_red) < 1e-13);
    CHECK(rel(r.px_red, s.py_red) < 1e-13);
    CHECK(rel(r.py_red, s.px_red) < 1e-13);
    CHECK(rel(r.pz_red, s.pz_red) < 1e-13);
}

TEST_CASE("cube faces are equal and the longest edge feels the least pressure")
{
    auto p = face_pressures(ThermoState(CuboidGeometry::cube(2), 0.7));
    CHECK(rel(p.px, p.py) < 1e-14);
    CHECK(rel(p.px, p.pz) < 1e-14);

    auto q = face_pressures(ThermoState(CuboidGeometry(0.1, 0.2, 0.3), 0.5));
    CHECK(q.px != doctest::Approx(q.py));
    CHECK(q.py != doctest::Approx(q.pz));
}

TEST_CASE("shape forces")
{
    auto cube = ThermoState(CuboidGeometry::cube(1), 0.8);
    auto f = shape_forces(cube);
    double F = free_energy(cube);
    CHECK(std::abs(f.alpha - f.beta) <= 1e-9 * std::abs(F));

    auto tail_only = shape_forces(ThermoState(CuboidGeometry::from_shape(3, 2, 1), 1.0, FixedCutoff{0}));
    CHECK(tail_only.alpha == 0.0);
    CHECK(tail_only.beta == 0.0);

    auto s = ThermoState(CuboidGeometry::from_shape(50, 1, 1), 0.5);
    auto h1 = shape_forces(s, 1e-4);
    auto h2 = shape_forces(s, 5e-5);
    CHECK(rel(h1.alpha, h2.alpha) <= 1e-4);
    CHECK(rel(h1.beta, h2.beta) <= 1e-4);
    CHECK_THROWS_AS(shape_forces(s, 0.0), std::invalid_argument);
}

TEST_CASE("single-quantity accessors agree with the full report")
{
    auto s = ThermoState(CuboidGeometry(0.1, 0.2, 0.3), 0.9, FixedCutoff{50});
    auto r = evaluate(s);
    CHECK(free_energy(s) == r.F_red);
    CHECK(internal_energy(s) == r.E_red);
    CHECK(entropy(s) == r.S_red);
    CHECK(photon_number(s) == r.N);
    CHECK(heat_capacity(s) == r.C_red);
    CHECK(phi(s) == r.phi);
    auto adaptive = ThermoState(CuboidGeometry(0.1, 0.2, 0.3), 0.9);
    auto c = auto_cutoff(adaptive, Quantity::photon_number);
    CHECK(c.omega_e > 0);
    CHECK(rel(c.value, at_cutoff(adaptive.geometry(), 0.9, c.omega_e).N) < 1e-14);
}

TEST_CASE("phi rises toward one")
{
    double prev = 0;
    for (double t : {0.05, 0.2, 1.0, 3.0, 10.0})
    {
        double p = phi(ThermoState(CuboidGeometry::cube(1), t));
        CHECK(p > prev);
        CHECK(p < 1);
        prev = p;
    }
    CHECK(phi(ThermoState(CuboidGeometry::cube(1), 0.03)) < 1e-10);
}

TEST_CASE("results do not depend on the number of threads")
{
    auto s = ThermoState(CuboidGeometry(0.7, 1.0, 1.3), 1.0, FixedCutoff{450});
    set_evaluation_threads(1);
    auto one = evaluate(s);
    set_evaluation_threads(3);
    auto three = evaluate(s);
    set_evaluation_threads(0);
    CHECK(one.F_red == three.F_red);
    CHECK(one.E_red == three.E_red);
    CHECK(one.N == three.N);
    CHECK(one.C_red == three.C_red);
    CHECK(one.px_red == three.px_red);
    CHECK(one.py_red == three.py_red);
    CHECK(one.pz_red == three.pz_red);
}

TEST_CASE("budget errors propagate")
{
    ::setenv("PHOTONBOX_MODE_BUDGET", "1000", 1);
    CHECK_THROWS_AS(evaluate(ThermoState(CuboidGeometry::cube(1), 5.0)), CutoffTooLarge);
    CHECK_THROWS_AS(evaluate(ThermoState(CuboidGeometry::cube(1), 1.0, FixedCutoff{500})),
                    CutoffTooLarge);
    ::unsetenv("PHOTONBOX_MODE_BUDGET");
}

TEST_CASE("constants")
{
    PhysicalConstants k;
    CHECK(k.B() == doctest::Approx(0.2290).epsilon(5e-4));
    CHECK(k.sigma() == doctest::Approx(5.670374419e-5).epsilon(1e-9));
    CHECK(k.temperature(k.reduced_temperature(3.0, 0.2), 0.2) == doctest::Approx(3.0));
    PhysicalConstants o;
    o.B_override = 0.25;
    CHECK(o.B() == 0.25);
    // E_SB in erg equals (4 sigma / c) V T^4
    double T = 2.0, a = 0.3;
    double t = k.reduced_temperature(T, a);
    double E = k.energy_erg(stefan_boltzmann_energy(t), T);
    CHECK(rel(E, 4 * k.sigma() / k.c * a * a * a * T * T * T * T) < 1e-12);
}
