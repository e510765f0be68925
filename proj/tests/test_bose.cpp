#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "photonbox/bose.hpp"

using namespace photonbox;

namespace {

oracle::Kernel as_oracle(TailKind k)
{
    switch (k)
    {
        case TailKind::free:
            return oracle::Kernel::free;
        case TailKind::energy:
            return oracle::Kernel::energy;
        case TailKind::number:
            return oracle::Kernel::number;
        case TailKind::heat:
            return oracle::Kernel::heat;
    }
    return oracle::Kernel::free;
}

constexpr TailKind all_kinds[] = {TailKind::free, TailKind::energy, TailKind::number,
                                  TailKind::heat};

}  // namespace

TEST_CASE("occupancy at reference points")
{
    CHECK(occupancy(std::numbers::ln2) == doctest::Approx(1.0).epsilon(1e-15));
    double const x = 0.01;
    CHECK(occupancy(x) == doctest::Approx(1 / x - 0.5 + x / 12 - x * x * x / 720).epsilon(1e-13));
    CHECK(occupancy(800) == 0.0);
    CHECK(occupancy(1e-300) > 1e299);
    CHECK_THROWS_AS(occupancy(0.0), std::invalid_argument);
    CHECK_THROWS_AS(occupancy(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(occupancy(std::nan("")), std::invalid_argument);
}

TEST_CASE("occupancy is continuous across its branch point")
{
    double below = occupancy(std::nextafter(1.0, 0.0));
    double above = occupancy(1.0);
    CHECK(oracle::rel(below, above) < 1e-15);
}

TEST_CASE("log1m_exp and heat_kernel agree with direct formulas")
{
    for (double x : {0.05, 0.3, std::numbers::ln2, 1.0, 3.0, 20.0})
    {
        CHECK(oracle::rel(log1m_exp(x), double(std::log1p(-std::exp(-(long double)x)))) < 1e-13);
        double e = std::exp(x);
        CHECK(oracle::rel(heat_kernel(x), x * x * e / ((e - 1) * (e - 1))) < 1e-13);
    }
    CHECK(log1m_exp(800) == 0.0);
    CHECK(heat_kernel(800) == 0.0);
    CHECK_THROWS_AS(log1m_exp(0.0), std::invalid_argument);
}

TEST_CASE("complete integrals hit the closed forms")
{
    constexpr double pi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi
                           * std::numbers::pi;
    CHECK(oracle::rel(tail_integral(TailKind::energy, 0), pi4 / 15) <= 1e-12);
    CHECK(oracle::rel(tail_integral(TailKind::number, 0), 2 * 1.2020569031595942854) <= 1e-12);
    CHECK(oracle::rel(tail_integral(TailKind::free, 0), -pi4 / 45) <= 1e-12);
    CHECK(oracle::rel(tail_integral(TailKind::heat, 0), 4 * pi4 / 15) <= 1e-12);
}

TEST_CASE("tail integrals match adaptive quadrature")
{
    for (TailKind k : all_kinds)
        for (double x_e : {0.01, 0.1, 0.2, 0.25, 0.3, 0.5, 2.0, 10.0, 40.0})
        {
            CAPTURE(int(k));
            CAPTURE(x_e);
            CHECK(oracle::rel(tail_integral(k, x_e), oracle::tail(as_oracle(k), x_e)) <= 1e-10);
        }
}

TEST_CASE("tail integrals vanish far out and decrease in magnitude")
{
    for (TailKind k : all_kinds)
    {
        CHECK(tail_integral(k, 800) == 0.0);
        double prev = std::abs(tail_integral(k, 0));
        for (double x_e : {0.1, 0.25, 1.0, 5.0, 30.0})
        {
            double now = std::abs(tail_integral(k, x_e));
            CHECK(now < prev);
            prev = now;
        }
    }
    CHECK(tail_integral(TailKind::free, 3) < 0);
    CHECK_THROWS_AS(tail_integral(TailKind::energy, -1), std::invalid_argument);
}
