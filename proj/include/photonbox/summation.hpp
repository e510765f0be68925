#pragma once

#include <cmath>

namespace photonbox {

/*!
 * Compensated running sum (two-sum error term per addend).
 *
 * Accumulation order is the caller's responsibility: the result is
 * bit-reproducible for a fixed sequence of addends.
 */
class CompensatedSum
{
  public:
    constexpr CompensatedSum() = default;
    constexpr explicit CompensatedSum(double initial) : sum_{initial} {}

    void add(double x) noexcept
    {
        double const t = sum_ + x;
        double const z = t - sum_;
        comp_ += (sum_ - (t - z)) + (x - z);
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    CompensatedSum& operator+=(CompensatedSum const& other) noexcept
    {
        add(other.sum_);
        add(other.comp_);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

}  // namespace photonbox
