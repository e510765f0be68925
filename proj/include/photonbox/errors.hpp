#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace photonbox {

/// Raised when an integer triple with two or more zero indices is used as a mode.
class NotAMode : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a cutoff would require more modes than the configured budget.
class CutoffTooLarge : public std::runtime_error
{
  public:
    CutoffTooLarge(double cutoff, std::size_t predicted, std::size_t budget);

    double cutoff() const noexcept { return cutoff_; }
    std::size_t predicted() const noexcept { return predicted_; }
    std::size_t budget() const noexcept { return budget_; }

  private:
    double cutoff_;
    std::size_t predicted_;
    std::size_t budget_;
};

/// Raised when the temperature solver cannot bracket or converge.
class SolverFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace photonbox
