#pragma once

#include <stdexcept>
#include <string>

namespace vlc {

/// Quadrature or iterative scheme ran out of budget before reaching the
/// requested tolerance. Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, double best_estimate, double est_error)
        : std::runtime_error(what), best_estimate(best_estimate), est_error(est_error) {}

    double best_estimate;
    double est_error;
};

/// Root finder was given an interval without a sign change.
class BracketError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A distribution solver could not locate a solution (e.g. bracket
/// expansion exhausted). Reports the last bracket tried.
class SolverError : public std::runtime_error {
  public:
    SolverError(const std::string &what, double bracket_lo, double bracket_hi)
        : std::runtime_error(what), bracket_lo(bracket_lo), bracket_hi(bracket_hi) {}

    double bracket_lo;
    double bracket_hi;
};

/// A candidate density handed to a functional is not feasible
/// (normalization or mean constraint violated).
class FeasibilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace vlc
