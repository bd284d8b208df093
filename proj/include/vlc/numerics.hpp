#pragma once

#include <cstddef>
#include <functional>

namespace vlc {

/// Result of an adaptive quadrature run.
struct QuadratureResult {
    double value = 0.0;          ///< integral estimate
    double est_error = 0.0;      ///< conservative absolute error estimate
    std::size_t evaluations = 0; ///< number of integrand evaluations
};

/// Result of a bracketed root search.
struct RootResult {
    double root = 0.0;
    double residual = 0.0; ///< f(root)
    std::size_t iterations = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14; ///< absolute floor, avoids chasing zero integrals
    std::size_t max_evaluations = 1'000'000;
};

struct RootOptions {
    double tol = 1e-12; ///< target on |f(x)|; width floor acts as fallback
    std::size_t max_iterations = 200;
};

/// Gaussian Q-function: P(N(0,1) > x). Strictly decreasing, range (0,1).
double gauss_q(double x);

/// Error function. Odd, monotone increasing, range (-1,1).
double erf_fn(double x);

/// Scaled complementary error function exp(x^2) erfc(x) for x >= 0.
/// Stable where exp(x^2) alone would overflow.
double erfcx_fn(double x);

/// sqrt(1+u) - 1 without cancellation for small u >= -1.
double sqrt1pm1(double u);

/// Adaptive Gauss-Kronrod quadrature of f over (lo, hi).
/// Either endpoint may be infinite; semi-infinite and doubly infinite
/// ranges are mapped to finite ones by the substitution x = t/(1-t).
/// Throws ConvergenceError (carrying the best estimate) if the evaluation
/// budget is exhausted before the tolerance is met.
QuadratureResult integrate(const std::function<double(double)> &f, double lo, double hi,
                           const QuadratureOptions &opts = {});

/// Bracketed root finding: bisection hardened with inverse-quadratic /
/// secant acceleration (Brent). Requires f(lo)*f(hi) <= 0, otherwise
/// throws BracketError. Succeeds when |f(x)| <= tol or the bracket width
/// reaches the machine-level floor.
RootResult find_root(const std::function<double(double)> &f, double lo, double hi,
                     const RootOptions &opts = {});

} // namespace vlc
