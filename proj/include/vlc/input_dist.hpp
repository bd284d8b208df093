#pragma once

#include "vlc/types.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace vlc {

enum class PeakAvgBranch { ZeroB, NonzeroB };

/// Capacity-approaching input distribution on [0, A] under peak and
/// average intensity constraints:
///
///   f(x) = varsigma2 * exp(b x) / (2 g(b) sqrt(1 + varsigma2 x))
///
/// with g(b) the normalizing factor and b the exponential tilt parameter
/// chosen so the mean equals xi*P. b = 0 (ZeroB) when the mean target
/// coincides with the untilted distribution's mean.
struct PeakAvgInputDist {
    PeakAvgBranch branch;
    double b;          ///< exponential tilt; 0 in the ZeroB branch
    double normalizer; ///< 2 g(b, varsigma2, A) / varsigma2
    double log_g;      ///< ln g(b, varsigma2, A), kept for overflow-free bound math
    ChannelParams params;
    PeakAvgConstraints constraints;

    /// Density at x; zero outside [0, A].
    double pdf(double x) const;
};

/// Capacity-approaching input distribution on [0, inf) under an average
/// intensity constraint only:
///
///   f(x) = exp(-m - 1 - n x) / sqrt(1 + varsigma2 x),  n > 0.
struct AvgOnlyInputDist {
    double m;
    double n; ///< > 0
    ChannelParams params;
    AvgOnlyConstraints constraints;

    double pdf(double x) const;
    /// Point where the CDF exceeds 1 - 1e-12; used as the sampling and
    /// marginalization cutoff.
    double support_truncation() const;
};

/// APR value at which the untilted (b = 0) branch applies; always in
/// (1/3, 1/2). varsigma2 = 0 is a domain error (the limit is 1/2).
double alpha_star(double varsigma2, double A);

/// Normalizing factor g(b, varsigma2, A): closed error-function form for
/// b < 0, the integral of exp(b (t^2 - 1)/varsigma2) over
/// [1, sqrt(1 + varsigma2 A)] for b > 0, and the b -> 0 limit
/// sqrt(1 + varsigma2 A) - 1.
double g_factor(double b, double varsigma2, double A);

/// ln g(b, varsigma2, A), stable for tilts where g itself would overflow.
double log_g_factor(double b, double varsigma2, double A);

/// Solve for the tilt parameter of the peak+average distribution.
/// tol is the relative tolerance on the mean constraint.
PeakAvgInputDist solve_b(const ChannelParams &params, const PeakAvgConstraints &cons,
                         double tol = 1e-12);

/// Solve for (m, n) of the average-only distribution: n from the mean
/// equation (m eliminated through the normalization equality), then m
/// recovered. tol is the relative tolerance on the mean constraint.
AvgOnlyInputDist solve_mn(const ChannelParams &params, const AvgOnlyConstraints &cons,
                          double tol = 1e-12);

double pdf_peak_avg(double x, const PeakAvgInputDist &dist);
double pdf_avg_only(double x, const AvgOnlyInputDist &dist);

/// Mean of the tilted density as a function of b, evaluated by stable
/// quadrature. Exposed because the transcendental mean equation is solved
/// against it and tests probe its monotonicity.
double tilted_mean(double b, double varsigma2, double A);

/// E[ln(1 + varsigma2 X)] under the distribution (by quadrature).
double expected_log1p_varsigma_x(const PeakAvgInputDist &dist);
double expected_log1p_varsigma_x(const AvgOnlyInputDist &dist);

/// Differential entropy -int f ln f, in nats (closed form plus the
/// expected-log term).
double input_entropy(const PeakAvgInputDist &dist);
double input_entropy(const AvgOnlyInputDist &dist);

/// Entropy-type objective J[f] = int f ln f + 1/2 int ln(1 + varsigma2 x) f
/// over the scenario's support. The candidate density is verified
/// numerically (normalization and mean within 1e-4) before evaluation;
/// infeasible candidates raise FeasibilityError.
double j_functional(const PeakAvgInputDist &dist, const std::function<double(double)> &pdf);
double j_functional(const AvgOnlyInputDist &dist, const std::function<double(double)> &pdf);

/// Draw i.i.d. samples via a tabulated CDF (4096 knots) inverted with
/// monotone cubic interpolation. Deterministic given the seed, for any
/// execution policy.
std::vector<double> sample(const PeakAvgInputDist &dist, std::uint64_t seed, std::size_t count,
                           Exec exec = Exec::parallel);
std::vector<double> sample(const AvgOnlyInputDist &dist, std::uint64_t seed, std::size_t count,
                           Exec exec = Exec::parallel);

} // namespace vlc
