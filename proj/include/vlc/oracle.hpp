#pragma once

#include "vlc/input_dist.hpp"
#include "vlc/types.hpp"

namespace vlc {

/// Mutual-information evaluation by quadrature.
struct MutualInfoResult {
    double h_y = 0.0;           ///< output differential entropy, nats
    double h_y_given_x = 0.0;   ///< conditional entropy, nats
    double mi = 0.0;            ///< h_y - h_y_given_x
    double quadrature_error = 0.0; ///< accumulated absolute error estimate
};

struct EntropyInequalityResult {
    double lhs = 0.0; ///< H(Y), by quadrature
    double rhs = 0.0; ///< H(X) + f_low(xi P)
    bool holds = false;
};

/// Conditional entropy H(Y|X) = 1/2 ln(2 pi e sigma2)
///                            + 1/2 E[ln(1 + varsigma2 X)].
double conditional_entropy(const PeakAvgInputDist &dist);
double conditional_entropy(const AvgOnlyInputDist &dist);

/// Output marginal density f_Y(y) = int f_{Y|X}(y|x) f_X(x) dx by
/// quadrature over the input support.
double output_marginal_pdf(double y, const PeakAvgInputDist &dist);
double output_marginal_pdf(double y, const AvgOnlyInputDist &dist);

/// Integration window for the output entropy: eight conditional standard
/// deviations beyond the input support on both sides.
struct MarginalWindow {
    double lo, hi;
};
MarginalWindow marginal_window(const PeakAvgInputDist &dist);
MarginalWindow marginal_window(const AvgOnlyInputDist &dist);

/// I(X;Y) = H(Y) - H(Y|X), with H(Y) computed by nested quadrature over
/// the truncated window.
MutualInfoResult mutual_information(const PeakAvgInputDist &dist);
MutualInfoResult mutual_information(const AvgOnlyInputDist &dist);

/// Checks H(Y) >= H(X) + f_low(xi P) with a 1e-4 quadrature allowance.
EntropyInequalityResult entropy_inequality_check(const PeakAvgInputDist &dist);
EntropyInequalityResult entropy_inequality_check(const AvgOnlyInputDist &dist);

/// Monte-Carlo mutual-information estimate:
/// mean of ln f_{Y|X}(y|x) - ln f_Y(y) over sampled (x, y) pairs.
double monte_carlo_mi(const PeakAvgInputDist &dist, std::uint64_t seed, std::size_t pairs = 5000);
double monte_carlo_mi(const AvgOnlyInputDist &dist, std::uint64_t seed, std::size_t pairs = 5000);

} // namespace vlc
