#pragma once

#include <cmath>
#include <stdexcept>

namespace vlc {

/// Execution policy for the data-parallel kernels. `serial` is the
/// reference implementation; `parallel` (OpenMP) must produce identical
/// results and is checked against it by the test suite.
enum class Exec { serial, parallel };

/// Physical channel description: received Y = x + sqrt(x) Z1 + Z0 with
/// Z0 ~ N(0, sigma2), Z1 ~ N(0, varsigma2 * sigma2), so the conditional
/// variance is sigma2 * (1 + varsigma2 * x).
struct ChannelParams {
    double sigma2;    ///< signal-independent noise variance, > 0
    double varsigma2; ///< scaling factor, >= 0 (0 = signal-independent limit)

    ChannelParams(double sigma2, double varsigma2) : sigma2(sigma2), varsigma2(varsigma2) {
        if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
            throw std::invalid_argument("ChannelParams: sigma2 must be positive and finite");
        if (!(varsigma2 >= 0.0) || !std::isfinite(varsigma2))
            throw std::invalid_argument("ChannelParams: varsigma2 must be >= 0 and finite");
    }

    /// Conditional output variance at input intensity x.
    double conditional_variance(double x) const { return sigma2 * (1.0 + varsigma2 * x); }
};

/// Peak and average optical-intensity constraint set.
struct PeakAvgConstraints {
    double A;  ///< peak optical intensity, > 0
    double xi; ///< dimming target in (0, 1]
    double P;  ///< nominal optical intensity, > 0

    PeakAvgConstraints(double A, double xi, double P) : A(A), xi(xi), P(P) {
        if (!(A > 0.0) || !std::isfinite(A))
            throw std::invalid_argument("PeakAvgConstraints: A must be positive and finite");
        if (!(xi > 0.0) || !(xi <= 1.0))
            throw std::invalid_argument("PeakAvgConstraints: xi must be in (0, 1]");
        if (!(P > 0.0) || !std::isfinite(P))
            throw std::invalid_argument("PeakAvgConstraints: P must be positive and finite");
        if (!(xi * P <= A))
            throw std::invalid_argument("PeakAvgConstraints: requires xi*P <= A");
    }

    double mean_target() const { return xi * P; }
    /// Average-to-peak optical intensity ratio, in (0, 1].
    double apr() const { return xi * P / A; }
};

/// Average-only optical-intensity constraint set (no peak limit).
struct AvgOnlyConstraints {
    double xi; ///< dimming target in (0, 1]
    double P;  ///< nominal optical intensity, > 0

    AvgOnlyConstraints(double xi, double P) : xi(xi), P(P) {
        if (!(xi > 0.0) || !(xi <= 1.0))
            throw std::invalid_argument("AvgOnlyConstraints: xi must be in (0, 1]");
        if (!(P > 0.0) || !std::isfinite(P))
            throw std::invalid_argument("AvgOnlyConstraints: P must be positive and finite");
    }

    double mean_target() const { return xi * P; }
};

/// Intensity <-> dB conversions used throughout the CLI (10 log10).
inline double from_db(double x_db) { return std::pow(10.0, x_db / 10.0); }
inline double to_db(double x) { return 10.0 * std::log10(x); }

} // namespace vlc
