#pragma once

#include "vlc/input_dist.hpp"
#include "vlc/types.hpp"

#include <map>
#include <string>

namespace vlc {

/// Constants of the upper-bound construction. Both must be small for the
/// bound to be tight; beta = delta = 0 is admitted for the degenerate
/// algebraic checks.
struct UpperBoundParams {
    double beta = 1e-3;  ///< in [0, 0.5)
    double delta = 1e-3; ///< >= 0

    UpperBoundParams() = default;
    UpperBoundParams(double beta, double delta) : beta(beta), delta(delta) {
        if (!(beta >= 0.0) || !(beta < 0.5))
            throw std::invalid_argument("UpperBoundParams: beta must be in [0, 0.5)");
        if (!(delta >= 0.0))
            throw std::invalid_argument("UpperBoundParams: delta must be >= 0");
    }
};

enum class Scenario { PeakAvg, AvgOnly };

/// Collected bound evaluations for one operating point. `gap` is exactly
/// c_upp - c_low; the closed-form gap expression is recomputed
/// independently and stored in aux["gap_closed_form"].
struct BoundReport {
    Scenario scenario;
    double c_low = 0.0;          ///< nats/channel use; valid at all intensities
    double c_upp = 0.0;          ///< nats/channel use; asymptotic (see flag)
    double gap = 0.0;            ///< c_upp - c_low
    double asymptotic_gap = 0.0; ///< limit of the gap at high intensity
    bool upper_is_asymptotic = true;
    double recommended_min_intensity_db = 30.0; ///< trust region for c_upp
    std::map<std::string, double> aux;
};

/// Entropy-translation term: the amount by which the output entropy
/// provably exceeds the input entropy. Strictly positive, decreasing in
/// xi*P, and vanishing as xi*P -> inf.
double f_low(double xiP, const ChannelParams &params);

/// Lower capacity bound under peak + average constraints (nats).
double c_low_peak_avg(const PeakAvgInputDist &dist);

/// Widened normalizing integral over [1, sqrt(1 + varsigma2 A (1+delta))];
/// reduces to g_factor at delta = 0.
double big_g(double b, double varsigma2, double A, double delta);

/// Tilt-dependent correction term of the upper bound. Defined for b != 0
/// only; b = 0 is a domain error (the untilted branch needs no correction).
double psi(double b, const ChannelParams &params, const PeakAvgConstraints &cons, double delta);

/// Upper capacity bound under peak + average constraints (nats). Valid
/// asymptotically; the vanishing residual is represented as exactly zero.
double c_upp_peak_avg(const PeakAvgInputDist &dist, const UpperBoundParams &ub);

/// Closed-form gap between the two bounds (equals c_upp - c_low).
double gap_peak_avg(const PeakAvgInputDist &dist, const UpperBoundParams &ub);

/// High-intensity limit of the gap: ln(sqrt(1+delta)/(1-2 beta)) for the
/// untilted branch, ln(1/(1-2 beta)) otherwise.
double asymptotic_gap_peak_avg(PeakAvgBranch branch, const UpperBoundParams &ub);

/// Average-only scenario counterparts.
double c_low_avg_only(const AvgOnlyInputDist &dist);
double c_upp_avg_only(const AvgOnlyInputDist &dist, double beta);
double gap_avg_only(const AvgOnlyInputDist &dist, double beta);
double asymptotic_gap_avg_only(double beta);

/// Reference curve: 0.5 ln(1 + snr), nats.
double shannon_awgn(double snr);

/// Evaluate everything for one operating point.
BoundReport make_report(const PeakAvgInputDist &dist, const UpperBoundParams &ub);
BoundReport make_report(const AvgOnlyInputDist &dist, double beta);

} // namespace vlc
