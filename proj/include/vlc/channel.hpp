#pragma once

#include "vlc/types.hpp"

#include <cstdint>
#include <vector>

namespace vlc {

/// Conditional output density: Gaussian with mean x and variance
/// sigma2 * (1 + varsigma2 * x). x must be nonnegative.
double conditional_pdf(double y, double x, const ChannelParams &params);

/// Monte-Carlo channel: draws of x + sqrt(x) Z1 + Z0 with independent
/// Z0 ~ N(0, sigma2) and Z1 ~ N(0, varsigma2 sigma2). Deterministic per
/// seed for any execution policy; the two noise terms use independent
/// generator streams.
std::vector<double> transmit(double x, const ChannelParams &params, std::uint64_t seed,
                             std::size_t count, Exec exec = Exec::parallel);

/// Physical inputs of the receiver noise budget (SI units).
struct NoiseBudgetInputs {
    double q = 1.602176634e-19;  ///< electron charge, C
    double eta = 0.8;            ///< quantum efficiency
    double h_nu = 3.6122e-19;    ///< photon energy, J (550 nm default)
    double B = 1e7;              ///< bandwidth, Hz
    double X = 0.0;              ///< signal optical intensity, W
    double X_b = 0.0;            ///< background optical intensity, W
    double i_dark = 1e-9;        ///< dark current, A
    double K = 1.380649e-23;     ///< Boltzmann constant, J/K
    double T = 300.0;            ///< absolute temperature, K
    double R_e = 50.0;           ///< bias/load parallel resistance, Ohm
    double r_e = 10.0;           ///< amplifier AC input resistance, Ohm
};

/// RMS noise currents of the receiver front end, A.
struct NoiseBudget {
    double i_s = 0.0;     ///< shot noise from signal photons (scales with sqrt X)
    double i_b = 0.0;     ///< shot noise from background photons
    double i_d_rms = 0.0; ///< shot noise from dark current
    double i_th = 0.0;    ///< thermal noise
    double i_a = 0.0;     ///< amplifier noise
    NoiseBudgetInputs inputs;
};

struct ShotNoise {
    double i_s, i_b, i_d_rms;
};

/// Shot-noise currents: sqrt(2 q^2 eta X B / h_nu) for signal and
/// background photons, sqrt(2 q i_dark B) for dark current.
ShotNoise shot_noise(const NoiseBudgetInputs &in);

/// Thermal noise current sqrt(4 K T B / R_e).
double thermal_noise(double K, double T, double B, double R_e);

/// Amplifier noise current sqrt(2 K T B / r_e).
double amplifier_noise(double K, double T, double B, double r_e);

/// All five currents for one input configuration.
NoiseBudget compute_noise_budget(const NoiseBudgetInputs &in);

struct VarianceSplit {
    double varsigma2;
    double sigma2;
};

/// Map the photocurrent budget onto the normalized channel model.
/// The signal-independent variance is sigma2 = sum of the four
/// input-independent current variances divided by current_scale^2;
/// the scaling factor is varsigma2 = (i_s^2 / X) * intensity_scale / sum,
/// i.e. the per-model-unit ratio of signal-dependent to signal-independent
/// variance. intensity_scale is the optical intensity (in the budget's X
/// units) corresponding to one unit of the normalized model; current_scale
/// is the photocurrent corresponding to one model output unit. Both are
/// receiver conversion constants the budget itself does not determine.
VarianceSplit variance_split(const NoiseBudget &budget, double intensity_scale = 1.0,
                             double current_scale = 1.0);

} // namespace vlc
