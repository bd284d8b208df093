#include "vlc/channel.hpp"
#include "vlc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vlc {

double conditional_pdf(double y, double x, const ChannelParams &params) {
    if (!(x >= 0.0))
        throw std::domain_error("conditional_pdf: requires x >= 0");
    const double var = params.conditional_variance(x);
    const double z = y - x;
    return std::exp(-z * z / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

std::vector<double> transmit(double x, const ChannelParams &params, std::uint64_t seed,
                             std::size_t count, Exec exec) {
    if (!(x >= 0.0))
        throw std::domain_error("transmit: requires x >= 0");
    std::vector<double> out(count);
    if (count == 0)
        return out;

    const double sigma = std::sqrt(params.sigma2);
    const double dep_scale = std::sqrt(x) * std::sqrt(params.varsigma2 * params.sigma2);
    const std::size_t chunks = (count + rng::kChunk - 1) / rng::kChunk;

    auto fill_chunk = [&](std::size_t c) {
        rng::Stream z0_stream(seed, /*stream=*/0, c);
        rng::Stream z1_stream(seed, /*stream=*/1, c);
        const std::size_t begin = c * rng::kChunk;
        const std::size_t end = std::min(count, begin + rng::kChunk);
        for (std::size_t i = begin; i < end; ++i)
            out[i] = x + dep_scale * z1_stream.next_normal() + sigma * z0_stream.next_normal();
    };

#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c)
            fill_chunk(static_cast<std::size_t>(c));
        return out;
    }
#else
    (void)exec;
#endif
    for (std::size_t c = 0; c < chunks; ++c)
        fill_chunk(c);
    return out;
}

namespace {

void require_nonnegative(double v, const char *name) {
    if (!(v >= 0.0))
        throw std::domain_error(std::string("noise budget: ") + name + " must be >= 0");
}

} // namespace

ShotNoise shot_noise(const NoiseBudgetInputs &in) {
    require_nonnegative(in.q, "q");
    require_nonnegative(in.eta, "eta");
    require_nonnegative(in.X, "X");
    require_nonnegative(in.X_b, "X_b");
    require_nonnegative(in.i_dark, "i_dark");
    require_nonnegative(in.B, "B");
    if (!(in.h_nu > 0.0))
        throw std::domain_error("noise budget: h_nu must be > 0");
    const double photo = 2.0 * in.q * in.q * in.eta * in.B / in.h_nu;
    return ShotNoise{std::sqrt(photo * in.X), std::sqrt(photo * in.X_b),
                     std::sqrt(2.0 * in.q * in.i_dark * in.B)};
}

double thermal_noise(double K, double T, double B, double R_e) {
    if (!(T > 0.0) || !(B > 0.0) || !(R_e > 0.0) || !(K > 0.0))
        throw std::domain_error("thermal_noise: requires positive K, T, B, R_e");
    return std::sqrt(4.0 * K * T * B / R_e);
}

double amplifier_noise(double K, double T, double B, double r_e) {
    if (!(T > 0.0) || !(B > 0.0) || !(r_e > 0.0) || !(K > 0.0))
        throw std::domain_error("amplifier_noise: requires positive K, T, B, r_e");
    return std::sqrt(2.0 * K * T * B / r_e);
}

NoiseBudget compute_noise_budget(const NoiseBudgetInputs &in) {
    const ShotNoise sn = shot_noise(in);
    NoiseBudget b;
    b.i_s = sn.i_s;
    b.i_b = sn.i_b;
    b.i_d_rms = sn.i_d_rms;
    b.i_th = thermal_noise(in.K, in.T, in.B, in.R_e);
    b.i_a = amplifier_noise(in.K, in.T, in.B, in.r_e);
    b.inputs = in;
    return b;
}

VarianceSplit variance_split(const NoiseBudget &budget, double intensity_scale,
                             double current_scale) {
    if (!(intensity_scale > 0.0) || !(current_scale > 0.0))
        throw std::invalid_argument("variance_split: conversion scales must be positive");
    const double indep = budget.i_b * budget.i_b + budget.i_d_rms * budget.i_d_rms +
                         budget.i_th * budget.i_th + budget.i_a * budget.i_a;
    if (!(indep > 0.0))
        throw std::domain_error("variance_split: signal-independent variance is zero, "
                                "scaling factor undefined");
    VarianceSplit vs;
    vs.sigma2 = indep / (current_scale * current_scale);
    if (budget.i_s == 0.0) {
        vs.varsigma2 = 0.0;
    } else {
        if (!(budget.inputs.X > 0.0))
            throw std::domain_error("variance_split: i_s > 0 requires X > 0");
        vs.varsigma2 = budget.i_s * budget.i_s / budget.inputs.X * intensity_scale / indep;
    }
    return vs;
}

} // namespace vlc
