#include "vlc/bounds.hpp"
#include "vlc/errors.hpp"
#include "vlc/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlc {

namespace {

double half_log_2pie_sigma2(double sigma2) {
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma2);
}

double log_big_g(double b, double varsigma2, double A, double delta) {
    // same integral as log_g_factor with the peak widened to A (1 + delta)
    return log_g_factor(b, varsigma2, A * (1.0 + delta));
}

} // namespace

double f_low(double xiP, const ChannelParams &params) {
    if (!(xiP > 0.0))
        throw std::domain_error("f_low: requires xiP > 0");
    const double c = params.varsigma2 * params.sigma2;
    if (!(c > 0.0))
        throw std::domain_error("f_low: requires varsigma2 > 0");
    return 0.5 * std::log1p(2.0 * c / xiP) - (xiP + c) / c + std::sqrt(xiP * (xiP + 2.0 * c)) / c;
}

double c_low_peak_avg(const PeakAvgInputDist &dist) {
    const double vs2 = dist.params.varsigma2;
    const double xiP = dist.constraints.mean_target();
    const double fl = f_low(xiP, dist.params);
    if (dist.branch == PeakAvgBranch::ZeroB)
        return std::log(2.0 * sqrt1pm1(vs2 * dist.constraints.A) / vs2) -
               half_log_2pie_sigma2(dist.params.sigma2) + fl;
    return std::numbers::ln2 + dist.log_g - std::log(vs2) - half_log_2pie_sigma2(dist.params.sigma2) -
           dist.b * xiP + fl;
}

double big_g(double b, double varsigma2, double A, double delta) {
    if (!(delta >= 0.0))
        throw std::domain_error("big_g: requires delta >= 0");
    return g_factor(b, varsigma2, A * (1.0 + delta));
}

double psi(double b, const ChannelParams &params, const PeakAvgConstraints &cons, double delta) {
    if (b == 0.0)
        throw std::domain_error("psi: undefined at b = 0 (use the untilted branch)");
    const double A = cons.A;
    const double vs2 = params.varsigma2;
    const double s2 = params.sigma2;
    const double xiP = cons.mean_target();
    const double spread = std::sqrt((1.0 + A * vs2) * s2);
    constexpr double inv_sqrt_2pi = 0.39894228040143267793994605993438;

    if (b < 0.0) {
        const double tail = spread * inv_sqrt_2pi * std::exp(-A * A / (2.0 * (1.0 + A * vs2) * s2));
        return -b * tail - b * xiP;
    }
    const double ad = A * delta;
    const double tail = spread * inv_sqrt_2pi * std::exp(-ad * ad / (2.0 * (1.0 + A * vs2) * s2));
    const double sd = std::sqrt((1.0 + xiP * vs2) * s2);
    const double q_window = gauss_q(-xiP / sd) - gauss_q((A + ad - xiP) / sd);
    return b * tail - b * xiP * q_window;
}

double c_upp_peak_avg(const PeakAvgInputDist &dist, const UpperBoundParams &ub) {
    const double vs2 = dist.params.varsigma2;
    const double A = dist.constraints.A;
    const double log_1m2b = std::log1p(-2.0 * ub.beta);
    if (dist.branch == PeakAvgBranch::ZeroB)
        return std::log(2.0 * sqrt1pm1(vs2 * A * (1.0 + ub.delta)) / vs2) - log_1m2b -
               half_log_2pie_sigma2(dist.params.sigma2);
    return std::numbers::ln2 + log_big_g(dist.b, vs2, A, ub.delta) - std::log(vs2) - log_1m2b -
           half_log_2pie_sigma2(dist.params.sigma2) +
           psi(dist.b, dist.params, dist.constraints, ub.delta);
}

double gap_peak_avg(const PeakAvgInputDist &dist, const UpperBoundParams &ub) {
    const double vs2 = dist.params.varsigma2;
    const double A = dist.constraints.A;
    const double xiP = dist.constraints.mean_target();
    const double fl = f_low(xiP, dist.params);
    const double log_1m2b = std::log1p(-2.0 * ub.beta);
    if (dist.branch == PeakAvgBranch::ZeroB)
        return std::log(sqrt1pm1(vs2 * A * (1.0 + ub.delta)) / sqrt1pm1(vs2 * A)) - log_1m2b - fl;
    return log_big_g(dist.b, vs2, A, ub.delta) - dist.log_g - log_1m2b +
           psi(dist.b, dist.params, dist.constraints, ub.delta) + dist.b * xiP - fl;
}

double asymptotic_gap_peak_avg(PeakAvgBranch branch, const UpperBoundParams &ub) {
    const double log_1m2b = std::log1p(-2.0 * ub.beta);
    if (branch == PeakAvgBranch::ZeroB)
        return 0.5 * std::log1p(ub.delta) - log_1m2b;
    return -log_1m2b;
}

double c_low_avg_only(const AvgOnlyInputDist &dist) {
    const double xiP = dist.constraints.mean_target();
    return -half_log_2pie_sigma2(dist.params.sigma2) + 1.0 + dist.m + dist.n * xiP +
           f_low(xiP, dist.params);
}

double c_upp_avg_only(const AvgOnlyInputDist &dist, double beta) {
    if (!(beta >= 0.0) || !(beta < 1.0))
        throw std::invalid_argument("c_upp_avg_only: beta must be in [0, 1)");
    const double xiP = dist.constraints.mean_target();
    return -half_log_2pie_sigma2(dist.params.sigma2) + 1.0 + dist.m + dist.n * xiP -
           std::log1p(-beta);
}

double gap_avg_only(const AvgOnlyInputDist &dist, double beta) {
    if (!(beta >= 0.0) || !(beta < 1.0))
        throw std::invalid_argument("gap_avg_only: beta must be in [0, 1)");
    return -std::log1p(-beta) - f_low(dist.constraints.mean_target(), dist.params);
}

double asymptotic_gap_avg_only(double beta) {
    if (!(beta >= 0.0) || !(beta < 1.0))
        throw std::invalid_argument("asymptotic_gap_avg_only: beta must be in [0, 1)");
    return -std::log1p(-beta);
}

double shannon_awgn(double snr) {
    if (!(snr >= 0.0))
        throw std::domain_error("shannon_awgn: requires snr >= 0");
    return 0.5 * std::log1p(snr);
}

BoundReport make_report(const PeakAvgInputDist &dist, const UpperBoundParams &ub) {
    BoundReport r;
    r.scenario = Scenario::PeakAvg;
    r.c_low = c_low_peak_avg(dist);
    r.c_upp = c_upp_peak_avg(dist, ub);
    r.gap = r.c_upp - r.c_low;
    r.asymptotic_gap = asymptotic_gap_peak_avg(dist.branch, ub);
    r.aux["f_low"] = f_low(dist.constraints.mean_target(), dist.params);
    r.aux["b"] = dist.b;
    r.aux["g"] = g_factor(dist.b, dist.params.varsigma2, dist.constraints.A);
    r.aux["G"] = big_g(dist.b, dist.params.varsigma2, dist.constraints.A, ub.delta);
    if (dist.branch == PeakAvgBranch::NonzeroB)
        r.aux["psi"] = psi(dist.b, dist.params, dist.constraints, ub.delta);
    r.aux["gap_closed_form"] = gap_peak_avg(dist, ub);
    return r;
}

BoundReport make_report(const AvgOnlyInputDist &dist, double beta) {
    BoundReport r;
    r.scenario = Scenario::AvgOnly;
    r.c_low = c_low_avg_only(dist);
    r.c_upp = c_upp_avg_only(dist, beta);
    r.gap = r.c_upp - r.c_low;
    r.asymptotic_gap = asymptotic_gap_avg_only(beta);
    r.aux["f_low"] = f_low(dist.constraints.mean_target(), dist.params);
    r.aux["m"] = dist.m;
    r.aux["n"] = dist.n;
    r.aux["gap_closed_form"] = gap_avg_only(dist, beta);
    return r;
}

} // namespace vlc
