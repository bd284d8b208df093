#include "vlc/oracle.hpp"
#include "vlc/bounds.hpp"
#include "vlc/channel.hpp"
#include "vlc/numerics.hpp"
#include "vlc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace vlc {

namespace {

double half_log_2pie_sigma2(double sigma2) {
    return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma2);
}

// Marginalization f_Y(y) = int f_{Y|X}(y|x) f_X(x) dx. The integrand is a
// Gaussian ridge of width sd(y) centered near x = y inside a support that
// can be many orders of magnitude wider, so the range is pre-cut at
// geometric multiples of the ridge width; otherwise the adaptive rule can
// converge on panels whose nodes all miss the ridge.
template <typename Dist>
double marginal_impl(double y, const Dist &dist, double x_hi) {
    const QuadratureOptions opts{1e-9, 1e-18, 400'000};
    auto integrand = [&](double x) { return conditional_pdf(y, x, dist.params) * dist.pdf(x); };

    const double sd = std::sqrt(dist.params.conditional_variance(std::clamp(y, 0.0, x_hi)));
    std::vector<double> cuts{0.0, x_hi};
    for (double k : {0.0, 2.0, 8.0, 32.0, 128.0, 512.0})
        for (double c : {y - k * sd, y + k * sd})
            if (c > 0.0 && c < x_hi)
                cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());

    double value = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i]))
            continue;
        value += integrate(integrand, cuts[i], cuts[i + 1], opts).value;
    }
    return value;
}

// The output density carries structure on two very different scales: a
// feature of width ~sigma near y = 0 (inherited from the 1/sqrt(1 + vs2 x)
// concentration of the input density) and the slow envelope across the full
// support. Splitting the window at geometrically growing offsets keeps
// every scale visible to the adaptive rule.
template <typename Dist>
double h_y_impl(const Dist &dist, double x_hi, const MarginalWindow &win, double *err_out) {
    const double sigma = std::sqrt(dist.params.sigma2);
    std::vector<double> cuts;
    cuts.push_back(win.lo);
    if (win.lo < 0.0 && win.hi > 0.0)
        cuts.push_back(0.0);
    for (double y = 16.0 * sigma; y < win.hi; y *= 2.0)
        cuts.push_back(y);
    cuts.push_back(win.hi);

    const QuadratureOptions opts{1e-7, 1e-12, 2'000'000};
    auto integrand = [&](double y) {
        const double w = marginal_impl(y, dist, x_hi);
        return w > 0.0 ? -w * std::log(w) : 0.0;
    };
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const QuadratureResult r = integrate(integrand, cuts[i], cuts[i + 1], opts);
        total += r.value;
        err += r.est_error;
    }
    if (err_out)
        *err_out = err;
    return total;
}

} // namespace

double conditional_entropy(const PeakAvgInputDist &dist) {
    return half_log_2pie_sigma2(dist.params.sigma2) + 0.5 * expected_log1p_varsigma_x(dist);
}

double conditional_entropy(const AvgOnlyInputDist &dist) {
    return half_log_2pie_sigma2(dist.params.sigma2) + 0.5 * expected_log1p_varsigma_x(dist);
}

double output_marginal_pdf(double y, const PeakAvgInputDist &dist) {
    return marginal_impl(y, dist, dist.constraints.A);
}

double output_marginal_pdf(double y, const AvgOnlyInputDist &dist) {
    return marginal_impl(y, dist, dist.support_truncation());
}

MarginalWindow marginal_window(const PeakAvgInputDist &dist) {
    const double sigma = std::sqrt(dist.params.sigma2);
    const double A = dist.constraints.A;
    const double top_sd = sigma * std::sqrt(1.0 + dist.params.varsigma2 * A);
    return MarginalWindow{-8.0 * sigma, A + 8.0 * top_sd};
}

MarginalWindow marginal_window(const AvgOnlyInputDist &dist) {
    const double sigma = std::sqrt(dist.params.sigma2);
    const double x_hi = dist.support_truncation();
    const double top_sd = sigma * std::sqrt(1.0 + dist.params.varsigma2 * x_hi);
    return MarginalWindow{-8.0 * sigma, x_hi + 8.0 * top_sd};
}

MutualInfoResult mutual_information(const PeakAvgInputDist &dist) {
    MutualInfoResult r;
    r.h_y = h_y_impl(dist, dist.constraints.A, marginal_window(dist), &r.quadrature_error);
    r.h_y_given_x = conditional_entropy(dist);
    r.mi = r.h_y - r.h_y_given_x;
    return r;
}

MutualInfoResult mutual_information(const AvgOnlyInputDist &dist) {
    MutualInfoResult r;
    r.h_y = h_y_impl(dist, dist.support_truncation(), marginal_window(dist), &r.quadrature_error);
    r.h_y_given_x = conditional_entropy(dist);
    r.mi = r.h_y - r.h_y_given_x;
    return r;
}

namespace {

template <typename Dist> EntropyInequalityResult entropy_check_impl(const Dist &dist, double x_hi) {
    EntropyInequalityResult r;
    r.lhs = h_y_impl(dist, x_hi, marginal_window(dist), nullptr);
    r.rhs = input_entropy(dist) + f_low(dist.constraints.mean_target(), dist.params);
    r.holds = r.lhs >= r.rhs - 1e-4;
    return r;
}

template <typename Dist>
double monte_carlo_mi_impl(const Dist &dist, double x_hi, std::uint64_t seed, std::size_t pairs) {
    const std::vector<double> xs = sample(dist, seed, pairs);
    double acc = 0.0;
    const std::size_t chunks = (pairs + rng::kChunk - 1) / rng::kChunk;
    for (std::size_t c = 0; c < chunks; ++c) {
        rng::Stream noise(seed ^ 0x5bf03e9aULL, /*stream=*/7, c);
        const std::size_t begin = c * rng::kChunk;
        const std::size_t end = std::min(pairs, begin + rng::kChunk);
        for (std::size_t i = begin; i < end; ++i) {
            const double x = xs[i];
            const double sd = std::sqrt(dist.params.conditional_variance(x));
            const double y = x + sd * noise.next_normal();
            const double fy = marginal_impl(y, dist, x_hi);
            if (fy > 0.0)
                acc += std::log(conditional_pdf(y, x, dist.params)) - std::log(fy);
        }
    }
    return acc / static_cast<double>(pairs);
}

} // namespace

EntropyInequalityResult entropy_inequality_check(const PeakAvgInputDist &dist) {
    return entropy_check_impl(dist, dist.constraints.A);
}

EntropyInequalityResult entropy_inequality_check(const AvgOnlyInputDist &dist) {
    return entropy_check_impl(dist, dist.support_truncation());
}

double monte_carlo_mi(const PeakAvgInputDist &dist, std::uint64_t seed, std::size_t pairs) {
    return monte_carlo_mi_impl(dist, dist.constraints.A, seed, pairs);
}

double monte_carlo_mi(const AvgOnlyInputDist &dist, std::uint64_t seed, std::size_t pairs) {
    return monte_carlo_mi_impl(dist, dist.support_truncation(), seed, pairs);
}

} // namespace vlc
