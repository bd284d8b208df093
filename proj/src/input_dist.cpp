#include "vlc/input_dist.hpp"
#include "vlc/errors.hpp"
#include "vlc/numerics.hpp"
#include "vlc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vlc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Internal solver quadratures run tighter than the public defaults so the
// transcendental-equation residuals land well under 1e-10.
QuadratureOptions solver_quad() { return QuadratureOptions{1e-12, 1e-16, 400'000}; }

// Upper knot of the sqrt(1 + varsigma2 x) substitution, t = sqrt(1+vs2*x).
double t_top(double varsigma2, double A) { return std::sqrt(1.0 + varsigma2 * A); }

// Largest tilt magnitude the solver will consider before reporting failure.
constexpr double kTiltCap = 1e6;

// Tilts with |b| A below this use quadrature in place of the closed
// error-function form of g, which loses digits as b -> 0.
constexpr double kClosedFormMinExponent = 1e-2;

struct TiltRange {
    double lo, hi;
};

// Integration range for exp(b (t^2 - 1)/vs2) over [1, T]. Strong tilts
// concentrate the integrand in a layer at one endpoint; clipping the range
// to 120 decay widths keeps the layer resolvable by the adaptive rule while
// discarding a relative contribution below exp(-120) * (b A), which is
// negligible for every representable tilt.
TiltRange tilt_range(double b, double varsigma2, double T) {
    if (b > 0.0) {
        const double width = varsigma2 / (2.0 * b * T);
        return TiltRange{std::max(1.0, T - 120.0 * width), T};
    }
    if (b < 0.0) {
        const double width = varsigma2 / (2.0 * -b);
        return TiltRange{1.0, std::min(T, 1.0 + 120.0 * width)};
    }
    return TiltRange{1.0, T};
}

double g_by_quadrature(double b, double varsigma2, double A) {
    const double T = t_top(varsigma2, A);
    const TiltRange r = tilt_range(b, varsigma2, T);
    const double shift = std::max(0.0, b * A); // exponent at t = T is b*A
    const double scaled =
        integrate([=](double t) { return std::exp(b * (t * t - 1.0) / varsigma2 - shift); }, r.lo,
                  r.hi, solver_quad())
            .value;
    return std::exp(shift) * scaled;
}

double log_g_by_quadrature(double b, double varsigma2, double A) {
    const double T = t_top(varsigma2, A);
    const TiltRange r = tilt_range(b, varsigma2, T);
    const double shift = std::max(0.0, b * A);
    const double scaled =
        integrate([=](double t) { return std::exp(b * (t * t - 1.0) / varsigma2 - shift); }, r.lo,
                  r.hi, solver_quad())
            .value;
    return shift + std::log(scaled);
}

// Closed form for b < 0, rearranged around the scaled complementary error
// function so it stays finite for strongly negative tilts:
//   g = varsigma sqrt(pi) / (2 sqrt(-b)) *
//       [erfcx(sqrt(-b/vs2)) - exp(bA) erfcx(sqrt(-b(1+vs2 A)/vs2))]
double g_negative_closed(double b, double varsigma2, double A) {
    const double y1 = std::sqrt(-b / varsigma2);
    const double y2 = y1 * t_top(varsigma2, A);
    const double diff = erfcx_fn(y1) - std::exp(b * A) * erfcx_fn(y2);
    return std::sqrt(varsigma2 * std::numbers::pi) / (2.0 * std::sqrt(-b)) * diff;
}

void require_g_domain(double varsigma2, double A, double b) {
    if (!(varsigma2 > 0.0) || !(A > 0.0))
        throw std::domain_error("g_factor: requires varsigma2 > 0 and A > 0");
    if (!std::isfinite(b))
        throw std::domain_error("g_factor: non-finite tilt");
}

struct MeanEquation {
    double varsigma2, A;
    // Mean of the tilted density, computed as a ratio of quadratures in the
    // t-substituted coordinate. The common exponent shift cancels, so the
    // evaluation is stable for any tilt sign or magnitude.
    double operator()(double b) const {
        const double T = t_top(varsigma2, A);
        if (b == 0.0)
            return (varsigma2 * A + sqrt1pm1(varsigma2 * A)) / (3.0 * varsigma2);
        const TiltRange r = tilt_range(b, varsigma2, T);
        const double shift = std::max(0.0, b * A);
        const auto opts = solver_quad();
        const double mass =
            integrate([=, this](double t) { return std::exp(b * (t * t - 1.0) / varsigma2 - shift); },
                      r.lo, r.hi, opts)
                .value;
        if (!(mass > 0.0)) // layer narrower than machine resolution
            return b > 0.0 ? A : 0.0;
        const double first =
            integrate(
                [=, this](double t) {
                    return (t * t - 1.0) / varsigma2 *
                           std::exp(b * (t * t - 1.0) / varsigma2 - shift);
                },
                r.lo, r.hi, opts)
                .value;
        return first / mass;
    }
};

} // namespace

double alpha_star(double varsigma2, double A) {
    if (!(A > 0.0))
        throw std::domain_error("alpha_star: requires A > 0");
    if (!(varsigma2 > 0.0))
        throw std::domain_error("alpha_star: degenerate at varsigma2 = 0 (limit is 1/2)");
    const double u = varsigma2 * A;
    return (u + sqrt1pm1(u)) / (3.0 * u);
}

double g_factor(double b, double varsigma2, double A) {
    require_g_domain(varsigma2, A, b);
    if (b == 0.0)
        return sqrt1pm1(varsigma2 * A);
    if (b < 0.0 && -b * A >= kClosedFormMinExponent)
        return g_negative_closed(b, varsigma2, A);
    return g_by_quadrature(b, varsigma2, A);
}

double log_g_factor(double b, double varsigma2, double A) {
    require_g_domain(varsigma2, A, b);
    if (b == 0.0)
        return std::log(sqrt1pm1(varsigma2 * A));
    if (b < 0.0 && -b * A >= kClosedFormMinExponent)
        return std::log(g_negative_closed(b, varsigma2, A));
    return log_g_by_quadrature(b, varsigma2, A);
}

double tilted_mean(double b, double varsigma2, double A) {
    if (!(varsigma2 > 0.0) || !(A > 0.0))
        throw std::domain_error("tilted_mean: requires varsigma2 > 0 and A > 0");
    return MeanEquation{varsigma2, A}(b);
}

PeakAvgInputDist solve_b(const ChannelParams &params, const PeakAvgConstraints &cons, double tol) {
    if (!(params.varsigma2 > 0.0))
        throw std::domain_error("solve_b: requires varsigma2 > 0 (use a small positive value "
                                "for the signal-independent limit)");
    if (!(tol > 0.0))
        throw std::invalid_argument("solve_b: tol must be positive");

    const double vs2 = params.varsigma2;
    const double A = cons.A;
    const double target = cons.mean_target();
    const double alpha = cons.apr();
    const double astar = alpha_star(vs2, A);

    // The untilted branch; the tilted branch is continuous through b -> 0,
    // so the only purpose of the tolerance is to avoid root finding on an
    // ill-conditioned near-zero tilt.
    if (std::abs(alpha - astar) < 1e-9) {
        const double log_g = std::log(sqrt1pm1(vs2 * A));
        return PeakAvgInputDist{PeakAvgBranch::ZeroB, 0.0, 2.0 * sqrt1pm1(vs2 * A) / vs2, log_g,
                                params, cons};
    }

    const MeanEquation mean{vs2, A};
    auto f = [&](double b) { return mean(b) / target - 1.0; };

    // Geometric bracket expansion from +-1/(xi P); the mean is strictly
    // increasing in b, so a sign change exists for every feasible target.
    double lo = 0.0, hi = 0.0;
    if (alpha > astar) {
        lo = 0.0;
        hi = 1.0 / target;
        while (f(hi) < 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > kTiltCap)
                throw SolverError("solve_b: tilt bracket expansion exhausted", lo, hi);
        }
    } else {
        hi = 0.0;
        lo = -1.0 / target;
        while (f(lo) > 0.0) {
            hi = lo;
            lo *= 2.0;
            if (-lo > kTiltCap)
                throw SolverError("solve_b: tilt bracket expansion exhausted", lo, hi);
        }
    }

    const RootResult root = find_root(f, lo, hi, RootOptions{tol, 200});
    const double b = root.root;
    const double log_g = log_g_factor(b, vs2, A);
    return PeakAvgInputDist{PeakAvgBranch::NonzeroB, b, 2.0 * std::exp(log_g) / vs2, log_g, params,
                            cons};
}

double PeakAvgInputDist::pdf(double x) const {
    if (x < 0.0 || x > constraints.A)
        return 0.0;
    const double vs2 = params.varsigma2;
    return std::exp(std::log(vs2 / 2.0) + b * x - log_g - 0.5 * std::log1p(vs2 * x));
}

double pdf_peak_avg(double x, const PeakAvgInputDist &dist) { return dist.pdf(x); }

AvgOnlyInputDist solve_mn(const ChannelParams &params, const AvgOnlyConstraints &cons, double tol) {
    if (!(params.varsigma2 > 0.0))
        throw std::domain_error("solve_mn: requires varsigma2 > 0");
    if (!(tol > 0.0))
        throw std::invalid_argument("solve_mn: tol must be positive");

    const double vs2 = params.varsigma2;
    const double target = cons.mean_target();
    const double tau = vs2 * target; // the mean equation in units of u = n/vs2

    // With m eliminated through the normalization equality, the mean
    // constraint becomes W(u) = vs2 * xi * P where
    //   W(u) = 1 / (sqrt(pi u) erfcx(sqrt(u))) + 1/(2u) - 1,
    // strictly decreasing from +inf to 0, so the root in u is unique.
    auto W = [](double u) {
        return 1.0 / (std::sqrt(std::numbers::pi * u) * erfcx_fn(std::sqrt(u))) + 0.5 / u - 1.0;
    };
    auto f = [&](double u) { return W(u) / tau - 1.0; };

    double lo = std::min(0.5 / tau, 1.0 / tau) / 4.0;
    double hi = std::max(0.5 / tau, 1.0 / tau) * 4.0;
    int guard = 0;
    while (f(lo) < 0.0) {
        lo /= 8.0;
        if (++guard > 300 || lo < 1e-300)
            throw SolverError("solve_mn: no root in expanded bracket", lo, hi);
    }
    while (f(hi) > 0.0) {
        hi *= 8.0;
        if (++guard > 300 || hi > 1e300)
            throw SolverError("solve_mn: no root in expanded bracket", lo, hi);
    }

    const RootResult root = find_root(f, lo, hi, RootOptions{tol, 200});
    const double u = root.root;
    const double n = vs2 * u;
    // exp(-m-1) from the normalization equality, in scaled-erfc form.
    const double log_em1 = 0.5 * std::log(n * vs2 / std::numbers::pi) - std::log(erfcx_fn(std::sqrt(u)));
    const double m = -1.0 - log_em1;
    return AvgOnlyInputDist{m, n, params, cons};
}

double AvgOnlyInputDist::pdf(double x) const {
    if (x < 0.0)
        return 0.0;
    return std::exp(-m - 1.0 - n * x - 0.5 * std::log1p(params.varsigma2 * x));
}

double AvgOnlyInputDist::support_truncation() const {
    // Solve the tail bound exp(-m-1-nx) / (n sqrt(1+vs2 x)) = 1e-12; the
    // bound dominates the true tail, so the CDF at the returned point
    // exceeds 1 - 1e-12.
    const double log_eps = std::log(1e-12);
    double x = std::max(constraints.mean_target(), (-m - 1.0 - log_eps - std::log(n)) / n);
    for (int i = 0; i < 6; ++i)
        x = (-m - 1.0 - log_eps - std::log(n) - 0.5 * std::log1p(params.varsigma2 * x)) / n;
    return std::max(x, constraints.mean_target());
}

double pdf_avg_only(double x, const AvgOnlyInputDist &dist) { return dist.pdf(x); }

double expected_log1p_varsigma_x(const PeakAvgInputDist &dist) {
    const double vs2 = dist.params.varsigma2;
    const double A = dist.constraints.A;
    const double T = t_top(vs2, A);
    const double b = dist.b;
    const TiltRange r = tilt_range(b, vs2, T);
    const double shift = std::max(0.0, b * A);
    const auto opts = solver_quad();
    // ln(1 + vs2 x) = 2 ln t under the substitution; normalizers cancel in
    // the ratio.
    const double mass =
        integrate([=](double t) { return std::exp(b * (t * t - 1.0) / vs2 - shift); }, r.lo, r.hi,
                  opts)
            .value;
    const double num =
        integrate(
            [=](double t) { return 2.0 * std::log(t) * std::exp(b * (t * t - 1.0) / vs2 - shift); },
            r.lo, r.hi, opts)
            .value;
    return num / mass;
}

double expected_log1p_varsigma_x(const AvgOnlyInputDist &dist) {
    // x-space ratio: the density decays on the scale 1/n there, whereas the
    // t-substituted form develops an unresolvable boundary layer for small
    // varsigma2.
    const double vs2 = dist.params.varsigma2;
    const double hi = dist.support_truncation();
    const auto opts = solver_quad();
    const double mass = integrate([&](double x) { return dist.pdf(x); }, 0.0, hi, opts).value;
    const double num =
        integrate([&](double x) { return std::log1p(vs2 * x) * dist.pdf(x); }, 0.0, hi, opts)
            .value;
    return num / mass;
}

double input_entropy(const PeakAvgInputDist &dist) {
    const double vs2 = dist.params.varsigma2;
    const double half_e = 0.5 * expected_log1p_varsigma_x(dist);
    if (dist.branch == PeakAvgBranch::ZeroB)
        return std::log(2.0 * sqrt1pm1(vs2 * dist.constraints.A) / vs2) + half_e;
    return std::numbers::ln2 + dist.log_g - std::log(vs2) - dist.b * dist.constraints.mean_target() +
           half_e;
}

double input_entropy(const AvgOnlyInputDist &dist) {
    return 1.0 + dist.m + dist.n * dist.constraints.mean_target() +
           0.5 * expected_log1p_varsigma_x(dist);
}

namespace {

double j_functional_impl(const std::function<double(double)> &pdf, double lo, double hi,
                         double mean_target, double varsigma2) {
    const QuadratureOptions feas{1e-9, 1e-12, 600'000};

    // Numerical feasibility screen: nonnegative on a probe grid, normalized,
    // correct mean.
    const double probe_hi = std::isinf(hi) ? 8.0 * mean_target : hi;
    for (int i = 0; i <= 512; ++i) {
        const double x = lo + (probe_hi - lo) * i / 512.0;
        if (pdf(x) < -1e-12)
            throw FeasibilityError("j_functional: candidate density is negative");
    }
    const double norm = integrate(pdf, lo, hi, feas).value;
    if (std::abs(norm - 1.0) > 1e-4)
        throw FeasibilityError("j_functional: candidate density is not normalized");
    const double mean = integrate([&](double x) { return x * pdf(x); }, lo, hi, feas).value;
    if (std::abs(mean - mean_target) > 1e-4 * std::max(1.0, mean_target))
        throw FeasibilityError("j_functional: candidate density has the wrong mean");

    const QuadratureOptions tight{1e-11, 1e-14, 800'000};
    auto integrand = [&](double x) {
        const double f = pdf(x);
        const double entropy_part = f > 0.0 ? f * std::log(f) : 0.0;
        return entropy_part + 0.5 * std::log1p(varsigma2 * x) * f;
    };
    return integrate(integrand, lo, hi, tight).value;
}

} // namespace

double j_functional(const PeakAvgInputDist &dist, const std::function<double(double)> &pdf) {
    return j_functional_impl(pdf, 0.0, dist.constraints.A, dist.constraints.mean_target(),
                             dist.params.varsigma2);
}

double j_functional(const AvgOnlyInputDist &dist, const std::function<double(double)> &pdf) {
    return j_functional_impl(pdf, 0.0, kInf, dist.constraints.mean_target(),
                             dist.params.varsigma2);
}

// --- inverse-CDF sampling ---------------------------------------------

namespace {

constexpr std::size_t kCdfCells = 4096;

struct QuantileTable {
    std::vector<double> u; // strictly increasing CDF knots, 0 .. 1
    std::vector<double> x; // corresponding abscissae
    std::vector<double> d; // PCHIP slopes dx/du

    double operator()(double v) const {
        if (v <= u.front())
            return x.front();
        if (v >= u.back())
            return x.back();
        const auto it = std::upper_bound(u.begin(), u.end(), v);
        const std::size_t i = static_cast<std::size_t>(it - u.begin()) - 1;
        const double h = u[i + 1] - u[i];
        const double t = (v - u[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return x[i] * (2 * t3 - 3 * t2 + 1) + h * d[i] * (t3 - 2 * t2 + t) +
               x[i + 1] * (-2 * t3 + 3 * t2) + h * d[i + 1] * (t3 - t2);
    }
};

// Fritsch-Carlson monotone slopes for x(u); secants are positive because
// the density is positive on the tabulated support.
std::vector<double> pchip_slopes(const std::vector<double> &u, const std::vector<double> &x) {
    const std::size_t n = u.size();
    std::vector<double> s(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        s[i] = (x[i + 1] - x[i]) / (u[i + 1] - u[i]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (s[i - 1] * s[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double h0 = u[i] - u[i - 1], h1 = u[i + 1] - u[i];
            const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
            d[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double s0, double s1) {
        double d0 = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
        if (d0 * s0 <= 0.0)
            return 0.0;
        if (std::abs(d0) > 3.0 * std::abs(s0))
            return 3.0 * s0;
        return d0;
    };
    d[0] = (n > 2) ? end_slope(u[1] - u[0], u[2] - u[1], s[0], s[1]) : s[0];
    d[n - 1] = (n > 2) ? end_slope(u[n - 1] - u[n - 2], u[n - 2] - u[n - 3], s[n - 2], s[n - 3])
                       : s[n - 2];
    return d;
}

QuantileTable build_quantile_table(const std::function<double(double)> &pdf, double lo, double hi,
                                   Exec exec) {
    std::vector<double> knots(kCdfCells + 1), mass(kCdfCells);
    const double h = (hi - lo) / static_cast<double>(kCdfCells);
    for (std::size_t i = 0; i <= kCdfCells; ++i)
        knots[i] = lo + h * static_cast<double>(i);
    knots.back() = hi;

    auto cell_mass = [&](std::size_t i) {
        // single Gauss-Kronrod panel per cell; cells are narrow enough that
        // the panel is effectively exact for these smooth densities
        return integrate(pdf, knots[i], knots[i + 1], QuadratureOptions{1e-6, 0.0, 4096}).value;
    };

#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(kCdfCells); ++i)
            mass[static_cast<std::size_t>(i)] = cell_mass(static_cast<std::size_t>(i));
    } else
#else
    (void)exec;
#endif
    {
        for (std::size_t i = 0; i < kCdfCells; ++i)
            mass[i] = cell_mass(i);
    }

    std::vector<double> cdf(kCdfCells + 1, 0.0);
    for (std::size_t i = 0; i < kCdfCells; ++i)
        cdf[i + 1] = cdf[i] + mass[i];
    const double total = cdf.back();
    for (auto &c : cdf)
        c /= total;
    cdf.back() = 1.0;

    // Drop knots whose CDF increment rounds away so the interpolant stays
    // strictly monotone.
    QuantileTable table;
    table.u.reserve(cdf.size());
    table.x.reserve(cdf.size());
    table.u.push_back(cdf[0]);
    table.x.push_back(knots[0]);
    for (std::size_t i = 1; i < cdf.size(); ++i) {
        if (cdf[i] - table.u.back() > 1e-15) {
            table.u.push_back(cdf[i]);
            table.x.push_back(knots[i]);
        }
    }
    if (table.u.back() != 1.0) {
        table.u.back() = 1.0;
        table.x.back() = knots.back();
    }
    table.d = pchip_slopes(table.u, table.x);
    return table;
}

std::vector<double> sample_from_table(const QuantileTable &table, std::uint64_t seed,
                                      std::size_t count, Exec exec) {
    std::vector<double> out(count);
    const std::size_t chunks = (count + rng::kChunk - 1) / rng::kChunk;

    auto fill_chunk = [&](std::size_t c) {
        rng::Stream stream(seed, /*stream=*/2, c);
        const std::size_t begin = c * rng::kChunk;
        const std::size_t end = std::min(count, begin + rng::kChunk);
        for (std::size_t i = begin; i < end; ++i)
            out[i] = table(stream.next_unit());
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

} // namespace

std::vector<double> sample(const PeakAvgInputDist &dist, std::uint64_t seed, std::size_t count,
                           Exec exec) {
    if (count == 0)
        return {};
    const auto table =
        build_quantile_table([&](double x) { return dist.pdf(x); }, 0.0, dist.constraints.A, exec);
    return sample_from_table(table, seed, count, exec);
}

std::vector<double> sample(const AvgOnlyInputDist &dist, std::uint64_t seed, std::size_t count,
                           Exec exec) {
    if (count == 0)
        return {};
    const auto table = build_quantile_table([&](double x) { return dist.pdf(x); }, 0.0,
                                            dist.support_truncation(), exec);
    return sample_from_table(table, seed, count, exec);
}

} // namespace vlc
