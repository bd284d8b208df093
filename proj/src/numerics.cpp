#include "vlc/numerics.hpp"
#include "vlc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace vlc {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Nodes are symmetric about the midpoint; only the nonnegative half is stored.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    double value;
    double error;
    bool operator<(const Segment &other) const { return error < other.error; }
};

// One Gauss-Kronrod panel; error estimate is the conservative |K15 - G7|.
Segment gk15(const std::function<double(double)> &f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double abscissa = half * kXgk[j];
        const double f1 = f(center - abscissa);
        const double f2 = f(center + abscissa);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) // Kronrod nodes 1,3,5 coincide with the Gauss nodes
            result_gauss += kWg[j / 2] * (f1 + f2);
    }
    result_kronrod *= half;
    result_gauss *= half;
    return Segment{lo, hi, result_kronrod, std::abs(result_kronrod - result_gauss)};
}

QuadratureResult integrate_finite(const std::function<double(double)> &f, double lo, double hi,
                                  const QuadratureOptions &opts) {
    // Seed with several panels so initial |K-G| agreement on a spike that
    // falls between nodes cannot pass for convergence.
    constexpr int kInitialSegments = 8;

    std::priority_queue<Segment> segments;
    double total = 0.0, total_err = 0.0;
    std::size_t evals = 0;

    const double h0 = (hi - lo) / kInitialSegments;
    for (int i = 0; i < kInitialSegments; ++i) {
        Segment s = gk15(f, lo + i * h0, (i + 1 == kInitialSegments) ? hi : lo + (i + 1) * h0);
        evals += 15;
        total += s.value;
        total_err += s.error;
        segments.push(s);
    }

    const auto tolerance_met = [&] {
        return total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    };

    while (!tolerance_met()) {
        if (segments.empty())
            throw ConvergenceError("quadrature stalled at machine resolution", total, total_err);
        if (evals + 30 > opts.max_evaluations)
            throw ConvergenceError("quadrature evaluation budget exhausted", total, total_err);
        Segment worst = segments.top();
        segments.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi))
            continue; // interval at machine resolution; its error stays frozen
        Segment left = gk15(f, worst.lo, mid);
        Segment right = gk15(f, mid, worst.hi);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        segments.push(left);
        segments.push(right);
    }
    return QuadratureResult{total, total_err, evals};
}

} // namespace

double gauss_q(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("gauss_q: non-finite argument");
    return 0.5 * std::erfc(x / kSqrt2);
}

double erf_fn(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("erf_fn: non-finite argument");
    return std::erf(x);
}

double erfcx_fn(double x) {
    if (!(x >= 0.0))
        throw std::domain_error("erfcx_fn: requires x >= 0");
    if (x < 25.0)
        return std::exp(x * x) * std::erfc(x);
    // Asymptotic series erfcx(x) ~ 1/(x sqrt(pi)) * sum (-1)^k (2k-1)!!/(2x^2)^k,
    // accurate to machine precision for x >= 25.
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 10; ++k) {
        term *= -(2 * k - 1) * inv2x2;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
    }
    return sum * std::numbers::inv_sqrtpi / x;
}

double sqrt1pm1(double u) { return u / (std::sqrt(1.0 + u) + 1.0); }

QuadratureResult integrate(const std::function<double(double)> &f, double lo, double hi,
                           const QuadratureOptions &opts) {
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (!lo_inf && !hi_inf) {
        if (!(lo < hi))
            throw std::invalid_argument("integrate: requires lo < hi");
        return integrate_finite(f, lo, hi, opts);
    }
    if (!lo_inf && hi_inf) {
        // x = lo + t/(1-t), dx = dt/(1-t)^2, t in (0,1)
        auto g = [&f, lo](double t) {
            const double om = 1.0 - t;
            return f(lo + t / om) / (om * om);
        };
        return integrate_finite(g, 0.0, 1.0, opts);
    }
    if (lo_inf && !hi_inf) {
        auto g = [&f, hi](double t) {
            const double om = 1.0 - t;
            return f(hi - t / om) / (om * om);
        };
        return integrate_finite(g, 0.0, 1.0, opts);
    }
    // (-inf, inf): split at zero.
    QuadratureOptions half = opts;
    half.max_evaluations = opts.max_evaluations / 2;
    QuadratureResult left = integrate(f, -std::numeric_limits<double>::infinity(), 0.0, half);
    QuadratureResult right = integrate(f, 0.0, std::numeric_limits<double>::infinity(), half);
    return QuadratureResult{left.value + right.value, left.est_error + right.est_error,
                            left.evaluations + right.evaluations};
}

RootResult find_root(const std::function<double(double)> &f, double lo, double hi,
                     const RootOptions &opts) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("find_root: requires finite lo < hi");

    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return RootResult{a, 0.0, 0};
    if (fb == 0.0)
        return RootResult{b, 0.0, 0};
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("find_root: no sign change on [lo, hi]");

    // Brent: b tracks the best estimate, a the previous one, c the bracket
    // counterpart of b.
    double c = a, fc = fa;
    double d = b - a, e = d;
    std::size_t iter = 0;
    const double eps = std::numeric_limits<double>::epsilon();

    for (; iter < opts.max_iterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * eps;
        const double xm = 0.5 * (c - b);
        if (std::abs(fb) <= opts.tol || std::abs(xm) <= tol1)
            return RootResult{b, fb, iter};

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // attempt inverse quadratic interpolation / secant
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw ConvergenceError("find_root: iteration budget exhausted", b, std::abs(fb));
}

} // namespace vlc
