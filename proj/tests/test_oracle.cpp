#include "vlc/bounds.hpp"
#include "vlc/channel.hpp"
#include "vlc/numerics.hpp"
#include "vlc/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace vlc;

namespace {
const ChannelParams kUnit(1.0, 1.5);
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("conditional entropy: closed value and Monte-Carlo cross-check") {
    // varsigma2 -> 0 leaves only the additive-noise entropy
    const AvgOnlyInputDist tiny =
        solve_mn(ChannelParams(1.0, 1e-9), AvgOnlyConstraints(0.3, 100.0));
    CHECK(conditional_entropy(tiny) == doctest::Approx(1.4189385332046727).epsilon(1e-8));

    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(50.0, 0.3, 50.0));
    const double quad = conditional_entropy(d);

    // Monte-Carlo average of 0.5 ln(2 pi e sigma2 (1 + vs2 X))
    const auto xs = sample(d, 31, 200'000);
    double acc = 0.0, acc2 = 0.0;
    for (double x : xs) {
        const double h = 0.5 * std::log(2.0 * M_PI * M_E * kUnit.conditional_variance(x));
        acc += h;
        acc2 += h * h;
    }
    const double n = static_cast<double>(xs.size());
    const double mc = acc / n;
    const double se = std::sqrt((acc2 / n - mc * mc) / n);
    CHECK(std::abs(quad - mc) < 3.0 * se + 1e-6);
}

TEST_CASE("output marginal: normalization, mean transfer, tail decay") {
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(20.0, 0.25, 20.0));
    const MarginalWindow win = marginal_window(d);

    const double norm =
        integrate([&](double y) { return output_marginal_pdf(y, d); }, -kInf, kInf,
                  QuadratureOptions{1e-8, 1e-11, 2'000'000})
            .value;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));

    // both noise terms are zero-mean, so E[Y] = E[X]
    const double mean =
        integrate([&](double y) { return y * output_marginal_pdf(y, d); }, win.lo, win.hi,
                  QuadratureOptions{1e-8, 1e-11, 2'000'000})
            .value;
    CHECK(mean == doctest::Approx(5.0).epsilon(1e-5));

    // far below the support in conditional-sd units: the widest kernel has
    // sd sqrt(1 + 1.5 * 20) ~ 5.6, so -60 is beyond ten of them from any x
    const double peak = output_marginal_pdf(5.0, d);
    CHECK(output_marginal_pdf(-60.0, d) < 1e-12 * peak);
}

TEST_CASE("mutual information sits between the bounds at 55 dB") {
    const double A = from_db(55.0);
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(A, 0.2, A));
    const MutualInfoResult mi = mutual_information(d);
    CHECK(mi.mi == mi.h_y - mi.h_y_given_x);
    CHECK(mi.mi >= 0.0);
    CHECK(mi.mi >= c_low_peak_avg(d) - 1e-3);
    CHECK(mi.mi <= c_upp_peak_avg(d, UpperBoundParams(1e-3, 1e-3)) + 1e-3);
}

TEST_CASE("below the trust region only the lower bound binds") {
    // at 45 dB the tight-gap configs still carry a visible residual: the
    // true mutual information exceeds the asymptotic upper bound
    const double A = from_db(45.0);
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(A, 0.2, A));
    const MutualInfoResult mi = mutual_information(d);
    CHECK(mi.mi >= c_low_peak_avg(d) - 1e-3);
}

TEST_CASE("mutual information exceeds the lower bound at low intensity") {
    const double A = from_db(20.0);
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(A, 0.2, A));
    const MutualInfoResult mi = mutual_information(d);
    CHECK(mi.mi >= c_low_peak_avg(d) - 1e-3);
    CHECK(mi.mi >= 0.0);
}

TEST_CASE("entropy inequality holds, including near-degenerate scaling") {
    const double A = from_db(30.0);
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(A, 0.3, A));
    const EntropyInequalityResult r = entropy_inequality_check(d);
    CHECK(r.holds);
    CHECK(r.lhs >= r.rhs - 1e-4);

    const PeakAvgInputDist small =
        solve_b(ChannelParams(1.0, 1e-6), PeakAvgConstraints(100.0, 0.3, 100.0));
    CHECK(entropy_inequality_check(small).holds);

    const AvgOnlyInputDist a = solve_mn(kUnit, AvgOnlyConstraints(0.3, from_db(30.0)));
    const EntropyInequalityResult ra = entropy_inequality_check(a);
    CHECK(ra.holds);
}

TEST_CASE("monte-carlo MI estimate tracks the quadrature value") {
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(100.0, 0.3, 100.0));
    const double quad = mutual_information(d).mi;
    const double mc = monte_carlo_mi(d, 17, 4000);
    CHECK(std::abs(mc - quad) < 0.05);
}

TEST_CASE("mutual information is nondecreasing in the peak intensity") {
    // larger input support under the same noise law cannot hurt
    double prev = -1.0;
    for (double a_db : {20.0, 30.0, 40.0, 50.0, 60.0}) {
        const double A = from_db(a_db);
        const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(A, 0.2, A));
        const double mi = mutual_information(d).mi;
        CHECK(mi > prev);
        prev = mi;
    }
}

TEST_CASE("untilted distribution at 30 dB clears its lower bound") {
    const double A = 1e3;
    const PeakAvgInputDist d = solve_b(kUnit, PeakAvgConstraints(A, alpha_star(1.5, A), A));
    CHECK(d.branch == PeakAvgBranch::ZeroB);
    CHECK(mutual_information(d).mi >= c_low_peak_avg(d) - 1e-3);
}
