#include "vlc/errors.hpp"
#include "vlc/numerics.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace vlc;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("gauss_q basic values") {
    CHECK(gauss_q(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(gauss_q(1.7) + gauss_q(-1.7) == doctest::Approx(1.0).epsilon(1e-14));

    // frozen from the tail-quadrature oracle below
    CHECK(std::abs(gauss_q(3.0) - 1.3498980316301e-3) < 1e-7);
    const double tail =
        integrate([](double t) { return test_oracles::normal_pdf(t); }, 3.0, kInf).value;
    CHECK(std::abs(gauss_q(3.0) - tail) < 1e-12);

    CHECK_THROWS_AS(gauss_q(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(gauss_q(kInf), std::domain_error);
}

TEST_CASE("gauss_q symmetry and monotonicity") {
    for (int i = 0; i <= 160; ++i) {
        const double x = -8.0 + i * 0.1;
        CHECK(std::abs(gauss_q(x) + gauss_q(-x) - 1.0) < 1e-12);
    }
    double prev = gauss_q(-8.0);
    for (int i = 1; i <= 160; ++i) {
        const double q = gauss_q(-8.0 + i * 0.1);
        CHECK(q < prev);
        CHECK(q > 0.0);
        CHECK(q < 1.0);
        prev = q;
    }
}

TEST_CASE("erf_fn values, oddness and Q identity") {
    CHECK(erf_fn(0.0) == 0.0);
    CHECK(std::abs(erf_fn(1.0) - 0.8427008) < 1e-7);
    CHECK(std::abs(erf_fn(1.0) - test_oracles::erf_series(1.0)) < 1e-14);
    CHECK(erf_fn(-0.4) == doctest::Approx(-erf_fn(0.4)).epsilon(1e-15));

    std::mt19937 gen(42);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(gen);
        CHECK(std::abs(erf_fn(x) - 2.0 * (0.5 - gauss_q(x * std::sqrt(2.0)))) < 1e-12);
    }
    // The alternating series loses digits beyond |x| ~ 2, so the oracle
    // comparison stays inside that range.
    std::uniform_real_distribution<double> narrow(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double x = narrow(gen);
        CHECK(std::abs(erf_fn(x) - test_oracles::erf_series(x)) < 5e-13);
    }
    CHECK_THROWS_AS(erf_fn(kInf), std::domain_error);
}

TEST_CASE("erfcx agrees with the direct product and is smooth at the crossover") {
    for (double x : {0.0, 0.5, 1.0, 5.0, 10.0, 20.0, 24.9}) {
        const double direct = std::exp(x * x) * std::erfc(x);
        CHECK(erfcx_fn(x) == doctest::Approx(direct).epsilon(1e-12));
    }
    // the asymptotic branch must match the direct product where both work
    for (double x : {25.000001, 25.5, 26.0}) {
        const double direct = std::exp(x * x) * std::erfc(x);
        CHECK(erfcx_fn(x) == doctest::Approx(direct).epsilon(1e-12));
    }
    // large-argument asymptote ~ 1/(x sqrt(pi))
    CHECK(erfcx_fn(1e4) == doctest::Approx(1.0 / (1e4 * std::sqrt(M_PI))).epsilon(1e-8));
    CHECK_THROWS_AS(erfcx_fn(-1.0), std::domain_error);
}

TEST_CASE("integrate handles finite, semi-infinite and frozen intervals") {
    const auto linear = integrate([](double x) { return x; }, 0.0, 1.0);
    CHECK(linear.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(linear.est_error >= 0.0);
    CHECK(linear.evaluations >= 1);

    const auto expdecay = integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
    CHECK(expdecay.value == doctest::Approx(1.0).epsilon(1e-12));

    // unit integrand over [1, sqrt(2.5)]: the untilted normalizing factor
    const auto unit = integrate([](double) { return 1.0; }, 1.0, std::sqrt(2.5));
    CHECK(std::abs(unit.value - 0.5811388300841898) < 1e-9);

    const auto both = integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf);
    CHECK(both.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("integrate is exact on low-degree polynomials") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = coeff(gen), b = coeff(gen), c = coeff(gen), d = coeff(gen);
        const double lo = coeff(gen), hi = lo + 0.5 + std::abs(coeff(gen));
        auto poly = [=](double x) { return ((a * x + b) * x + c) * x + d; };
        auto anti = [=](double x) {
            return ((a / 4 * x + b / 3) * x + c / 2) * x * x + d * x;
        };
        const double exact = anti(hi) - anti(lo);
        const double got = integrate(poly, lo, hi).value;
        CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("integrate reports budget exhaustion with its best estimate") {
    QuadratureOptions opts;
    opts.rel_tol = 1e-14;
    opts.abs_tol = 0.0;
    opts.max_evaluations = 200; // below the initial panel cost of refinement
    bool thrown = false;
    try {
        integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, opts);
    } catch (const ConvergenceError &e) {
        thrown = true;
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.est_error > 0.0);
    }
    CHECK(thrown);
}

TEST_CASE("integrate rejects degenerate intervals") {
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("find_root basic roots") {
    const auto r = find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(r.root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(r.residual) <= 1e-12);

    const auto zero = find_root([](double x) { return x; }, -1.0, 1.0);
    CHECK(std::abs(zero.root) < 1e-12);
}

TEST_CASE("find_root converges on random monotone functions") {
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = u(gen), b = u(gen), shift = u(gen) - 1.5;
        auto f = [=](double x) { return a * x * x * x + b * x + shift; };
        const auto r = find_root(f, -10.0, 10.0, RootOptions{1e-13, 200});
        CHECK(std::abs(r.residual) <= 1e-12);
    }
}

TEST_CASE("find_root rejects unbracketed input") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
}
