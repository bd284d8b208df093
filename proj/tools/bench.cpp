// Timing comparison between the serial reference kernels and their OpenMP
// counterparts: Monte-Carlo channel sampling, inverse-CDF input sampling,
// and a full figure sweep.

#include "vlc/channel.hpp"
#include "vlc/input_dist.hpp"
#include "vlc/sweep.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F> double time_ms(F &&f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char *name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel timings fall back to serial\n");
#endif

    const vlc::ChannelParams params(1.0, 1.5);

    {
        constexpr std::size_t n = 8'000'000;
        const double s = time_ms([&] { (void)vlc::transmit(4.0, params, 7, n, vlc::Exec::serial); });
        const double p =
            time_ms([&] { (void)vlc::transmit(4.0, params, 7, n, vlc::Exec::parallel); });
        report("transmit (8M samples)", s, p);
    }

    {
        const vlc::PeakAvgConstraints cons(1000.0, 0.3, 1000.0 / 1.5);
        const vlc::PeakAvgInputDist dist = vlc::solve_b(params, cons);
        constexpr std::size_t n = 4'000'000;
        const double s = time_ms([&] { (void)vlc::sample(dist, 11, n, vlc::Exec::serial); });
        const double p = time_ms([&] { (void)vlc::sample(dist, 11, n, vlc::Exec::parallel); });
        report("inverse-CDF sample (4M)", s, p);
    }

    {
        const vlc::SweepConfig cfg = vlc::preset("fig2");
        const double s = time_ms([&] { (void)vlc::run_sweep(cfg, vlc::Exec::serial); });
        const double p = time_ms([&] { (void)vlc::run_sweep(cfg, vlc::Exec::parallel); });
        report("fig2 sweep (63 points)", s, p);
    }

    return 0;
}
