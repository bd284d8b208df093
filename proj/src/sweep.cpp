#include "vlc/sweep.hpp"
#include "vlc/errors.hpp"
#include "vlc/oracle.hpp"
#include "vlc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace vlc {

namespace {

std::optional<double> get(const std::map<std::string, double> &m, const std::string &key) {
    auto it = m.find(key);
    if (it == m.end())
        return std::nullopt;
    return it->second;
}

const char *sweep_var_key(SweepVar v) {
    switch (v) {
    case SweepVar::A_dB:
        return "a_db";
    case SweepVar::P_dB:
        return "p_db";
    case SweepVar::xi:
        return "xi";
    case SweepVar::varsigma2:
        return "varsigma2";
    }
    return "";
}

struct ResolvedPoint {
    double sigma2 = 1.0;
    double varsigma2 = 0.0;
    double xi = 0.0;
    double beta = 1e-3;
    double delta = 1e-3;
    std::optional<double> A;
    std::optional<double> P;
};

// Parameter-map resolution shared by sweeps, presets and the CLI. dB
// values convert as X = 10^(X_dB / 10) against the sigma2 = 1
// normalization; A and P may also be tied through a_over_p.
ResolvedPoint resolve(const std::map<std::string, double> &m) {
    ResolvedPoint p;
    p.sigma2 = get(m, "sigma2").value_or(1.0);
    p.beta = get(m, "beta").value_or(1e-3);
    p.delta = get(m, "delta").value_or(1e-3);
    if (auto v = get(m, "varsigma2"))
        p.varsigma2 = *v;
    else
        throw std::invalid_argument("missing parameter: varsigma2");
    if (auto v = get(m, "xi"))
        p.xi = *v;
    else
        throw std::invalid_argument("missing parameter: xi");
    if (auto v = get(m, "a_db"))
        p.A = from_db(*v);
    if (auto v = get(m, "a"))
        p.A = *v;
    if (auto v = get(m, "p_db"))
        p.P = from_db(*v);
    if (auto v = get(m, "p"))
        p.P = *v;
    if (auto r = get(m, "a_over_p")) {
        if (p.A && !p.P)
            p.P = *p.A / *r;
        else if (p.P && !p.A)
            p.A = *p.P * *r;
        else if (!p.A && !p.P)
            throw std::invalid_argument("a_over_p given but neither A nor P is known");
    }
    return p;
}

ChannelParams channel_of(const ResolvedPoint &p) { return ChannelParams(p.sigma2, p.varsigma2); }

SweepRow eval_point(CurveKind kind, const std::map<std::string, double> &params, SweepVar var,
                    double value, const SweepConfig &config, std::uint64_t point_tag) {
    SweepRow row;
    row.sweep_value = value;
    row.kind = kind;
    try {
        std::map<std::string, double> merged = params;
        merged[sweep_var_key(var)] = value;
        const ResolvedPoint p = resolve(merged);

        if (kind == CurveKind::ShannonRef) {
            if (!p.P)
                throw std::invalid_argument("shannon reference requires P");
            const double snr = (p.xi * *p.P) * (p.xi * *p.P) / p.sigma2;
            row.c_low = row.c_upp = shannon_awgn(snr);
            row.gap = 0.0;
            row.asymptotic_gap = 0.0;
            row.p1 = snr;
            return row;
        }

        const ChannelParams ch = channel_of(p);
        if (kind == CurveKind::PeakAvg) {
            if (!p.A || !p.P)
                throw std::invalid_argument("peak+average scenario requires A and P");
            const PeakAvgConstraints cons(*p.A, p.xi, *p.P);
            const PeakAvgInputDist dist = solve_b(ch, cons);
            const BoundReport rep = make_report(dist, UpperBoundParams(p.beta, p.delta));
            row.c_low = rep.c_low;
            row.c_upp = rep.c_upp;
            row.gap = rep.gap;
            row.asymptotic_gap = rep.asymptotic_gap;
            row.p1 = dist.b;
            row.branch = dist.branch == PeakAvgBranch::ZeroB ? "zero_b" : "nonzero_b";
            if (config.oracle_mi)
                row.mi = mutual_information(dist).mi;
            if (config.oracle_monte_carlo)
                row.mc_mi = monte_carlo_mi(dist, config.seed ^ point_tag);
        } else {
            if (!p.P)
                throw std::invalid_argument("average-only scenario requires P");
            const AvgOnlyConstraints cons(p.xi, *p.P);
            const AvgOnlyInputDist dist = solve_mn(ch, cons);
            const BoundReport rep = make_report(dist, p.beta);
            row.c_low = rep.c_low;
            row.c_upp = rep.c_upp;
            row.gap = rep.gap;
            row.asymptotic_gap = rep.asymptotic_gap;
            row.p1 = dist.m;
            row.p2 = dist.n;
            if (config.oracle_mi)
                row.mi = mutual_information(dist).mi;
            if (config.oracle_monte_carlo)
                row.mc_mi = monte_carlo_mi(dist, config.seed ^ point_tag);
        }
    } catch (const std::exception &e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

SweepResult run_sweep(const SweepConfig &config, Exec exec) {
    if (config.grid.empty() && config.curves.empty())
        throw std::invalid_argument("run_sweep: empty grid");
    for (std::size_t i = 1; i < config.grid.size(); ++i)
        if (!(config.grid[i] > config.grid[i - 1]))
            throw std::invalid_argument("run_sweep: grid must be strictly increasing");

    // Normalize to a curve list; a plain config is a single unlabeled curve.
    std::vector<SweepCurve> curves = config.curves;
    if (curves.empty())
        curves.push_back(SweepCurve{"", config.kind, {}, {}});

    struct Task {
        std::size_t curve;
        std::size_t index;
        double value;
    };
    std::vector<Task> tasks;
    std::vector<std::size_t> first_row(curves.size() + 1, 0);
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const std::vector<double> &grid = curves[c].grid.empty() ? config.grid : curves[c].grid;
        if (grid.empty())
            throw std::invalid_argument("run_sweep: empty grid for curve " + curves[c].label);
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw std::invalid_argument("run_sweep: grid must be strictly increasing");
        for (std::size_t i = 0; i < grid.size(); ++i)
            tasks.push_back(Task{c, i, grid[i]});
        first_row[c + 1] = tasks.size();
    }

    SweepResult result;
    result.config = config;
    result.rows.resize(tasks.size());

    auto run_task = [&](std::size_t t) {
        const Task &task = tasks[t];
        const SweepCurve &curve = curves[task.curve];
        std::map<std::string, double> params = config.fixed;
        for (const auto &[k, v] : curve.overrides)
            params[k] = v;
        const std::uint64_t tag =
            rng::derive_state(config.seed, task.curve + 1, task.index + 1);
        SweepRow row = eval_point(curve.kind, params, config.sweep_var, task.value, config, tag);
        row.curve = curve.label;
        result.rows[t] = std::move(row);
    };

#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t)
            run_task(static_cast<std::size_t>(t));
        return result;
    }
#else
    (void)exec;
#endif
    for (std::size_t t = 0; t < tasks.size(); ++t)
        run_task(t);
    return result;
}

BoundReport bounds_at(CurveKind kind, const std::map<std::string, double> &params) {
    const ResolvedPoint p = resolve(params);
    const ChannelParams ch(p.sigma2, p.varsigma2);
    if (kind == CurveKind::PeakAvg) {
        if (!p.A || !p.P)
            throw std::invalid_argument("peak+average scenario requires A and P");
        const PeakAvgInputDist dist = solve_b(ch, PeakAvgConstraints(*p.A, p.xi, *p.P));
        return make_report(dist, UpperBoundParams(p.beta, p.delta));
    }
    if (kind == CurveKind::AvgOnly) {
        if (!p.P)
            throw std::invalid_argument("average-only scenario requires P");
        const AvgOnlyInputDist dist = solve_mn(ch, AvgOnlyConstraints(p.xi, *p.P));
        return make_report(dist, p.beta);
    }
    throw std::invalid_argument("bounds_at: unsupported scenario");
}

} // namespace vlc
