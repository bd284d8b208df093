// vlc-capacity: capacity bounds for optical-intensity channels with
// signal-dependent Gaussian noise.
//
//   vlc-capacity sweep  --preset fig2 [--out file.csv] [--oracle mi] ...
//   vlc-capacity bounds --scenario peak-avg --A-dB 45 --xi 0.3 --varsigma2 1.5
//
// Exit codes: 0 success, 2 usage error, 3 solver/convergence error.

#include "vlc/errors.hpp"
#include "vlc/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

int run_sweep_cmd(const std::string &preset_name, const std::string &out_path,
                  const std::vector<std::string> &oracles, const std::vector<std::string> &sets,
                  std::optional<std::uint64_t> seed, bool serial) {
    vlc::SweepConfig config = vlc::preset(preset_name);
    for (const std::string &kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--set expects key=value, got: " + kv);
        config.fixed[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    for (const std::string &o : oracles) {
        if (o == "mi")
            config.oracle_mi = true;
        else if (o == "monte_carlo" || o == "monte-carlo")
            config.oracle_monte_carlo = true;
        else
            throw CLI::ValidationError("unknown oracle: " + o);
    }
    if (seed)
        config.seed = *seed;

    const vlc::SweepResult result =
        vlc::run_sweep(config, serial ? vlc::Exec::serial : vlc::Exec::parallel);

    std::size_t failed = 0;
    for (const auto &row : result.rows)
        if (!row.error.empty())
            ++failed;
    if (failed)
        std::cerr << "warning: " << failed << " of " << result.rows.size()
                  << " grid points recorded errors\n";

    if (out_path.empty())
        vlc::emit_csv(result, std::cout);
    else
        vlc::emit_csv(result, out_path);
    return 0;
}

void print_report_text(const vlc::BoundReport &rep) {
    auto line = [](const char *k, double v) { std::printf("%-18s %.10g\n", k, v); };
    std::printf("%-18s %s\n", "scenario",
                rep.scenario == vlc::Scenario::PeakAvg ? "peak-avg" : "avg-only");
    line("c_low [nats]", rep.c_low);
    line("c_upp [nats]", rep.c_upp);
    line("gap [nats]", rep.gap);
    line("asymptotic_gap", rep.asymptotic_gap);
    for (const auto &[k, v] : rep.aux)
        line(k.c_str(), v);
    std::printf("%-18s %s (trust c_upp for intensity >= %.0f dB)\n", "upper bound",
                rep.upper_is_asymptotic ? "asymptotic" : "exact",
                rep.recommended_min_intensity_db);
}

void print_report_json(const vlc::BoundReport &rep) {
    nlohmann::json j;
    j["scenario"] = rep.scenario == vlc::Scenario::PeakAvg ? "peak-avg" : "avg-only";
    j["c_low"] = rep.c_low;
    j["c_upp"] = rep.c_upp;
    j["gap"] = rep.gap;
    j["asymptotic_gap"] = rep.asymptotic_gap;
    j["upper_is_asymptotic"] = rep.upper_is_asymptotic;
    j["recommended_min_intensity_db"] = rep.recommended_min_intensity_db;
    j["aux"] = rep.aux;
    std::cout << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"capacity bounds for optical intensity channels with signal-dependent noise"};
    app.require_subcommand(1);
    app.set_config("--config");

    // sweep
    auto *sweep = app.add_subcommand("sweep", "run a parameter sweep and emit CSV");
    std::string preset_name;
    std::string out_path;
    std::vector<std::string> oracles, sets;
    std::optional<std::uint64_t> seed;
    bool serial = false;
    sweep->add_option("--preset", preset_name, "figure preset (fig2..fig8)")
        ->required()
        ->check(CLI::IsMember(vlc::preset_names()));
    sweep->add_option("--out", out_path, "output CSV path (default: stdout)");
    sweep->add_option("--oracle", oracles, "enable oracle columns: mi, monte_carlo");
    sweep->add_option("--set", sets, "override a fixed parameter, key=value");
    sweep->add_option("--seed", seed, "RNG seed for oracle columns");
    sweep->add_flag("--serial", serial, "use the serial reference kernels");

    // bounds
    auto *bounds = app.add_subcommand("bounds", "evaluate bounds at a single operating point");
    std::string scenario = "peak-avg";
    std::optional<double> a_db, p_db, a_over_p;
    double xi = 0.3, varsigma2 = 1.5, sigma2 = 1.0, beta = 1e-3, delta = 1e-3;
    bool as_json = false;
    bounds->add_option("--scenario", scenario, "peak-avg or avg-only")
        ->check(CLI::IsMember({"peak-avg", "avg-only"}));
    bounds->add_option("--A-dB", a_db, "peak intensity in dB");
    bounds->add_option("--P-dB", p_db, "nominal intensity in dB");
    bounds->add_option("--a-over-p", a_over_p, "peak-to-nominal ratio A/P");
    bounds->add_option("--xi", xi, "dimming target in (0,1]");
    bounds->add_option("--varsigma2", varsigma2, "noise scaling factor");
    bounds->add_option("--sigma2", sigma2, "signal-independent noise variance");
    bounds->add_option("--beta", beta, "upper-bound constant beta");
    bounds->add_option("--delta", delta, "upper-bound constant delta");
    bounds->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed())
            return run_sweep_cmd(preset_name, out_path, oracles, sets, seed, serial);

        std::map<std::string, double> params{{"xi", xi},
                                             {"varsigma2", varsigma2},
                                             {"sigma2", sigma2},
                                             {"beta", beta},
                                             {"delta", delta}};
        if (a_db)
            params["a_db"] = *a_db;
        if (p_db)
            params["p_db"] = *p_db;
        if (a_over_p)
            params["a_over_p"] = *a_over_p;
        const auto kind =
            scenario == "peak-avg" ? vlc::CurveKind::PeakAvg : vlc::CurveKind::AvgOnly;
        const vlc::BoundReport rep = vlc::bounds_at(kind, params);
        if (as_json)
            print_report_json(rep);
        else
            print_report_text(rep);
        return 0;
    } catch (const vlc::SolverError &e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const vlc::ConvergenceError &e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const vlc::BracketError &e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
