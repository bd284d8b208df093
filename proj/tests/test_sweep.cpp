#include "vlc/sweep.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace vlc;

namespace {

std::size_t count_columns(const std::string &line) {
    std::size_t n = 1;
    for (char c : line)
        if (c == ',')
            ++n;
    return n;
}

std::string first_data_block_header(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            return line;
    return {};
}

std::string run_cli(const std::string &args, int &exit_code) {
    const std::string cmd = std::string(VLC_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    exit_code = WEXITSTATUS(status);
    return out;
}

} // namespace

TEST_CASE("dB conversions round-trip") {
    for (double x_db = 0.0; x_db <= 80.0; x_db += 0.5)
        CHECK(std::abs(to_db(from_db(x_db)) - x_db) < 1e-12);
}

TEST_CASE("presets exist and carry the shared settings") {
    for (const auto &name : preset_names()) {
        const SweepConfig c = preset(name);
        CHECK(c.name == name);
        CHECK(!c.grid.empty());
        CHECK(c.fixed.at("sigma2") == 1.0);
        CHECK(c.fixed.at("beta") == doctest::Approx(1e-3));
        CHECK(c.fixed.at("delta") == doctest::Approx(1e-3));
        for (std::size_t i = 1; i < c.grid.size(); ++i)
            CHECK(c.grid[i] > c.grid[i - 1]);
    }
    CHECK_THROWS_AS(preset("fig99"), std::invalid_argument);

    const SweepConfig f4 = preset("fig4");
    CHECK(f4.curves.size() == 4);
    CHECK(f4.curves[0].overrides.at("varsigma2") == doctest::Approx(1e-6));

    const SweepConfig f6 = preset("fig6");
    CHECK(f6.sweep_var == SweepVar::varsigma2);
    CHECK(f6.fixed.at("xi") == doctest::Approx(0.3));
}

TEST_CASE("every preset runs with zero per-row errors") {
    for (const auto &name : preset_names()) {
        const SweepResult r = run_sweep(preset(name));
        CHECK(!r.rows.empty());
        for (const auto &row : r.rows) {
            INFO(name, " curve=", row.curve, " value=", row.sweep_value, " err=", row.error);
            CHECK(row.error.empty());
        }
    }
}

TEST_CASE("fig2 rows: c_low nondecreasing in A per curve") {
    const SweepResult r = run_sweep(preset("fig2"));
    std::string curve;
    double prev = -1e300;
    for (const auto &row : r.rows) {
        if (row.curve != curve) {
            curve = row.curve;
            prev = -1e300;
        }
        CHECK(row.c_low >= prev);
        prev = row.c_low;
    }
}

TEST_CASE("sweep rows are identical under serial and parallel execution") {
    const SweepConfig cfg = preset("fig6");
    const SweepResult ser = run_sweep(cfg, Exec::serial);
    const SweepResult par = run_sweep(cfg, Exec::parallel);
    REQUIRE(ser.rows.size() == par.rows.size());
    for (std::size_t i = 0; i < ser.rows.size(); ++i) {
        CHECK(ser.rows[i].curve == par.rows[i].curve);
        CHECK(ser.rows[i].sweep_value == par.rows[i].sweep_value);
        CHECK(ser.rows[i].c_low == par.rows[i].c_low);
        CHECK(ser.rows[i].c_upp == par.rows[i].c_upp);
        CHECK(ser.rows[i].p1 == par.rows[i].p1);
        CHECK(ser.rows[i].p2 == par.rows[i].p2);
    }
}

TEST_CASE("infeasible grid points become per-row errors, sweep continues") {
    SweepConfig cfg;
    cfg.name = "custom";
    cfg.kind = CurveKind::PeakAvg;
    cfg.sweep_var = SweepVar::xi;
    cfg.grid = {0.2, 0.5, 0.9}; // xi P > A at 0.9
    cfg.fixed = {{"sigma2", 1.0}, {"varsigma2", 1.5}, {"a_db", 30.0}, {"p_db", 31.0}};
    const SweepResult r = run_sweep(cfg);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].error.empty());
    CHECK(r.rows[1].error.empty());
    CHECK(!r.rows[2].error.empty());
    CHECK(std::isnan(r.rows[2].c_low));
}

TEST_CASE("fig6 slope: about 1.15 nats between P = 40 and 50 dB at varsigma2 = 1.5") {
    const SweepResult r = run_sweep(preset("fig6"));
    double c40 = 0.0, c50 = 0.0;
    for (const auto &row : r.rows) {
        if (std::abs(row.sweep_value - 1.5) < 1e-12) {
            if (row.curve == "P_dB=40")
                c40 = row.c_low;
            if (row.curve == "P_dB=50")
                c50 = row.c_low;
        }
    }
    CHECK(c50 - c40 > 1.0);
    CHECK(c50 - c40 < 1.3);
}

TEST_CASE("csv: determinism, schema, header-only for empty results") {
    const SweepConfig cfg = preset("fig2");
    const SweepResult r = run_sweep(cfg);

    std::ostringstream a, b;
    emit_csv(r, a);
    emit_csv(r, b);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());

    // 8 columns: sweep value, 4 bound columns, b, branch, error
    const std::string header = first_data_block_header(a.str());
    CHECK(header == "A_dB,c_low,c_upp,gap,asymptotic_gap,b,branch,error");
    CHECK(count_columns(header) == 8);

    std::istringstream lines(a.str());
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line == header)
            continue;
        CHECK(count_columns(line) == 8);
    }

    SweepResult empty;
    empty.config = cfg;
    std::ostringstream e;
    emit_csv(empty, e);
    CHECK(first_data_block_header(e.str()) == header);

    // avg-only schema carries (m, n) instead of (b, branch)
    const SweepResult r6 = run_sweep(preset("fig6"));
    std::ostringstream s6;
    emit_csv(r6, s6);
    CHECK(first_data_block_header(s6.str()) ==
          "varsigma2,c_low,c_upp,gap,asymptotic_gap,m,n,error");
}

TEST_CASE("csv values are printed with 12 significant digits") {
    SweepConfig cfg;
    cfg.name = "custom";
    cfg.kind = CurveKind::PeakAvg;
    cfg.sweep_var = SweepVar::A_dB;
    cfg.grid = {45.0};
    cfg.fixed = {{"sigma2", 1.0}, {"varsigma2", 1.5}, {"xi", 0.3}, {"a_over_p", 1.5}};
    const SweepResult r = run_sweep(cfg);
    REQUIRE(r.rows.size() == 1);
    std::ostringstream out;
    emit_csv(r, out);
    char expected[40];
    std::snprintf(expected, sizeof(expected), "%.12g", r.rows[0].c_low);
    CHECK(out.str().find(expected) != std::string::npos);
}

TEST_CASE("bounds_at resolves parameters like the CLI") {
    const BoundReport rep = bounds_at(CurveKind::PeakAvg, {{"a_db", 45.0},
                                                           {"xi", 0.3},
                                                           {"varsigma2", 1.5},
                                                           {"a_over_p", 1.5}});
    CHECK(rep.scenario == Scenario::PeakAvg);
    CHECK(rep.c_upp > rep.c_low);
    CHECK(rep.aux.count("b") == 1);
    CHECK_THROWS_AS(bounds_at(CurveKind::PeakAvg, {{"xi", 0.3}, {"varsigma2", 1.5}}),
                    std::invalid_argument);
}

TEST_CASE("cli: bounds subcommand, json output, exit codes") {
    int code = 0;
    const std::string text =
        run_cli("bounds --scenario peak-avg --A-dB 45 --xi 0.3 --varsigma2 1.5 --a-over-p 1.5",
                code);
    CHECK(code == 0);
    CHECK(text.find("c_low") != std::string::npos);

    const std::string json = run_cli("bounds --scenario avg-only --P-dB 45 --xi 0.3 "
                                     "--varsigma2 1.5 --json",
                                     code);
    CHECK(code == 0);
    CHECK(json.find("\"c_low\"") != std::string::npos);
    CHECK(json.find("\"scenario\": \"avg-only\"") != std::string::npos);

    run_cli("sweep --preset fig99", code);
    CHECK(code == 2);
    run_cli("nonsense", code);
    CHECK(code == 2);

    // runaway tilt -> solver error -> exit 3
    run_cli("bounds --scenario peak-avg --A-dB 20 --xi 1.0 --a-over-p 1.0 --varsigma2 1.5 "
            "--delta 1e-3",
            code);
    CHECK(code == 3);
}

TEST_CASE("cli: sweep emits deterministic csv bytes") {
    int code = 0;
    const std::string a = run_cli("sweep --preset fig3", code);
    CHECK(code == 0);
    const std::string b = run_cli("sweep --preset fig3", code);
    CHECK(code == 0);
    CHECK(a == b);
    CHECK(a.find("# curve: A_over_P=3.0") != std::string::npos);
}
