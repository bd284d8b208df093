#include "vlc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace vlc {

namespace {

std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string sanitize(std::string s) {
    for (char &c : s)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return s;
}

const char *var_name(SweepVar v) {
    switch (v) {
    case SweepVar::A_dB:
        return "A_dB";
    case SweepVar::P_dB:
        return "P_dB";
    case SweepVar::xi:
        return "xi";
    case SweepVar::varsigma2:
        return "varsigma2";
    }
    return "value";
}

void write_header(std::ostream &out, const SweepConfig &cfg, CurveKind kind) {
    out << var_name(cfg.sweep_var);
    if (kind == CurveKind::ShannonRef) {
        out << ",capacity,snr,error\n";
        return;
    }
    out << ",c_low,c_upp,gap,asymptotic_gap";
    if (cfg.oracle_mi)
        out << ",mi";
    if (cfg.oracle_monte_carlo)
        out << ",mc_mi";
    if (kind == CurveKind::PeakAvg)
        out << ",b,branch,error\n";
    else
        out << ",m,n,error\n";
}

void write_row(std::ostream &out, const SweepConfig &cfg, const SweepRow &row) {
    out << fmt(row.sweep_value);
    if (row.kind == CurveKind::ShannonRef) {
        out << ',' << fmt(row.c_low) << ',' << fmt(row.p1) << ',' << sanitize(row.error) << '\n';
        return;
    }
    out << ',' << fmt(row.c_low) << ',' << fmt(row.c_upp) << ',' << fmt(row.gap) << ','
        << fmt(row.asymptotic_gap);
    if (cfg.oracle_mi)
        out << ',' << (row.mi ? fmt(*row.mi) : "nan");
    if (cfg.oracle_monte_carlo)
        out << ',' << (row.mc_mi ? fmt(*row.mc_mi) : "nan");
    if (row.kind == CurveKind::PeakAvg)
        out << ',' << fmt(row.p1) << ',' << row.branch << ',' << sanitize(row.error) << '\n';
    else
        out << ',' << fmt(row.p1) << ',' << fmt(row.p2) << ',' << sanitize(row.error) << '\n';
}

} // namespace

void emit_csv(const SweepResult &result, std::ostream &out) {
    const SweepConfig &cfg = result.config;
    out << "# vlc-capacity sweep: " << (cfg.name.empty() ? "custom" : cfg.name) << '\n';
    out << "# sweep variable: " << var_name(cfg.sweep_var) << '\n';
    out << "# seed: " << cfg.seed << '\n';
    for (const auto &[k, v] : cfg.fixed)
        out << "# fixed: " << k << '=' << fmt(v) << '\n';
    for (const auto &note : cfg.notes)
        out << "# note: " << note << '\n';

    if (result.rows.empty()) {
        write_header(out, cfg, cfg.kind);
        return;
    }

    // Rows arrive curve-major; emit a comment and a fresh header whenever
    // the curve changes (curves may differ in scenario and thus schema).
    const std::string *current = nullptr;
    for (const SweepRow &row : result.rows) {
        if (current == nullptr || row.curve != *current) {
            if (!row.curve.empty())
                out << "# curve: " << row.curve << '\n';
            write_header(out, cfg, row.kind);
            current = &row.curve;
        }
        write_row(out, cfg, row);
    }
}

void emit_csv(const SweepResult &result, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open " + path + " for writing");
    emit_csv(result, out);
    if (!out)
        throw std::runtime_error("emit_csv: write failure on " + path);
}

} // namespace vlc
