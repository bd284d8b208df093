#pragma once

#include "vlc/bounds.hpp"
#include "vlc/types.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace vlc {

enum class SweepVar { A_dB, P_dB, xi, varsigma2 };

enum class CurveKind { PeakAvg, AvgOnly, ShannonRef };

/// One curve of a figure: a label, the scenario it is computed under, and
/// parameter overrides applied on top of the sweep's shared `fixed` map.
/// A curve may also carry its own grid (used where feasibility trims it).
struct SweepCurve {
    std::string label;
    CurveKind kind = CurveKind::PeakAvg;
    std::map<std::string, double> overrides;
    std::vector<double> grid; ///< empty = use the sweep-level grid
};

/// Shared parameter keys in `fixed` / `overrides`:
///   xi, varsigma2, sigma2, beta, delta, a_over_p, a_db, p_db.
struct SweepConfig {
    std::string name; ///< preset name or "custom"
    CurveKind kind = CurveKind::PeakAvg;
    SweepVar sweep_var = SweepVar::A_dB;
    std::vector<double> grid;
    std::map<std::string, double> fixed;
    bool oracle_mi = false;
    bool oracle_monte_carlo = false;
    std::uint64_t seed = 12345;
    std::vector<SweepCurve> curves; ///< empty = single curve from (kind, fixed)
    std::vector<std::string> notes; ///< emitted as CSV comment lines
};

struct SweepRow {
    std::string curve;
    double sweep_value = 0.0;
    CurveKind kind = CurveKind::PeakAvg;
    double c_low = std::numeric_limits<double>::quiet_NaN();
    double c_upp = std::numeric_limits<double>::quiet_NaN();
    double gap = std::numeric_limits<double>::quiet_NaN();
    double asymptotic_gap = std::numeric_limits<double>::quiet_NaN();
    std::optional<double> mi;
    std::optional<double> mc_mi;
    // solver intermediates: b (peak+avg), (m, n) (avg-only), snr (reference)
    double p1 = std::numeric_limits<double>::quiet_NaN();
    double p2 = std::numeric_limits<double>::quiet_NaN();
    std::string branch; ///< "zero_b" / "nonzero_b" for peak+avg rows
    std::string error;  ///< empty on success
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

/// Evaluate every (curve, grid point); infeasible or non-convergent points
/// produce a per-row error record instead of aborting the sweep. Rows come
/// back curve-major in grid order, independent of the execution policy.
SweepResult run_sweep(const SweepConfig &config, Exec exec = Exec::parallel);

/// Figure presets fig2 .. fig8. Throws std::invalid_argument for unknown
/// names.
SweepConfig preset(const std::string &name);
std::vector<std::string> preset_names();

/// CSV emission: '#' comment lines, one header per curve block, '.' decimal
/// separator, 12 significant digits. Identical inputs produce identical
/// bytes.
void emit_csv(const SweepResult &result, std::ostream &out);
void emit_csv(const SweepResult &result, const std::string &path);

/// Single-point evaluation used by the `bounds` subcommand.
BoundReport bounds_at(CurveKind kind, const std::map<std::string, double> &params);

} // namespace vlc
