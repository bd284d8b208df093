#include "vlc/sweep.hpp"

#include <stdexcept>

namespace vlc {

namespace {

std::vector<double> linspace_step(double lo, double step, double hi) {
    std::vector<double> g;
    for (int i = 0;; ++i) {
        const double v = lo + step * i;
        if (v > hi + 0.5 * step)
            break;
        g.push_back(v);
    }
    return g;
}

// Shared experimental settings: unit signal-independent noise variance and
// small upper-bound constants.
std::map<std::string, double> base_fixed() {
    return {{"sigma2", 1.0}, {"beta", 1e-3}, {"delta", 1e-3}};
}

SweepConfig fig2() {
    SweepConfig c;
    c.name = "fig2";
    c.kind = CurveKind::PeakAvg;
    c.sweep_var = SweepVar::A_dB;
    c.grid = linspace_step(20.0, 2.5, 70.0);
    c.fixed = base_fixed();
    c.fixed["xi"] = 0.3;
    c.fixed["varsigma2"] = 1.5;
    for (double r : {0.5, 1.5, 3.0})
        c.curves.push_back({"A_over_P=" + std::to_string(r).substr(0, 3), CurveKind::PeakAvg,
                            {{"a_over_p", r}},
                            {}});
    c.notes.push_back("capacity bounds vs peak intensity A for several A/P ratios");
    return c;
}

SweepConfig fig3() {
    SweepConfig c;
    c.name = "fig3";
    c.kind = CurveKind::PeakAvg;
    c.sweep_var = SweepVar::xi;
    c.grid = linspace_step(0.05, 0.05, 1.0);
    c.fixed = base_fixed();
    c.fixed["a_db"] = 45.0;
    c.fixed["varsigma2"] = 1.5;
    c.curves.push_back({"A_over_P=3.0", CurveKind::PeakAvg, {{"a_over_p", 3.0}}, {}});
    c.curves.push_back({"A_over_P=1.5", CurveKind::PeakAvg, {{"a_over_p", 1.5}}, {}});
    // xi above 0.45 would push the mean target past the peak for A/P = 0.5
    c.curves.push_back({"A_over_P=0.5", CurveKind::PeakAvg, {{"a_over_p", 0.5}},
                        linspace_step(0.05, 0.05, 0.45)});
    c.notes.push_back("capacity bounds vs dimming target xi at A = 45 dB");
    return c;
}

SweepConfig fig4() {
    SweepConfig c;
    c.name = "fig4";
    c.kind = CurveKind::PeakAvg;
    c.sweep_var = SweepVar::A_dB;
    c.grid = linspace_step(20.0, 2.5, 70.0);
    c.fixed = base_fixed();
    c.fixed["xi"] = 0.3;
    c.fixed["a_over_p"] = 1.5;
    c.curves.push_back({"varsigma2=0(limit)", CurveKind::PeakAvg, {{"varsigma2", 1e-6}}, {}});
    c.curves.push_back({"varsigma2=1", CurveKind::PeakAvg, {{"varsigma2", 1.0}}, {}});
    c.curves.push_back({"varsigma2=2", CurveKind::PeakAvg, {{"varsigma2", 2.0}}, {}});
    c.curves.push_back({"varsigma2=4", CurveKind::PeakAvg, {{"varsigma2", 4.0}}, {}});
    c.notes.push_back("capacity bounds vs A for several scaling factors; the");
    c.notes.push_back("signal-independent case is represented by varsigma2 = 1e-6");
    return c;
}

SweepConfig fig5() {
    SweepConfig c;
    c.name = "fig5";
    c.kind = CurveKind::AvgOnly;
    c.sweep_var = SweepVar::P_dB;
    c.grid = linspace_step(20.0, 2.5, 70.0);
    c.fixed = base_fixed();
    c.fixed["varsigma2"] = 1.5;
    for (double xi : {0.2, 0.4, 0.6, 0.8})
        c.curves.push_back({"xi=" + std::to_string(xi).substr(0, 3), CurveKind::AvgOnly,
                            {{"xi", xi}},
                            {}});
    c.notes.push_back("average-only capacity bounds vs nominal intensity P");
    return c;
}

SweepConfig fig6() {
    SweepConfig c;
    c.name = "fig6";
    c.kind = CurveKind::AvgOnly;
    c.sweep_var = SweepVar::varsigma2;
    c.grid = linspace_step(0.25, 0.25, 10.0);
    c.fixed = base_fixed();
    c.fixed["xi"] = 0.3;
    for (double pdb : {40.0, 50.0, 60.0})
        c.curves.push_back({"P_dB=" + std::to_string(static_cast<int>(pdb)), CurveKind::AvgOnly,
                            {{"p_db", pdb}},
                            {}});
    c.notes.push_back("average-only capacity bounds vs scaling factor");
    return c;
}

SweepConfig fig7() {
    SweepConfig c;
    c.name = "fig7";
    c.kind = CurveKind::PeakAvg;
    c.sweep_var = SweepVar::P_dB;
    c.grid = linspace_step(20.0, 2.5, 70.0);
    c.fixed = base_fixed();
    c.fixed["xi"] = 0.3;
    c.fixed["varsigma2"] = 1.5;
    c.curves.push_back({"peak+avg A=1.5P", CurveKind::PeakAvg, {{"a_over_p", 1.5}}, {}});
    c.curves.push_back({"avg-only", CurveKind::AvgOnly, {}, {}});
    c.curves.push_back({"shannon", CurveKind::ShannonRef, {}, {}});
    c.notes.push_back("scenario comparison vs P; externally published comparison curves are");
    c.notes.push_back("omitted; shannon reference uses snr = (xi*P)^2 / sigma2");
    return c;
}

SweepConfig fig8() {
    SweepConfig c;
    c.name = "fig8";
    c.kind = CurveKind::PeakAvg;
    c.sweep_var = SweepVar::xi;
    c.grid = linspace_step(0.05, 0.05, 0.95);
    c.fixed = base_fixed();
    c.fixed["varsigma2"] = 1.5;
    c.fixed["p_db"] = 45.0;
    c.curves.push_back({"peak+avg A=P=45dB", CurveKind::PeakAvg, {{"a_db", 45.0}}, {}});
    c.curves.push_back({"avg-only P=45dB", CurveKind::AvgOnly, {}, {}});
    c.curves.push_back({"shannon", CurveKind::ShannonRef, {}, {}});
    c.notes.push_back("scenario comparison vs xi; externally published comparison curves are");
    c.notes.push_back("omitted; shannon reference uses snr = (xi*P)^2 / sigma2");
    c.notes.push_back("xi capped at 0.95: the tilt diverges as xi*P approaches A");
    return c;
}

} // namespace

SweepConfig preset(const std::string &name) {
    if (name == "fig2")
        return fig2();
    if (name == "fig3")
        return fig3();
    if (name == "fig4")
        return fig4();
    if (name == "fig5")
        return fig5();
    if (name == "fig6")
        return fig6();
    if (name == "fig7")
        return fig7();
    if (name == "fig8")
        return fig8();
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

} // namespace vlc
