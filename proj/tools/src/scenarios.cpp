#include "zenosim/scenarios.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "common.hpp"
#include "zenoswitch/analytic_shg.hpp"
#include "zenoswitch/fabry_perot.hpp"
#include "zenoswitch/switch_metrics.hpp"
#include "zenoswitch/traveling_wave.hpp"
#include "zenoswitch/zeno_approx.hpp"

namespace zenosim {

using namespace zeno;

namespace {

RunOutput propagate(const Params& p) {
    FieldState in;
    in.a_s = p.num("a_s");
    in.a_p = p.num("a_p");
    WaveguideParams wp{p.num("omega1"), p.num("omega2"), p.num("delta_k"), p.num("gamma"),
                       p.num("length")};
    const auto s = integrator_from(p, true);
    validated([&] { wp.validate(); });

    const bool full = p.choice("model") == "full";
    const Trajectory traj =
        full ? propagate_full(in, wp, s) : propagate_undepleted(in, wp, p.num("a_p"), s);

    RunOutput out;
    out.tables.push_back(trajectory_table("propagate", traj));
    const auto& end = traj.back();
    out.summary["signal_abs"] = end.mu(Wave::Signal);
    out.summary["signal_phase"] = unwrapped_phase(traj, Wave::Signal).back();
    out.summary["harmonic_abs"] = end.mu(Wave::Harmonic);
    out.summary["df_abs"] = end.mu(Wave::Difference);
    out.summary["photon_norm"] = end.photon_norm();
    if (full) out.summary["pump_deviation"] = full_vs_undepleted_pump_depletion(in, wp, s);
    return out;
}

RunOutput analytic_compare(const Params& p) {
    const double mu0 = p.num("mu0"), o1 = p.num("omega1"), dk = p.num("delta_k");
    FieldState in;
    in.a_s = mu0;
    WaveguideParams wp{o1, 0, dk, 0, p.num("length")};
    const auto s = integrator_from(p, true);
    validated([&] { wp.validate(); });

    const Trajectory traj = propagate_full(in, wp, s);
    Table t{"analytic_compare",
            {"z", "numeric_signal", "numeric_harmonic", "closed_signal", "closed_harmonic"},
            {}};
    double worst = 0;
    for (const auto& f : traj) {
        const auto c = pnm_solution(mu0, o1, dk, f.z);
        worst = std::max({worst, std::abs(f.mu(Wave::Signal) - c.mu_s),
                          std::abs(f.mu(Wave::Harmonic) - c.mu_h)});
        t.add({f.z, f.mu(Wave::Signal), f.mu(Wave::Harmonic), c.mu_s, c.mu_h});
    }
    RunOutput out;
    out.tables.push_back(std::move(t));
    out.summary["max_abs_error"] = worst;
    if (dk != 0) {
        out.summary["chi"] = pnm_chi(mu0, o1, dk);
        out.summary["period_z0"] = pnm_period(mu0, o1, dk);
    }
    return out;
}

RunOutput pulse_metrics(const Params& p) {
    const double o1 = p.num("omega1"), dk = p.num("delta_k"), g = p.num("gamma"),
                 L = p.num("length");
    WaveguideParams off{o1, 0, dk, g, L}, on{o1, p.num("omega2"), dk, g, L};
    SuperGaussianPulse sig{static_cast<int>(p.integer("m")), p.num("sigma"), p.num("peak")};
    SuperGaussianPulse pump{sig.m, sig.sigma, p.num("pump_peak")};
    const auto s = integrator_from(p, false);
    validated([&] {
        on.validate();
        sig.validate();
        pump.validate();
    });

    const PulseTrace a = pulse_through_waveguide(sig, off, std::nullopt, s);
    const PulseTrace b = pulse_through_waveguide(sig, on, pump, s);
    Table t{"pulse_metrics",
            {"t", "input", "off_abs", "off_phase", "on_abs", "on_phase", "port_p_off",
             "port_q_off", "port_p_on", "port_q_on"},
            {}};
    for (std::size_t i = 0; i < a.t.size(); ++i)
        t.add({a.t[i], a.input[i], std::abs(a.signal_out[i]), a.signal_phase[i],
               std::abs(b.signal_out[i]), b.signal_phase[i], std::abs(a.port_p[i]),
               std::abs(a.port_q[i]), std::abs(b.port_p[i]), std::abs(b.port_q[i])});
    const SwitchReport r = pulsed_contrast(a, b);
    RunOutput out;
    out.tables.push_back(std::move(t));
    out.summary["flipped_contrast"] = r.flipped_contrast;
    out.summary["unflipped_contrast"] = r.unflipped_contrast;
    out.summary["loss"] = r.loss;
    out.summary["regime"] =
        to_string(classify_regime(on.omega2 * pump.peak, g).kind);
    return out;
}

RunOutput cavity_spectrum(const Params& p) {
    const CavityParams c = cavity_from(p);
    const auto n = p.integer("points");
    if (n < 2) throw ValidationError("key 'points' must be >= 2");
    const std::string& model = p.choice("model");
    if (model == "iqz" && !(c.gamma > 0))
        throw ValidationError("model iqz needs key 'gamma' > 0");
    const double center = p.num("center");
    const auto grid = detuning_grid(center, p.num("half_width"), static_cast<std::size_t>(n));

    CavitySpectrum sp;
    if (model == "off")
        sp = spectrum_pump_off(c, grid);
    else if (model == "iqz")
        sp = spectrum_iqz(c, grid);
    else
        sp = spectrum_steady(c, grid, steady_from(p));

    RunOutput out;
    out.tables.push_back(spectrum_table("cavity_spectrum", sp, center, nullptr));
    const auto cqz = spectrum_cqz_resonance(c);
    out.summary["cqz_formula_t0"] = cqz.t0;
    out.summary["cqz_formula_r0"] = cqz.r0;
    if (c.gamma > 0) {
        const auto iqz = spectrum_iqz(c, {std::numbers::pi / 2});
        out.summary["iqz_formula_t0"] = iqz.transmittance[0];
        out.summary["iqz_formula_r0"] = iqz.reflectance[0];
    }
    out.summary["linewidth_per_ns"] = c.linewidth_per_ns();
    return out;
}

RunOutput cavity_pulse(const Params& p) {
    const CavityParams c = cavity_from(p);
    SuperGaussianPulse pulse{static_cast<int>(p.integer("m")), p.num("sigma"), p.num("peak")};
    validated([&] { pulse.validate(); });
    if (pulse.m < 1) throw ValidationError("key 'm' must be >= 1 for a pulse run");
    PulseRunOptions opt;
    opt.integrator = integrator_from(p, false);
    opt.integrator.dense_output_stride = 1.0;
    opt.window_sigmas = p.num("window_sigmas");
    opt.tail_lifetimes = p.num("tail_lifetimes");
    if (!(opt.window_sigmas > 0) || !(opt.tail_lifetimes >= 0))
        throw ValidationError("window_sigmas must be > 0 and tail_lifetimes >= 0");
    std::optional<SuperGaussianPulse> pump;
    if (p.choice("pump") == "on") pump = pulse;
    std::optional<double> advance;
    if (p.has("advance")) advance = p.num("advance");

    const PulseRunResult r = roundtrip_simulate(c, pulse, pump, advance, opt);
    RunOutput out;
    out.tables.push_back(pulse_run_table("cavity_pulse", r));
    fill_pulse_summary(out.summary, r);
    return out;
}

RunOutput sweep(const Params& p) {
    const CavityParams c = cavity_from(p);
    const auto n = p.integer("points");
    if (n < 1) throw ValidationError("key 'points' must be >= 1");
    const double a = p.num("from"), b = p.num("to");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] =
            n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    const std::string& param = p.choice("param");
    validated([&] {
        for (double x : xs) {
            CavityParams t = c;
            (param == "gamma" ? t.gamma : t.r_prime) = x;
            t.validate();
        }
    });
    const auto opt = steady_from(p);
    const auto res = param == "gamma" ? sweep_gamma(c, xs, opt) : sweep_rprime(c, xs, opt);

    RunOutput out;
    out.tables.push_back(sweep_table("sweep", param, xs, res));
    return out;
}

}  // namespace

RunOutput run_scenario(const Scenario& s) {
    RunOutput out;
    if (s.kind == "propagate")
        out = propagate(s.params);
    else if (s.kind == "analytic_compare")
        out = analytic_compare(s.params);
    else if (s.kind == "pulse_metrics")
        out = pulse_metrics(s.params);
    else if (s.kind == "cavity_spectrum")
        out = cavity_spectrum(s.params);
    else if (s.kind == "cavity_pulse")
        out = cavity_pulse(s.params);
    else if (s.kind == "sweep")
        out = sweep(s.params);
    else if (s.kind == "figure")
        return run_figure(s.params.choice("id"));
    else
        throw ValidationError("unknown scenario kind '" + s.kind + "'");

    // single-table scenarios write <name>.<ext>
    for (auto& t : out.tables) t.stem = s.name;
    out.resolved_params = s.params.resolved();
    return out;
}

}  // namespace zenosim
