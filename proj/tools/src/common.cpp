#include "common.hpp"

#include <cmath>

namespace zenosim {

using namespace zeno;

IntegratorSettings integrator_from(const Params& p, bool with_stride) {
    IntegratorSettings s{p.num("abs_tol"), p.num("rel_tol"), p.num("max_step"),
                         with_stride ? p.num("stride") : 1.0};
    validated([&] { s.validate(); });
    return s;
}

CavityParams cavity_from(const Params& p) {
    CavityParams c;
    c.length = p.num("length");
    c.r = p.num("r");
    c.r_prime = p.num("r_prime");
    c.v_c = p.num("v_c");
    c.omega_eff = p.num("omega_eff");
    c.gamma = p.num("gamma");
    c.ks_L = p.num("ks_L");
    c.kp_L = p.num("kp_L");
    c.kf_L = p.num("kf_L");
    validated([&] { c.validate(); });
    return c;
}

SteadyStateOptions steady_from(const Params& p) {
    SteadyStateOptions o;
    o.integrator = integrator_from(p, false);
    o.signal_amp = p.num("signal_amp");
    o.tol = p.num("tol");
    const long w = p.integer("window"), n = p.integer("max_round_trips");
    if (w < 1 || n < 1 || !(o.signal_amp > 0) || !(o.tol > 0))
        throw ValidationError("steady-state keys window, max_round_trips, signal_amp and tol "
                              "must be positive");
    o.window = static_cast<std::size_t>(w);
    o.max_round_trips = static_cast<std::size_t>(n);
    return o;
}

Table trajectory_table(const std::string& stem, const Trajectory& traj) {
    Table t{stem,
            {"z", "signal_abs", "signal_phase", "harmonic_abs", "harmonic_phase", "pump_abs",
             "df_abs", "df_phase", "photon_norm"},
            {}};
    const auto ps = unwrapped_phase(traj, Wave::Signal);
    const auto ph = unwrapped_phase(traj, Wave::Harmonic);
    const auto pd = unwrapped_phase(traj, Wave::Difference);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const auto& f = traj[i];
        t.add({f.z, f.mu(Wave::Signal), ps[i], f.mu(Wave::Harmonic), ph[i], f.mu(Wave::Pump),
               f.mu(Wave::Difference), pd[i], f.photon_norm()});
    }
    return t;
}

void append_spectrum(Table& t, const CavitySpectrum& sp, double center, const char* label) {
    for (std::size_t i = 0; i < sp.ks_L.size(); ++i) {
        std::vector<Cell> row;
        if (label) row.emplace_back(std::string(label));
        for (double x : {sp.ks_L[i], sp.ks_L[i] - center, sp.transmittance[i],
                         sp.reflectance[i], sp.loss[i]})
            row.emplace_back(x);
        t.add(std::move(row));
    }
}

Table spectrum_table(const std::string& stem, const CavitySpectrum& sp, double center,
                     const char* label) {
    Table t{stem, {}, {}};
    if (label) t.columns.push_back("model");
    for (const char* c : {"ks_L", "detuning", "transmittance", "reflectance", "loss"})
        t.columns.push_back(c);
    append_spectrum(t, sp, center, label);
    return t;
}

Table pulse_run_table(const std::string& stem, const PulseRunResult& r) {
    Table t{stem,
            {"t", "signal_in", "pump_in", "signal_reflected", "pump_reflected", "t_transmitted",
             "signal_transmitted", "pump_transmitted"},
            {}};
    for (std::size_t i = 0; i < r.t.size(); ++i)
        t.add({r.t[i], r.signal_in[i] * r.signal_in[i], r.pump_in[i] * r.pump_in[i],
               std::norm(r.signal_reflected[i]), std::norm(r.pump_reflected[i]),
               r.t[i] + r.transmit_delay_ns, std::norm(r.signal_transmitted[i]),
               std::norm(r.pump_transmitted[i])});
    return t;
}

void fill_pulse_summary(nlohmann::ordered_json& j, const PulseRunResult& r) {
    j["signal_transmitted_fraction"] = r.signal_transmitted_fraction;
    j["signal_reflected_fraction"] = r.signal_reflected_fraction;
    j["signal_loss_fraction"] = r.signal_loss_fraction;
    j["pump_transmitted_fraction"] = r.pump_transmitted_fraction;
    j["pump_reflected_fraction"] = r.pump_reflected_fraction;
    j["pump_loss_fraction"] = r.pump_loss_fraction;
    j["peak_delay_ns"] = r.peak_delay_ns;
    j["signal_bookkeeping"] = r.signal_bookkeeping;
    j["pump_bookkeeping"] = r.pump_bookkeeping;
    j["residual_energy"] = r.residual_energy;
}

Table sweep_table(const std::string& stem, const std::string& param,
                  const std::vector<double>& xs, const std::vector<SteadyState>& res) {
    Table t{stem, {param, "transmittance", "reflectance", "loss", "round_trips"}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i)
        t.add({xs[i], res[i].transmittance, res[i].reflectance, res[i].loss,
               static_cast<double>(res[i].round_trips)});
    return t;
}

}  // namespace zenosim
