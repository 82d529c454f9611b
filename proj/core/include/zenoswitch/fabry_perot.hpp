#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "zenoswitch/ode.hpp"
#include "zenoswitch/switch_metrics.hpp"

namespace zeno {

struct CavityParams {
    double length = 1;      // mm
    double r = 0.99;        // signal and pump mirror reflectivity
    double r_prime = 0.9;   // SF mirror reflectivity
    double v_c = 1e11;      // mm/s
    double omega_eff = 0.5; // mm^-1
    double gamma = 0;       // SF amplitude loss, mm^-1
    // One-way propagation phases. Signal resonance at ks_L = (n + 1/2) pi.
    // Pump and SF phases only enter the time-domain model.
    double ks_L = std::numbers::pi / 2;
    double kp_L = std::numbers::pi / 2;
    double kf_L = std::numbers::pi / 2;

    void validate() const;
    double t() const { return 1 - r; }
    double t_prime() const { return 1 - r_prime; }
    double round_trip_ns() const { return 2 * length / v_c * 1e9; }
    // v_c (1 - R) / L, in 1/ns
    double linewidth_per_ns() const { return v_c * (1 - r) / length * 1e-9; }
    // pump pre-advance 1 / (2 linewidth), ns
    double pump_advance_ns() const { return 0.5 / linewidth_per_ns(); }
};

struct CavitySpectrum {
    std::vector<double> ks_L;  // rad
    std::vector<double> transmittance;
    std::vector<double> reflectance;
    std::vector<double> loss;  // 1 - T - R
};

// n points of ks_L over center +- half_width.
std::vector<double> detuning_grid(double center, double half_width, std::size_t n);

struct SfgCellResult {
    cplx a_s, a_p, a_f;
    double dissipated;  // integral of 2 gamma |a_f|^2 dz
};

// Three-wave SFG over length z:
//   s' = -omega p* f,  p' = -omega s* f,  f' = omega s p - gamma f.
SfgCellResult sfg_cell(cplx a_s, cplx a_p, cplx a_f, double omega, double gamma,
                       double z, const IntegratorSettings& s = {});

// Undepleted pump A_p = omega_eff/omega * e^{i phi_p}: exact 2x2 propagator
// for (a_s, a_f).
std::pair<cplx, cplx> sfg_cell_undepleted(cplx a_s, cplx a_f, double omega_eff,
                                          double gamma, double phi_p, double z);

CavitySpectrum spectrum_pump_off(const CavityParams& c, const std::vector<double>& ks_L);

// Throws DomainError for gamma == 0.
CavitySpectrum spectrum_iqz(const CavityParams& c, const std::vector<double>& ks_L);

struct ResonancePoint {
    double t0, r0;
};

ResonancePoint spectrum_cqz_resonance(const CavityParams& c);

struct PulseRunOptions {
    IntegratorSettings integrator{1e-11, 1e-11, 0.1, 1.0};
    // simulated window: first input sample to last input sample plus tail
    double window_sigmas = 6;       // half-width of the drive window in sigma
    double tail_lifetimes = 60;     // extra time after the drive, in 1/linewidth
};

struct PulseRunResult {
    std::vector<double> t;  // ns, input / reflected timestamps
    double transmit_delay_ns = 0;  // transmitted samples belong to t + this
    std::vector<double> signal_in, pump_in;
    std::vector<cplx> signal_reflected, signal_transmitted;
    std::vector<cplx> pump_reflected, pump_transmitted;

    double signal_transmitted_fraction = 0, signal_reflected_fraction = 0,
           signal_loss_fraction = 0;
    double pump_transmitted_fraction = 0, pump_reflected_fraction = 0,
           pump_loss_fraction = 0;
    double peak_delay_ns = 0;  // transmitted signal peak minus input peak

    // (out + residual + lost - in) / in for each wave
    double signal_bookkeeping = 0, pump_bookkeeping = 0;
    double residual_energy = 0;  // left inside at the end, both waves and SF
};

// Discrete round-trip map: unitary splitter at the input mirror, sfg_cell
// over 2L, output mirror, SF mirrors with i sqrt(R'). The pump envelope is
// evaluated at t + advance, so a positive advance makes it arrive earlier.
// The coupling is scaled so that a CW pump of amplitude pump.peak gives
// c.omega_eff inside the resonant cavity. Throws GridTooCoarse if
// signal.sigma is below ten round trips.
PulseRunResult roundtrip_simulate(const CavityParams& c, const SuperGaussianPulse& signal,
                                  const std::optional<SuperGaussianPulse>& pump,
                                  std::optional<double> advance_ns = {},
                                  const PulseRunOptions& opt = {});

struct SteadyStateOptions {
    IntegratorSettings integrator{1e-11, 1e-11, 0.1, 1.0};
    double signal_amp = 1e-3;  // relative to the pump drive
    double tol = 1e-9;
    std::size_t window = 100;
    std::size_t max_round_trips = 100000;
};

struct SteadyState {
    double transmittance;
    double reflectance;
    double loss;
    std::size_t round_trips;
};

// CW-driven round-trip map run until the output settles. Throws
// NonConvergence after max_round_trips.
SteadyState steady_state(const CavityParams& c, const SteadyStateOptions& opt = {});

CavitySpectrum spectrum_steady(const CavityParams& c, const std::vector<double>& ks_L,
                               const SteadyStateOptions& opt = {}, unsigned threads = 0);

std::vector<SteadyState> sweep_gamma(const CavityParams& tmpl,
                                     const std::vector<double>& gammas,
                                     const SteadyStateOptions& opt = {},
                                     unsigned threads = 0);
std::vector<SteadyState> sweep_rprime(const CavityParams& tmpl,
                                      const std::vector<double>& rprimes,
                                      const SteadyStateOptions& opt = {},
                                      unsigned threads = 0);

}  // namespace zeno
