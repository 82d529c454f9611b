#pragma once

#include <optional>
#include <vector>

#include "zenoswitch/traveling_wave.hpp"

namespace zeno {

// peak * exp(-t^{2m} / (2 sigma^{2m})); m == 0 is CW.
struct SuperGaussianPulse {
    int m = 1;
    double sigma = 1;  // ns
    double peak = 1;

    void validate() const;
    double envelope(double t) const;
    // Symmetric uniform grid over +-4 sigma; 512 points, 2048 for m > 4.
    std::vector<double> grid() const;
    std::size_t grid_points() const { return m > 4 ? 2048 : 512; }
};

struct CwLoss {
    double loss;         // I_s / I_p
    double upper_bound;  // 2 I_s / I_p
    bool out_of_regime;  // loss >= 0.1
};

CwLoss cw_loss(double i_s, double i_p);

struct SwitchReport {
    double loss = 0;
    double flipped_contrast = 0;
    double unflipped_contrast = 0;  // +inf when ideal
    bool regime_warning = false;
};

// Phase-matched frequency switch.
SwitchReport frequency_switch_cw(double mu0, double omega1, double L, double i_s,
                                 double i_p);

enum class PnmRegime { SmallPNM, LargePNM };

struct ModeSwitchReport {
    SwitchReport report;
    double length;         // mm
    double omega_eff;      // mm^-1
    double s_cqz;
    double flipped_approx; // large PNM: 4 omega_eff^4 / (pi^2 dk^4); small: = flipped
    double bound;          // I_p^2 / I_s^2
};

// CW spatial-mode switch. The pump amplitude is mu0*sqrt(i_p/i_s) and
// omega2 = omega2_ratio * omega1.
ModeSwitchReport mode_switch_cw(double mu0, double omega1, double delta_k, double i_s,
                                double i_p, PnmRegime regime, double omega2_ratio = 1.0);

struct PulseTrace {
    std::vector<double> t;              // ns
    std::vector<double> input;          // signal envelope
    std::vector<cplx> signal_out;
    std::vector<cplx> harmonic_out;
    std::vector<cplx> df_out;
    std::vector<double> signal_phase;   // unwrapped across t
    // interferometer outputs, reference arm carrying the input envelope:
    // p = (a_out - ref)/sqrt2, q = (a_out + ref)/sqrt2
    std::vector<cplx> port_p;
    std::vector<cplx> port_q;
};

// Each time slice is an independent z-propagation (matched group
// velocities, no dispersion). With a pump, the undepleted model runs with
// omega_eff(t) = p.omega2 * pump.envelope(t).
PulseTrace pulse_through_waveguide(const SuperGaussianPulse& pulse,
                                   const WaveguideParams& p,
                                   const std::optional<SuperGaussianPulse>& pump = {},
                                   const IntegratorSettings& s = {},
                                   unsigned threads = 0);

// Trapezoid energy of |x|^2 on the grid.
double trace_energy(const std::vector<double>& t, const std::vector<cplx>& x);

// Contrasts from a pump-off and a pump-on trace. flipped = E_p(off)/E_p(on),
// unflipped = E_q(on)/E_q(off); loss is the pump-on energy missing from
// the two ports.
SwitchReport pulsed_contrast(const PulseTrace& pump_off, const PulseTrace& pump_on);

}  // namespace zeno
