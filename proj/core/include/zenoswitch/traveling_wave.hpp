#pragma once

#include <vector>

#include "zenoswitch/ode.hpp"

namespace zeno {

enum class Wave { Signal, Harmonic, Pump, Difference };

struct FieldState {
    cplx a_s{}, a_h{}, a_p{}, a_d{};
    double z = 0;  // mm

    const cplx& amp(Wave w) const;
    double mu(Wave w) const { return std::abs(amp(w)); }
    // Principal-branch phase; use unwrapped_phase() along a trajectory.
    double phi(Wave w) const { return std::arg(amp(w)); }

    // |a_s|^2 + 2|a_h|^2 + |a_p|^2 + |a_d|^2
    double photon_norm() const;
    bool finite() const;
};

using Trajectory = std::vector<FieldState>;

// Continuous phase of one wave along a trajectory.
std::vector<double> unwrapped_phase(const Trajectory& traj, Wave w);

struct WaveguideParams {
    double omega1 = 1;   // mm^-1
    double omega2 = 0;   // mm^-1
    double delta_k = 0;  // mm^-1
    double gamma = 0;    // DF amplitude loss, mm^-1
    double length = 1;   // mm

    void validate() const;
};

// Four-wave coupled equations, sampled every s.dense_output_stride.
Trajectory propagate_full(const FieldState& initial, const WaveguideParams& p,
                          const IntegratorSettings& s = {});

// Reduced model with a constant real pump: Omega_eff = omega2 * pump_amp.
// The a_p entries of the result hold pump_amp.
Trajectory propagate_undepleted(const FieldState& initial, const WaveguideParams& p,
                                double pump_amp, const IntegratorSettings& s = {});

// Endpoint-only variants; same numerics, no trajectory storage.
FieldState propagate_full_final(const FieldState& initial, const WaveguideParams& p,
                                const IntegratorSettings& s = {});
FieldState propagate_undepleted_final(const FieldState& initial,
                                      const WaveguideParams& p, double pump_amp,
                                      const IntegratorSettings& s = {});

// max_z |1 - |a_p(z)|^2/|a_p(0)|^2| in the full model; 0 when the pump is off.
// The pump gains photons from the SH, so the deviation is usually growth.
double full_vs_undepleted_pump_depletion(const FieldState& initial,
                                         const WaveguideParams& p,
                                         const IntegratorSettings& s = {});

}  // namespace zeno
