#pragma once

#include <string>
#include <vector>

#include "zenosim/config.hpp"
#include "zenosim/output.hpp"
#include "zenoswitch/error.hpp"
#include "zenoswitch/fabry_perot.hpp"
#include "zenoswitch/traveling_wave.hpp"

namespace zenosim {

// Runs f, reporting a rejected parameter set as a validation error.
template <class F>
void validated(F&& f) {
    try {
        f();
    } catch (const zeno::DomainError& e) {
        throw ValidationError(e.what());
    }
}

zeno::IntegratorSettings integrator_from(const Params& p, bool with_stride);
zeno::CavityParams cavity_from(const Params& p);
zeno::SteadyStateOptions steady_from(const Params& p);

// z, per-wave amplitude and unwrapped phase, photon norm.
Table trajectory_table(const std::string& stem, const zeno::Trajectory& traj);

// With label set, a leading "model" column carries it.
Table spectrum_table(const std::string& stem, const zeno::CavitySpectrum& sp, double center,
                     const char* label);
void append_spectrum(Table& t, const zeno::CavitySpectrum& sp, double center,
                     const char* label);

// Powers of the input, reflected and transmitted series.
Table pulse_run_table(const std::string& stem, const zeno::PulseRunResult& r);
void fill_pulse_summary(nlohmann::ordered_json& j, const zeno::PulseRunResult& r);

Table sweep_table(const std::string& stem, const std::string& param,
                  const std::vector<double>& xs, const std::vector<zeno::SteadyState>& res);

}  // namespace zenosim
