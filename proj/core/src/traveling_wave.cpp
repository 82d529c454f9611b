#include "zenoswitch/traveling_wave.hpp"

#include <cmath>
#include <numbers>

#include "zenoswitch/error.hpp"

namespace zeno {

const cplx& FieldState::amp(Wave w) const {
    switch (w) {
        case Wave::Signal: return a_s;
        case Wave::Harmonic: return a_h;
        case Wave::Pump: return a_p;
        case Wave::Difference: return a_d;
    }
    return a_s;
}

double FieldState::photon_norm() const {
    return std::norm(a_s) + 2 * std::norm(a_h) + std::norm(a_p) + std::norm(a_d);
}

bool FieldState::finite() const {
    for (const cplx* v : {&a_s, &a_h, &a_p, &a_d})
        if (!std::isfinite(v->real()) || !std::isfinite(v->imag())) return false;
    return std::isfinite(z);
}

std::vector<double> unwrapped_phase(const Trajectory& traj, Wave w) {
    constexpr double two_pi = 2 * std::numbers::pi;
    std::vector<double> out;
    out.reserve(traj.size());
    double offset = 0, prev = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        double raw = traj[i].phi(w);
        if (i > 0) {
            double jump = raw - prev;
            if (jump > std::numbers::pi) offset -= two_pi * std::ceil((jump - std::numbers::pi) / two_pi);
            else if (jump < -std::numbers::pi) offset += two_pi * std::ceil((-jump - std::numbers::pi) / two_pi);
        }
        prev = raw;
        out.push_back(raw + offset);
    }
    return out;
}

void WaveguideParams::validate() const {
    if (!(omega1 >= 0)) throw DomainError("omega1 must be >= 0");
    if (!(omega2 >= 0)) throw DomainError("omega2 must be >= 0");
    if (!std::isfinite(delta_k)) throw DomainError("delta_k must be finite");
    if (!(gamma >= 0)) throw DomainError("gamma must be >= 0");
    if (!(length > 0) || !std::isfinite(length)) throw DomainError("length must be > 0");
}

namespace {

void check_initial(const FieldState& s) {
    if (!s.finite()) throw NonFinite("non-finite initial amplitude");
    if (s.z != 0) throw DomainError("initial state must sit at z = 0");
}

template <class Sink>
void run_full(const FieldState& init, const WaveguideParams& p,
              const IntegratorSettings& s, Sink&& sink) {
    p.validate();
    check_initial(init);
    const double o1 = p.omega1, o2 = p.omega2, dk = p.delta_k, g = p.gamma;
    auto rhs = [=](double z, const CState<4>& y, CState<4>& dy) {
        const cplx ph = std::polar(1.0, dk * z);
        const cplx& as = y[0];
        const cplx& ah = y[1];
        const cplx& ap = y[2];
        const cplx& ad = y[3];
        dy[0] = -o1 * std::conj(ph) * ah * std::conj(as);
        dy[1] = 0.5 * o1 * ph * as * as + o2 * ap * ad;
        dy[2] = -o2 * std::conj(ad) * ah;
        dy[3] = -o2 * std::conj(ap) * ah - g * ad;
    };
    CState<4> y{init.a_s, init.a_h, init.a_p, init.a_d};
    integrate<4>(rhs, y, 0.0, p.length, s, [&](double z, const CState<4>& v) {
        sink(FieldState{v[0], v[1], v[2], v[3], z});
    });
}

template <class Sink>
void run_undepleted(const FieldState& init, const WaveguideParams& p, double pump_amp,
                    const IntegratorSettings& s, Sink&& sink) {
    p.validate();
    check_initial(init);
    if (!(pump_amp >= 0) || !std::isfinite(pump_amp))
        throw DomainError("pump_amp must be >= 0");
    const double o1 = p.omega1, oe = p.omega2 * pump_amp, dk = p.delta_k, g = p.gamma;
    auto rhs = [=](double z, const CState<3>& y, CState<3>& dy) {
        const cplx ph = std::polar(1.0, dk * z);
        dy[0] = -o1 * std::conj(ph) * y[1] * std::conj(y[0]);
        dy[1] = 0.5 * o1 * ph * y[0] * y[0] + oe * y[2];
        dy[2] = -oe * y[1] - g * y[2];
    };
    CState<3> y{init.a_s, init.a_h, init.a_d};
    const cplx ap(pump_amp, 0.0);
    integrate<3>(rhs, y, 0.0, p.length, s, [&](double z, const CState<3>& v) {
        sink(FieldState{v[0], v[1], ap, v[2], z});
    });
}

}  // namespace

Trajectory propagate_full(const FieldState& initial, const WaveguideParams& p,
                          const IntegratorSettings& s) {
    Trajectory out;
    out.reserve(static_cast<std::size_t>(p.length / s.dense_output_stride) + 2);
    run_full(initial, p, s, [&](const FieldState& f) { out.push_back(f); });
    return out;
}

Trajectory propagate_undepleted(const FieldState& initial, const WaveguideParams& p,
                                double pump_amp, const IntegratorSettings& s) {
    Trajectory out;
    out.reserve(static_cast<std::size_t>(p.length / s.dense_output_stride) + 2);
    run_undepleted(initial, p, pump_amp, s, [&](const FieldState& f) { out.push_back(f); });
    return out;
}

FieldState propagate_full_final(const FieldState& initial, const WaveguideParams& p,
                                const IntegratorSettings& s) {
    FieldState last;
    IntegratorSettings e = s;
    e.dense_output_stride = p.length;
    run_full(initial, p, e, [&](const FieldState& f) { last = f; });
    return last;
}

FieldState propagate_undepleted_final(const FieldState& initial,
                                      const WaveguideParams& p, double pump_amp,
                                      const IntegratorSettings& s) {
    FieldState last;
    IntegratorSettings e = s;
    e.dense_output_stride = p.length;
    run_undepleted(initial, p, pump_amp, e, [&](const FieldState& f) { last = f; });
    return last;
}

double full_vs_undepleted_pump_depletion(const FieldState& initial,
                                         const WaveguideParams& p,
                                         const IntegratorSettings& s) {
    const double ip0 = std::norm(initial.a_p);
    if (ip0 == 0 || p.omega2 == 0) return 0.0;
    double worst = 0;
    run_full(initial, p, s, [&](const FieldState& f) {
        worst = std::max(worst, std::abs(1.0 - std::norm(f.a_p) / ip0));
    });
    return worst;
}

}  // namespace zeno
