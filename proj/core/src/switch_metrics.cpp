#include "zenoswitch/switch_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zenoswitch/analytic_shg.hpp"
#include "zenoswitch/error.hpp"
#include "zenoswitch/zeno_approx.hpp"
#include "parallel.hpp"

namespace zeno {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSkip = 1e-12;  // relative envelope below which a slice is not integrated

double ratio(double num, double den) {
    if (den == 0) return num == 0 ? 1.0 : kInf;
    return num / den;
}
}  // namespace

void SuperGaussianPulse::validate() const {
    if (m < 0) throw DomainError("pulse order m must be >= 0");
    if (!(sigma > 0)) throw DomainError("pulse sigma must be > 0");
    if (!(peak >= 0) || !std::isfinite(peak)) throw DomainError("pulse peak must be >= 0");
}

double SuperGaussianPulse::envelope(double t) const {
    if (m == 0) return peak;
    const double x = std::pow(std::abs(t) / sigma, 2 * m);
    return peak * std::exp(-0.5 * x);
}

std::vector<double> SuperGaussianPulse::grid() const {
    validate();
    const std::size_t n = grid_points();
    const double dt = 8 * sigma / static_cast<double>(n - 1);
    const double mid = 0.5 * static_cast<double>(n - 1);
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = (static_cast<double>(i) - mid) * dt;
    return t;
}

CwLoss cw_loss(double i_s, double i_p) {
    if (!(i_p > 0)) throw DomainError("pump intensity must be > 0");
    if (!(i_s >= 0)) throw DomainError("signal intensity must be >= 0");
    const double l = i_s / i_p;
    return {l, 2 * l, l >= 0.1};
}

SwitchReport frequency_switch_cw(double mu0, double omega1, double L, double i_s,
                                 double i_p) {
    if (!(L >= 0)) throw DomainError("length must be >= 0");
    const CwLoss l = cw_loss(i_s, i_p);
    const double x = mu0 * omega1 * L / std::numbers::sqrt2;
    const double th = std::tanh(x), ch = std::cosh(x);
    SwitchReport r;
    r.loss = l.loss;
    r.flipped_contrast = l.loss == 0 ? kInf : 2 / l.loss * th * th;
    r.unflipped_contrast = (1 - l.loss) * ch * ch;
    r.regime_warning = l.out_of_regime;
    return r;
}

ModeSwitchReport mode_switch_cw(double mu0, double omega1, double delta_k, double i_s,
                                double i_p, PnmRegime regime, double omega2_ratio) {
    const CwLoss l = cw_loss(i_s, i_p);
    if (!(mu0 > 0) || !(omega1 > 0)) throw DomainError("mu0 and omega1 must be > 0");
    if (delta_k == 0) throw DomainError("mode switch needs delta_k != 0");
    const double pump_amp = mu0 * std::sqrt(i_p / i_s);
    const double oe = omega2_ratio * omega1 * pump_amp;
    const double dk = std::abs(delta_k);
    const double s = suppression_coefficients(dk, oe, 0).s_cqz;
    const double om = omega1 * mu0;

    ModeSwitchReport out{};
    out.omega_eff = oe;
    out.s_cqz = s;
    out.bound = (i_p / i_s) * (i_p / i_s);
    out.report.loss = l.loss;
    out.report.unflipped_contrast = kInf;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    if (regime == PnmRegime::SmallPNM) {
        out.length = small_pnm_switch_length(mu0, omega1, dk);
        const double o4 = om * om * om * om;
        out.report.flipped_contrast =
            16 * dk * dk / (pi2 * o4 * out.length * out.length * s * s);
        out.flipped_approx = out.report.flipped_contrast;
        out.report.regime_warning = 3 * dk > om;
    } else {
        out.length = large_pnm_switch_length(mu0, omega1, dk);
        out.report.flipped_contrast = 4 / (pi2 * s * s);
        const double q = oe / dk;
        out.flipped_approx = 4 * q * q * q * q / pi2;
        out.report.regime_warning = dk < 3 * om || oe < 3 * dk;
    }
    out.report.regime_warning = out.report.regime_warning || l.out_of_regime;
    return out;
}

PulseTrace pulse_through_waveguide(const SuperGaussianPulse& pulse,
                                   const WaveguideParams& p,
                                   const std::optional<SuperGaussianPulse>& pump,
                                   const IntegratorSettings& s, unsigned threads) {
    pulse.validate();
    p.validate();
    if (pump) {
        pump->validate();
        if (pump->m != pulse.m || pump->sigma != pulse.sigma)
            throw DomainError("pump must share the signal pulse shape and grid");
    }

    PulseTrace tr;
    tr.t = pulse.grid();
    const std::size_t n = tr.t.size();
    tr.input.resize(n);
    for (std::size_t i = 0; i < n; ++i) tr.input[i] = pulse.envelope(tr.t[i]);
    tr.signal_out.assign(n, {});
    tr.harmonic_out.assign(n, {});
    tr.df_out.assign(n, {});

    // Envelopes are even in t and the grid is symmetric, so only the first
    // half (plus the middle point for odd n) is integrated.
    const std::size_t half = pulse.m == 0 ? 1 : (n + 1) / 2;
    auto slice = [&](std::size_t i) {
        const double env = tr.input[i];
        if (env <= kSkip * pulse.peak) {
            tr.signal_out[i] = env;
            return;
        }
        FieldState init;
        init.a_s = env;
        FieldState out = pump ? propagate_undepleted_final(init, p, pump->envelope(tr.t[i]), s)
                              : propagate_full_final(init, p, s);
        tr.signal_out[i] = out.a_s;
        tr.harmonic_out[i] = out.a_h;
        tr.df_out[i] = out.a_d;
    };

    detail::parallel_for(half, threads, slice);
    for (std::size_t i = half; i < n; ++i) {
        const std::size_t j = pulse.m == 0 ? 0 : n - 1 - i;
        tr.signal_out[i] = tr.signal_out[j];
        tr.harmonic_out[i] = tr.harmonic_out[j];
        tr.df_out[i] = tr.df_out[j];
    }

    tr.signal_phase.resize(n);
    double offset = 0, prev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double raw = std::arg(tr.signal_out[i]);
        if (i > 0) {
            const double jump = raw - prev;
            offset -= 2 * std::numbers::pi * std::round(jump / (2 * std::numbers::pi));
        }
        prev = raw;
        tr.signal_phase[i] = raw + offset;
    }

    tr.port_p.resize(n);
    tr.port_q.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        tr.port_p[i] = (tr.signal_out[i] - tr.input[i]) / std::numbers::sqrt2;
        tr.port_q[i] = (tr.signal_out[i] + tr.input[i]) / std::numbers::sqrt2;
    }
    return tr;
}

double trace_energy(const std::vector<double>& t, const std::vector<cplx>& x) {
    if (t.size() != x.size()) throw DomainError("trace length mismatch");
    if (t.size() < 2) return t.empty() ? 0.0 : std::norm(x[0]);
    double acc = 0;
    for (std::size_t i = 1; i < t.size(); ++i)
        acc += 0.5 * (std::norm(x[i]) + std::norm(x[i - 1])) * (t[i] - t[i - 1]);
    return acc;
}

SwitchReport pulsed_contrast(const PulseTrace& off, const PulseTrace& on) {
    if (off.t != on.t) throw DomainError("pump-off and pump-on traces use different grids");
    const double p_off = trace_energy(off.t, off.port_p);
    const double p_on = trace_energy(on.t, on.port_p);
    const double q_off = trace_energy(off.t, off.port_q);
    const double q_on = trace_energy(on.t, on.port_q);
    std::vector<cplx> in(on.input.begin(), on.input.end());
    const double e_in = 2 * trace_energy(on.t, in);
    SwitchReport r;
    r.flipped_contrast = ratio(p_off, p_on);
    r.unflipped_contrast = ratio(q_on, q_off);
    r.loss = e_in > 0 ? std::clamp(1 - (p_on + q_on) / e_in, 0.0, 1.0) : 0.0;
    return r;
}

}  // namespace zeno
