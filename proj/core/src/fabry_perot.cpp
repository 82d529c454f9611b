#include "zenoswitch/fabry_perot.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "parallel.hpp"
#include "zenoswitch/error.hpp"

namespace zeno {

namespace {

constexpr cplx I(0, 1);

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid cavity: ") + what);
}

}  // namespace

void CavityParams::validate() const {
    require(length > 0 && std::isfinite(length), "length must be > 0");
    require(r >= 0 && r < 1, "r must lie in [0, 1)");
    require(r_prime >= 0 && r_prime <= 1, "r_prime must lie in [0, 1]");
    require(v_c > 0 && std::isfinite(v_c), "v_c must be > 0");
    require(omega_eff >= 0 && std::isfinite(omega_eff), "omega_eff must be >= 0");
    require(gamma >= 0 && std::isfinite(gamma), "gamma must be >= 0");
    require(std::isfinite(ks_L) && std::isfinite(kp_L) && std::isfinite(kf_L),
            "phases must be finite");
}

std::vector<double> detuning_grid(double center, double half_width, std::size_t n) {
    if (n < 2) throw DomainError("detuning grid needs at least 2 points");
    std::vector<double> g(n);
    const double mid = 0.5 * static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = center + half_width * (static_cast<double>(i) - mid) / mid;
    return g;
}

SfgCellResult sfg_cell(cplx a_s, cplx a_p, cplx a_f, double omega, double gamma,
                       double z, const IntegratorSettings& s) {
    if (!(z >= 0)) throw DomainError("cell length must be >= 0");
    if (!(gamma >= 0)) throw DomainError("gamma must be >= 0");
    if (z == 0) return {a_s, a_p, a_f, 0.0};
    if (omega == 0) {
        const double decay = std::exp(-gamma * z);
        return {a_s, a_p, a_f * decay, std::norm(a_f) * (1 - decay * decay)};
    }
    auto rhs = [=](double, const CState<4>& y, CState<4>& dy) {
        dy[0] = -omega * std::conj(y[1]) * y[2];
        dy[1] = -omega * std::conj(y[0]) * y[2];
        dy[2] = omega * y[0] * y[1] - gamma * y[2];
        dy[3] = 2 * gamma * std::norm(y[2]);
    };
    CState<4> y{a_s, a_p, a_f, 0.0};
    IntegratorSettings e = s;
    e.dense_output_stride = z;
    integrate<4>(rhs, y, 0.0, z, e, [](double, const CState<4>&) {});
    return {y[0], y[1], y[2], y[3].real()};
}

std::pair<cplx, cplx> sfg_cell_undepleted(cplx a_s, cplx a_f, double omega_eff,
                                          double gamma, double phi_p, double z) {
    // M = [[0, -a*], [a, -gamma]], a = omega_eff e^{i phi_p};
    // exp(Mz) = e^{-gamma z/2} [cosh(qz) + sinh(qz)/q (M + gamma/2)]
    const cplx a = std::polar(omega_eff, phi_p);
    const cplx q = std::sqrt(cplx(0.25 * gamma * gamma - omega_eff * omega_eff, 0.0));
    const cplx ch = std::cosh(q * z);
    const cplx sh = std::abs(q * z) < 1e-8 ? cplx(z) : std::sinh(q * z) / q;
    const double damp = std::exp(-0.5 * gamma * z);
    const cplx m00 = ch + sh * (0.5 * gamma), m01 = -sh * std::conj(a);
    const cplx m10 = sh * a, m11 = ch - sh * (0.5 * gamma);
    return {damp * (m00 * a_s + m01 * a_f), damp * (m10 * a_s + m11 * a_f)};
}

CavitySpectrum spectrum_pump_off(const CavityParams& c, const std::vector<double>& ks_L) {
    c.validate();
    CavitySpectrum out;
    out.ks_L = ks_L;
    const double t2 = c.t() * c.t();
    for (double k : ks_L) {
        const double tr = t2 / std::norm(1.0 + c.r * std::polar(1.0, 2 * k));
        out.transmittance.push_back(tr);
        out.reflectance.push_back(1 - tr);
        out.loss.push_back(0.0);
    }
    return out;
}

CavitySpectrum spectrum_iqz(const CavityParams& c, const std::vector<double>& ks_L) {
    c.validate();
    if (!(c.gamma > 0)) throw DomainError("IQZ spectrum needs gamma > 0");
    CavitySpectrum out;
    out.ks_L = ks_L;
    const double a = std::exp(-2 * c.omega_eff * c.omega_eff * c.length / c.gamma);
    const double t2 = c.t() * c.t();
    for (double k : ks_L) {
        const double tr = t2 * a / std::norm(1.0 + c.r * a * std::polar(1.0, 2 * k));
        // reflected amplitude i sqrt(R) (1 + T/(R + X)) = i sqrt(R) (1 + X)/(R + X)
        const cplx x = std::polar(1.0 / a, -2 * k);
        const double re = c.r * std::norm((1.0 + x) / (c.r + x));
        out.transmittance.push_back(tr);
        out.reflectance.push_back(re);
        out.loss.push_back(1 - tr - re);
    }
    return out;
}

ResonancePoint spectrum_cqz_resonance(const CavityParams& c) {
    c.validate();
    const double eta = std::cos(c.omega_eff * c.length);
    const double zeta = std::sin(c.omega_eff * c.length);
    const double R = c.r, Rp = c.r_prime, T = c.t();
    const double sr = std::sqrt(R), srp = std::sqrt(Rp);
    const cplx d = 1.0 - R * eta * eta -
                   I * srp * zeta * ((I * sr + srp) * eta + sr * zeta);
    const double dd = std::norm(d);
    const double t0 = T * T * (eta * eta + Rp * Rp * zeta * zeta) / dd;
    const double b = std::sqrt(R * Rp) * eta + zeta;
    const double r0 = (R + Rp) * zeta * zeta * b * b / dd;
    return {t0, r0};
}

namespace {

// One resonator state advanced by whole round trips.
class RoundTrip {
public:
    RoundTrip(const CavityParams& c, double omega, const IntegratorSettings& s)
        : c_(c), omega_(omega), s_(s) {
        sr_ = std::sqrt(c.r);
        st_ = std::sqrt(c.t());
        srp_ = std::sqrt(c.r_prime);
        rs_ = I * sr_ * std::polar(1.0, 2 * c.ks_L);
        rp_ = I * sr_ * std::polar(1.0, 2 * c.kp_L);
        rf_ = I * srp_ * std::polar(1.0, 2 * c.kf_L);
    }

    struct Out {
        cplx refl_s, refl_p, trans_s, trans_p;
    };

    Out step(double in_s, double in_p) {
        Out o;
        // input mirror
        o.refl_s = I * sr_ * in_s + st_ * s;
        o.refl_p = I * sr_ * in_p + st_ * p;
        s = I * sr_ * s + st_ * in_s;
        p = I * sr_ * p + st_ * in_p;
        sf_out += c_.t_prime() * std::norm(f);
        f = I * srp_ * f;
        // forward and back through the crystal
        if (std::abs(s) + std::abs(p) + std::abs(f) > 0) {
            auto r = sfg_cell(s, p, f, omega_, c_.gamma, 2 * c_.length, s_);
            s = r.a_s;
            p = r.a_p;
            f = r.a_f;
            gamma_loss += r.dissipated;
        }
        // output mirror
        o.trans_s = st_ * s;
        o.trans_p = st_ * p;
        s = rs_ * s;
        p = rp_ * p;
        sf_out += c_.t_prime() * std::norm(f);
        f = rf_ * f;
        return o;
    }

    cplx s{}, p{}, f{};
    double sf_out = 0, gamma_loss = 0;

private:
    CavityParams c_;
    double omega_;
    IntegratorSettings s_;
    double sr_, st_, srp_;
    cplx rs_, rp_, rf_;
};

// Intracavity forward pump per unit CW drive on a resonant cavity.
cplx pump_buildup(const CavityParams& c) {
    return std::sqrt(c.t()) / (1.0 + c.r * std::polar(1.0, 2 * c.kp_L));
}

double refine_peak(const std::vector<double>& t, const std::vector<double>& y) {
    if (y.empty()) return 0;
    const auto it = std::max_element(y.begin(), y.end());
    const std::size_t k = static_cast<std::size_t>(it - y.begin());
    if (k == 0 || k + 1 >= y.size()) return t[k];
    const double ym = y[k - 1], y0 = y[k], yp = y[k + 1];
    const double den = ym - 2 * y0 + yp;
    if (den == 0) return t[k];
    const double shift = 0.5 * (ym - yp) / den;
    return t[k] + shift * (t[k + 1] - t[k]);
}

}  // namespace

PulseRunResult roundtrip_simulate(const CavityParams& c, const SuperGaussianPulse& signal,
                                  const std::optional<SuperGaussianPulse>& pump,
                                  std::optional<double> advance_ns,
                                  const PulseRunOptions& opt) {
    c.validate();
    signal.validate();
    if (pump) pump->validate();
    const double trt = c.round_trip_ns();
    if (signal.m == 0) throw DomainError("round-trip simulation needs a finite pulse (m >= 1)");
    if (signal.sigma < 10 * trt)
        throw GridTooCoarse("pulse width " + std::to_string(signal.sigma) +
                            " ns is below ten round trips (" + std::to_string(10 * trt) +
                            " ns)");
    const double adv = advance_ns.value_or(c.pump_advance_ns());

    double omega = 0;
    if (pump && pump->peak > 0)
        omega = c.omega_eff / (std::abs(pump_buildup(c)) * pump->peak);

    double t_lo = -opt.window_sigmas * signal.sigma;
    double t_hi = opt.window_sigmas * signal.sigma;
    if (pump) {
        t_lo = std::min(t_lo, -opt.window_sigmas * pump->sigma - adv);
        t_hi = std::max(t_hi, opt.window_sigmas * pump->sigma - adv);
    }
    t_hi += opt.tail_lifetimes / c.linewidth_per_ns();
    const long i_lo = static_cast<long>(std::floor(t_lo / trt));
    const long i_hi = static_cast<long>(std::ceil(t_hi / trt));

    PulseRunResult res;
    res.transmit_delay_ns = 0.5 * trt;
    const std::size_t n = static_cast<std::size_t>(i_hi - i_lo + 1);
    res.t.reserve(n);
    RoundTrip rt(c, omega, opt.integrator);
    double e_in_s = 0, e_in_p = 0, e_rs = 0, e_ts = 0, e_rp = 0, e_tp = 0;
    for (long i = i_lo; i <= i_hi; ++i) {
        const double t = static_cast<double>(i) * trt;
        const double as = signal.envelope(t);
        const double ap = pump ? pump->envelope(t + adv) : 0.0;
        auto o = rt.step(as, ap);
        res.t.push_back(t);
        res.signal_in.push_back(as);
        res.pump_in.push_back(ap);
        res.signal_reflected.push_back(o.refl_s);
        res.signal_transmitted.push_back(o.trans_s);
        res.pump_reflected.push_back(o.refl_p);
        res.pump_transmitted.push_back(o.trans_p);
        e_in_s += as * as;
        e_in_p += ap * ap;
        e_rs += std::norm(o.refl_s);
        e_ts += std::norm(o.trans_s);
        e_rp += std::norm(o.refl_p);
        e_tp += std::norm(o.trans_p);
    }

    const double lost = rt.sf_out + rt.gamma_loss;
    const double res_f = std::norm(rt.f);
    res.residual_energy = std::norm(rt.s) + std::norm(rt.p) + res_f;
    if (e_in_s > 0) {
        res.signal_transmitted_fraction = e_ts / e_in_s;
        res.signal_reflected_fraction = e_rs / e_in_s;
        res.signal_loss_fraction = lost / e_in_s;
        res.signal_bookkeeping =
            (e_ts + e_rs + std::norm(rt.s) + res_f + lost - e_in_s) / e_in_s;
    }
    if (e_in_p > 0) {
        res.pump_transmitted_fraction = e_tp / e_in_p;
        res.pump_reflected_fraction = e_rp / e_in_p;
        res.pump_loss_fraction = lost / e_in_p;
        res.pump_bookkeeping =
            (e_tp + e_rp + std::norm(rt.p) + res_f + lost - e_in_p) / e_in_p;
    }

    std::vector<double> pin(n), pout(n), tout(n);
    for (std::size_t k = 0; k < n; ++k) {
        pin[k] = res.signal_in[k] * res.signal_in[k];
        pout[k] = std::norm(res.signal_transmitted[k]);
        tout[k] = res.t[k] + res.transmit_delay_ns;
    }
    res.peak_delay_ns = refine_peak(tout, pout) - refine_peak(res.t, pin);
    return res;
}

SteadyState steady_state(const CavityParams& c, const SteadyStateOptions& opt) {
    c.validate();
    if (!(opt.signal_amp > 0)) throw DomainError("signal_amp must be > 0");
    const cplx build = pump_buildup(c);
    const double omega = c.omega_eff > 0 ? c.omega_eff / std::abs(build) : 0.0;
    const double ap = c.omega_eff > 0 ? 1.0 : 0.0;
    const double as = opt.signal_amp;

    RoundTrip rt(c, omega, opt.integrator);
    rt.p = build * ap;  // start the pump at its own steady state

    const double pin = as * as;
    std::deque<std::pair<double, double>> hist;
    for (std::size_t k = 1; k <= opt.max_round_trips; ++k) {
        auto o = rt.step(as, ap);
        const double pt = std::norm(o.trans_s), pr = std::norm(o.refl_s);
        hist.emplace_back(pt, pr);
        if (hist.size() > opt.window + 1) hist.pop_front();
        if (hist.size() == opt.window + 1 && k >= 2 * opt.window) {
            double tmin = pt, tmax = pt, rmin = pr, rmax = pr;
            for (const auto& [a, b] : hist) {
                tmin = std::min(tmin, a);
                tmax = std::max(tmax, a);
                rmin = std::min(rmin, b);
                rmax = std::max(rmax, b);
            }
            if (tmax - tmin <= opt.tol * pin && rmax - rmin <= opt.tol * pin) {
                const double tr = pt / pin, re = pr / pin;
                return {tr, re, 1 - tr - re, k};
            }
        }
    }
    throw NonConvergence("cavity did not settle within " +
                         std::to_string(opt.max_round_trips) + " round trips");
}

CavitySpectrum spectrum_steady(const CavityParams& c, const std::vector<double>& ks_L,
                               const SteadyStateOptions& opt, unsigned threads) {
    c.validate();
    std::vector<SteadyState> pts(ks_L.size());
    detail::parallel_for(ks_L.size(), threads, [&](std::size_t i) {
        CavityParams ci = c;
        ci.ks_L = ks_L[i];
        pts[i] = steady_state(ci, opt);
    });
    CavitySpectrum out;
    out.ks_L = ks_L;
    for (const auto& p : pts) {
        out.transmittance.push_back(p.transmittance);
        out.reflectance.push_back(p.reflectance);
        out.loss.push_back(p.loss);
    }
    return out;
}

std::vector<SteadyState> sweep_gamma(const CavityParams& tmpl,
                                     const std::vector<double>& gammas,
                                     const SteadyStateOptions& opt, unsigned threads) {
    tmpl.validate();
    std::vector<SteadyState> out(gammas.size());
    detail::parallel_for(gammas.size(), threads, [&](std::size_t i) {
        CavityParams c = tmpl;
        c.gamma = gammas[i];
        out[i] = steady_state(c, opt);
    });
    return out;
}

std::vector<SteadyState> sweep_rprime(const CavityParams& tmpl,
                                      const std::vector<double>& rprimes,
                                      const SteadyStateOptions& opt, unsigned threads) {
    tmpl.validate();
    std::vector<SteadyState> out(rprimes.size());
    detail::parallel_for(rprimes.size(), threads, [&](std::size_t i) {
        CavityParams c = tmpl;
        c.r_prime = rprimes[i];
        out[i] = steady_state(c, opt);
    });
    return out;
}

}  // namespace zeno
