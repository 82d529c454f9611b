#include "zenoswitch/medium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zenoswitch/error.hpp"

namespace zeno {

namespace {

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError("invalid medium: " + what);
}

}  // namespace

void MediumParams::validate() const {
    require(std::isfinite(d_eff), "d_eff must be finite");
    for (double n : {n_s, n_h, n_p, n_d, n_f}) require(n >= 1, "refractive index < 1");
    for (double w : {omega_s, omega_h, omega_p, omega_d, omega_f})
        require(w > 0 && std::isfinite(w), "frequencies must be positive");
    require(V > 0, "V must be positive");
    require(v_g >= 0, "v_g must be non-negative");
    require(epsilon_0 > 0 && hbar > 0 && c > 0, "constants must be positive");
    require(close(omega_h, 2 * omega_s), "omega_h != 2 omega_s");
    require(close(omega_d, omega_h - omega_p), "omega_d != omega_h - omega_p");
    require(close(omega_f, omega_s + omega_p), "omega_f != omega_s + omega_p");
}

MediumParams MediumParams::from_signal_pump(double d_eff, double omega_s,
                                            double omega_p, double V) {
    MediumParams m;
    m.d_eff = d_eff;
    m.omega_s = omega_s;
    m.omega_p = omega_p;
    m.omega_h = 2 * omega_s;
    m.omega_d = m.omega_h - omega_p;
    m.omega_f = omega_s + omega_p;
    m.V = V;
    return m;
}

double rabi_omega1(const MediumParams& m) {
    m.validate();
    double w3 = m.omega_s * m.omega_s * m.omega_s;
    double per_m = 4 * m.d_eff *
                   std::sqrt(m.hbar * w3 /
                             (m.n_s * m.n_s * m.n_h * m.epsilon_0 * m.c * m.c * m.V));
    return rate_si_to_internal(per_m);
}

double rabi_omega2(const MediumParams& m) {
    m.validate();
    double per_m = 2 * m.d_eff *
                   std::sqrt(2 * m.hbar * m.omega_h * m.omega_p * m.omega_d /
                             (m.n_p * m.n_d * m.n_h * m.epsilon_0 * m.c * m.c * m.V));
    return rate_si_to_internal(per_m);
}

double rabi_omega_sfg(const MediumParams& m) {
    m.validate();
    double per_m = 2 * m.d_eff *
                   std::sqrt(2 * m.hbar * m.omega_s * m.omega_p * m.omega_f /
                             (m.n_s * m.n_p * m.n_f * m.epsilon_0 * m.c * m.c * m.V));
    return rate_si_to_internal(per_m);
}

}  // namespace zeno
