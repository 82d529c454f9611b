#include "zenoswitch/analytic_shg.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zenoswitch/error.hpp"
#include "zenoswitch/special_functions.hpp"
#include "zenoswitch/traveling_wave.hpp"

namespace zeno {

namespace {

void check_amp(double mu0, double omega1) {
    if (!(mu0 > 0) || !std::isfinite(mu0)) throw DomainError("mu0 must be > 0");
    if (!(omega1 > 0) || !std::isfinite(omega1)) throw DomainError("omega1 must be > 0");
}

}  // namespace

PmSolution pm_solution(double mu0, double omega1, double z, double phi0) {
    if (!(z >= 0)) throw DomainError("z must be >= 0");
    const double x = mu0 * omega1 * z / std::numbers::sqrt2;
    return {mu0 / std::cosh(x), mu0 / std::numbers::sqrt2 * std::tanh(x), phi0, 2 * phi0};
}

double pnm_chi(double mu0, double omega1, double delta_k) {
    check_amp(mu0, omega1);
    const double dk = std::abs(delta_k);
    const double r = dk / (omega1 * mu0);
    return std::numbers::sqrt2 * r / 4 + std::sqrt(1 + r * r / 8);
}

double pnm_period(double mu0, double omega1, double delta_k) {
    const double chi = pnm_chi(mu0, omega1, delta_k);
    if (delta_k == 0) throw DivergentPeriod("period diverges at delta_k = 0");
    const double m = 1 / (chi * chi * chi * chi);
    return 2 * std::numbers::sqrt2 * elliptic_k(m) / (chi * mu0 * omega1);
}

PnmSolutionParams pnm_params(double mu0, double omega1, double delta_k) {
    const double chi = pnm_chi(mu0, omega1, delta_k);
    const double z0 = delta_k == 0 ? std::numeric_limits<double>::infinity()
                                   : pnm_period(mu0, omega1, delta_k);
    return {chi, z0, mu0, omega1, delta_k};
}

PnmAmplitudes pnm_solution(double mu0, double omega1, double delta_k, double z) {
    if (delta_k == 0) {
        auto pm = pm_solution(mu0, omega1, z);
        return {pm.mu_s, pm.mu_h};
    }
    if (!(z >= 0)) throw DomainError("z must be >= 0");
    const double chi = pnm_chi(mu0, omega1, delta_k);
    const double m = 1 / (chi * chi * chi * chi);
    const double sn = jacobi_sn(chi * mu0 * omega1 * z / std::numbers::sqrt2, m);
    const double q = sn / chi;
    return {mu0 * std::sqrt(std::max(0.0, 1 - q * q)),
            mu0 * std::abs(q) / std::numbers::sqrt2};
}

LargePnmApprox large_pnm_approx(double mu0, double omega1, double delta_k, double z) {
    if (!(delta_k > 0)) throw DomainError("large-PNM limit needs delta_k > 0");
    const double s = std::sin(delta_k * z / 2);
    const double o2 = omega1 * omega1;
    return {mu0 - o2 * mu0 * mu0 * mu0 * s * s / (delta_k * delta_k),
            mu0 * mu0 * omega1 * std::abs(s) / delta_k,
            o2 * mu0 * mu0 * z / (2 * delta_k)};
}

double small_pnm_switch_length(double mu0, double omega1, double delta_k) {
    return 2 * pnm_period(mu0, omega1, delta_k);
}

double large_pnm_switch_length(double mu0, double omega1, double delta_k) {
    check_amp(mu0, omega1);
    if (!(delta_k > 0)) throw DomainError("large-PNM length needs delta_k > 0");
    return 2 * std::numbers::pi * delta_k / (omega1 * omega1 * mu0 * mu0);
}

double pnm_phase_numeric(double mu0, double omega1, double delta_k, double z,
                         const IntegratorSettings& s) {
    check_amp(mu0, omega1);
    if (z == 0) return 0.0;
    WaveguideParams p;
    p.omega1 = omega1;
    p.delta_k = delta_k;
    p.length = z;
    FieldState init;
    init.a_s = mu0;
    auto traj = propagate_full(init, p, s);
    return unwrapped_phase(traj, Wave::Signal).back();
}

}  // namespace zeno
