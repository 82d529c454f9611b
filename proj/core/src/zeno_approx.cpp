#include "zenoswitch/zeno_approx.hpp"

#include <cmath>
#include <limits>

#include "zenoswitch/error.hpp"

namespace zeno {

namespace {
constexpr double kWarnFactor = 3.0;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

const char* to_string(RegimeKind k) {
    switch (k) {
        case RegimeKind::CQZ: return "CQZ";
        case RegimeKind::IQZ: return "IQZ";
        case RegimeKind::Intermediate: return "Intermediate";
    }
    return "?";
}

ZenoRegime classify_regime(double omega_eff, double gamma) {
    if (!(omega_eff >= 0) || !(gamma >= 0))
        throw DomainError("omega_eff and gamma must be >= 0");
    RegimeKind k = RegimeKind::Intermediate;
    if (gamma < omega_eff / 10) k = RegimeKind::CQZ;
    else if (gamma > 10 * omega_eff) k = RegimeKind::IQZ;
    return {k, omega_eff, gamma};
}

SuppressionCoefficients suppression_coefficients(double delta_k, double omega_eff,
                                                 double gamma) {
    const double dk2 = delta_k * delta_k, oe2 = omega_eff * omega_eff;
    SuppressionCoefficients c{};
    c.s_cqz = dk2 + oe2 == 0 ? 1.0 : dk2 / (dk2 + oe2);
    c.kappa_eff = gamma > 0 ? oe2 / gamma : kInf;
    if (gamma == 0) c.s_iqz = 0;
    else if (oe2 == 0) c.s_iqz = kInf;
    else c.s_iqz = dk2 * gamma * gamma / (oe2 * oe2);
    return c;
}

CqzSignal cqz_signal(double mu0, double omega1, double delta_k, double omega_eff,
                     double z) {
    const double g2 = omega1 * omega1 * mu0 * mu0;
    const double dk2 = delta_k * delta_k, oe2 = omega_eff * omega_eff;
    double amp = mu0;
    if (omega_eff > 0) {
        const double s = std::sin(omega_eff * z / 2);
        amp = mu0 / std::sqrt(1 + 2 * g2 * s * s / oe2);
    }
    // Omega1^2 mu0^2 z S_cqz / (2 dk), written to stay finite at dk = 0
    const double phase = dk2 + oe2 == 0 ? 0.0 : g2 * delta_k * z / (2 * (dk2 + oe2));
    const double om = omega1 * mu0;
    const bool warn = omega_eff < kWarnFactor * om ||
                      std::abs(delta_k + omega_eff) < kWarnFactor * om ||
                      std::abs(delta_k - omega_eff) < kWarnFactor * om;
    return {std::polar(amp, phase), warn};
}

IqzSignal iqz_signal(double mu0, double omega1, double delta_k, double omega_eff,
                     double gamma, double z) {
    if (!(gamma > 0)) throw DomainError("IQZ signal needs gamma > 0");
    if (!(omega_eff > 0)) throw DomainError("IQZ signal needs omega_eff > 0");
    const double g2 = omega1 * omega1 * mu0 * mu0;
    const double oe2 = omega_eff * omega_eff;
    const double kappa = oe2 / gamma;
    const cplx a0(mu0, 0.0);

    IqzSignal r{};
    r.adiabatic = a0 / std::sqrt(1.0 + g2 * z / cplx(kappa, delta_k));
    const double loss = g2 * gamma * z / (2 * oe2);
    const double phase = g2 * delta_k * gamma * gamma * z / (2 * oe2 * oe2);
    r.first_order = a0 * std::exp(cplx(-loss, phase));

    const double om = omega1 * mu0;
    const bool large_pnm = std::abs(delta_k) > om;
    const double need = large_pnm ? om * om / std::abs(delta_k) : om;
    r.regime_warning = gamma < kWarnFactor * omega_eff || kappa < kWarnFactor * need;
    return r;
}

double suppression_ratio(double omega_eff, double gamma) {
    if (!(gamma > 0)) throw DomainError("suppression ratio needs gamma > 0");
    return omega_eff * omega_eff / (gamma * gamma);
}

std::pair<cplx, cplx> dressed_amplitudes(const FieldState& state, double delta_k) {
    const cplx rot = std::polar(0.5, -delta_k * state.z);
    const cplx i(0, 1);
    return {rot * (state.a_h + i * state.a_d), rot * (state.a_h - i * state.a_d)};
}

std::pair<cplx, cplx> undress(cplx a_plus, cplx a_minus, double delta_k, double z) {
    const cplx rot = std::polar(1.0, delta_k * z);
    const cplx i(0, 1);
    return {rot * (a_plus + a_minus), -i * rot * (a_plus - a_minus)};
}

std::pair<cplx, cplx> adiabatic_dressed_amplitudes(cplx a_s, double omega1,
                                                   double delta_k, double omega_eff) {
    const cplx num = cplx(0, -omega1) * a_s * a_s / 4.0;
    return {num / (delta_k + omega_eff), num / (delta_k - omega_eff)};
}

}  // namespace zeno
