#pragma once

#include <utility>

#include "zenoswitch/traveling_wave.hpp"

namespace zeno {

enum class RegimeKind { CQZ, IQZ, Intermediate };

struct ZenoRegime {
    RegimeKind kind;
    double omega_eff;
    double gamma;
};

const char* to_string(RegimeKind k);

// Advisory classification: CQZ when gamma < omega_eff/10, IQZ when
// gamma > 10 omega_eff.
ZenoRegime classify_regime(double omega_eff, double gamma);

struct SuppressionCoefficients {
    double s_cqz;
    double s_iqz;       // +inf when gamma > 0 and omega_eff == 0; 0 when gamma == 0
    double kappa_eff;   // +inf when gamma == 0
};

SuppressionCoefficients suppression_coefficients(double delta_k, double omega_eff,
                                                 double gamma);

struct CqzSignal {
    cplx amplitude;
    bool regime_warning;
};

// Oscillating second-order amplitude combined with the first-order phase.
CqzSignal cqz_signal(double mu0, double omega1, double delta_k, double omega_eff,
                     double z);

struct IqzSignal {
    cplx adiabatic;    // power law from eliminating the harmonic
    cplx first_order;  // its exponential expansion
    bool regime_warning;
};

// Throws DomainError for gamma == 0.
IqzSignal iqz_signal(double mu0, double omega1, double delta_k, double omega_eff,
                     double gamma, double z);

// omega_eff^2 / gamma^2. Throws DomainError for gamma == 0.
double suppression_ratio(double omega_eff, double gamma);

// A_+- = e^{-i dk z} (a_h +- i a_d) / 2 at state.z.
std::pair<cplx, cplx> dressed_amplitudes(const FieldState& state, double delta_k);

// Inverse transform: returns (a_h, a_d).
std::pair<cplx, cplx> undress(cplx a_plus, cplx a_minus, double delta_k, double z);

// Adiabatic-elimination values -i omega1 a_s^2 / (4 (dk +- omega_eff)).
std::pair<cplx, cplx> adiabatic_dressed_amplitudes(cplx a_s, double omega1,
                                                   double delta_k, double omega_eff);

}  // namespace zeno
