#pragma once

#include "zenoswitch/ode.hpp"

namespace zeno {

// Pump-off SHG closed forms. mu0 is the initial signal amplitude.

struct PmSolution {
    double mu_s, mu_h, phi_s, phi_h;
};

// Phase matched: sech / tanh.
PmSolution pm_solution(double mu0, double omega1, double z, double phi0 = 0.0);

struct PnmSolutionParams {
    double chi;
    double period_z0;  // mm; +inf when delta_k == 0
    double mu0;
    double omega1;
    double delta_k;
};

double pnm_chi(double mu0, double omega1, double delta_k);
PnmSolutionParams pnm_params(double mu0, double omega1, double delta_k);

// Period of the signal amplitude oscillation. Throws DivergentPeriod at
// delta_k == 0.
double pnm_period(double mu0, double omega1, double delta_k);

struct PnmAmplitudes {
    double mu_s, mu_h;
};

// Jacobi-sn solution, parameter 1/chi^4. Depends on |delta_k| only.
PnmAmplitudes pnm_solution(double mu0, double omega1, double delta_k, double z);

struct LargePnmApprox {
    double mu_s, mu_h, phi_s;
};

// Limit delta_k >> omega1*mu0. Throws DomainError for delta_k <= 0.
LargePnmApprox large_pnm_approx(double mu0, double omega1, double delta_k, double z);

// Length giving a pi signal phase shift with the pump off.
// Small PNM: 2 z0, a rule of thumb meant for delta_k <~ 0.01 omega1 mu0.
double small_pnm_switch_length(double mu0, double omega1, double delta_k);
// Large PNM: 2 pi delta_k / (omega1 mu0)^2.
double large_pnm_switch_length(double mu0, double omega1, double delta_k);

// Signal phase for general delta_k, obtained from the integrator since no
// closed form is available.
double pnm_phase_numeric(double mu0, double omega1, double delta_k, double z,
                         const IntegratorSettings& s = {});

}  // namespace zeno
