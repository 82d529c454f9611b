#pragma once

namespace zeno {

// SI constants (CODATA 2018).
namespace si {
inline constexpr double epsilon_0 = 8.8541878128e-12;  // F/m
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c = 299792458.0;               // m/s
}  // namespace si

// Unit conversion between SI and the internal mm / ns system.
inline constexpr double rate_si_to_internal(double per_m) { return per_m * 1e-3; }
inline constexpr double rate_internal_to_si(double per_mm) { return per_mm * 1e3; }
inline constexpr double speed_si_to_internal(double m_per_s) { return m_per_s * 1e3; }
inline constexpr double speed_internal_to_si(double mm_per_s) { return mm_per_s * 1e-3; }

// Material description. Indices are dimensionless, frequencies are angular
// (rad/s), V is in m^3, v_g in mm/s.
struct MediumParams {
    double d_eff = 0;  // m/V
    double n_s = 1, n_h = 1, n_p = 1, n_d = 1, n_f = 1;
    double omega_s = 0, omega_h = 0, omega_p = 0, omega_d = 0, omega_f = 0;
    double V = 0;
    double v_g = 0;
    double epsilon_0 = si::epsilon_0;
    double hbar = si::hbar;
    double c = si::c;

    // Throws DomainError on a violated invariant. Frequency relations are
    // checked to 1e-9 relative.
    void validate() const;

    // Fills omega_h, omega_d, omega_f from omega_s and omega_p.
    static MediumParams from_signal_pump(double d_eff, double omega_s,
                                         double omega_p, double V);
};

// Rabi frequencies in mm^-1 per unit amplitude.
double rabi_omega1(const MediumParams& m);
double rabi_omega2(const MediumParams& m);
double rabi_omega_sfg(const MediumParams& m);

}  // namespace zeno
