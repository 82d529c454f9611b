#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "zenoswitch/error.hpp"

namespace zeno {

using cplx = std::complex<double>;

template <std::size_t N>
using CState = std::array<cplx, N>;

struct IntegratorSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.1;              // mm
    double dense_output_stride = 0.01;  // mm

    void validate() const;
};

inline void IntegratorSettings::validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0))
        throw DomainError("integrator tolerances must be positive");
    if (!(max_step > 0)) throw DomainError("max_step must be positive");
    if (!(dense_output_stride > 0))
        throw DomainError("dense_output_stride must be positive");
}

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                        e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;

template <std::size_t N>
bool all_finite(const CState<N>& y) {
    for (const auto& v : y)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace detail

// Adaptive Dormand-Prince 5(4) with PI step control.
//
// rhs(z, y, dydz) fills dydz. observe(z, y) is called at z0, at every
// multiple of the dense-output stride, and at z1; steps are shortened so
// that each observation point is hit exactly.
template <std::size_t N, class Rhs, class Observer>
void integrate(Rhs&& rhs, CState<N>& y, double z0, double z1,
               const IntegratorSettings& s, Observer&& observe) {
    using namespace detail;
    s.validate();
    if (!all_finite(y)) throw NonFinite("non-finite initial amplitude");
    observe(z0, y);
    if (z1 <= z0) return;

    constexpr double beta = 0.04;
    constexpr double alpha = 0.2 - 0.75 * beta;
    constexpr double safety = 0.9;

    CState<N> k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
    rhs(z0, y, k1);

    auto err_norm = [&](const CState<N>& a, const CState<N>& b,
                        const CState<N>& err) {
        double acc = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double sr = s.abs_tol + s.rel_tol * std::max(std::abs(a[i].real()),
                                                         std::abs(b[i].real()));
            double si = s.abs_tol + s.rel_tol * std::max(std::abs(a[i].imag()),
                                                         std::abs(b[i].imag()));
            acc = std::max({acc, std::abs(err[i].real()) / sr, std::abs(err[i].imag()) / si});
        }
        return acc;
    };

    // initial step guess
    double h;
    {
        double d0 = 0, d1 = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double sc = s.abs_tol + s.rel_tol * std::abs(y[i]);
            d0 += std::norm(y[i]) / (sc * sc);
            d1 += std::norm(k1[i]) / (sc * sc);
        }
        d0 = std::sqrt(d0 / N);
        d1 = std::sqrt(d1 / N);
        h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        h = std::min({h, s.max_step, z1 - z0});
    }

    const double stride = s.dense_output_stride;
    std::size_t next_k = 1;
    auto next_obs = [&] {
        double zo = z0 + static_cast<double>(next_k) * stride;
        return zo >= z1 - 1e-12 * stride ? z1 : zo;
    };

    double z = z0;
    double err_old = 1e-4;
    bool rejected = false;
    while (true) {
        double target = next_obs();
        bool hits = false;
        double hstep = std::min(h, s.max_step);
        if (z + hstep >= target - 1e-14 * std::max(1.0, std::abs(target))) {
            hstep = target - z;
            hits = true;
        }
        if (hstep < 1e-13 * std::max(1.0, std::abs(z)))
            throw StepSizeUnderflow("step size underflow at z=" + std::to_string(z));

        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hstep * a21 * k1[i];
        rhs(z + c2 * hstep, tmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hstep * (a31 * k1[i] + a32 * k2[i]);
        rhs(z + c3 * hstep, tmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hstep * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(z + c4 * hstep, tmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hstep * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                     a54 * k4[i]);
        rhs(z + c5 * hstep, tmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hstep * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                     a64 * k4[i] + a65 * k5[i]);
        rhs(z + hstep, tmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + hstep * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                      b5 * k5[i] + b6 * k6[i]);
        rhs(z + hstep, ynew, k7);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = hstep * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                              e6 * k6[i] + e7 * k7[i]);
        double err = err_norm(y, ynew, tmp);

        if (!std::isfinite(err)) {
            if (!all_finite(ynew)) throw NonFinite("amplitude left the finite range");
            err = 1e10;
        }

        if (err <= 1.0) {
            z = hits ? target : z + hstep;
            y = ynew;
            k1 = k7;
            if (!all_finite(y)) throw NonFinite("amplitude left the finite range");
            double fac = err == 0 ? 5.0
                                  : safety * std::pow(err, -alpha) *
                                        std::pow(err_old, beta);
            fac = std::clamp(fac, 0.2, rejected ? 1.0 : 5.0);
            err_old = std::max(err, 1e-4);
            // a step shortened to land on an observation point says little
            // about the natural step size, so keep the larger of the two
            double proposed = hstep * fac;
            h = (hits && hstep < h) ? std::max(h, proposed) : proposed;
            rejected = false;
            if (hits) {
                observe(z, y);
                if (z >= z1) return;
                ++next_k;
            }
        } else {
            double fac = std::max(0.2, safety * std::pow(err, -alpha));
            h = hstep * fac;
            rejected = true;
        }
    }
}

}  // namespace zeno
