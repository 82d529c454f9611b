#include "zenoswitch/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zenoswitch/error.hpp"

namespace zeno {

namespace {
constexpr int kMaxIter = 64;
constexpr double kTol = 1e-15;
}  // namespace

double agm(double a, double b) {
    if (!(a >= 0) || !(b >= 0)) throw DomainError("agm of negative argument");
    for (int i = 0; i < kMaxIter && std::abs(a - b) > kTol * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

double elliptic_k(double m) {
    if (m == 1.0) throw DivergentPeriod("K(m) diverges at m = 1");
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError("elliptic parameter m=" + std::to_string(m) +
                          " outside [0, 1)");
    return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

double jacobi_sn(double u, double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw DomainError("elliptic parameter m=" + std::to_string(m) +
                          " outside [0, 1]");
    if (!std::isfinite(u)) throw DomainError("sn of non-finite argument");
    if (m == 0.0) return std::sin(u);
    if (m == 1.0) return std::tanh(u);

    // reduce into [-2K, 2K) using the 4K period
    double four_k = 4.0 * elliptic_k(m);
    u = std::remainder(u, four_k);

    // descending AGM sequence
    std::array<double, kMaxIter + 1> a{}, c{};
    a[0] = 1.0;
    double b = std::sqrt(1.0 - m);
    c[0] = std::sqrt(m);
    int n = 0;
    while (n < kMaxIter && std::abs(c[n]) > kTol * a[n]) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int j = n; j > 0; --j) phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
    return std::sin(phi);
}

}  // namespace zeno
