#pragma once

namespace zeno {

// Parameter convention throughout: m = k^2 (not the modulus k).

// Complete elliptic integral of the first kind, K(m), for 0 <= m < 1.
// Throws DivergentPeriod for m == 1 and DomainError otherwise out of range.
double elliptic_k(double m);

// Jacobi elliptic function sn(u|m) for 0 <= m <= 1.
double jacobi_sn(double u, double m);

// Arithmetic-geometric mean of two non-negative numbers.
double agm(double a, double b);

}  // namespace zeno
