#pragma once

#include <complex>

namespace nlscanon::special {

// Airy function of the first kind and its derivative. Maclaurin series near
// the origin, asymptotic expansions beyond (switch at z = 6.5 on the positive
// axis, z = -7.5 on the negative axis).
double airy_ai(double z);
double airy_ai_prime(double z);

// Jacobi elliptic functions by the arithmetic-geometric mean, parameter
// m in [0, 1).
struct JacobiValues {
    double sn, cn, dn;
};
JacobiValues jacobi_elliptic(double u, double m);

// log Gamma(z) for Re z > 0 (Lanczos approximation).
std::complex<double> log_gamma(std::complex<double> z);

} // namespace nlscanon::special
