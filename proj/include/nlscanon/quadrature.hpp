#pragma once

#include <complex>
#include <functional>

namespace nlscanon::quad {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // accumulated Kronrod error estimate
    int evaluations = 0;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b] to absolute tolerance abs_tol.
// Throws QuadratureError with the bisection trace of the worst panel when the
// recursion depth limit is hit before convergence.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 48);

QuadResultC integrate(const std::function<std::complex<double>(double)>& f,
                      double a, double b, double abs_tol, int max_depth = 48);

// Variant for highly oscillatory integrands: panels are pre-split until the
// estimated phase variation |phase_rate| * len stays below pi, then handed to
// the adaptive rule.
QuadResultC integrate_oscillatory(const std::function<std::complex<double>(double)>& f,
                                  const std::function<double(double)>& phase_rate,
                                  double a, double b, double abs_tol,
                                  int max_depth = 48);

} // namespace nlscanon::quad
