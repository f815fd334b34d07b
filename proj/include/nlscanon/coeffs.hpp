#pragma once

#include <functional>
#include <string>

namespace nlscanon::coeffs {

// Real-valued function of time bundled with its first derivative.
struct CoeffFn {
    std::function<double(double)> value;
    std::function<double(double)> deriv;

    double operator()(double t) const { return value(t); }

    static CoeffFn constant(double v);
    static CoeffFn analytic(std::function<double(double)> value,
                            std::function<double(double)> deriv);
    // Derivative by central differences; documented accuracy loss vs analytic.
    static CoeffFn numeric(std::function<double(double)> value,
                           double step = 1e-6);
};

struct CoeffValues {
    double a, b, c, d, f, g;
    double da, dd; // a'(t), d'(t)
};

enum class Preset { free_particle, harmonic, exponential, plasma, example3, custom };

// The six time-dependent coefficients of the nonautonomous equation
//   i psi_t = -a psi_xx + b x^2 psi - i c x psi_x - i d psi - f x psi
//             + i g psi_x + h(t) |psi|^2 psi
// plus the constant h0 of the coupling law h = h0 a beta^2 mu.
// Immutable after construction; evaluation is pure and thread-safe.
struct CoefficientSet {
    CoeffFn a, b, c, d, f, g;
    double h0 = -2.0;
    Preset preset = Preset::custom;
    std::string name = "custom";
    // preset parameters (omega for harmonic; k for exponential/plasma;
    // alpha0, beta0, gamma0, g0 for example3)
    double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
};

// Values and the two derivatives used downstream. Throws EvaluationError with
// the offending coefficient named if anything is non-finite.
CoeffValues eval_coeffs(const CoefficientSet& set, double t);

// tau = a'/a - 2c + 4d
// sigma = ab - cd + d^2 + d a'/(2a) - d'/2   (algebraically expanded so the
// d'/d term of the raw formula never produces a spurious singularity at d=0)
struct TauSigma {
    double tau, sigma;
};
TauSigma tau_sigma(const CoefficientSet& set, double t);

CoefficientSet free_particle(double h0 = -2.0);
CoefficientSet harmonic(double omega, double h0 = -2.0);
CoefficientSet exponential(double k, double h0 = -2.0);
CoefficientSet plasma(double k, double h0 = -2.0);
// Example-3 driving: a = 1, f(t) = -g0 beta0^3 / (1 + 4 alpha0 t)^3.
CoefficientSet example3(double alpha0, double beta0, double gamma0, double g0,
                        double h0 = 2.0);

// Term-sum coefficients from JSON:
//   {"a": [{"type":"poly","coef":1.0,"n":0}, {"type":"sin","coef":0.5,"w":2.0},
//          {"type":"cos","coef":0.1,"w":1.0}, {"type":"exp","coef":0.2,"r":-1.0}],
//    "b": [...], ..., "h0": -2.0}
// Missing coefficient entries default to 0 (a defaults to the constant 1).
CoefficientSet from_json_text(const std::string& text);
CoefficientSet from_json_file(const std::string& path);

} // namespace nlscanon::coeffs
