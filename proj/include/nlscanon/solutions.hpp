#pragma once

#include <vector>

#include "nlscanon/field.hpp"
#include "nlscanon/util.hpp"

namespace nlscanon::solutions {

enum class Family {
    bright,
    dark,
    cn,
    dn,
    one_soliton,
    two_soliton,
    breather,
    painleve2
};

// Which equation the evaluator satisfies:
//   solint3:            i chi_tau + h0 |chi|^2 chi = chi_xixi
//   focusing_standard:  i psi_T + psi_XX + 2 |psi|^2 psi = 0
enum class EquationForm { solint3, focusing_standard };

// Exact solution with analytic space/time derivatives. Immutable; the
// evaluator is pure and thread-safe.
class AutonomousSolution {
public:
    AutonomousSolution(Family family, EquationForm form, double h0,
                       ComplexField::EvalDerivs evaluator)
        : family_(family), form_(form), h0_(h0), eval_(std::move(evaluator)) {}

    Family family() const { return family_; }
    EquationForm form() const { return form_; }
    double h0() const { return h0_; }

    complex_t operator()(double xi, double tau) const {
        return eval_(xi, tau).value;
    }
    FieldDerivs derivs(double xi, double tau) const { return eval_(xi, tau); }
    ComplexField as_field() const { return ComplexField::with_derivs(eval_); }

private:
    Family family_;
    EquationForm form_;
    double h0_;
    ComplexField::EvalDerivs eval_;
};

// Traveling wave chi = e^{i(xi y + tau (y^2 - g0) + phi)} F(xi + 2 tau y)
// with profile F satisfying (F')^2 = C0 + g0 F^2 + h0 F^4 / 2.
// Existence regions: bright needs h0 < 0, g0 > 0, C0 = 0; dark needs h0 > 0,
// g0 < 0, C0 = g0^2/(2 h0); cn/dn derive the elliptic modulus from
// (C0, g0, h0). Throws DomainError naming the violated inequality.
AutonomousSolution traveling_wave(Family family, double y, double g0, double h0,
                                  double C0, double phi = 0.0);

// The amplitude-1 bright profile consistent with a given h0 < 0
// (g0 = -h0/2, C0 = 0).
AutonomousSolution bright_unit(double h0, double y = 0.0, double phi = 0.0);

// Closed-form solutions of the focusing standard equation.
complex_t one_soliton(double X, double T);
complex_t two_soliton(double X, double T);
AutonomousSolution one_soliton_solution();
AutonomousSolution two_soliton_solution();

// Painleve II profile u'' = zeta u + 2 u^3 integrated down from zeta_start
// (the top of the grid, >= 8) with Airy-matched initial data.
struct PainleveResult {
    std::vector<double> zeta;
    std::vector<double> u;
    std::vector<double> u_prime;
    double r_fit = 0.0;        // amplitude from oscillation extrema
    double r_asymptotic = 0.0; // sqrt(-ln(1 - k0^2)/pi)
    double theta_fit = 0.0;    // phase offset measured at zeros, mod pi
    double theta_asymptotic = 0.0;
    int extrema_used = 0;
    bool fit_valid = false;
};
PainleveResult painleve_profile(double k0, const std::vector<double>& zeta_grid,
                                double fit_lo = -40.0, double fit_hi = -20.0);

// Soliton-like field of the gauge-transformed Example 3 equation
//   i chi_t + chi_xx - g0 b0^3 x / (1+4 a0 t)^3 chi = h0 m0 b0^2/(1+4 a0 t) |chi|^2 chi
// (m0 = 1). With apply_gauge the e^{-i f(t)} factor for the pre-gauge form is
// included.
struct Example3Params {
    double alpha0 = 0.0;
    double beta0 = 1.0;
    double gamma0 = 0.0;
    double g0 = 1.0;
    double h0 = 2.0;
    double k0 = 0.5;
    double y = 0.0;
};
complex_t example3_solution(const Example3Params& p, double x, double t,
                            bool apply_gauge = false);
// Field over a bounded chart; Painleve profile cached internally for the
// zeta range reachable from the given x/t bounds.
ComplexField example3_field(const Example3Params& p, double x_lo, double x_hi,
                            double t_lo, double t_hi, bool apply_gauge = false);

} // namespace nlscanon::solutions
