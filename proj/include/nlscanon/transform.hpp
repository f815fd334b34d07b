#pragma once

#include <memory>

#include "nlscanon/field.hpp"
#include "nlscanon/riccati.hpp"
#include "nlscanon/solutions.hpp"

namespace nlscanon::transform {

enum class Normalization { lemma1, civp };
enum class Branch { focusing, defocusing };

// Gauge/scaling/coordinate map between the nonautonomous equation and the
// autonomous NLS, carried by a Riccati trajectory.
//   lemma1: psi(x,t) = mu^{-1/2} e^{i(alpha x^2 + delta x + kappa)}
//                      chi(beta x + eps, gamma)
//   civp:   psi(x,t) = (h0 mu)^{-1/2} e^{iS} Psi((beta x + eps)/sqrt2, -gamma/2)
struct TransformFrame {
    riccati::TrajectoryPtr trajectory;
    coeffs::CoefficientSet set;
    double h0 = -2.0;
    Normalization normalization = Normalization::lemma1;

    // h(t) = h0 a(t) beta^2(t) mu(t)
    double coupling(double t) const;
};

double integrability_coupling(const TransformFrame& frame, double t);

// Lift an exact autonomous solution into the nonautonomous frame, with
// analytic derivatives. lemma1 mode consumes a solint3-form solution with the
// frame's h0; civp mode consumes a standard-form solution. For h0 mu < 0 in
// civp mode the modulus scaling |h0 mu|^{-1/2} is used (focusing branch).
ComplexField lift_solution(const solutions::AutonomousSolution& chi,
                           const TransformFrame& frame);
// Value-only lift of a plain field (no derivative information).
ComplexField lift_solution(const ComplexField& chi, const TransformFrame& frame);

// Inverse map: chi(xi, tau) = sqrt(mu) e^{-iS} psi((xi - eps)/beta,
// gamma^{-1}(tau)). Requires gamma strictly monotone on the frame chart;
// throws OutOfChartError for tau outside its range.
ComplexField pull_back(const ComplexField& psi, const TransformFrame& frame);

// Green's function of the h = 0 (generalized oscillator) equation,
//   G = (2 pi i mu0)^{-1/2} exp[i(alpha0 x^2 + beta0 x y + gamma0 y^2
//        + delta0 x + eps0 y + kappa0)],
// principal branch continued in t by counting the zeros of mu0.
complex_t green_function(const riccati::FundamentalSolution& fs, double x,
                         double y, double t);

// The same propagator obtained by lifting the free-particle kernel through
// the frame; equals green_function up to branch bookkeeping.
complex_t lift_free_propagator(const TransformFrame& frame, double x, double y,
                               double t);

// psi(x,t) = int G(x,y,t) phi(y) dy over [-window, window] by oscillation-
// aware adaptive quadrature (abs tol 1e-9). phi must satisfy
// |phi(+-window)| < 1e-12.
complex_t propagate_linear(const riccati::FundamentalSolution& fs,
                           const ComplexField& phi, double x, double t,
                           double window);

} // namespace nlscanon::transform
