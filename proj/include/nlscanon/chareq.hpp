#pragma once

#include <vector>

#include "nlscanon/coeffs.hpp"
#include "nlscanon/ode.hpp"
#include "nlscanon/report.hpp"

namespace nlscanon::chareq {

// Dense-output trajectories of the standard solutions of
//   mu'' - tau(t) mu' + 4 sigma(t) mu = 0
// with mu0(0) = 0, mu0'(0) = 2 a(0) and mu1(0) = 1, mu1'(0) = 0.
// Alongside the four state components the integration carries
//   L(t)  = int_0^t (c - 2 d) ds            (so lambda(t) = exp(-L))
//   Id(t) = int_0^t [(f - (d/a) g) mu0 + g mu0'/(2a)] / lambda ds
// which back the fundamental solution without nested quadratures.
// Immutable and shareable across threads once built.
class CharacteristicBasis {
public:
    double mu0(double t) const { return sol_.eval(t, 0); }
    double mu0_prime(double t) const { return sol_.eval(t, 1); }
    double mu1(double t) const { return sol_.eval(t, 2); }
    double mu1_prime(double t) const { return sol_.eval(t, 3); }
    double lambda(double t) const;
    double driving_integral(double t) const { return sol_.eval(t, 5); }

    double t_end() const { return sol_.t_end(); }
    double a0() const { return a0_; }
    double rtol() const { return rtol_; }
    double atol() const { return atol_; }

    // Zeros of mu0 in (0, t_end), located post hoc by bisection on the dense
    // output (not to machine precision).
    const std::vector<double>& mu0_zeros() const { return zeros_; }
    int mu0_crossings(double t) const;

    const ode::DenseSolution& dense() const { return sol_; }

private:
    friend CharacteristicBasis solve_characteristic(const coeffs::CoefficientSet&,
                                                    double, double, double);
    ode::DenseSolution sol_;
    std::vector<double> zeros_;
    double a0_ = 0.0;
    double rtol_ = 0.0, atol_ = 0.0;
};

CharacteristicBasis solve_characteristic(const coeffs::CoefficientSet& set,
                                         double t_end, double rtol = 1e-10,
                                         double atol = 1e-12);

// Abel identity check: W(t) exp(-int tau) must stay at W(0) = -2 a(0).
// Reports the max relative deviation over the grid.
ResidualReport wronskian_check(const coeffs::CoefficientSet& set,
                               const CharacteristicBasis& basis,
                               const std::vector<double>& t_grid);

} // namespace nlscanon::chareq
