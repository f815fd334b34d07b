#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "nlscanon/chareq.hpp"
#include "nlscanon/coeffs.hpp"
#include "nlscanon/report.hpp"

namespace nlscanon::riccati {

// The seven transformation functions at one instant.
struct RiccatiState {
    double t = 0.0;
    double mu = 1.0;
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double kappa = 0.0;
};

// Right-hand sides of the governing system evaluated at a state:
//   mu'    = (4 a alpha + 2 d) mu
//   alpha' = -(b + 2 c alpha + 4 a alpha^2)
//   beta'  = -(c + 4 a alpha) beta
//   gamma' = -a beta^2
//   delta' = f + 2 alpha g - (c + 4 a alpha) delta
//   eps'   = (g - 2 a delta) beta
//   kappa' = g delta - a delta^2
struct StateRates {
    double mu, alpha, beta, gamma, delta, epsilon, kappa;
};
StateRates system_rates(const coeffs::CoefficientSet& set, const RiccatiState& s);

// lambda(t) = exp(-int_0^t (c - 2d) ds) by adaptive quadrature (tol 1e-12).
double lambda_factor(const coeffs::CoefficientSet& set, double t);

struct FundamentalValues {
    double t;
    double alpha0, beta0, gamma0, delta0, epsilon0, kappa0;
    double lambda;
    double mu0, mu0_prime;
};

// The particular solution associated with the Green's function, built from
// the characteristic basis. Components alpha0, beta0, gamma0 behave like 1/t
// near the origin; below t_min the small-time expansions are used instead.
class FundamentalSolution {
public:
    FundamentalSolution(coeffs::CoefficientSet set, chareq::CharacteristicBasis basis,
                        double t_min = 1e-3);

    FundamentalValues values(double t) const;
    double t_min() const { return t_min_; }
    double t_end() const { return basis_.t_end(); }
    const coeffs::CoefficientSet& set() const { return set_; }
    const chareq::CharacteristicBasis& basis() const { return basis_; }
    int mu0_crossings(double t) const { return basis_.mu0_crossings(t); }

private:
    FundamentalValues asymptotic_values(double t) const;
    coeffs::CoefficientSet set_;
    chareq::CharacteristicBasis basis_;
    double t_min_;
    bool driven_; // any driving terms f, g present (checked at construction)
};

// A RiccatiState path over a time chart. Implementations are immutable and
// safe to evaluate concurrently.
class Trajectory {
public:
    virtual ~Trajectory() = default;
    virtual RiccatiState state(double t) const = 0;
    virtual double t_lo() const = 0;
    virtual double t_hi() const = 0;
};
using TrajectoryPtr = std::shared_ptr<const Trajectory>;

// Path A: the composition formulas on top of the fundamental solution.
// Throws FocalPointError when |alpha(0) + gamma0(t)| < focal_tol.
RiccatiState general_solution(const FundamentalSolution& fs,
                              const RiccatiState& init, double t,
                              double focal_tol = 1e-12);

TrajectoryPtr make_composition_trajectory(std::shared_ptr<const FundamentalSolution> fs,
                                          RiccatiState init);

// Path B: direct adaptive integration of the governing system from the same
// initial data; the default for user-supplied coefficients and the
// cross-validation oracle for path A.
TrajectoryPtr integrate_system(const coeffs::CoefficientSet& set,
                               const RiccatiState& init, double t_end,
                               double rtol = 1e-10, double atol = 1e-12);

// Closed-form trajectory (used for preset oracles and tests).
TrajectoryPtr make_closed_form(std::function<RiccatiState(double)> fn,
                               double t_lo, double t_hi);

// Residuals of all six governing equations along a trajectory, by 4th-order
// central differences in t (step 1e-5). per_equation keys: alpha, beta,
// gamma, delta, epsilon, kappa.
ResidualReport riccati_residual(const coeffs::CoefficientSet& set,
                                const Trajectory& trajectory,
                                const std::vector<double>& t_grid,
                                double fd_step = 1e-5);

} // namespace nlscanon::riccati
