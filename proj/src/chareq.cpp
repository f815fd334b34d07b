#include "nlscanon/chareq.hpp"

#include <algorithm>
#include <cmath>

#include "nlscanon/errors.hpp"
#include "nlscanon/quadrature.hpp"

namespace nlscanon::chareq {

double CharacteristicBasis::lambda(double t) const {
    return std::exp(-sol_.eval(t, 4));
}

int CharacteristicBasis::mu0_crossings(double t) const {
    int n = 0;
    for (double z : zeros_)
        if (z <= t)
            ++n;
    return n;
}

CharacteristicBasis solve_characteristic(const coeffs::CoefficientSet& set,
                                         double t_end, double rtol,
                                         double atol) {
    if (t_end <= 0.0)
        throw DomainError("solve_characteristic requires t_end > 0");
    if (rtol <= 0.0 || atol <= 0.0)
        throw DomainError("solve_characteristic requires positive tolerances");
    const double a_at_0 = set.a(0.0);
    if (a_at_0 == 0.0)
        throw SingularCoefficientError(
            "a(0) = 0: the standard solutions are not defined");

    auto rhs = [&set](double t, const double* y, double* dy) {
        const auto ts = coeffs::tau_sigma(set, t);
        const coeffs::CoeffValues v = coeffs::eval_coeffs(set, t);
        dy[0] = y[1];
        dy[1] = ts.tau * y[1] - 4.0 * ts.sigma * y[0];
        dy[2] = y[3];
        dy[3] = ts.tau * y[3] - 4.0 * ts.sigma * y[2];
        dy[4] = v.c - 2.0 * v.d;
        // driving integrand for the fundamental solution, regular at t = 0
        const double lambda = std::exp(-y[4]);
        dy[5] = ((v.f - v.d / v.a * v.g) * y[0] +
                 v.g / (2.0 * v.a) * y[1]) / lambda;
    };

    const double y0[6] = {0.0, 2.0 * a_at_0, 1.0, 0.0, 0.0, 0.0};
    ode::Options opt;
    opt.rtol = rtol;
    opt.atol = atol;

    CharacteristicBasis basis;
    basis.sol_ = ode::integrate(rhs, 0.0, std::span<const double>(y0, 6),
                                t_end, opt);
    basis.a0_ = a_at_0;
    basis.rtol_ = rtol;
    basis.atol_ = atol;

    // Post hoc zero scan of mu0 over the accepted steps.
    const auto& times = basis.sol_.step_times();
    std::vector<double> knots(times.begin(), times.end());
    knots.push_back(t_end);
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        // subdivide each step so closely spaced zeros are not missed
        const int sub = 8;
        for (int j = 0; j < sub; ++j) {
            double lo = knots[k] + (knots[k + 1] - knots[k]) * j / sub;
            double hi = knots[k] + (knots[k + 1] - knots[k]) * (j + 1) / sub;
            if (lo == 0.0)
                lo = hi * 1e-12; // mu0(0) = 0 by construction, not a crossing
            double flo = basis.sol_.eval(lo, 0);
            double fhi = basis.sol_.eval(hi, 0);
            if (flo == 0.0 || flo * fhi >= 0.0)
                continue;
            for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(1.0, hi);
                 ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = basis.sol_.eval(mid, 0);
                if (flo * fm <= 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            basis.zeros_.push_back(0.5 * (lo + hi));
        }
    }
    std::sort(basis.zeros_.begin(), basis.zeros_.end());
    return basis;
}

ResidualReport wronskian_check(const coeffs::CoefficientSet& set,
                               const CharacteristicBasis& basis,
                               const std::vector<double>& t_grid) {
    const double w0 = -2.0 * basis.a0();
    ResidualReport rep;
    rep.method = DerivMethod::analytic_derivatives;
    rep.grid = Grid2D{0.0, 0.0, 2, t_grid.empty() ? 0.0 : t_grid.front(),
                      t_grid.empty() ? 0.0 : t_grid.back(),
                      std::max<std::size_t>(t_grid.size(), 2)};

    // cumulative int_0^t tau(s) ds over the sorted grid
    std::vector<double> ts(t_grid);
    std::sort(ts.begin(), ts.end());
    auto tau_fn = [&set](double s) { return coeffs::tau_sigma(set, s).tau; };

    double acc = 0.0;
    double prev = 0.0;
    double sum_sq = 0.0;
    for (double t : ts) {
        acc += quad::integrate(tau_fn, prev, t, 1e-13).value;
        prev = t;
        const double w = basis.mu0(t) * basis.mu1_prime(t) -
                         basis.mu1(t) * basis.mu0_prime(t);
        const double dev = std::abs(w * std::exp(-acc) - w0) / std::abs(w0);
        sum_sq += dev * dev;
        if (dev > rep.sup_norm) {
            rep.sup_norm = dev;
            rep.worst_t = t;
        }
    }
    rep.l2_norm = ts.empty() ? 0.0 : std::sqrt(sum_sq / ts.size());
    rep.per_equation["wronskian"] = rep.sup_norm;
    return rep;
}

} // namespace nlscanon::chareq
