#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nlscanon::ode {

// dydt[0..dim) = f(t, y[0..dim))
using Rhs = std::function<void(double t, const double* y, double* dydt)>;

struct Options {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 0.0; // 0: choose automatically
    double h_max = 0.0;  // 0: span of integration
    std::size_t max_steps = 2000000;
};

// Continuous solution of one integration run: evaluable anywhere in
// [t_begin, t_end] through the per-step order-7 interpolants.
class DenseSolution {
public:
    double t_begin() const { return t0_; }
    double t_end() const { return t1_; }
    std::size_t dimension() const { return dim_; }
    std::size_t step_count() const { return seg_t0_.size(); }

    // Accepted step boundary times, in integration order (t_begin first).
    const std::vector<double>& step_times() const { return seg_t0_; }

    void eval(double t, double* y) const;
    double eval(double t, std::size_t component) const;

    // Final state (same values as eval(t_end, .)).
    const std::vector<double>& final_state() const { return y_end_; }

private:
    friend DenseSolution integrate(const Rhs&, double, std::span<const double>,
                                   double, const Options&);
    std::size_t locate(double t) const;

    double t0_ = 0.0, t1_ = 0.0;
    std::size_t dim_ = 0;
    std::vector<double> seg_t0_; // left endpoint (in integration direction)
    std::vector<double> seg_h_;  // signed step length
    std::vector<double> coeff_;  // 8 * dim interpolation coefficients per step
    std::vector<double> y_end_;
};

// Adaptive Dormand-Prince 8(5,3) integration from t0 to t1 (either direction)
// with dense output on every accepted step. Throws IntegrationError carrying
// the last reachable time on step-size collapse or step-count exhaustion.
DenseSolution integrate(const Rhs& rhs, double t0, std::span<const double> y0,
                        double t1, const Options& opt = {});

} // namespace nlscanon::ode
