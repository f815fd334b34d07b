#include "nlscanon/transform.hpp"

#include <cmath>
#include <sstream>

#include "nlscanon/errors.hpp"
#include "nlscanon/quadrature.hpp"

namespace nlscanon::transform {

namespace {

constexpr double sqrt2 = 1.41421356237309504880168872421;

complex_t principal_inv_sqrt(complex_t w) { return 1.0 / std::sqrt(w); }

// (2 pi i w)^{-1/2} for real w, with the argument of (i w) continued through
// n sign changes of w: each crossing advances the argument by pi.
complex_t continued_inv_sqrt_2pii(double w, int crossings, double sign_at_origin) {
    const double arg0 = (sign_at_origin >= 0.0) ? 0.5 * pi : -0.5 * pi;
    const double arg = arg0 + pi * static_cast<double>(crossings);
    const double mod = 1.0 / std::sqrt(2.0 * pi * std::abs(w));
    return mod * std::exp(complex_t(0.0, -0.5 * arg));
}

struct FramePoint {
    riccati::RiccatiState s;
    riccati::StateRates r;
};

FramePoint frame_point(const TransformFrame& frame, double t) {
    FramePoint p;
    p.s = frame.trajectory->state(t);
    p.r = riccati::system_rates(frame.set, p.s);
    return p;
}

} // namespace

double TransformFrame::coupling(double t) const {
    const riccati::RiccatiState s = trajectory->state(t);
    return h0 * set.a(t) * s.beta * s.beta * s.mu;
}

double integrability_coupling(const TransformFrame& frame, double t) {
    return frame.coupling(t);
}

ComplexField lift_solution(const solutions::AutonomousSolution& chi,
                           const TransformFrame& frame) {
    if (frame.normalization == Normalization::lemma1) {
        if (chi.form() != solutions::EquationForm::solint3)
            throw DomainError("lemma1 lift consumes a solint3-form solution");
        if (std::abs(chi.h0() - frame.h0) > 1e-12 * std::max(1.0, std::abs(frame.h0)))
            throw DomainError("coupling constant of the solution does not "
                              "match the frame's h0");
    } else {
        if (chi.form() != solutions::EquationForm::focusing_standard)
            throw DomainError("civp lift consumes a standard-form solution");
    }
    const TransformFrame f = frame; // captured by value; trajectory shared
    auto eval = [f, chi](double x, double t) {
        const FramePoint p = frame_point(f, t);
        const auto& s = p.s;
        const auto& r = p.r;

        double arg_scale;
        complex_t pref;
        double tau_scale;
        if (f.normalization == Normalization::lemma1) {
            pref = principal_inv_sqrt(complex_t(s.mu, 0.0));
            arg_scale = 1.0;
            tau_scale = 1.0;
        } else {
            const double hm = f.h0 * s.mu;
            pref = complex_t(1.0 / std::sqrt(std::abs(hm)), 0.0);
            arg_scale = 1.0 / sqrt2;
            tau_scale = -0.5;
        }
        const double xi = (s.beta * x + s.epsilon) * arg_scale;
        const double tau = s.gamma * tau_scale;
        const FieldDerivs c = chi.derivs(xi, tau);

        const double lin = 2.0 * s.alpha * x + s.delta;
        const complex_t phase =
            std::exp(complex_t(0.0, s.alpha * x * x + s.delta * x + s.kappa));
        const complex_t pp = pref * phase;

        FieldDerivs d;
        d.value = pp * c.value;
        d.d_x = pp * (complex_t(0.0, lin) * c.value +
                      s.beta * arg_scale * c.d_x);
        d.d_xx = pp * ((complex_t(0.0, 2.0 * s.alpha) - lin * lin) * c.value +
                       complex_t(0.0, 2.0 * lin) * s.beta * arg_scale * c.d_x +
                       s.beta * s.beta * arg_scale * arg_scale * c.d_xx);
        const double phase_dot =
            r.alpha * x * x + r.delta * x + r.kappa;
        d.d_t = pp * ((complex_t(-0.5 * r.mu / s.mu, 0.0) +
                       complex_t(0.0, phase_dot)) * c.value +
                      (r.beta * x + r.epsilon) * arg_scale * c.d_x +
                      r.gamma * tau_scale * c.d_t);
        return d;
    };
    return ComplexField::with_derivs(eval);
}

ComplexField lift_solution(const ComplexField& chi, const TransformFrame& frame) {
    const TransformFrame f = frame;
    auto eval = [f, chi](double x, double t) {
        const riccati::RiccatiState s = f.trajectory->state(t);
        complex_t pref;
        double arg_scale, tau_scale;
        if (f.normalization == Normalization::lemma1) {
            pref = principal_inv_sqrt(complex_t(s.mu, 0.0));
            arg_scale = 1.0;
            tau_scale = 1.0;
        } else {
            pref = complex_t(1.0 / std::sqrt(std::abs(f.h0 * s.mu)), 0.0);
            arg_scale = 1.0 / sqrt2;
            tau_scale = -0.5;
        }
        const complex_t phase =
            std::exp(complex_t(0.0, s.alpha * x * x + s.delta * x + s.kappa));
        return pref * phase *
               chi((s.beta * x + s.epsilon) * arg_scale, s.gamma * tau_scale);
    };
    return ComplexField(eval);
}

namespace {

double invert_gamma(const TransformFrame& frame, double tau) {
    const double lo = frame.trajectory->t_lo();
    const double hi = frame.trajectory->t_hi();
    const double glo = frame.trajectory->state(lo).gamma;
    const double ghi = frame.trajectory->state(hi).gamma;
    const double gmin = std::min(glo, ghi), gmax = std::max(glo, ghi);
    if (tau < gmin - 1e-12 || tau > gmax + 1e-12) {
        std::ostringstream os;
        os << "tau = " << tau << " outside the range [" << gmin << ", " << gmax
           << "] of gamma on the frame chart";
        throw OutOfChartError(os.str());
    }
    double a = lo, b = hi;
    double fa = glo - tau;
    if (fa == 0.0)
        return a;
    for (int it = 0; it < 100 && b - a > 1e-15 * std::max(1.0, std::abs(b));
         ++it) {
        const double m = 0.5 * (a + b);
        const double fm = frame.trajectory->state(m).gamma - tau;
        if (fa * fm <= 0.0)
            b = m;
        else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

ComplexField pull_back(const ComplexField& psi, const TransformFrame& frame) {
    const TransformFrame f = frame;
    const double scale =
        (f.normalization == Normalization::lemma1) ? 1.0 : 1.0 / sqrt2;
    auto eval = [f, psi, scale](double xi, double tau) {
        const double tau_frame =
            (f.normalization == Normalization::lemma1) ? tau : -2.0 * tau;
        const double t = invert_gamma(f, tau_frame);
        const riccati::RiccatiState s = f.trajectory->state(t);
        const double x = (xi / scale - s.epsilon) / s.beta;
        complex_t pref;
        if (f.normalization == Normalization::lemma1)
            pref = std::sqrt(complex_t(s.mu, 0.0));
        else
            pref = complex_t(std::sqrt(std::abs(f.h0 * s.mu)), 0.0);
        const complex_t phase =
            std::exp(complex_t(0.0, -(s.alpha * x * x + s.delta * x + s.kappa)));
        return pref * phase * psi(x, t);
    };
    return ComplexField(eval);
}

complex_t green_function(const riccati::FundamentalSolution& fs, double x,
                         double y, double t) {
    const riccati::FundamentalValues f = fs.values(t);
    if (f.mu0 == 0.0)
        throw FocalPointError("mu0(t) = 0: Green's function focal time", t);
    const double a0_sign = fs.basis().a0() > 0.0 ? 1.0 : -1.0;
    const complex_t pref = continued_inv_sqrt_2pii(
        f.mu0, fs.mu0_crossings(t), a0_sign);
    const double phase = f.alpha0 * x * x + f.beta0 * x * y +
                         f.gamma0 * y * y + f.delta0 * x + f.epsilon0 * y +
                         f.kappa0;
    return pref * std::exp(complex_t(0.0, phase));
}

complex_t lift_free_propagator(const TransformFrame& frame, double x, double y,
                               double t) {
    const riccati::RiccatiState s = frame.trajectory->state(t);
    const riccati::RiccatiState s0 = frame.trajectory->state(0.0);
    const double dtau = s.gamma - s0.gamma;
    if (dtau == 0.0)
        throw FocalPointError("tau = tau0: degenerate free kernel", t);

    const double xi = s.beta * x + s.epsilon;
    const double eta = s0.beta * y + s0.epsilon;
    const complex_t kernel =
        principal_inv_sqrt(complex_t(0.0, -4.0 * pi * dtau)) *
        std::exp(complex_t(0.0, -(xi - eta) * (xi - eta) / (4.0 * dtau)));

    const complex_t pref = s0.beta * std::sqrt(complex_t(s0.mu, 0.0)) *
                           principal_inv_sqrt(complex_t(s.mu, 0.0));
    const double S_t = s.alpha * x * x + s.delta * x + s.kappa;
    const double S_0 = s0.alpha * y * y + s0.delta * y + s0.kappa;
    return pref * std::exp(complex_t(0.0, S_t - S_0)) * kernel;
}

complex_t propagate_linear(const riccati::FundamentalSolution& fs,
                           const ComplexField& phi, double x, double t,
                           double window) {
    const double edge_lo = std::abs(phi(-window, 0.0));
    const double edge_hi = std::abs(phi(window, 0.0));
    if (edge_lo >= 1e-12 || edge_hi >= 1e-12) {
        std::ostringstream os;
        os << "initial data does not decay at the window boundary: |phi| = "
           << std::max(edge_lo, edge_hi) << " at y = +-" << window;
        throw ResolutionError(os.str());
    }
    const riccati::FundamentalValues f = fs.values(t);
    const double a0_sign = fs.basis().a0() > 0.0 ? 1.0 : -1.0;
    const complex_t pref =
        continued_inv_sqrt_2pii(f.mu0, fs.mu0_crossings(t), a0_sign);
    const complex_t head =
        pref * std::exp(complex_t(0.0, f.alpha0 * x * x + f.delta0 * x +
                                       f.kappa0));

    auto integrand = [&](double y) {
        const double phase = f.beta0 * x * y + f.gamma0 * y * y + f.epsilon0 * y;
        return std::exp(complex_t(0.0, phase)) * phi(y, 0.0);
    };
    auto phase_rate = [&](double y) {
        return f.beta0 * x + 2.0 * f.gamma0 * y + f.epsilon0;
    };
    const auto q = quad::integrate_oscillatory(integrand, phase_rate, -window,
                                               window, 1e-9);
    return head * q.value;
}

} // namespace nlscanon::transform
