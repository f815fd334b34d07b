#include "nlscanon/riccati.hpp"

#include <cmath>
#include <sstream>

#include "nlscanon/errors.hpp"
#include "nlscanon/ode.hpp"
#include "nlscanon/quadrature.hpp"

namespace nlscanon::riccati {

StateRates system_rates(const coeffs::CoefficientSet& set, const RiccatiState& s) {
    const coeffs::CoeffValues v = coeffs::eval_coeffs(set, s.t);
    StateRates r;
    r.mu = (4.0 * v.a * s.alpha + 2.0 * v.d) * s.mu;
    r.alpha = -(v.b + 2.0 * v.c * s.alpha + 4.0 * v.a * s.alpha * s.alpha);
    r.beta = -(v.c + 4.0 * v.a * s.alpha) * s.beta;
    r.gamma = -v.a * s.beta * s.beta;
    r.delta = v.f + 2.0 * s.alpha * v.g - (v.c + 4.0 * v.a * s.alpha) * s.delta;
    r.epsilon = (v.g - 2.0 * v.a * s.delta) * s.beta;
    r.kappa = v.g * s.delta - v.a * s.delta * s.delta;
    return r;
}

double lambda_factor(const coeffs::CoefficientSet& set, double t) {
    auto integrand = [&set](double s) { return set.c(s) - 2.0 * set.d(s); };
    const double ex = quad::integrate(integrand, 0.0, t, 1e-12).value;
    return std::exp(-ex);
}

FundamentalSolution::FundamentalSolution(coeffs::CoefficientSet set,
                                         chareq::CharacteristicBasis basis,
                                         double t_min)
    : set_(std::move(set)), basis_(std::move(basis)), t_min_(t_min) {
    // Probe for driving terms; when both vanish identically the delta0,
    // epsilon0, kappa0 components are exactly zero and their quadratures
    // (which divide by mu0') are skipped entirely.
    driven_ = false;
    const double te = basis_.t_end();
    for (int i = 0; i <= 16; ++i) {
        const double t = te * i / 16.0;
        if (std::abs(set_.f(t)) > 0.0 || std::abs(set_.g(t)) > 0.0) {
            driven_ = true;
            break;
        }
    }
}

FundamentalValues FundamentalSolution::asymptotic_values(double t) const {
    const coeffs::CoeffValues v0 = coeffs::eval_coeffs(set_, 0.0);
    FundamentalValues f;
    f.t = t;
    const double a0 = v0.a;
    f.alpha0 = 1.0 / (4.0 * a0 * t) - v0.c / (4.0 * a0) -
               v0.da / (8.0 * a0 * a0);
    f.beta0 = -1.0 / (2.0 * a0 * t) + v0.da / (4.0 * a0 * a0);
    f.gamma0 = 1.0 / (4.0 * a0 * t) + v0.c / (4.0 * a0) -
               v0.da / (8.0 * a0 * a0);
    f.delta0 = v0.g / (2.0 * a0);
    f.epsilon0 = -v0.g / (2.0 * a0);
    f.kappa0 = 0.0;
    f.lambda = 1.0 - (v0.c - 2.0 * v0.d) * t;
    f.mu0 = basis_.mu0(t);
    f.mu0_prime = basis_.mu0_prime(t);
    return f;
}

FundamentalValues FundamentalSolution::values(double t) const {
    if (t <= 0.0)
        throw FocalPointError("fundamental solution is singular at t = 0", t);
    if (t < t_min_)
        return asymptotic_values(t);

    FundamentalValues f;
    f.t = t;
    const coeffs::CoeffValues v = coeffs::eval_coeffs(set_, t);
    const coeffs::CoeffValues v0 = coeffs::eval_coeffs(set_, 0.0);
    f.mu0 = basis_.mu0(t);
    f.mu0_prime = basis_.mu0_prime(t);
    f.lambda = basis_.lambda(t);
    if (f.mu0 == 0.0)
        throw FocalPointError("mu0(t) = 0: focal time", t);

    f.alpha0 = f.mu0_prime / (4.0 * v.a * f.mu0) - v.d / (2.0 * v.a);
    f.beta0 = -f.lambda / f.mu0;
    f.gamma0 = basis_.mu1(t) / (2.0 * f.mu0) + v0.d / (2.0 * v0.a);

    if (!driven_) {
        f.delta0 = 0.0;
        f.epsilon0 = 0.0;
        f.kappa0 = 0.0;
        return f;
    }

    // delta0 from the driving integral carried by the basis
    f.delta0 = f.lambda / f.mu0 * basis_.driving_integral(t);

    // epsilon0 and kappa0 quadratures; integrands divide by mu0'(s), which is
    // checked wherever the numerator does not vanish.
    auto guard = [this](double numer, double m0p, double s) -> double {
        if (numer == 0.0)
            return 0.0;
        if (std::abs(m0p) < 1e-13) {
            std::ostringstream os;
            os << "mu0'(s) = 0 at s = " << s
               << " inside a fundamental-solution quadrature; use direct "
                  "integration of the governing system instead";
            throw QuadratureError(os.str());
        }
        return numer / m0p;
    };
    // mu0 * delta0 = lambda * Id stays regular at s = 0.
    auto mu0_delta0 = [this](double s) {
        return basis_.lambda(s) * basis_.driving_integral(s);
    };

    auto eps_integrand = [&, this](double s) {
        const coeffs::CoeffValues w = coeffs::eval_coeffs(set_, s);
        const double sig = coeffs::tau_sigma(set_, s).sigma;
        const double m0p = basis_.mu0_prime(s);
        const double lam = basis_.lambda(s);
        const double term1num = 8.0 * w.a * sig * lam * mu0_delta0(s);
        const double term2num = 2.0 * w.a * lam * (w.f - w.d / w.a * w.g);
        return guard(term1num, m0p * m0p, s) + guard(term2num, m0p, s);
    };
    auto kap_integrand = [&, this](double s) {
        const coeffs::CoeffValues w = coeffs::eval_coeffs(set_, s);
        const double sig = coeffs::tau_sigma(set_, s).sigma;
        const double m0p = basis_.mu0_prime(s);
        const double md = mu0_delta0(s);
        const double term1num = 4.0 * w.a * sig * md * md;
        const double term2num = 2.0 * w.a * md * (w.f - w.d / w.a * w.g);
        return -guard(term1num, m0p * m0p, s) - guard(term2num, m0p, s);
    };

    double eps_head = 0.0, kap_head = 0.0;
    if (f.delta0 != 0.0) {
        if (std::abs(f.mu0_prime) < 1e-13)
            throw QuadratureError("mu0'(t) = 0 at the evaluation time of the "
                                  "fundamental solution; use direct integration");
        eps_head = -2.0 * v.a * f.lambda / f.mu0_prime * f.delta0;
        kap_head = v.a * f.mu0 / f.mu0_prime * f.delta0 * f.delta0;
    }
    f.epsilon0 = eps_head + quad::integrate(eps_integrand, 0.0, t, 1e-12).value;
    f.kappa0 = kap_head + quad::integrate(kap_integrand, 0.0, t, 1e-12).value;
    return f;
}

RiccatiState general_solution(const FundamentalSolution& fs,
                              const RiccatiState& init, double t,
                              double focal_tol) {
    if (init.mu == 0.0 || init.beta == 0.0)
        throw DomainError("general_solution requires mu(0) != 0 and beta(0) != 0");
    if (t == 0.0) {
        RiccatiState s = init;
        s.t = 0.0;
        return s;
    }
    const FundamentalValues f = fs.values(t);
    const double denom = init.alpha + f.gamma0;
    if (std::abs(denom) < focal_tol) {
        std::ostringstream os;
        os << "focal point: alpha(0) + gamma0(t) = " << denom << " at t = " << t;
        throw FocalPointError(os.str(), t);
    }
    RiccatiState s;
    s.t = t;
    s.mu = 2.0 * init.mu * f.mu0 * denom;
    s.alpha = f.alpha0 - f.beta0 * f.beta0 / (4.0 * denom);
    s.beta = -init.beta * f.beta0 / (2.0 * denom);
    s.gamma = init.gamma - init.beta * init.beta / (4.0 * denom);
    const double de = init.delta + f.epsilon0;
    s.delta = f.delta0 - f.beta0 * de / (2.0 * denom);
    s.epsilon = init.epsilon - init.beta * de / (2.0 * denom);
    s.kappa = init.kappa + f.kappa0 - de * de / (4.0 * denom);
    return s;
}

namespace {

class CompositionTrajectory final : public Trajectory {
public:
    CompositionTrajectory(std::shared_ptr<const FundamentalSolution> fs,
                          RiccatiState init)
        : fs_(std::move(fs)), init_(init) {}
    RiccatiState state(double t) const override {
        return general_solution(*fs_, init_, t);
    }
    double t_lo() const override { return 0.0; }
    double t_hi() const override { return fs_->t_end(); }

private:
    std::shared_ptr<const FundamentalSolution> fs_;
    RiccatiState init_;
};

class OdeTrajectory final : public Trajectory {
public:
    OdeTrajectory(ode::DenseSolution sol) : sol_(std::move(sol)) {}
    RiccatiState state(double t) const override {
        double y[7];
        sol_.eval(t, y);
        return RiccatiState{t, y[0], y[1], y[2], y[3], y[4], y[5], y[6]};
    }
    double t_lo() const override { return std::min(sol_.t_begin(), sol_.t_end()); }
    double t_hi() const override { return std::max(sol_.t_begin(), sol_.t_end()); }

private:
    ode::DenseSolution sol_;
};

class ClosedFormTrajectory final : public Trajectory {
public:
    ClosedFormTrajectory(std::function<RiccatiState(double)> fn, double lo,
                         double hi)
        : fn_(std::move(fn)), lo_(lo), hi_(hi) {}
    RiccatiState state(double t) const override { return fn_(t); }
    double t_lo() const override { return lo_; }
    double t_hi() const override { return hi_; }

private:
    std::function<RiccatiState(double)> fn_;
    double lo_, hi_;
};

} // namespace

TrajectoryPtr make_composition_trajectory(std::shared_ptr<const FundamentalSolution> fs,
                                          RiccatiState init) {
    return std::make_shared<CompositionTrajectory>(std::move(fs), init);
}

TrajectoryPtr integrate_system(const coeffs::CoefficientSet& set,
                               const RiccatiState& init, double t_end,
                               double rtol, double atol) {
    if (init.mu == 0.0 || init.beta == 0.0)
        throw DomainError("integrate_system requires mu(0) != 0 and beta(0) != 0");
    auto rhs = [set](double t, const double* y, double* dy) {
        RiccatiState s{t, y[0], y[1], y[2], y[3], y[4], y[5], y[6]};
        const StateRates r = system_rates(set, s);
        dy[0] = r.mu;
        dy[1] = r.alpha;
        dy[2] = r.beta;
        dy[3] = r.gamma;
        dy[4] = r.delta;
        dy[5] = r.epsilon;
        dy[6] = r.kappa;
    };
    const double y0[7] = {init.mu,    init.alpha,   init.beta, init.gamma,
                          init.delta, init.epsilon, init.kappa};
    ode::Options opt;
    opt.rtol = rtol;
    opt.atol = atol;
    return std::make_shared<OdeTrajectory>(
        ode::integrate(rhs, 0.0, std::span<const double>(y0, 7), t_end, opt));
}

TrajectoryPtr make_closed_form(std::function<RiccatiState(double)> fn,
                               double t_lo, double t_hi) {
    return std::make_shared<ClosedFormTrajectory>(std::move(fn), t_lo, t_hi);
}

ResidualReport riccati_residual(const coeffs::CoefficientSet& set,
                                const Trajectory& trajectory,
                                const std::vector<double>& t_grid,
                                double fd_step) {
    ResidualReport rep;
    rep.method = DerivMethod::central6; // time differencing (4th order stencil)
    const char* names[6] = {"alpha", "beta", "gamma", "delta", "epsilon", "kappa"};
    double sup[6] = {0, 0, 0, 0, 0, 0};
    double sum_sq = 0.0;

    for (double t : t_grid) {
        const double h = fd_step;
        const RiccatiState sm2 = trajectory.state(t - 2 * h);
        const RiccatiState sm1 = trajectory.state(t - h);
        const RiccatiState s0 = trajectory.state(t);
        const RiccatiState sp1 = trajectory.state(t + h);
        const RiccatiState sp2 = trajectory.state(t + 2 * h);
        auto ddt = [&](auto member) {
            return (sm2.*member - 8.0 * (sm1.*member) + 8.0 * (sp1.*member) -
                    sp2.*member) / (12.0 * h);
        };
        const StateRates rates = system_rates(set, s0);
        const double res[6] = {
            ddt(&RiccatiState::alpha) - rates.alpha,
            ddt(&RiccatiState::beta) - rates.beta,
            ddt(&RiccatiState::gamma) - rates.gamma,
            ddt(&RiccatiState::delta) - rates.delta,
            ddt(&RiccatiState::epsilon) - rates.epsilon,
            ddt(&RiccatiState::kappa) - rates.kappa};
        for (int e = 0; e < 6; ++e) {
            const double r = std::abs(res[e]);
            sup[e] = std::max(sup[e], r);
            sum_sq += r * r;
            if (r > rep.sup_norm) {
                rep.sup_norm = r;
                rep.worst_t = t;
            }
        }
    }
    for (int e = 0; e < 6; ++e)
        rep.per_equation[names[e]] = sup[e];
    rep.l2_norm = t_grid.empty()
                      ? 0.0
                      : std::sqrt(sum_sq / static_cast<double>(6 * t_grid.size()));
    if (!t_grid.empty())
        rep.grid = Grid2D{0.0, 0.0, 2, t_grid.front(), t_grid.back(),
                          std::max<std::size_t>(t_grid.size(), 2)};
    return rep;
}

} // namespace nlscanon::riccati
