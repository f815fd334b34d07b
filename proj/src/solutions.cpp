#include "nlscanon/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "nlscanon/errors.hpp"
#include "nlscanon/ode.hpp"
#include "nlscanon/special.hpp"

namespace nlscanon::solutions {

namespace {

struct ProfileValues {
    double F, dF, d2F;
};
using ProfileFn = std::function<ProfileValues(double z)>;

AutonomousSolution assemble_traveling_wave(Family family, double y, double g0,
                                           double h0, double phi,
                                           ProfileFn profile) {
    auto eval = [y, g0, phi, profile](double xi, double tau) {
        const double z = xi + 2.0 * tau * y;
        const ProfileValues p = profile(z);
        const complex_t phase =
            std::exp(complex_t(0.0, xi * y + tau * (y * y - g0) + phi));
        FieldDerivs d;
        d.value = phase * p.F;
        d.d_x = phase * (complex_t(0.0, y) * p.F + p.dF);
        d.d_xx = phase * (complex_t(-y * y, 0.0) * p.F +
                          complex_t(0.0, 2.0 * y) * p.dF + p.d2F);
        d.d_t = phase * (complex_t(0.0, y * y - g0) * p.F + 2.0 * y * p.dF);
        return d;
    };
    return AutonomousSolution(family, EquationForm::solint3, h0, eval);
}

void require(bool ok, const char* msg) {
    if (!ok)
        throw DomainError(msg);
}

} // namespace

AutonomousSolution traveling_wave(Family family, double y, double g0, double h0,
                                  double C0, double phi) {
    switch (family) {
    case Family::breather:
        y = 0.0;
        [[fallthrough]];
    case Family::bright: {
        require(h0 < 0.0, "bright profile requires h0 < 0");
        require(g0 > 0.0, "bright profile requires g0 > 0");
        require(std::abs(C0) <= 1e-12, "bright profile requires C0 = 0");
        const double kap = std::sqrt(g0);
        const double A = std::sqrt(-2.0 * g0 / h0);
        auto profile = [A, kap](double z) {
            const double s = 1.0 / std::cosh(kap * z);
            const double th = std::tanh(kap * z);
            return ProfileValues{A * s, -A * kap * s * th,
                                 A * kap * kap * (s - 2.0 * s * s * s)};
        };
        return assemble_traveling_wave(family, y, g0, h0, phi, profile);
    }
    case Family::dark: {
        require(h0 > 0.0, "dark profile requires h0 > 0");
        require(g0 < 0.0, "dark profile requires g0 < 0");
        const double want = g0 * g0 / (2.0 * h0);
        require(std::abs(C0 - want) <= 1e-10 * std::max(1.0, std::abs(want)),
                "dark profile requires C0 = g0^2/(2 h0)");
        const double kap = std::sqrt(-g0 / 2.0);
        const double A = std::sqrt(-g0 / h0);
        auto profile = [A, kap](double z) {
            const double th = std::tanh(kap * z);
            const double s2 = 1.0 - th * th; // sech^2
            return ProfileValues{A * th, A * kap * s2,
                                 -2.0 * A * kap * kap * s2 * th};
        };
        return assemble_traveling_wave(family, y, g0, h0, phi, profile);
    }
    case Family::cn: {
        require(h0 < 0.0, "cn profile requires h0 < 0");
        require(C0 > 0.0, "cn profile requires C0 > 0");
        const double k2 = std::sqrt(g0 * g0 - 2.0 * h0 * C0);
        const double m = 0.5 * (g0 / k2 + 1.0);
        require(m > 0.0 && m < 1.0,
                "cn profile requires elliptic modulus m in (0,1): need |g0| < "
                "sqrt(g0^2 - 2 h0 C0)");
        const double kap = std::sqrt(k2);
        const double A = std::sqrt(-2.0 * m * k2 / h0);
        auto profile = [A, kap, m](double z) {
            const auto j = special::jacobi_elliptic(kap * z, m);
            return ProfileValues{
                A * j.cn, -A * kap * j.sn * j.dn,
                A * kap * kap * ((2.0 * m - 1.0) * j.cn -
                                 2.0 * m * j.cn * j.cn * j.cn)};
        };
        return assemble_traveling_wave(family, y, g0, h0, phi, profile);
    }
    case Family::dn: {
        require(h0 < 0.0, "dn profile requires h0 < 0");
        require(C0 < 0.0, "dn profile requires C0 < 0");
        require(g0 > 0.0, "dn profile requires g0 > 0");
        const double disc = g0 * g0 - 2.0 * C0 * h0;
        require(disc > 0.0, "dn profile requires g0^2 > 2 C0 h0");
        const double k2 = 0.5 * (g0 + std::sqrt(disc));
        const double m = 2.0 - g0 / k2;
        require(m > 0.0 && m < 1.0,
                "dn profile requires elliptic modulus m in (0,1)");
        const double kap = std::sqrt(k2);
        const double A = std::sqrt(-2.0 * k2 / h0);
        auto profile = [A, kap, m](double z) {
            const auto j = special::jacobi_elliptic(kap * z, m);
            return ProfileValues{
                A * j.dn, -A * kap * m * j.sn * j.cn,
                A * kap * kap * ((2.0 - m) * j.dn -
                                 2.0 * j.dn * j.dn * j.dn)};
        };
        return assemble_traveling_wave(family, y, g0, h0, phi, profile);
    }
    default:
        throw DomainError("traveling_wave handles bright/dark/cn/dn/breather "
                          "families only");
    }
}

AutonomousSolution bright_unit(double h0, double y, double phi) {
    require(h0 < 0.0, "bright profile requires h0 < 0");
    return traveling_wave(Family::bright, y, -h0 / 2.0, h0, 0.0, phi);
}

namespace {

// exp(p X - 4 |X|): every exponent is <= 0, so large |X| cannot overflow.
inline double scaled_exp(int p, double X) {
    return std::exp(static_cast<double>(p) * X - 4.0 * std::abs(X));
}

FieldDerivs two_soliton_derivs(double X, double T) {
    const complex_t i1(0.0, 1.0);
    const complex_t e8 = std::exp(complex_t(0.0, 8.0 * T));
    const double s = std::exp(-4.0 * std::abs(X)); // common scale factor

    const double ep3 = scaled_exp(3, X), em3 = scaled_exp(-3, X);
    const double ep1 = scaled_exp(1, X), em1 = scaled_exp(-1, X);
    const double ep2 = scaled_exp(2, X), em2 = scaled_exp(-2, X);
    const double ep4 = scaled_exp(4, X), em4 = scaled_exp(-4, X);

    const complex_t N = 0.5 * (ep3 + em3) + 1.5 * e8 * (ep1 + em1);
    const complex_t N_X = 1.5 * (ep3 - em3) + 1.5 * e8 * (ep1 - em1);
    const complex_t N_XX = 4.5 * (ep3 + em3) + 1.5 * e8 * (ep1 + em1);
    const complex_t N_T = 12.0 * i1 * e8 * (ep1 + em1);

    const double D = 0.5 * (ep4 + em4) + 2.0 * (ep2 + em2) +
                     3.0 * std::cos(8.0 * T) * s;
    const double D_X = 2.0 * (ep4 - em4) + 4.0 * (ep2 - em2);
    const double D_XX = 8.0 * (ep4 + em4) + 8.0 * (ep2 + em2);
    const double D_T = -24.0 * std::sin(8.0 * T) * s;

    const complex_t Q = N / D;
    const complex_t Q_X = (N_X - Q * D_X) / D;
    const complex_t Q_XX = (N_XX - 2.0 * Q_X * D_X - Q * D_XX) / D;
    const complex_t Q_T = (N_T - Q * D_T) / D;

    const complex_t eT = std::exp(complex_t(0.0, T));
    FieldDerivs d;
    d.value = 4.0 * eT * Q;
    d.d_x = 4.0 * eT * Q_X;
    d.d_xx = 4.0 * eT * Q_XX;
    d.d_t = 4.0 * eT * (i1 * Q + Q_T);
    return d;
}

FieldDerivs one_soliton_derivs(double X, double T) {
    const complex_t eT = std::exp(complex_t(0.0, T));
    const double sch = 1.0 / std::cosh(X);
    const double th = std::tanh(X);
    FieldDerivs d;
    d.value = eT * sch;
    d.d_x = -eT * sch * th;
    d.d_xx = eT * (sch - 2.0 * sch * sch * sch);
    d.d_t = complex_t(0.0, 1.0) * eT * sch;
    return d;
}

} // namespace

complex_t one_soliton(double X, double T) { return one_soliton_derivs(X, T).value; }
complex_t two_soliton(double X, double T) { return two_soliton_derivs(X, T).value; }

AutonomousSolution one_soliton_solution() {
    return AutonomousSolution(Family::one_soliton, EquationForm::focusing_standard,
                              -2.0, one_soliton_derivs);
}

AutonomousSolution two_soliton_solution() {
    return AutonomousSolution(Family::two_soliton, EquationForm::focusing_standard,
                              -2.0, two_soliton_derivs);
}

namespace {

ode::DenseSolution integrate_painleve(double k0, double zeta_start,
                                      double zeta_end) {
    auto rhs = [](double z, const double* u, double* du) {
        du[0] = u[1];
        du[1] = z * u[0] + 2.0 * u[0] * u[0] * u[0];
    };
    const double u0 = k0 * special::airy_ai(zeta_start);
    const double u1 = k0 * special::airy_ai_prime(zeta_start);
    const double y0[2] = {u0, u1};
    ode::Options opt;
    opt.rtol = 1e-11;
    opt.atol = std::max(std::abs(u0) * 1e-12, 1e-280);
    try {
        return ode::integrate(rhs, zeta_start, std::span<const double>(y0, 2),
                              zeta_end, opt);
    } catch (const IntegrationError& e) {
        std::ostringstream os;
        os << "Painleve II integration diverged; last reachable zeta = "
           << e.last_time;
        throw IntegrationError(os.str(), e.last_time);
    }
}

// bisection refinement of a sign change of the given dense component
double refine_root(const ode::DenseSolution& sol, int comp, double lo,
                   double hi) {
    double flo = sol.eval(lo, comp);
    for (int it = 0; it < 80 && std::abs(hi - lo) > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = sol.eval(mid, comp);
        if (flo * fm <= 0.0)
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

PainleveResult painleve_profile(double k0, const std::vector<double>& zeta_grid,
                                double fit_lo, double fit_hi) {
    if (k0 == 0.0 || std::abs(k0) >= 1.0)
        throw DomainError("painleve_profile requires 0 < |k0| < 1 "
                          "(the decaying Ablowitz-Segur branch)");
    if (zeta_grid.empty())
        throw DomainError("painleve_profile requires a nonempty zeta grid");
    const double zs = *std::max_element(zeta_grid.begin(), zeta_grid.end());
    const double ze = *std::min_element(zeta_grid.begin(), zeta_grid.end());
    if (zs < 8.0)
        throw DomainError("painleve_profile requires the top of the grid at "
                          "zeta >= 8 (Airy-matched initial data)");

    const ode::DenseSolution sol = integrate_painleve(k0, zs, ze);

    PainleveResult res;
    res.zeta = zeta_grid;
    res.u.resize(zeta_grid.size());
    res.u_prime.resize(zeta_grid.size());
    for (std::size_t i = 0; i < zeta_grid.size(); ++i) {
        double y[2];
        sol.eval(zeta_grid[i], y);
        res.u[i] = y[0];
        res.u_prime[i] = y[1];
    }

    const double r2 = -std::log(1.0 - k0 * k0) / pi;
    res.r_asymptotic = std::sqrt(r2);
    res.theta_asymptotic =
        1.5 * r2 * std::log(2.0) +
        special::log_gamma(complex_t(1.0, -0.5 * r2)).imag() +
        0.25 * pi * (1.0 - 2.0 * (k0 > 0.0 ? 1.0 : -1.0));

    // Oscillation fit over [fit_lo, fit_hi] clipped to the integrated range.
    const double lo = std::max(fit_lo, ze);
    const double hi = std::min(fit_hi, zs);
    if (lo >= hi)
        return res;

    std::vector<double> ext_z, ext_u, zero_z;
    const double scan = 0.01;
    double prev_up = sol.eval(lo, 1);
    double prev_u = sol.eval(lo, 0);
    for (double z = lo + scan; z <= hi + 0.5 * scan; z += scan) {
        const double up = sol.eval(z, 1);
        const double u = sol.eval(z, 0);
        if (prev_up * up < 0.0) {
            const double zext = refine_root(sol, 1, z - scan, z);
            ext_z.push_back(zext);
            ext_u.push_back(sol.eval(zext, 0));
        }
        if (prev_u * u < 0.0)
            zero_z.push_back(refine_root(sol, 0, z - scan, z));
        prev_up = up;
        prev_u = u;
    }
    res.extrema_used = static_cast<int>(ext_z.size());
    if (ext_z.size() >= 5) {
        // least squares of |u_i| = r |zeta_i|^{-1/4}
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < ext_z.size(); ++i) {
            const double w = std::pow(std::abs(ext_z[i]), -0.25);
            num += std::abs(ext_u[i]) * w;
            den += w * w;
        }
        res.r_fit = num / den;
        res.fit_valid = true;
    }
    if (zero_z.size() >= 5) {
        // phase offset: zeros satisfy s(zeta) - theta0 = n pi with
        // s = (2/3)|z|^{3/2} - (3/4) r^2 ln |z|; circular mean mod pi.
        double cs = 0.0, sn = 0.0;
        for (double z : zero_z) {
            const double az = std::abs(z);
            const double s = 2.0 / 3.0 * std::pow(az, 1.5) -
                             0.75 * r2 * std::log(az);
            cs += std::cos(2.0 * s);
            sn += std::sin(2.0 * s);
        }
        res.theta_fit = 0.5 * std::atan2(sn, cs);
    }
    return res;
}

namespace {

struct Example3Geometry {
    double q;      // 1 + 4 alpha0 t
    double z;      // soliton argument
    double S;      // quadratic phase
    double gauge;  // f(t) of the pre-gauge form
};

Example3Geometry example3_geometry(const Example3Params& p, double x, double t) {
    Example3Geometry g;
    g.q = 1.0 + 4.0 * p.alpha0 * t;
    if (g.q <= 0.0)
        throw DomainError("example3 chart requires 1 + 4 alpha0 t > 0");
    const double w = p.beta0 * p.beta0 - 4.0 * p.alpha0 * p.gamma0;
    const double gt = p.gamma0 - w * t;
    g.z = (p.beta0 * x + 2.0 * gt * p.y) / g.q;
    g.S = (p.alpha0 * x * x + p.beta0 * x * p.y + gt * p.y * p.y) / g.q +
          p.g0 * p.beta0 * p.beta0 * t *
              (2.0 * p.gamma0 -
               (p.beta0 * p.beta0 - 8.0 * p.alpha0 * p.gamma0) * t) /
              g.q * p.y;
    // gauge phase: f' = 2 g0 b0^2 y (gamma0 - w t)/q^3, f(0) = 0
    const double pre = 2.0 * p.g0 * p.beta0 * p.beta0 * p.y;
    if (p.alpha0 == 0.0) {
        g.gauge = pre * (p.gamma0 * t - 0.5 * w * t * t);
    } else {
        const double A4 = 4.0 * p.alpha0;
        const double c1 = p.gamma0 + w / A4; // coefficient of 1/q^3 term
        const double c2 = w / A4;
        auto F = [&](double q) {
            return (-c1 / (2.0 * q * q) + c2 / q) / A4;
        };
        g.gauge = pre * (F(g.q) - F(1.0));
    }
    return g;
}

} // namespace

complex_t example3_solution(const Example3Params& p, double x, double t,
                            bool apply_gauge) {
    const Example3Geometry g = example3_geometry(p, x, t);
    require(p.h0 > 0.0, "example3 requires h0 > 0 (square-root amplitude)");
    const double g13 = std::cbrt(p.g0);
    const double zeta = g13 * g.z;
    const double zs = std::max(8.0, zeta + 1.0);
    const ode::DenseSolution prof = integrate_painleve(p.k0, zs, zeta - 1.0);
    const double A = prof.eval(zeta, 0);
    const double amp = g13 * std::sqrt(2.0 / p.h0) / std::sqrt(g.q);
    complex_t val = std::exp(complex_t(0.0, g.S)) * amp * A;
    if (apply_gauge)
        val *= std::exp(complex_t(0.0, -g.gauge));
    return val;
}

ComplexField example3_field(const Example3Params& p, double x_lo, double x_hi,
                            double t_lo, double t_hi, bool apply_gauge) {
    require(p.h0 > 0.0, "example3 requires h0 > 0 (square-root amplitude)");
    // Scan the chart corners for the zeta range the profile must cover.
    double z_min = 1e300, z_max = -1e300;
    for (int i = 0; i <= 32; ++i) {
        for (int j = 0; j <= 32; ++j) {
            const double x = x_lo + (x_hi - x_lo) * i / 32.0;
            const double t = t_lo + (t_hi - t_lo) * j / 32.0;
            const double z = example3_geometry(p, x, t).z;
            z_min = std::min(z_min, z);
            z_max = std::max(z_max, z);
        }
    }
    const double g13 = std::cbrt(p.g0);
    const double zeta_hi = std::max(8.0, g13 * z_max + 2.0);
    const double zeta_lo = g13 * z_min - 2.0;
    auto prof = std::make_shared<ode::DenseSolution>(
        integrate_painleve(p.k0, zeta_hi, zeta_lo));

    auto eval = [p, prof, g13, apply_gauge](double x, double t) {
        const Example3Geometry g = example3_geometry(p, x, t);
        const double zeta = g13 * g.z;
        const double A = prof->eval(zeta, 0);
        const double amp = g13 * std::sqrt(2.0 / p.h0) / std::sqrt(g.q);
        complex_t val = std::exp(complex_t(0.0, g.S)) * amp * A;
        if (apply_gauge)
            val *= std::exp(complex_t(0.0, -g.gauge));
        return val;
    };
    return ComplexField(eval);
}

} // namespace nlscanon::solutions
