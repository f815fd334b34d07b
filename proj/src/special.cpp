#include "nlscanon/special.hpp"

#include <cmath>

#include "nlscanon/errors.hpp"
#include "nlscanon/util.hpp"

namespace nlscanon::special {

namespace {

constexpr double ai_zero = 0.355028053887817239260063186004;   // Ai(0)
constexpr double aip_zero = -0.258819403792806798405183560189; // Ai'(0)
constexpr double switch_pos = 6.5;
constexpr double switch_neg = 7.5;

struct AiPair {
    double ai, aip;
};

// Maclaurin series; extended-precision accumulation limits the cancellation
// loss on the positive axis near the switch point.
AiPair ai_series(double z) {
    const long double z3 = static_cast<long double>(z) * z * z;
    long double af = 1.0L, bg = 1.0L;       // term coefficients A_k, B_k
    long double pf = 1.0L, pg = static_cast<long double>(z); // z^{3k}, z^{3k+1}
    long double f = 1.0L, g = z;            // f, g sums
    long double fp = 0.0L, gp = 1.0L;       // f', g' sums
    for (int k = 1; k <= 220; ++k) {
        af /= static_cast<long double>(3 * k) * (3 * k - 1);
        bg /= static_cast<long double>(3 * k) * (3 * k + 1);
        pf *= z3;
        pg *= z3;
        const long double tf = af * pf;
        const long double tg = bg * pg;
        f += tf;
        g += tg;
        // d/dz z^{3k} = 3k z^{3k-1}; d/dz z^{3k+1} = (3k+1) z^{3k}
        fp += af * 3.0L * k * pf / z;
        gp += bg * (3.0L * k + 1.0L) * pg / z * z / z; // (3k+1) z^{3k}
        if (std::abs(static_cast<double>(tf)) < 1e-24 * std::abs(static_cast<double>(f)) &&
            std::abs(static_cast<double>(tg)) < 1e-24 * std::abs(static_cast<double>(g)))
            break;
    }
    AiPair r;
    r.ai = static_cast<double>(ai_zero * f + aip_zero * g);
    r.aip = static_cast<double>(ai_zero * fp + aip_zero * gp);
    return r;
}

// Asymptotic u_k, v_k coefficient pair stepping: u_k = u_{k-1}(6k-5)(6k-1)/(72k).
AiPair ai_asymptotic_pos(double z) {
    const double xi = 2.0 / 3.0 * std::pow(z, 1.5);
    long double u = 1.0L, su = 0.0L, sv = 0.0L;
    long double pw = 1.0L;
    long double prev = 1e300L;
    for (int k = 0; k <= 40; ++k) {
        if (k > 0) {
            u *= static_cast<long double>(6 * k - 5) * (6 * k - 1) /
                 (72.0L * k);
            pw /= -xi;
        }
        const long double tu = u * pw;
        if (std::abs(static_cast<double>(tu)) > std::abs(static_cast<double>(prev)))
            break; // divergent tail reached
        prev = tu;
        su += tu;
        const long double v = (k == 0) ? 1.0L
                                       : u * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
        sv += v * pw;
        if (std::abs(static_cast<double>(tu)) < 1e-18)
            break;
    }
    const double pref = std::exp(-xi) / (2.0 * std::sqrt(pi));
    AiPair r;
    r.ai = pref * static_cast<double>(su) / std::pow(z, 0.25);
    r.aip = -pref * std::pow(z, 0.25) * static_cast<double>(sv);
    return r;
}

AiPair ai_asymptotic_neg(double zneg) {
    const double x = -zneg;
    const double xi = 2.0 / 3.0 * std::pow(x, 1.5);
    // even/odd split of the u and v series
    long double u = 1.0L;
    long double se_u = 0.0L, so_u = 0.0L, se_v = 0.0L, so_v = 0.0L;
    long double pw = 1.0L; // (-1)^floor(k/2)-folded power handled below
    double prev = 1e300;
    for (int k = 0; k <= 40; ++k) {
        if (k > 0) {
            u *= static_cast<long double>(6 * k - 5) * (6 * k - 1) /
                 (72.0L * k);
            pw /= xi;
        }
        const long double v = (k == 0) ? 1.0L
                                       : u * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
        const double mag = std::abs(static_cast<double>(u * pw));
        if (mag > prev)
            break;
        prev = mag;
        const int half = k / 2;
        const long double sgn = (half % 2 == 0) ? 1.0L : -1.0L;
        if (k % 2 == 0) {
            se_u += sgn * u * pw;
            se_v += sgn * v * pw;
        } else {
            so_u += sgn * u * pw;
            so_v += sgn * v * pw;
        }
        if (mag < 1e-18)
            break;
    }
    const double ph = xi - pi / 4.0;
    const double c = std::cos(ph), s = std::sin(ph);
    AiPair r;
    r.ai = (c * static_cast<double>(se_u) + s * static_cast<double>(so_u)) /
           (std::sqrt(pi) * std::pow(x, 0.25));
    r.aip = std::pow(x, 0.25) / std::sqrt(pi) *
            (s * static_cast<double>(se_v) - c * static_cast<double>(so_v));
    return r;
}

AiPair ai_eval(double z) {
    if (z == 0.0)
        return {ai_zero, aip_zero};
    if (z >= switch_pos)
        return ai_asymptotic_pos(z);
    if (z <= -switch_neg)
        return ai_asymptotic_neg(z);
    return ai_series(z);
}

} // namespace

double airy_ai(double z) { return ai_eval(z).ai; }
double airy_ai_prime(double z) { return ai_eval(z).aip; }

JacobiValues jacobi_elliptic(double u, double m) {
    if (m < 0.0 || m >= 1.0)
        throw DomainError("jacobi_elliptic requires parameter m in [0, 1)");
    if (m == 0.0)
        return {std::sin(u), std::cos(u), 1.0};

    // arithmetic-geometric mean descent
    constexpr int max_n = 32;
    double a[max_n], c[max_n];
    a[0] = 1.0;
    c[0] = std::sqrt(m);
    double b = std::sqrt(1.0 - m);
    int n = 0;
    while (n + 1 < max_n && std::abs(c[n]) > 1e-17 * a[n]) {
        const double an = 0.5 * (a[n] + b);
        const double cn = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
        a[n] = an;
        c[n] = cn;
    }
    double phi = std::ldexp(a[n] * u, n); // 2^n a_n u
    for (int k = n; k >= 1; --k)
        phi = 0.5 * (phi + std::asin(std::clamp(c[k] * std::sin(phi) / a[k],
                                                -1.0, 1.0)));
    JacobiValues r;
    r.sn = std::sin(phi);
    r.cn = std::cos(phi);
    r.dn = std::sqrt(1.0 - m * r.sn * r.sn);
    return r;
}

std::complex<double> log_gamma(std::complex<double> z) {
    // Lanczos, g = 7, 9 terms
    static const double lg[9] = {
        0.99999999999980993,   676.5203681218851,    -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5)
        throw DomainError("log_gamma implemented for Re z >= 0.5 only");
    const std::complex<double> zm = z - 1.0;
    std::complex<double> acc = lg[0];
    for (int i = 1; i < 9; ++i)
        acc += lg[i] / (zm + static_cast<double>(i));
    const std::complex<double> t = zm + 7.5;
    return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t +
           std::log(acc);
}

} // namespace nlscanon::special
