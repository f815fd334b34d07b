#include "nlscanon/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "nlscanon/errors.hpp"

namespace nlscanon::quad {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15 values).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
struct Panel {
    double a, b;
    T value;
    double error;
    int depth;
};

template <typename T>
Panel<T> rule15(const std::function<T(double)>& f, double a, double b, int depth,
                int& evals) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    T fc = f(mid);
    T kron = wgk[7] * fc;
    T gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        T fsum = f(mid - dx) + f(mid + dx);
        kron += wgk[j] * fsum;
        if (j % 2 == 1) // odd Kronrod indices are the embedded Gauss nodes
            gauss += wg[j / 2] * fsum;
    }
    evals += 15;
    Panel<T> p;
    p.a = a;
    p.b = b;
    p.value = half * kron;
    p.error = std::abs(half * (kron - gauss));
    p.depth = depth;
    return p;
}

template <typename T>
void adapt(const std::function<T(double)>& f, std::vector<Panel<T>>& work,
           double abs_tol, int max_depth, T& total, double& err_total,
           int& evals) {
    // Work-list refinement: always split the panel with the largest error.
    while (true) {
        err_total = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            err_total += work[i].error;
            if (work[i].error > work[worst].error)
                worst = i;
        }
        if (err_total <= abs_tol || work[worst].error == 0.0)
            break;
        Panel<T> p = work[worst];
        if (p.depth >= max_depth) {
            std::ostringstream os;
            os << "adaptive quadrature failed: depth " << p.depth
               << " reached on [" << p.a << ", " << p.b << "] with panel error "
               << p.error << " (total " << err_total << ", tol " << abs_tol
               << "); bisection trace:";
            double lo = p.a, hi = p.b;
            for (int d = 0; d < std::min(p.depth, 12); ++d) {
                os << " [" << lo << "," << hi << "]";
                const double m = 0.5 * (lo + hi);
                hi = m; // trace descends into the left half for reporting
            }
            throw QuadratureError(os.str());
        }
        const double m = 0.5 * (p.a + p.b);
        work[worst] = rule15<T>(f, p.a, m, p.depth + 1, evals);
        work.push_back(rule15<T>(f, m, p.b, p.depth + 1, evals));
    }
    total = work[0].value;
    for (std::size_t i = 1; i < work.size(); ++i)
        total += work[i].value;
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth) {
    QuadResult r;
    if (a == b)
        return r;
    std::vector<Panel<double>> work;
    work.push_back(rule15<double>(f, a, b, 0, r.evaluations));
    adapt<double>(f, work, abs_tol, max_depth, r.value, r.error, r.evaluations);
    return r;
}

QuadResultC integrate(const std::function<std::complex<double>(double)>& f,
                      double a, double b, double abs_tol, int max_depth) {
    QuadResultC r;
    if (a == b)
        return r;
    std::vector<Panel<std::complex<double>>> work;
    work.push_back(rule15<std::complex<double>>(f, a, b, 0, r.evaluations));
    adapt<std::complex<double>>(f, work, abs_tol, max_depth, r.value, r.error,
                                r.evaluations);
    return r;
}

QuadResultC integrate_oscillatory(const std::function<std::complex<double>(double)>& f,
                                  const std::function<double(double)>& phase_rate,
                                  double a, double b, double abs_tol,
                                  int max_depth) {
    QuadResultC r;
    if (a == b)
        return r;
    // Pre-split so the kernel phase varies by at most pi across each panel.
    constexpr double max_phase = 3.14159265358979323846;
    std::vector<double> cuts{a};
    std::vector<std::pair<double, double>> stack{{a, b}};
    std::vector<std::pair<double, double>> panels;
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const double rate = std::max({std::abs(phase_rate(lo)),
                                      std::abs(phase_rate(0.5 * (lo + hi))),
                                      std::abs(phase_rate(hi))});
        if (rate * std::abs(hi - lo) > max_phase && std::abs(hi - lo) > 1e-12) {
            const double m = 0.5 * (lo + hi);
            stack.push_back({m, hi});
            stack.push_back({lo, m});
        } else {
            panels.push_back({lo, hi});
        }
    }
    std::sort(panels.begin(), panels.end());
    std::vector<Panel<std::complex<double>>> work;
    work.reserve(panels.size());
    for (auto [lo, hi] : panels)
        work.push_back(rule15<std::complex<double>>(f, lo, hi, 0, r.evaluations));
    adapt<std::complex<double>>(f, work, abs_tol, max_depth, r.value, r.error,
                                r.evaluations);
    return r;
}

} // namespace nlscanon::quad
