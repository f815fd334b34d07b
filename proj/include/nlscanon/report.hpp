#pragma once

#include <cstddef>
#include <map>
#include <string>

namespace nlscanon {

// Uniform space-time evaluation grid (endpoints included).
struct Grid2D {
    double x0 = -10.0, x1 = 10.0;
    std::size_t nx = 64;
    double t0 = 0.0, t1 = 1.0;
    std::size_t nt = 16;

    double dx() const { return (x1 - x0) / static_cast<double>(nx - 1); }
    double dt() const { return (t1 - t0) / static_cast<double>(nt - 1); }
    double x(std::size_t i) const { return x0 + dx() * static_cast<double>(i); }
    double t(std::size_t j) const { return t0 + dt() * static_cast<double>(j); }
    void validate() const; // throws GridError on shape violations
};

enum class DerivMethod { analytic_derivatives, central6, spectral };

const char* to_string(DerivMethod m);

struct ResidualReport {
    double sup_norm = 0.0;
    double l2_norm = 0.0;
    double worst_x = 0.0;
    double worst_t = 0.0;
    std::map<std::string, double> per_equation; // populated where applicable
    Grid2D grid{};
    DerivMethod method = DerivMethod::analytic_derivatives;

    std::string to_json() const;
};

} // namespace nlscanon
