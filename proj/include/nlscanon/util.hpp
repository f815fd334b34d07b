#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace nlscanon {

using complex_t = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline double sq(double x) { return x * x; }

// n points from a to b inclusive (n >= 2), or the single point a for n == 1.
inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = a + h * static_cast<double>(i);
    v.back() = b;
    return v;
}

// Chunked data-parallel loop over [0, n). nthreads <= 1 runs inline.
// fn must be safe to call concurrently for distinct indices.
inline void parallel_for(std::size_t n, unsigned nthreads,
                         const std::function<void(std::size_t)>& fn) {
    if (nthreads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    const unsigned workers = std::min<unsigned>(nthreads, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace nlscanon
