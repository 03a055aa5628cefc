// numerics.hpp — scalar quadrature and summation utilities: adaptive Simpson,
// the integral logarithm li and its inverse, the C^2 quintic ramp, and
// deterministic chunked parallel reduction.
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace sl4 {

// Adaptive Simpson on [a,b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11, int max_depth = 48);

// li(x) = ∫_2^x dt/log t, absolute tolerance 1e-10. Throws for x < 2.
double li(double x);

// Inverse of li on [2, ∞): li(li_inv(y)) = y for y >= 0.
double li_inv(double y);

// C^2 quintic ramp: 0 for u<=0, 1 for u>=1, 6u^5-15u^4+10u^3 in between.
double smoothstep5(double u);

// Deterministic pairwise reduction of a vector (fixed tree shape).
template <class T>
T pairwise_sum(std::vector<T> v) {
    if (v.empty()) return T{};
    while (v.size() > 1) {
        std::size_t h = (v.size() + 1) / 2;
        for (std::size_t i = 0; i + 1 < v.size(); i += 2) v[i / 2] = v[i] + v[i + 1];
        if (v.size() % 2 == 1) v[h - 1] = v[v.size() - 1];
        v.resize(h);
    }
    return v[0];
}

// Number of worker threads: explicit argument wins, then ZETA_THREADS, then 1.
int resolve_threads(int requested);

// Sums f(0) + ... + f(n-1) in fixed chunks of `chunk` indices. Each chunk is
// accumulated sequentially and the per-chunk partials are combined by
// pairwise_sum, so the result is bit-identical for every thread count.
std::complex<double> chunked_sum_complex(std::size_t n,
                                         const std::function<std::complex<double>(std::size_t)>& f,
                                         int threads = 0, std::size_t chunk = 4096);
double chunked_sum_double(std::size_t n, const std::function<double(std::size_t)>& f,
                          int threads = 0, std::size_t chunk = 4096);

}  // namespace sl4
