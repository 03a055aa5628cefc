#include "sl4zeta/numerics.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace sl4 {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, lm, flm);
    double right = simpson(f, m, fm, b, fb, rm, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = simpson(f, a, fa, b, fb, m, fm);
    return adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double li(double x) {
    if (x < 2.0) throw std::domain_error("li: argument must be >= 2");
    if (x == 2.0) return 0.0;
    static const std::function<double(double)> inv_log = [](double t) {
        return 1.0 / std::log(t);
    };
    return adaptive_simpson(inv_log, 2.0, x, 1e-11);
}

double li_inv(double y) {
    if (y <= 0.0) return 2.0;
    // Start above the root and let Newton walk down; li is concave increasing.
    double x = std::max(4.0, y * (std::log(std::max(y, 3.0)) + std::log(std::log(std::max(y, 3.0)) + 1.0)));
    for (int it = 0; it < 80; ++it) {
        double r = li(x) - y;
        double step = r * std::log(x);
        double xn = x - step;
        if (xn < 2.0) xn = 0.5 * (x + 2.0);
        x = xn;
        if (std::abs(r) < 1e-12 * (1.0 + y)) break;
    }
    return x;
}

double smoothstep5(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ZETA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

namespace {

template <class T>
T chunked_sum_impl(std::size_t n, const std::function<T(std::size_t)>& f, int threads,
                   std::size_t chunk) {
    if (n == 0) return T{};
    std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<T> partials(nchunks, T{});
    int nt = resolve_threads(threads);
    auto work = [&](std::size_t c) {
        std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        partials[c] = acc;
    };
    if (nt <= 1 || nchunks == 1) {
        for (std::size_t c = 0; c < nchunks; ++c) work(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nt));
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                for (std::size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) work(c);
            });
        for (auto& th : pool) th.join();
    }
    return pairwise_sum(std::move(partials));
}

}  // namespace

std::complex<double> chunked_sum_complex(std::size_t n,
                                         const std::function<std::complex<double>(std::size_t)>& f,
                                         int threads, std::size_t chunk) {
    return chunked_sum_impl<std::complex<double>>(n, f, threads, chunk);
}

double chunked_sum_double(std::size_t n, const std::function<double(std::size_t)>& f, int threads,
                          std::size_t chunk) {
    return chunked_sum_impl<double>(n, f, threads, chunk);
}

}  // namespace sl4
