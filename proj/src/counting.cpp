#include "sl4zeta/counting.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sl4zeta/cartan.hpp"
#include "sl4zeta/km_ring.hpp"

namespace sl4 {

namespace {

constexpr double kPi = std::numbers::pi;

bool box_valid(const WindowBox& b) {
    auto side_ok = [](double a0, double a1) {
        if (!(a0 < a1)) return false;
        if (a0 < -1.0 || a1 > 1.0) return false;
        // open interval must avoid 0 and ±1 in its interior
        return (a0 >= 0.0 && a1 <= 1.0) || (a1 <= 0.0 && a0 >= -1.0);
    };
    return side_ok(b.t0, b.t1) && side_ok(b.p0, b.p1);
}

WindowBox flip(const WindowBox& b) { return {-b.t1, -b.t0, -b.p1, -b.p0}; }

bool box_less(const WindowBox& a, const WindowBox& b) {
    return std::tie(a.t0, a.t1, a.p0, a.p1) < std::tie(b.t0, b.t1, b.p0, b.p1);
}

// Wrap into (-π, π].
double wrap_angle(double a) {
    double r = std::remainder(a, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

double bump_1d(double a, double lo, double hi, double margin) {
    if (a <= lo || a >= hi) return 0.0;
    if (margin <= 0.0) return 1.0;
    double d = std::min(a - lo, hi - a);
    return smoothstep5(d / margin);
}

}  // namespace

Window make_window(std::vector<WindowBox> boxes, double margin) {
    if (margin < 0.0) throw std::invalid_argument("make_window: margin must be >= 0");
    for (const auto& b : boxes)
        if (!box_valid(b))
            throw std::invalid_argument(
                "make_window: boxes must be open, within [-1,1] in units of pi, and avoid the "
                "non-regular locus");
    std::vector<WindowBox> all = boxes;
    for (const auto& b : boxes) {
        WindowBox f = flip(b);
        bool present = std::any_of(all.begin(), all.end(), [&](const WindowBox& x) { return x == f; });
        if (!present) all.push_back(f);
    }
    std::sort(all.begin(), all.end(), box_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    // flip closure must now hold exactly
    for (const auto& b : all) {
        WindowBox f = flip(b);
        if (!std::binary_search(all.begin(), all.end(), f, box_less))
            throw std::logic_error("make_window: flip closure failed");
    }
    return Window{std::move(all), margin};
}

Window full_torus_window(double margin) {
    return make_window({{0.0, 1.0, 0.0, 1.0}, {0.0, 1.0, -1.0, 0.0}}, margin);
}

Window shrunk_quadrant_window(double eps, double margin) {
    double e = eps / kPi;
    if (!(e < 0.5)) throw std::invalid_argument("shrunk_quadrant_window: eps too large");
    return make_window({{e, 1.0 - e, e, 1.0 - e}, {e, 1.0 - e, -1.0 + e, -e}}, margin);
}

bool window_contains(const Window& w, double theta, double phi) {
    double t = wrap_angle(theta) / kPi, p = wrap_angle(phi) / kPi;
    for (const auto& b : w.boxes)
        if (t > b.t0 && t < b.t1 && p > b.p0 && p < b.p1) return true;
    return false;
}

double window_bump(const Window& w, double theta, double phi, double margin) {
    double t = wrap_angle(theta), p = wrap_angle(phi);
    double best = 0.0;
    for (const auto& b : w.boxes) {
        double v = bump_1d(t, b.t0 * kPi, b.t1 * kPi, margin) *
                   bump_1d(p, b.p0 * kPi, b.p1 * kPi, margin);
        best = std::max(best, v);
    }
    return best;
}

double window_bump(const Window& w, double theta, double phi) {
    return window_bump(w, theta, phi, w.margin);
}

namespace {

// Sum over primitive classes of a per-class function; classes with l0 beyond
// log x contribute nothing, so the scan stops at the partition point.
double scan(const Spectrum& sp, double x, int threads,
            const std::function<double(const PrimitiveClass&)>& f) {
    if (!(x > 1.0) || sp.classes.empty()) return 0.0;
    double logx = std::log(x);
    auto end = std::partition_point(sp.classes.begin(), sp.classes.end(),
                                    [&](const PrimitiveClass& c) { return c.l0 <= logx; });
    std::size_t n = static_cast<std::size_t>(end - sp.classes.begin());
    return chunked_sum_double(n, [&](std::size_t i) { return f(sp.classes[i]); }, threads);
}

// Sum over powers k of one class with k·l0 <= log x.
template <class F>
double power_sum(const PrimitiveClass& c, double logx, F term) {
    double acc = 0.0;
    for (long long k = 1; static_cast<double>(k) * c.l0 <= logx; ++k) acc += term(k);
    return acc;
}

bool power_regular(const PrimitiveClass& c, long long k) {
    return !c.angles.theta.times(k).in_pi_z() && !c.angles.phi.times(k).in_pi_z();
}

}  // namespace

double psi(const Spectrum& sp, double x, int threads) {
    double logx = std::log(std::max(x, 1.0));
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx,
                         [&](long long k) { return chi1_at_power(c.angles, c.chi, k) * c.l0; });
    });
}

double psi_tilde(const Spectrum& sp, double x, int threads) {
    double logx = std::log(std::max(x, 1.0));
    const VirtualRep& st = sigma_tilde();
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx, [&](long long k) {
            if (!power_regular(c, k)) return 0.0;
            double tr = trace_at(st, c.angles.theta.times(k).value(), c.angles.phi.times(k).value());
            return c.chi.chi1_1 * tr * c.l0;
        });
    });
}

double psi_window(const Spectrum& sp, const Window& w, double x, int threads) {
    double logx = std::log(std::max(x, 1.0));
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx, [&](long long k) {
            double h = window_bump(w, c.angles.theta.times(k).value(),
                                   c.angles.phi.times(k).value());
            return c.chi.chi1_1 * h * c.l0;
        });
    });
}

double psi1(const Spectrum& sp, const Window& w, double x, int threads) {
    double logx = std::log(std::max(x, 1.0));
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx, [&](long long k) {
            bool in = window_contains(w, c.angles.theta.times(k).value(),
                                      c.angles.phi.times(k).value());
            return in ? c.chi.chi1_1 * c.l0 : 0.0;
        });
    });
}

double pi_count(const Spectrum& sp, double x, int threads) {
    return scan(sp, x, threads, [](const PrimitiveClass& c) { return c.chi.chi1_1; });
}

double pi_tilde(const Spectrum& sp, double x, int threads) {
    const VirtualRep& st = sigma_tilde();
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        if (!power_regular(c, 1)) return 0.0;
        return c.chi.chi1_1 * trace_at(st, c.angles.theta.value(), c.angles.phi.value());
    });
}

double pi1(const Spectrum& sp, const Window& w, double x, int threads) {
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return window_contains(w, c.angles.theta.value(), c.angles.phi.value()) ? c.chi.chi1_1
                                                                                : 0.0;
    });
}

double psi_j(const Spectrum& sp, int j, double x, int threads) {
    if (j < 0) throw std::invalid_argument("psi_j: j must be >= 0");
    double logx = std::log(std::max(x, 1.0));
    double jfact = 1.0;
    for (int i = 2; i <= j; ++i) jfact *= i;
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx, [&](long long k) {
            double N = std::exp(static_cast<double>(k) * c.l0);
            return chi1_at_power(c.angles, c.chi, k) * c.l0 * std::pow(x - N, j) / jfact;
        });
    });
}

double delta_op(const std::function<double(double)>& f, double d, int D, double x) {
    if (!(d > 0.0)) throw std::invalid_argument("delta_op: d must be > 0");
    if (D < 1) throw std::invalid_argument("delta_op: D must be >= 1");
    int n = 2 * D;
    double acc = 0.0, binom = 1.0;
    for (int i = 0; i <= n; ++i) {
        double term = binom * f(x + (n - i) * d);
        acc += (i % 2 == 0) ? term : -term;
        binom = binom * (n - i) / (i + 1);
    }
    return acc;
}

double s_fn(const Spectrum& sp, double x, int threads) {
    double logx = std::log(std::max(x, 1.0));
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx,
                         [&](long long k) { return c.chi.chi1_1 / static_cast<double>(k); });
    });
}

double phi_window_j(const Spectrum& sp, const Window& w, int j, double x, int threads) {
    double logx = std::log(std::max(x, 1.0));
    return scan(sp, x, threads, [&](const PrimitiveClass& c) {
        return power_sum(c, logx, [&](long long k) {
            double th = c.angles.theta.times(k).value(), ph = c.angles.phi.times(k).value();
            double h = window_bump(w, th, ph);
            if (h == 0.0) return 0.0;
            double l_gamma = static_cast<double>(k) * c.l0;
            double det = det_one_minus_ad_n(c.l0, c.angles.theta.value(), c.angles.phi.value(), k);
            return c.chi.chi1_1 * h * c.l0 * std::pow(l_gamma, j + 1) / det;
        });
    });
}

std::complex<double> lnj_series(const Spectrum& sp, const Window& w, int j,
                                std::complex<double> s, int threads) {
    // Convergence for Re(s) > 1; truncate where the surviving mass is ~1e-18.
    double L = 46.0 / std::max(std::real(s) - 0.05, 0.5);
    auto f = [&](std::size_t i) {
        const PrimitiveClass& c = sp.classes[i];
        std::complex<double> acc(0.0, 0.0);
        for (long long k = 1; static_cast<double>(k) * c.l0 <= L; ++k) {
            double th = c.angles.theta.times(k).value(), ph = c.angles.phi.times(k).value();
            double h = window_bump(w, th, ph);
            if (h == 0.0) continue;
            double l_gamma = static_cast<double>(k) * c.l0;
            double det = det_one_minus_ad_n(c.l0, c.angles.theta.value(), c.angles.phi.value(), k);
            acc += std::exp(-s * l_gamma) *
                   (c.chi.chi1_1 * h * c.l0 * std::pow(l_gamma, j + 1) / det);
        }
        return acc;
    };
    return chunked_sum_complex(sp.classes.size(), f, threads);
}

double tauberian_estimate(const std::vector<double>& xs, const std::vector<double>& As, int j) {
    if (xs.size() != As.size() || xs.size() < 4)
        throw std::invalid_argument("tauberian_estimate: need >= 4 aligned samples");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]))
            throw std::invalid_argument("tauberian_estimate: grid must be strictly increasing");
    for (std::size_t i = 0; i + 1 < As.size(); ++i)
        if (As[i + 1] < As[i] - 1e-9 * std::abs(As[i]))
            throw std::invalid_argument("tauberian_estimate: A must be monotone non-decreasing");

    // g(x) = A(x)·x^{-(j+1)}e^{-x} is a cubic in 1/x up to a decaying remainder.
    // Extrapolate by fitting that cubic to every sample in the last decade of
    // the grid and evaluating at 1/x = 0. Interpolating through 4 clustered
    // nodes instead amplifies any smooth remainder by the cubed ratio of node
    // position to node spacing (several hundred here), so the fit uses the
    // whole decade.
    double lo = xs.back() - std::log(10.0);
    std::vector<double> h, g;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < lo) continue;
        h.push_back(1.0 / xs[i]);
        g.push_back(As[i] * std::pow(xs[i], -(j + 1)) * std::exp(-xs[i]));
    }
    if (h.size() < 4)
        throw std::invalid_argument("tauberian_estimate: need >= 4 samples in the last decade");

    // centered/scaled cubic least squares in h, evaluated at h = 0
    double hbar = 0.0;
    for (double v : h) hbar += v;
    hbar /= static_cast<double>(h.size());
    double scale = 0.0;
    for (double v : h) scale = std::max(scale, std::abs(v - hbar));
    if (scale == 0.0) scale = 1.0;

    double M[4][4] = {}, rhs[4] = {};
    for (std::size_t i = 0; i < h.size(); ++i) {
        double u = (h[i] - hbar) / scale;
        double basis[4] = {1.0, u, u * u, u * u * u};
        for (int r = 0; r < 4; ++r) {
            rhs[r] += basis[r] * g[i];
            for (int c = 0; c < 4; ++c) M[r][c] += basis[r] * basis[c];
        }
    }
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
        for (int k = 0; k < 4; ++k) std::swap(M[c][k], M[piv][k]);
        std::swap(rhs[c], rhs[piv]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || M[c][c] == 0.0) continue;
            double f = M[r][c] / M[c][c];
            for (int k = 0; k < 4; ++k) M[r][k] -= f * M[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    double coef[4];
    for (int i = 0; i < 4; ++i) coef[i] = rhs[i] / M[i][i];
    double u0 = (0.0 - hbar) / scale;
    return ((coef[3] * u0 + coef[2]) * u0 + coef[1]) * u0 + coef[0];
}

double weyl_mass(const Window& w, int margin_n) {
    double margin = margin_n > 0 ? 1.0 / static_cast<double>(margin_n) : 0.0;
    // The bump is a product of per-coordinate ramps, so each box integrates
    // as a product of two 1-d quadratures against 4 sin² a.
    double total = 0.0;
    auto side = [&](double a0, double a1) {
        auto f = [&](double a) {
            return 4.0 * std::sin(a) * std::sin(a) * bump_1d(a, a0, a1, margin);
        };
        return adaptive_simpson(f, a0, a1, 1e-10);
    };
    for (const auto& b : w.boxes)
        total += side(b.t0 * kPi, b.t1 * kPi) * side(b.p0 * kPi, b.p1 * kPi);
    double two_pi_sq = (2.0 * kPi) * (2.0 * kPi);
    return 0.5 * total / two_pi_sq;
}

FitReport fit_main_term(const std::vector<double>& xs, const std::vector<double>& ys,
                        FitModel model) {
    if (xs.size() != ys.size() || xs.size() < 10)
        throw std::invalid_argument("fit_main_term: need >= 10 aligned samples");
    double lo = *std::min_element(xs.begin(), xs.end());
    double hi = *std::max_element(xs.begin(), xs.end());
    if (!(lo > 0.0) || hi / lo < 100.0)
        throw std::invalid_argument("fit_main_term: grid must span >= 2 decades");
    auto f = [&](double x) {
        switch (model) {
            case FitModel::CX:
                return x;
            case FitModel::CXOverLogX:
                return x / std::log(x);
            case FitModel::CLi:
                return li(x);
        }
        return x;
    };
    double num = 0.0, den = 0.0;
    std::vector<double> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fx[i] = f(xs[i]);
        num += fx[i] * ys[i];
        den += fx[i] * fx[i];
    }
    if (den == 0.0) throw std::invalid_argument("fit_main_term: degenerate model values");
    FitReport r;
    r.model = model;
    r.c = num / den;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double den_i = std::max(std::abs(ys[i]), 1e-300);
        r.max_rel_residual = std::max(r.max_rel_residual, std::abs(ys[i] - r.c * fx[i]) / den_i);
    }
    return r;
}

CountTable count_table(const Spectrum& sp, const Window& w, const std::vector<double>& grid,
                       int threads) {
    CountTable t;
    for (double x : grid) {
        t.x.push_back(x);
        t.psi.push_back(psi(sp, x, threads));
        t.psi_tilde.push_back(psi_tilde(sp, x, threads));
        t.psi1.push_back(psi1(sp, w, x, threads));
        t.pi.push_back(pi_count(sp, x, threads));
        t.pi_tilde.push_back(pi_tilde(sp, x, threads));
        t.pi1.push_back(pi1(sp, w, x, threads));
        t.li2.push_back(2.0 * li(x));
    }
    return t;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string count_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "x,psi,psi_tilde,psi1,pi,pi_tilde,pi1,li2\n";
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        os << fmt17(t.x[i]) << ',' << fmt17(t.psi[i]) << ',' << fmt17(t.psi_tilde[i]) << ','
           << fmt17(t.psi1[i]) << ',' << fmt17(t.pi[i]) << ',' << fmt17(t.pi_tilde[i]) << ','
           << fmt17(t.pi1[i]) << ',' << fmt17(t.li2[i]) << '\n';
    }
    return os.str();
}

std::string fit_report_json(const FitReport& r) {
    const char* name = r.model == FitModel::CX         ? "c*x"
                       : r.model == FitModel::CXOverLogX ? "c*x/log(x)"
                                                         : "c*li(x)";
    std::ostringstream os;
    os << "{\"model\": \"" << name << "\", \"c\": " << fmt17(r.c)
       << ", \"max_rel_residual\": " << fmt17(r.max_rel_residual) << "}";
    return os.str();
}

}  // namespace sl4
