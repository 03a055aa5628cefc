#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sl4zeta/cartan.hpp"
#include "sl4zeta/counting.hpp"
#include "sl4zeta/km_ring.hpp"
#include "sl4zeta/rational.hpp"

using namespace sl4;

namespace {

constexpr double kPi = std::numbers::pi;

Spectrum single_class(double l0) {
    Spectrum s;
    PrimitiveClass c;
    c.l0 = l0;
    c.angles = {Angle::irrational(0.83), Angle::irrational(1.21)};
    c.chi.chi1_1 = 1.0;
    s.classes.push_back(c);
    validate(s);
    return s;
}

std::mt19937_64 g_rng(8675309);
double uni(double a, double b) {
    return a + (b - a) * static_cast<double>(g_rng() >> 11) * 0x1.0p-53;
}

// Exact bivariate rational polynomial c[i][j]·x^i·d^j, enough for Δ of the
// leading term x^{2D+1}.
using Poly2 = std::vector<std::vector<Rat>>;

Poly2 delta_of_leading_term(int D) {
    int n = 2 * D;
    int deg = n + 1;
    Poly2 c(static_cast<std::size_t>(deg) + 1,
            std::vector<Rat>(static_cast<std::size_t>(deg) + 1, Rat(0)));
    // prefactor 2/(2D+1)!
    Rat pre(2);
    for (int i = 2; i <= deg; ++i) pre /= i;
    // binomials C(n, i) and C(deg, k)
    auto binom = [](int a, int b) {
        Rat r(1);
        for (int i = 0; i < b; ++i) r = r * Rat(a - i) / Rat(i + 1);
        return r;
    };
    for (int i = 0; i <= n; ++i) {
        Rat sign((i % 2 == 0) ? 1 : -1);
        Rat coef = sign * binom(n, i);
        long long shift = n - i;  // f(x + shift·d)
        for (int k = 0; k <= deg; ++k) {
            // x^k d^{deg-k} term of (x + shift d)^{deg}
            Rat term = coef * pre * binom(deg, k) * Rat(1);
            Rat shift_pow(1);
            for (int e = 0; e < deg - k; ++e) shift_pow *= Rat(shift);
            c[static_cast<std::size_t>(k)][static_cast<std::size_t>(deg - k)] += term * shift_pow;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("psi: empty spectrum, single class, generated main term") {
    Spectrum empty;
    CHECK(psi(empty, 1e6) == 0.0);
    Spectrum one = single_class(std::log(4.0));
    CHECK(psi(one, 17.0) == doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-14));
    CHECK(psi(one, 3.9) == 0.0);

    Spectrum sp = generate_pnt_like(100000.0, 4, 2.0, AngleLaw::weyl_measure());
    CHECK(psi(sp, 1e5) / 1e5 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("psi_j: j = 0 is psi, closed form for one class, integral recursion") {
    Spectrum sp = generate_pnt_like(900.0, 13, 2.0, AngleLaw::uniform());
    for (double x : {50.0, 300.0, 880.0}) CHECK(psi_j(sp, 0, x) == psi(sp, x));

    Spectrum one = single_class(std::log(5.0));
    double x = 12.0;
    for (int j : {1, 2, 3}) {
        double jf = 1.0;
        for (int i = 2; i <= j; ++i) jf *= i;
        double want = std::log(5.0) * std::pow(x - 5.0, j) / jf;
        CHECK(psi_j(one, j, x) == doctest::Approx(want).epsilon(1e-13));
    }

    // ∫_0^x psi_0 = psi_1 against a midpoint rule over the step function
    Spectrum small = generate_pnt_like(60.0, 5, 2.0, AngleLaw::uniform());
    double X = 50.0;
    std::size_t M = 2'000'000;
    double acc = 0.0, h = X / static_cast<double>(M);
    for (std::size_t i = 0; i < M; ++i) acc += psi(small, (static_cast<double>(i) + 0.5) * h);
    acc *= h;
    CHECK(acc == doctest::Approx(psi_j(small, 1, X)).epsilon(1e-6));
}

TEST_CASE("delta_op: cubic example, constants vanish, symbolic leading term") {
    auto cube = [](double t) { return t * t * t; };
    for (int trial = 0; trial < 10; ++trial) {
        double x = uni(0.5, 9.0), d = uni(0.1, 2.0);
        CHECK(delta_op(cube, d, 1, x) ==
              doctest::Approx(6.0 * d * d * x + 6.0 * d * d * d).epsilon(1e-12));
        CHECK(delta_op([](double) { return 3.25; }, d, 2, x) == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS(delta_op(cube, -1.0, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_op(cube, 1.0, 0, 0.0), std::invalid_argument);

    for (int D : {1, 2}) {
        Poly2 p = delta_of_leading_term(D);
        // degree collapses to 1 in x, and the x-coefficient is exactly 2 d^{2D}
        for (std::size_t i = 2; i < p.size(); ++i)
            for (const Rat& cij : p[i]) CHECK(cij == Rat(0));
        for (std::size_t j = 0; j < p[1].size(); ++j)
            CHECK(p[1][j] == (j == static_cast<std::size_t>(2 * D) ? Rat(2) : Rat(0)));
    }
}

TEST_CASE("psi bracketing by the Delta operator") {
    Spectrum sp = generate_pnt_like(20000.0, 6, 2.0, AngleLaw::weyl_measure());
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        double x = uni(100.0, 12000.0), d = uni(0.05, 0.3) * x;
        auto f = [&](double u) { return psi_j(sp, 2, u); };
        double mid = delta_op(f, d, 1, x) / (d * d);
        double lo = psi(sp, x), hi = psi(sp, x + 2.0 * d);
        double slack = 1e-7 * std::max(1.0, std::abs(mid));
        CHECK(lo <= mid + slack);
        CHECK(mid <= hi + slack);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("li: endpoints, domain error, high-resolution Simpson oracle") {
    CHECK(li(2.0) == 0.0);
    CHECK_THROWS_AS(li(1.5), std::domain_error);
    // high-resolution composite Simpson as the independent oracle; the left
    // segment near t = 2 gets its own fine grid because 1/log t is steep there
    auto simpson_seg = [](double a, double b, std::size_t n) {
        double h = (b - a) / static_cast<double>(n);
        double acc = 1.0 / std::log(a) + 1.0 / std::log(b);
        for (std::size_t i = 1; i < n; ++i)
            acc += (i % 2 == 1 ? 4.0 : 2.0) / std::log(a + static_cast<double>(i) * h);
        return acc * h / 3.0;
    };
    auto oracle = [&](double x) {
        double split = std::min(x, 100.0);
        double acc = simpson_seg(2.0, split, 1 << 20);
        if (x > split) acc += simpson_seg(split, x, 1 << 22);
        return acc;
    };
    for (double x : {10.0, 1e4, 1e6}) CHECK(std::abs(li(x) - oracle(x)) < 1e-8);
    // the inverse really inverts
    for (double y : {0.5, 10.0, 5000.0}) CHECK(li(li_inv(y)) == doctest::Approx(y).epsilon(1e-12));
}

TEST_CASE("S(x) stays within O(sqrt x) of pi(x)") {
    Spectrum sp = generate_pnt_like(100000.0, 8, 2.0, AngleLaw::uniform());
    for (double x : {1000.0, 5000.0, 20000.0, 90000.0}) {
        double gap = std::abs(s_fn(sp, x) - pi_count(sp, x));
        CHECK(gap / std::sqrt(x) < 1.0);
        CHECK(gap > 0.0);  // the power terms genuinely contribute
    }
}

TEST_CASE("tauberian_estimate: exact form and input validation") {
    double r = 2.375;
    int j = 1;
    std::vector<double> xs, As;
    for (int i = 0; i <= 80; ++i) {
        double x = 4.0 + 12.0 * i / 80.0;
        xs.push_back(x);
        As.push_back(r * std::pow(x, j + 1) * std::exp(x));
    }
    CHECK(tauberian_estimate(xs, As, j) == doctest::Approx(r).epsilon(1e-9));

    std::vector<double> bad = As;
    bad[40] = bad[39] * 0.5;
    CHECK_THROWS_AS(tauberian_estimate(xs, bad, j), std::invalid_argument);
}

TEST_CASE("weyl_mass: full torus -> 2, half window -> 1, empty -> 0, monotone in n") {
    Window full = full_torus_window();
    double prev = -1.0;
    for (int n : {4, 16, 64, 256}) {
        double r = weyl_mass(full, n);
        CHECK(r >= prev);
        prev = r;
    }
    CHECK(std::abs(weyl_mass(full, 256) - 2.0) < 1e-6);

    Window half = make_window({{0.0, 1.0, 0.0, 1.0}}, 0.0);
    CHECK(half.boxes.size() == 2);  // flip-completed
    CHECK(std::abs(weyl_mass(half, 256) - 1.0) < 1e-6);

    Window empty = make_window({}, 0.0);
    CHECK(weyl_mass(empty, 16) == 0.0);
}

TEST_CASE("windows: validation, flip closure, bump vs indicator") {
    CHECK_THROWS_AS(make_window({{-0.5, 0.5, 0.0, 1.0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_window({{0.0, 1.2, 0.0, 1.0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_window({{0.4, 0.2, 0.0, 1.0}}, 0.0), std::invalid_argument);
    Window w = make_window({{0.1, 0.9, 0.1, 0.9}}, 0.15);
    CHECK(w.boxes.size() == 2);
    for (int i = 0; i < 200; ++i) {
        double th = uni(-kPi, kPi), ph = uni(-kPi, kPi);
        double h = window_bump(w, th, ph);
        bool in = window_contains(w, th, ph);
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
        CHECK(h <= (in ? 1.0 : 0.0) + 1e-15);
        // flip symmetry
        CHECK(window_bump(w, -th, -ph) == doctest::Approx(h).epsilon(1e-14));
        CHECK(window_contains(w, -th, -ph) == in);
    }
}

TEST_CASE("sandwich: psi_window <= psi1 <= psi, and window monotone in the margin") {
    Spectrum sp = generate_pnt_like(30000.0, 21, 2.0, AngleLaw::weyl_measure());
    Window w = make_window({{0.1, 0.9, 0.1, 0.9}}, 0.2);
    for (double x : {500.0, 4000.0, 25000.0}) {
        double a = psi_window(sp, w, x), b = psi1(sp, w, x), c = psi(sp, x);
        CHECK(a <= b + 1e-9);
        CHECK(b <= c + 1e-9);
    }
    // shrinking margins (growing n) give pointwise non-decreasing counts
    double prev = -1.0;
    for (double margin : {0.4, 0.2, 0.1, 0.05}) {
        Window wm = make_window({{0.1, 0.9, 0.1, 0.9}}, margin);
        double v = psi_window(sp, wm, 20000.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("full-torus window minus margin: pi1 equals pi away from the boundary") {
    Spectrum sp = generate_pnt_like(5000.0, 33, 2.0, AngleLaw::weyl_measure());
    Window full = full_torus_window();
    for (double x : {100.0, 1000.0, 4900.0}) {
        CHECK(pi1(sp, full, x) == doctest::Approx(pi_count(sp, x)).epsilon(1e-12));
        // irrational angles never hit the non-regular cross, so psi1 = psi
        CHECK(psi1(sp, full, x) == doctest::Approx(psi(sp, x)).epsilon(1e-12));
    }
    // and the window count tracks the linear main term
    CHECK(psi1(sp, full, 4900.0) / 4900.0 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("Abel summation: s · integral of phi(e^x) e^{-sx} equals the Dirichlet series") {
    Spectrum sp = generate_pnt_like(1500.0, 41, 2.0, AngleLaw::weyl_measure());
    Window w = full_torus_window(0.1);
    int j = 1;
    // piecewise-exact integral of the step function phi(e^x) against e^{-sx}
    struct Event {
        double l, w;
    };
    std::vector<Event> ev;
    for (const auto& c : sp.classes) {
        for (long long k = 1; static_cast<double>(k) * c.l0 <= 40.0; ++k) {
            double th = c.angles.theta.times(k).value(), ph = c.angles.phi.times(k).value();
            double h = window_bump(w, th, ph);
            if (h == 0.0) continue;
            double l_gamma = static_cast<double>(k) * c.l0;
            double det =
                det_one_minus_ad_n(c.l0, c.angles.theta.value(), c.angles.phi.value(), k);
            ev.push_back({l_gamma, c.chi.chi1_1 * h * c.l0 * std::pow(l_gamma, j + 1) / det});
        }
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.l < b.l; });
    for (double s : {2.0, 3.0}) {
        double integral = 0.0, prefix = 0.0;
        for (std::size_t i = 0; i < ev.size(); ++i) {
            prefix += ev[i].w;
            double upper = (i + 1 < ev.size()) ? ev[i + 1].l : 1e9;
            integral += prefix * (std::exp(-s * ev[i].l) - std::exp(-s * upper)) / s;
        }
        double series = lnj_series(sp, w, j, {s, 0.0}).real();
        CHECK(s * integral == doctest::Approx(series).epsilon(1e-6));
    }
}

TEST_CASE("fit_main_term: exact li recovery and validation") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        double x = 100.0 * std::pow(10.0, 4.0 * i / 19.0);
        xs.push_back(x);
        ys.push_back(2.0 * li(x));
    }
    FitReport r = fit_main_term(xs, ys, FitModel::CLi);
    CHECK(r.c == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.max_rel_residual < 1e-10);

    std::vector<double> xs_short(xs.begin(), xs.begin() + 5),
        ys_short(ys.begin(), ys.begin() + 5);
    CHECK_THROWS_AS(fit_main_term(xs_short, ys_short, FitModel::CX), std::invalid_argument);
    std::vector<double> xs_narrow(20, 0.0), ys_narrow(20, 1.0);
    for (int i = 0; i < 20; ++i) xs_narrow[static_cast<std::size_t>(i)] = 100.0 + i;
    CHECK_THROWS_AS(fit_main_term(xs_narrow, ys_narrow, FitModel::CX), std::invalid_argument);
}

TEST_CASE("count table columns are monotone and the CSV is well formed") {
    Spectrum sp = generate_pnt_like(20000.0, 55, 2.0, AngleLaw::weyl_measure());
    Window w = shrunk_quadrant_window(0.5);
    std::vector<double> grid;
    for (int i = 0; i < 12; ++i) grid.push_back(100.0 * std::pow(10.0, 2.0 * i / 11.0));
    CountTable t = count_table(sp, w, grid);
    auto monotone = [](const std::vector<double>& v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i + 1] < v[i] - 1e-12) return false;
        return true;
    };
    CHECK(monotone(t.psi));
    CHECK(monotone(t.psi_tilde));
    CHECK(monotone(t.psi1));
    CHECK(monotone(t.pi));
    CHECK(monotone(t.pi_tilde));
    CHECK(monotone(t.pi1));
    CHECK(monotone(t.li2));
    std::string csv = count_table_csv(t);
    CHECK(csv.rfind("x,psi,psi_tilde,psi1,pi,pi_tilde,pi1,li2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
}

TEST_CASE("counting scans are bit-identical across thread counts") {
    Spectrum sp = generate_pnt_like(40000.0, 60, 2.0, AngleLaw::weyl_measure());
    CHECK(psi(sp, 3.3e4, 1) == psi(sp, 3.3e4, 3));
    CHECK(psi_tilde(sp, 3.3e4, 1) == psi_tilde(sp, 3.3e4, 4));
    CHECK(pi_count(sp, 3.3e4, 1) == pi_count(sp, 3.3e4, 2));
}
