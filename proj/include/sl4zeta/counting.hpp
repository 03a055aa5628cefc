// counting.hpp — geodesic counting functions and Tauberian machinery: the
// length-weighted ψ family (plain, σ̃-weighted, window-weighted, smoothed
// ψ_j), the class counts π, π̃, π¹, the finite-difference operator Δ, li and
// the S-function, Wiener–Ikehara-style extrapolation, Weyl-measure window
// masses, and main-term least-squares fits.
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "sl4zeta/numerics.hpp"
#include "sl4zeta/spectrum.hpp"

namespace sl4 {

// Open (θ,φ)-boxes on the torus, closed under the Weyl flip (θ,φ) ↦ (−θ,−φ)
// and avoiding the non-regular locus {θ ∈ πZ} ∪ {φ ∈ πZ}. Coordinates are in
// units of π; margin (radians) is the plateau parameter of the bump family.
struct WindowBox {
    double t0, t1, p0, p1;  // θ ∈ (t0 π, t1 π), φ ∈ (p0 π, p1 π)
    bool operator==(const WindowBox& o) const = default;
};

struct Window {
    std::vector<WindowBox> boxes;
    double margin = 0.0;
};

// Flip-completes, validates and sorts the box list.
Window make_window(std::vector<WindowBox> boxes, double margin);
// The four open quadrants: everything except the non-regular cross.
Window full_torus_window(double margin = 0.0);
// Quadrants shrunk by eps (radians) on the θ and φ sides.
Window shrunk_quadrant_window(double eps, double margin = 0.0);

bool window_contains(const Window& w, double theta, double phi);
// Separable C^2 bump: per-coordinate quintic ramp over `margin` from each box
// edge, plateau 1 inside. Margin 0 degenerates to the indicator.
double window_bump(const Window& w, double theta, double phi);
double window_bump(const Window& w, double theta, double phi, double margin);

// Weighted counts over powers γ = γ0^k with N(γ) = e^{k·l0} <= x.
double psi(const Spectrum& sp, double x, int threads = 0);
double psi_tilde(const Spectrum& sp, double x, int threads = 0);       // regular powers, tr σ̃ weight
double psi_window(const Spectrum& sp, const Window& w, double x, int threads = 0);  // bump weight
double psi1(const Spectrum& sp, const Window& w, double x, int threads = 0);        // indicator weight

// Primitive-classes-only counts.
double pi_count(const Spectrum& sp, double x, int threads = 0);
double pi_tilde(const Spectrum& sp, double x, int threads = 0);
double pi1(const Spectrum& sp, const Window& w, double x, int threads = 0);

// Smoothed ψ_j(x) = (1/j!) Σ_{N(γ)<=x} χ₁(Γ_γ)·l0·(x − N(γ))^j; ψ_0 = ψ.
double psi_j(const Spectrum& sp, int j, double x, int threads = 0);

// Δf(x) = Σ_{i=0}^{2D} (−1)^i C(2D,i) f(x + (2D−i)d).
double delta_op(const std::function<double(double)>& f, double d, int D, double x);

// S(x) = Σ_{N(γ)<=x} χ₁(Γ_{γ0})·l0/l_γ over all powers.
double s_fn(const Spectrum& sp, double x, int threads = 0);

// φ-window counts with the determinant weight 1/det(1 − Ad((ab)^{-k})|n̄)
// and the length power l_γ^{j+1}; the Dirichlet series they Abel-sum to.
double phi_window_j(const Spectrum& sp, const Window& w, int j, double x, int threads = 0);
std::complex<double> lnj_series(const Spectrum& sp, const Window& w, int j,
                                std::complex<double> s, int threads = 0);

// Extrapolated limit of A(x)·x^{−(j+1)}·e^{−x} from samples of a monotone A:
// a cubic in 1/x fitted over the last decade of the grid, evaluated at 0.
double tauberian_estimate(const std::vector<double>& xs, const std::vector<double>& As, int j);

// r_n = (1/|W|) ∬ h_n(θ,φ)·16 sin²θ sin²φ dθ dφ/(2π)², |W| = 2, with the
// bump margin 1/margin_n (margin_n <= 0 gives the sharp indicator).
double weyl_mass(const Window& w, int margin_n);

enum class FitModel { CX, CXOverLogX, CLi };

struct FitReport {
    FitModel model;
    double c = 0.0;
    double max_rel_residual = 0.0;
};

// Least-squares single coefficient c for y ≈ c·f(x); requires >= 10 points
// spanning >= 2 decades.
FitReport fit_main_term(const std::vector<double>& xs, const std::vector<double>& ys,
                        FitModel model);

struct CountTable {
    std::vector<double> x, psi, psi_tilde, psi1, pi, pi_tilde, pi1, li2;
};

CountTable count_table(const Spectrum& sp, const Window& w, const std::vector<double>& grid,
                       int threads = 0);
std::string count_table_csv(const CountTable& t);
std::string fit_report_json(const FitReport& r);

}  // namespace sl4
