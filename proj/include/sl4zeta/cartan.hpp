// cartan.hpp — exact arithmetic on the diagonal Cartan of sl4: weights as
// rational functionals, the Weyl group S4, the trace form b(X,Y) = 16 tr(XY),
// and the adjoint action of A^- B on the off-diagonal nilpotent blocks.
//
// Sign convention, fixed once: A^- = {exp(l·H1) : l > 0} contracts the
// upper-right block n, Ad(exp(l·H1))|n = e^{-l/4}·(rotation), and expands n̄;
// the inverse powers appearing below therefore contract n̄.
#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <vector>

#include "sl4zeta/rational.hpp"

namespace sl4 {

// Linear functional on the diagonal Cartan of sl4, diag(t1..t4) ↦ Σ c_i t_i.
// Functionals are taken modulo the trace character, so the stored form is
// canonical with Σ c_i = 0 (real and imaginary parts separately).
struct HWeight {
    std::array<Rat, 4> re{};
    std::array<Rat, 4> im{};

    static HWeight from_coeffs(const std::array<Rat, 4>& re,
                               const std::array<Rat, 4>& im = {Rat(0), Rat(0), Rat(0), Rat(0)});

    bool operator==(const HWeight& o) const { return re == o.re && im == o.im; }
    bool operator<(const HWeight& o) const;  // lexicographic on canonical coeffs

    HWeight operator+(const HWeight& o) const;
    HWeight operator*(const Rat& s) const;

    // Evaluate at diag(t1..t4); returns (real part, imaginary part).
    std::pair<Rat, Rat> eval(const std::array<Rat, 4>& t) const;
};

// Restriction of a weight to the split torus a; determined by its value at
// H1 = (1/8) diag(-1,-1,1,1), which satisfies b(H1,H1) = 1.
struct AWeight {
    Rat re{0};
    Rat im{0};
    bool operator==(const AWeight& o) const { return re == o.re && im == o.im; }
    bool operator<(const AWeight& o) const { return re < o.re || (re == o.re && im < o.im); }
};

using Perm = std::array<int, 4>;  // p[i] = image of slot i

Perm perm_identity();
Perm perm_compose(const Perm& s, const Perm& t);  // apply t first, then s
const std::vector<Perm>& all_permutations();      // the 24 elements of S4

// Half-sum of positive roots of (g,a): rho_P(diag(a,a,-a,-a)) = 4a.
HWeight rho_P();
// Half-sum of positive roots of (g,a0), canonical coefficients (3/2,1/2,-1/2,-3/2).
HWeight rho_0();

// b(X,Y) = 16 Σ x_i y_i for traceless diagonals. Rejects non-traceless input.
Rat bform_diag(const std::array<Rat, 4>& x, const std::array<Rat, 4>& y);

// Weyl action: permutes coefficients and re-canonicalizes.
HWeight weyl_apply(const Perm& w, const HWeight& l);

AWeight restrict_to_a(const HWeight& l);

// Eigenvalues of Ad((a b)^{-k}) on n̄ (lower-left block basis E31,E32,E41,E42),
// for a = exp(l·H1), b = blockdiag(R(theta), R(phi)). All four have modulus
// e^{-k l/4}; the phases are ordered {-(θ-φ), +(θ-φ), -(θ+φ), +(θ+φ)} times k.
std::array<std::complex<double>, 4> ad_eigenvalues_nbar(double l, double theta, double phi,
                                                        int k);

// det(1 - Ad((a b)^k)|n) = det(1 - Ad((a b)^{-k})|n̄), from the closed-form
// eigenvalues. Positive, < 1 for l > 0, and → 1 as l → ∞.
double det_one_minus_ad_n(double l, double theta, double phi, long long k);

// Matrix of Ad((a b)^{-k}) on n̄ in the basis E31,E32,E41,E42; retained as the
// brute-force oracle for the closed-form eigenvalue path.
Eigen::Matrix4d ad_matrix_nbar(double l, double theta, double phi, int k);

}  // namespace sl4
