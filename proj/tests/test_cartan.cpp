#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "sl4zeta/cartan.hpp"

using namespace sl4;

namespace {

constexpr double kPi = std::numbers::pi;

std::array<Rat, 4> coeffs(long long a, long long b, long long c, long long d) {
    return {Rat(a), Rat(b), Rat(c), Rat(d)};
}

// Sorted eigenvalue list of the brute-force 4x4 operator matrix.
std::vector<std::complex<double>> oracle_eigs(double l, double th, double ph, int k) {
    Eigen::Matrix4d M = ad_matrix_nbar(l, th, ph, k);
    Eigen::EigenSolver<Eigen::Matrix4d> es(M);
    std::vector<std::complex<double>> v;
    for (int i = 0; i < 4; ++i) v.push_back(es.eigenvalues()[i]);
    std::sort(v.begin(), v.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

double det_oracle(double l, double th, double ph, int k) {
    // det(1 - Ad((ab)^{-k})|n̄) via the matrix path.
    Eigen::Matrix4d M = ad_matrix_nbar(l, th, ph, k);
    return (Eigen::Matrix4d::Identity() - M).determinant();
}

}  // namespace

TEST_CASE("rho_P has canonical coefficients (1,1,-1,-1) and restricts to -1/2") {
    HWeight r = rho_P();
    CHECK(r.re == coeffs(1, 1, -1, -1));
    CHECK(restrict_to_a(r).re == Rat(-1, 2));
    CHECK(weyl_apply(perm_identity(), r) == r);
    // rho_P(diag(a,a,-a,-a)) = 4a
    auto [vr, vi] = r.eval({Rat(1), Rat(1), Rat(-1), Rat(-1)});
    CHECK(vr == Rat(4));
    CHECK(vi == Rat(0));
}

TEST_CASE("canonicalization subtracts the mean and equality is canonical") {
    HWeight a = HWeight::from_coeffs(coeffs(3, 2, 1, 0));
    HWeight b = HWeight::from_coeffs({Rat(3, 2), Rat(1, 2), Rat(-1, 2), Rat(-3, 2)});
    CHECK(a == b);
    CHECK(a == rho_0());
}

TEST_CASE("bform_diag") {
    std::array<Rat, 4> H1 = {Rat(-1, 8), Rat(-1, 8), Rat(1, 8), Rat(1, 8)};
    CHECK(bform_diag(H1, H1) == Rat(1));
    std::array<Rat, 4> z = {Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(bform_diag(z, z) == Rat(0));
    std::array<Rat, 4> v = {Rat(1), Rat(-1), Rat(0), Rat(0)};
    CHECK(bform_diag(v, v) == Rat(32));
    std::array<Rat, 4> bad = {Rat(1), Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS_AS(bform_diag(bad, z), std::invalid_argument);
}

TEST_CASE("weyl_apply: transposition example and orbit of rho_P") {
    // transposition of slots 2 and 3 (1-based) sends (1,0,1,-2) to (1,1,0,-2)
    HWeight w = HWeight::from_coeffs(coeffs(1, 0, 1, -2));
    Perm t23 = {0, 2, 1, 3};
    CHECK(weyl_apply(t23, w) == HWeight::from_coeffs(coeffs(1, 1, 0, -2)));

    std::set<HWeight> orbit;
    for (const Perm& p : all_permutations()) orbit.insert(weyl_apply(p, rho_P()));
    CHECK(orbit.size() == 6);
}

TEST_CASE("weyl action is a group homomorphism (all 576 pairs)") {
    HWeight w = HWeight::from_coeffs(coeffs(3, 1, 0, -4));
    for (const Perm& s : all_permutations())
        for (const Perm& t : all_permutations()) {
            CHECK(weyl_apply(perm_compose(s, t), w) == weyl_apply(s, weyl_apply(t, w)));
        }
}

TEST_CASE("restriction examples") {
    CHECK(restrict_to_a(rho_0()).re == Rat(-1, 2));  // rho_0|_a = rho_P|_a
    CHECK(restrict_to_a(HWeight{}).re == Rat(0));
    // imaginary parts restrict independently
    HWeight im = HWeight::from_coeffs(coeffs(0, 0, 0, 0), coeffs(1, 1, -1, -1));
    CHECK(restrict_to_a(im).im == Rat(-1, 2));
}

TEST_CASE("orbit restriction multiset is stable under the block-structure stabilizer") {
    HWeight lam = HWeight::from_coeffs(coeffs(5, 2, -1, -6));
    auto multiset_of = [&](const HWeight& l) {
        std::multiset<Rat> m;
        for (const Perm& p : all_permutations()) m.insert(restrict_to_a(weyl_apply(p, l)).re);
        return m;
    };
    auto base = multiset_of(lam);
    for (Perm s : {Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}, Perm{2, 3, 0, 1}}) {
        CHECK(multiset_of(weyl_apply(s, lam)) == base);
    }
}

TEST_CASE("ad eigenvalues on nbar: zero angles collapse to e^{-l/4}") {
    double l = 1.7;
    auto e = ad_eigenvalues_nbar(l, 0.0, 0.0, 1);
    for (const auto& v : e) {
        CHECK(v.real() == doctest::Approx(std::exp(-l / 4.0)).epsilon(1e-14));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("ad eigenvalues match the 4x4 matrix oracle on 100 random samples") {
    std::mt19937_64 rng(7);
    auto uni = [&](double a, double b) {
        return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int trial = 0; trial < 100; ++trial) {
        double l = uni(0.3, 5.0), th = uni(-kPi, kPi), ph = uni(-kPi, kPi);
        int k = 1 + static_cast<int>(rng() % 4);
        auto mine = ad_eigenvalues_nbar(l, th, ph, k);
        std::vector<std::complex<double>> a(mine.begin(), mine.end());
        std::sort(a.begin(), a.end(), [](auto x, auto y) {
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        });
        auto b = oracle_eigs(l, th, ph, k);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
        for (const auto& v : mine)
            CHECK(std::abs(v) == doctest::Approx(std::exp(-k * l / 4.0)).epsilon(1e-13));
    }
}

TEST_CASE("k-th power eigenvalues are elementwise k-th powers of the k=1 set") {
    double l = 0.9, th = 0.4, ph = -1.2;
    auto e1 = ad_eigenvalues_nbar(l, th, ph, 1);
    auto e2 = ad_eigenvalues_nbar(l, th, ph, 2);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(e2[i] - e1[i] * e1[i]) < 1e-14);
}

TEST_CASE("closed-form determinant agrees with the matrix determinant") {
    std::mt19937_64 rng(11);
    auto uni = [&](double a, double b) {
        return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int trial = 0; trial < 100; ++trial) {
        double l = uni(0.3, 6.0), th = uni(-kPi, kPi), ph = uni(-kPi, kPi);
        int k = 1 + static_cast<int>(rng() % 5);
        CHECK(det_one_minus_ad_n(l, th, ph, k) ==
              doctest::Approx(det_oracle(l, th, ph, k)).epsilon(1e-12));
    }
}

TEST_CASE("|det - 1| decreases monotonically along an l-grid") {
    for (auto [th, ph] : std::vector<std::pair<double, double>>{
             {0.7, 1.9}, {2.3, -0.4}, {0.0, 0.0}, {1.0, 1.0}}) {
        double prev = 1e9;
        for (double l = 3.0; l <= 21.0; l += 2.0) {
            double gap = std::abs(det_one_minus_ad_n(l, th, ph, 1) - 1.0);
            CHECK(gap < prev);
            prev = gap;
        }
    }
}
