#include "sl4zeta/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sl4 {

HWeight HWeight::from_coeffs(const std::array<Rat, 4>& re, const std::array<Rat, 4>& im) {
    HWeight w;
    Rat mre = (re[0] + re[1] + re[2] + re[3]) / 4;
    Rat mim = (im[0] + im[1] + im[2] + im[3]) / 4;
    for (int i = 0; i < 4; ++i) {
        w.re[i] = re[i] - mre;
        w.im[i] = im[i] - mim;
    }
    return w;
}

bool HWeight::operator<(const HWeight& o) const {
    for (int i = 0; i < 4; ++i) {
        if (re[i] != o.re[i]) return re[i] < o.re[i];
    }
    for (int i = 0; i < 4; ++i) {
        if (im[i] != o.im[i]) return im[i] < o.im[i];
    }
    return false;
}

HWeight HWeight::operator+(const HWeight& o) const {
    HWeight w;
    for (int i = 0; i < 4; ++i) {
        w.re[i] = re[i] + o.re[i];
        w.im[i] = im[i] + o.im[i];
    }
    return w;
}

HWeight HWeight::operator*(const Rat& s) const {
    HWeight w;
    for (int i = 0; i < 4; ++i) {
        w.re[i] = re[i] * s;
        w.im[i] = im[i] * s;
    }
    return w;
}

std::pair<Rat, Rat> HWeight::eval(const std::array<Rat, 4>& t) const {
    Rat vr(0), vi(0);
    for (int i = 0; i < 4; ++i) {
        vr += re[i] * t[i];
        vi += im[i] * t[i];
    }
    return {vr, vi};
}

Perm perm_identity() { return {0, 1, 2, 3}; }

Perm perm_compose(const Perm& s, const Perm& t) {
    Perm r;
    for (int i = 0; i < 4; ++i) r[i] = s[t[i]];
    return r;
}

const std::vector<Perm>& all_permutations() {
    static const std::vector<Perm> perms = [] {
        std::vector<Perm> v;
        Perm p = {0, 1, 2, 3};
        do {
            v.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return perms;
}

HWeight rho_P() {
    return HWeight::from_coeffs({Rat(1), Rat(1), Rat(-1), Rat(-1)});
}

HWeight rho_0() {
    return HWeight::from_coeffs({Rat(3), Rat(2), Rat(1), Rat(0)});
}

Rat bform_diag(const std::array<Rat, 4>& x, const std::array<Rat, 4>& y) {
    if (x[0] + x[1] + x[2] + x[3] != Rat(0) || y[0] + y[1] + y[2] + y[3] != Rat(0))
        throw std::invalid_argument("bform_diag: inputs must be traceless diagonals");
    Rat s(0);
    for (int i = 0; i < 4; ++i) s += x[i] * y[i];
    return Rat(16) * s;
}

HWeight weyl_apply(const Perm& w, const HWeight& l) {
    std::array<Rat, 4> re, im;
    for (int i = 0; i < 4; ++i) {
        re[w[i]] = l.re[i];
        im[w[i]] = l.im[i];
    }
    return HWeight::from_coeffs(re, im);
}

AWeight restrict_to_a(const HWeight& l) {
    // Dot with H1 = (1/8)(-1,-1,1,1).
    const Rat e = Rat(1, 8);
    AWeight a;
    a.re = e * (-l.re[0] - l.re[1] + l.re[2] + l.re[3]);
    a.im = e * (-l.im[0] - l.im[1] + l.im[2] + l.im[3]);
    return a;
}

std::array<std::complex<double>, 4> ad_eigenvalues_nbar(double l, double theta, double phi,
                                                        int k) {
    double r = std::exp(-0.25 * k * l);
    double d = static_cast<double>(k) * (theta - phi);
    double s = static_cast<double>(k) * (theta + phi);
    return {r * std::exp(std::complex<double>(0.0, -d)), r * std::exp(std::complex<double>(0.0, d)),
            r * std::exp(std::complex<double>(0.0, -s)), r * std::exp(std::complex<double>(0.0, s))};
}

double det_one_minus_ad_n(double l, double theta, double phi, long long k) {
    double r = std::exp(-0.25 * static_cast<double>(k) * l);
    double cd = std::cos(static_cast<double>(k) * (theta - phi));
    double cs = std::cos(static_cast<double>(k) * (theta + phi));
    return (1.0 - 2.0 * r * cd + r * r) * (1.0 - 2.0 * r * cs + r * r);
}

Eigen::Matrix4d ad_matrix_nbar(double l, double theta, double phi, int k) {
    // B ↦ e^{-kl/4} R(-kφ) B R(kθ) on the lower-left block, row-major basis
    // E31,E32,E41,E42; as a Kronecker product this is e^{-kl/4} L ⊗ Rᵗ with
    // L = R(-kφ), R = R(kθ).
    double r = std::exp(-0.25 * k * l);
    double a = -k * phi, b = k * theta;
    Eigen::Matrix2d L, R;
    L << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    R << std::cos(b), -std::sin(b), std::sin(b), std::cos(b);
    Eigen::Matrix4d M;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) M(2 * i + p, 2 * j + q) = L(i, j) * R(q, p);
    return r * M;
}

}  // namespace sl4
