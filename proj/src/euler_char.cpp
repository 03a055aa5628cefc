#include "sl4zeta/euler_char.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <numbers>
#include <stdexcept>

namespace sl4 {

Angle Angle::rational(long long p, long long q) {
    if (q < 1) throw std::invalid_argument("Angle::rational: denominator must be >= 1");
    // Reduce into (-π, π]: representative m/q with m in (-q, q].
    long long two_q = 2 * q;
    long long m = ((p % two_q) + two_q) % two_q;
    if (m > q) m -= two_q;
    long long g = std::gcd(std::abs(m), q);
    if (g == 0) g = 1;
    Angle a;
    a.is_rational = true;
    a.p = m / g;
    a.q = q / g;
    return a;
}

Angle Angle::irrational(double v) {
    Angle a;
    a.is_rational = false;
    a.irr = std::remainder(v, 2.0 * std::numbers::pi);
    if (a.irr <= -std::numbers::pi) a.irr += 2.0 * std::numbers::pi;
    return a;
}

double Angle::value() const {
    if (is_rational)
        return std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    return irr;
}

Angle Angle::times(long long k) const {
    if (is_rational) return Angle::rational(p * k, q);
    return Angle::irrational(irr * static_cast<double>(k));
}

long long chi1_from_betti(const std::vector<long long>& h) {
    long long s = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        long long term = static_cast<long long>(j) * h[j];
        s += (j % 2 == 1) ? term : -term;
    }
    return s;
}

Rat chi1_index(const Rat& chi1_prime, long long index_A, long long index_Gamma) {
    if (index_A < 1 || index_Gamma < 1)
        throw std::invalid_argument("chi1_index: group indices must be >= 1");
    return chi1_prime * Rat(index_A) / Rat(index_Gamma);
}

std::set<long long> r_gamma(const AnglePair& a) {
    std::set<long long> r;
    if (a.theta.is_rational) r.insert(a.theta.q);
    if (a.phi.is_rational) r.insert(a.phi.q);
    return r;
}

namespace {

// χ₁(Γ_{γ^n}) straight from the table: the value jumps exactly at powers
// divisible by the minimal orders of the rational angles.
double chi1_lookup(const AnglePair& angles, const Chi1Table& t, long long n) {
    bool hit_theta = angles.theta.is_rational && n % angles.theta.q == 0;
    bool hit_phi = angles.phi.is_rational && n % angles.phi.q == 0;
    auto need = [&](const std::optional<double>& v, const char* slot) -> double {
        if (!v) throw std::invalid_argument(std::string("chi1 table: missing entry ") + slot);
        return *v;
    };
    if (hit_theta && hit_phi) {
        if (angles.theta.q == angles.phi.q) return need(t.chi1_r1, "chi1_r1");
        return need(t.chi1_lcm, "chi1_lcm");
    }
    if (hit_theta) return need(t.chi1_r1, "chi1_r1");
    if (hit_phi) return need(t.chi1_r2, "chi1_r2");
    return t.chi1_1;
}

}  // namespace

double chi_I(const AnglePair& angles, const Chi1Table& t, const std::set<long long>& R,
             const std::set<long long>& I) {
    for (long long i : I)
        if (!R.count(i)) throw std::invalid_argument("chi_I: I must be a subset of R");
    std::vector<long long> elems(I.begin(), I.end());
    std::size_t n = elems.size();
    long long n_I = 1;
    for (long long e : elems) n_I = std::lcm(n_I, e);
    double sum = 0.0;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        long long n_J = 1;
        int bits = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) {
                n_J = std::lcm(n_J, elems[b]);
                ++bits;
            }
        double v = chi1_lookup(angles, t, n_J);
        sum += (bits % 2 == 0) ? v : -v;
    }
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * sum / static_cast<double>(n_I);
}

std::vector<std::pair<long long, double>> chi_weights(const AnglePair& angles,
                                                      const Chi1Table& t) {
    std::set<long long> R = r_gamma(angles);
    std::vector<long long> elems(R.begin(), R.end());
    std::size_t n = elems.size();
    std::vector<std::pair<long long, double>> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::set<long long> I;
        long long n_I = 1;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) {
                I.insert(elems[b]);
                n_I = std::lcm(n_I, elems[b]);
            }
        out.emplace_back(n_I, chi_I(angles, t, R, I));
    }
    return out;
}

double chi1_at_power(const AnglePair& angles, const Chi1Table& t, long long k) {
    return chi1_lookup(angles, t, k);
}

}  // namespace sl4
