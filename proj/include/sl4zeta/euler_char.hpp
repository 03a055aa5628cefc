// euler_char.hpp — first higher Euler characteristics and the torsion
// combinatorics attached to a geodesic class: the root-of-unity orders R_γ,
// the signed combinations χ_I, and the resulting weight χ₁(Γ_{γ^k}) at each
// power. Angles that are rational multiples of π are kept exact.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sl4zeta/rational.hpp"

namespace sl4 {

// One rotation angle: either (p/q)·π exactly (gcd(p,q) = 1, q >= 1,
// representative in (-π, π]) or an irrational double.
struct Angle {
    bool is_rational = false;
    long long p = 0, q = 1;  // rational case
    double irr = 0.0;        // irrational case

    static Angle rational(long long p, long long q);
    static Angle irrational(double v);

    double value() const;
    // Angle of the k-th power, reduced mod 2π.
    Angle times(long long k) const;
    // True iff the angle lies in πZ (non-regular direction).
    bool in_pi_z() const { return is_rational && q == 1; }
    bool operator==(const Angle& o) const = default;
};

struct AnglePair {
    Angle theta, phi;
    bool operator==(const AnglePair& o) const = default;
};

// χ₁ of the centralizer at the powers where it can jump. chi1_r1/r2 mirror
// the θ/φ slots (present iff that angle is rational); chi1_lcm is present iff
// both are. Values are strictly positive.
struct Chi1Table {
    double chi1_1 = 1.0;
    std::optional<double> chi1_r1, chi1_r2, chi1_lcm;
    bool operator==(const Chi1Table& o) const = default;
};

// Σ_j (-1)^{j+1} j h^j over the Betti numbers.
long long chi1_from_betti(const std::vector<long long>& h);

// χ₁(Γ) = χ₁(Γ')·[Γ_A:Γ'_A]/[Γ:Γ']. Indices must be >= 1.
Rat chi1_index(const Rat& chi1_prime, long long index_A, long long index_Gamma);

// Minimal orders at which angle multiples land in πZ: q for (p/q)π, nothing
// for irrational angles. At most two elements, deduplicated.
std::set<long long> r_gamma(const AnglePair& a);

// χ_I = ((-1)^{|I|}/n_I)·Σ_{J⊆I}(-1)^{|J|} χ₁(Γ_{γ^{n_J}}), n_∅ = 1,
// n_I = lcm(I). The table must supply χ₁ at every n_J that occurs.
double chi_I(const AnglePair& angles, const Chi1Table& t, const std::set<long long>& R,
             const std::set<long long>& I);

// All pairs (n_I, χ_I) for I ⊆ R_γ, in subset order ∅, {r1}, {r2}, {r1,r2}.
std::vector<std::pair<long long, double>> chi_weights(const AnglePair& angles,
                                                      const Chi1Table& t);

// χ₁(Γ_{γ^k}), resolved from the table by divisibility of k by the minimal
// orders. Equals Σ_{I : n_I | k} n_I·χ_I.
double chi1_at_power(const AnglePair& angles, const Chi1Table& t, long long k);

}  // namespace sl4
