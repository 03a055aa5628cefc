// inf_chars.hpp — infinitesimal characters of the unitary-dual families that
// matter for the zeta vanishing orders: principal series from P = MAN with
// discrete-series pairs (m1, m2), the complementary series, the Langlands
// quotients π_m (and the limits of complementary series sharing their Λ),
// and the trivial representation. Weyl-orbit restrictions to the split torus
// classify each Λ against the region  wΛ|_a ≥ -½ρ_P  or  wΛ|_a ≤ -ρ_P.
#pragma once

#include <set>
#include <vector>

#include "sl4zeta/cartan.hpp"
#include "sl4zeta/rational.hpp"

namespace sl4 {

enum class ReprKind { PrincipalDS, Complementary, LanglandsPi, Trivial, InducedOther };

struct ReprParam {
    ReprKind kind = ReprKind::Trivial;
    int m1 = 0, m2 = 0;  // PrincipalDS: discrete-series parameters, 0 = trivial factor
    Rat alpha{0};        // PrincipalDS: ν = iα on the split torus
    int m = 0;           // Complementary / LanglandsPi
    Rat t{0};            // Complementary: 0 < t < 1/2

    static ReprParam principal_ds(int m1, int m2, const Rat& alpha = Rat(0));
    static ReprParam complementary(int m, const Rat& t);
    static ReprParam langlands_pi(int m);
    static ReprParam trivial();
    // Induced from one of the other parabolics; contributes no zeros or poles
    // and carries no further data.
    static ReprParam induced_other();

    bool contributes_nothing() const { return kind == ReprKind::InducedOther; }
};

// Representative of the infinitesimal character as a canonical weight.
// Throws for the induced_other tag.
HWeight infinitesimal_character(const ReprParam& p);

// restrict_to_a(w·Λ) over all 24 Weyl elements, in all_permutations() order;
// real parts carry the classification (ν is imaginary).
std::vector<AWeight> weyl_restrictions(const HWeight& lambda);

// True iff every orbit restriction μ satisfies μ ≥ -½ρ_P or μ ≤ -ρ_P in the
// ρ_P-order. Since ρ_P(H1) = -1/2 this reads value(μ) ≤ 1/4 or ≥ 1/2.
bool satisfies_region_condition(const HWeight& lambda);

// Candidate zero locations: { value(wΛ|_a) + 1/2 : w in W }.
std::set<Rat> candidate_zeros(const HWeight& lambda);

}  // namespace sl4
