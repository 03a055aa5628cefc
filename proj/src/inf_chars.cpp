#include "sl4zeta/inf_chars.hpp"

#include <stdexcept>

namespace sl4 {

ReprParam ReprParam::principal_ds(int m1, int m2, const Rat& alpha) {
    if (m1 < 0 || m2 < 0)
        throw std::invalid_argument("principal_ds: parameters must be non-negative");
    ReprParam p;
    p.kind = ReprKind::PrincipalDS;
    p.m1 = m1;
    p.m2 = m2;
    p.alpha = alpha;
    return p;
}

ReprParam ReprParam::complementary(int m, const Rat& t) {
    if (m < 1) throw std::invalid_argument("complementary: m must be >= 1");
    if (!(Rat(0) < t && t < Rat(1, 2)))
        throw std::invalid_argument("complementary: t must lie in (0, 1/2)");
    ReprParam p;
    p.kind = ReprKind::Complementary;
    p.m = m;
    p.t = t;
    return p;
}

ReprParam ReprParam::langlands_pi(int m) {
    if (m < 1) throw std::invalid_argument("langlands_pi: m must be >= 1");
    ReprParam p;
    p.kind = ReprKind::LanglandsPi;
    p.m = m;
    return p;
}

ReprParam ReprParam::trivial() { return ReprParam{}; }

ReprParam ReprParam::induced_other() {
    ReprParam p;
    p.kind = ReprKind::InducedOther;
    return p;
}

HWeight infinitesimal_character(const ReprParam& p) {
    switch (p.kind) {
        case ReprKind::PrincipalDS: {
            // Λ_ξ(diag(s,-s,t,-t)) = (m1-1)s + (m2-1)t lifted by zero on a,
            // plus ν = iα lifted by zero on the m-diagonal.
            Rat u = Rat(p.m1 - 1, 2), v = Rat(p.m2 - 1, 2);
            Rat q = p.alpha / 4;
            return HWeight::from_coeffs({u, -u, v, -v}, {q, q, -q, -q});
        }
        case ReprKind::Complementary: {
            // Λ_{π̄_m} + t·ρ_P.
            Rat u = Rat(p.m - 1, 2);
            return HWeight::from_coeffs({u + p.t, -u + p.t, u - p.t, -u - p.t});
        }
        case ReprKind::LanglandsPi: {
            // Λ(diag(a,b,c,-a-b-c)) = ma + b + (m-1)c; the limits of
            // complementary series share this Λ.
            return HWeight::from_coeffs({Rat(p.m), Rat(1), Rat(p.m - 1), Rat(0)});
        }
        case ReprKind::Trivial:
            return rho_0();
        case ReprKind::InducedOther:
            throw std::invalid_argument(
                "infinitesimal_character: induced-from-other-parabolic parameters contribute "
                "nothing and carry no character data");
    }
    throw std::logic_error("infinitesimal_character: unknown kind");
}

std::vector<AWeight> weyl_restrictions(const HWeight& lambda) {
    std::vector<AWeight> out;
    out.reserve(24);
    for (const Perm& w : all_permutations()) {
        AWeight a = restrict_to_a(weyl_apply(w, lambda));
        a.im = Rat(0);  // real parts only
        out.push_back(a);
    }
    return out;
}

bool satisfies_region_condition(const HWeight& lambda) {
    for (const AWeight& a : weyl_restrictions(lambda)) {
        if (!(a.re <= Rat(1, 4) || a.re >= Rat(1, 2))) return false;
    }
    return true;
}

std::set<Rat> candidate_zeros(const HWeight& lambda) {
    std::set<Rat> s;
    for (const AWeight& a : weyl_restrictions(lambda)) s.insert(a.re + Rat(1, 2));
    return s;
}

}  // namespace sl4
