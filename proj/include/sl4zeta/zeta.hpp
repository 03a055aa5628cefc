// zeta.hpp — truncated Euler-product evaluation over a synthetic spectrum:
// log Z_{P,σ}(s) with the symmetric-power factor folded into the closed-form
// determinant, log R_{Γ,σ}(s), the Ruelle–Selberg factorization residual, and
// the log-derivative Dirichlet series. Everything works in log space; the
// zeta values themselves are exp(log) on demand.
#pragma once

#include <complex>

#include "sl4zeta/km_ring.hpp"
#include "sl4zeta/spectrum.hpp"

namespace sl4 {

// A term for primitive class γ0, torsion subset I and series index m is kept
// iff m <= m_max and m·n_I·l0 <= L_max; the same rule on both sides of the
// factorization identity makes it exact up to rounding.
struct TruncationConfig {
    double L_max = 30.0;
    long long m_max = 1'000'000;
};

using Cplx = std::complex<double>;

// -Σ_{γ0} Σ_{I⊆R_γ} χ_I Σ_m (1/m) e^{-s·m·n_I·l0} tr σ(b^{m·n_I})
//   · det(1 - Ad((ab)^{m·n_I})|n)^{-1}.
Cplx log_selberg(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                 const TruncationConfig& cfg, int threads = 0);

// Same without the determinant factor (no symmetric powers).
Cplx log_ruelle(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                const TruncationConfig& cfg, int threads = 0);

// log R_{Γ,σ}(s) - Σ_{q=0}^4 (-1)^q log Z_{P, ∧^q n̄ ⊗ σ}(s + q/4); vanishes
// identically term-by-term, so the magnitude measures accumulated rounding.
Cplx factorization_residual(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                            const TruncationConfig& cfg, int threads = 0);

// Dirichlet series Σ over powers γ = γ0^k of
// χ₁(Γ_{γ0^k})·tr σ(b^k)·l0·e^{-s·k·l0} = d/ds log R_{Γ,σ}(s).
Cplx dirichlet_logderiv(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                        const TruncationConfig& cfg, int threads = 0);

}  // namespace sl4
