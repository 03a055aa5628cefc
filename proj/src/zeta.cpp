#include "sl4zeta/zeta.hpp"

#include <cmath>

#include "sl4zeta/cartan.hpp"
#include "sl4zeta/numerics.hpp"

namespace sl4 {

namespace {

// Shared inner loop: for one primitive class, sum over I ⊆ R_γ and the log
// index m the term (1/m) e^{-s·j·l0} tr σ(b^j) · W(j), j = m·n_I, where W is
// the optional determinant weight. χ_I weights and angle powers are exact.
template <class Weight>
Cplx class_sum(const PrimitiveClass& c, const VirtualRep& sigma, Cplx s,
               const TruncationConfig& cfg, Weight weight) {
    Cplx acc(0.0, 0.0);
    for (const auto& [n_I, chi] : chi_weights(c.angles, c.chi)) {
        if (chi == 0.0) continue;
        double step = static_cast<double>(n_I) * c.l0;
        for (long long m = 1; m <= cfg.m_max; ++m) {
            double len = static_cast<double>(m) * step;
            if (len > cfg.L_max) break;
            long long j = m * n_I;
            double tr = trace_at(sigma, c.angles.theta.times(j).value(),
                                 c.angles.phi.times(j).value());
            if (tr == 0.0) continue;
            Cplx term = std::exp(-s * len) * (chi * tr / static_cast<double>(m));
            acc += term * weight(c, j);
        }
    }
    return acc;
}

}  // namespace

Cplx log_selberg(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                 const TruncationConfig& cfg, int threads) {
    auto f = [&](std::size_t i) {
        return class_sum(sp.classes[i], sigma, s, cfg, [](const PrimitiveClass& c, long long j) {
            return 1.0 / det_one_minus_ad_n(c.l0, c.angles.theta.value(), c.angles.phi.value(), j);
        });
    };
    return -chunked_sum_complex(sp.classes.size(), f, threads);
}

Cplx log_ruelle(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                const TruncationConfig& cfg, int threads) {
    auto f = [&](std::size_t i) {
        return class_sum(sp.classes[i], sigma, s, cfg,
                         [](const PrimitiveClass&, long long) { return 1.0; });
    };
    return -chunked_sum_complex(sp.classes.size(), f, threads);
}

Cplx factorization_residual(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                            const TruncationConfig& cfg, int threads) {
    Cplx r = log_ruelle(sp, sigma, s, cfg, threads);
    for (int q = 0; q <= 4; ++q) {
        Cplx z = log_selberg(sp, tensor(wedge_nbar(q), sigma), s + Cplx(0.25 * q, 0.0), cfg,
                             threads);
        r -= (q % 2 == 0) ? z : -z;
    }
    return r;
}

Cplx dirichlet_logderiv(const Spectrum& sp, const VirtualRep& sigma, Cplx s,
                        const TruncationConfig& cfg, int threads) {
    auto f = [&](std::size_t i) {
        const PrimitiveClass& c = sp.classes[i];
        Cplx acc(0.0, 0.0);
        for (long long k = 1; k <= cfg.m_max; ++k) {
            double len = static_cast<double>(k) * c.l0;
            if (len > cfg.L_max) break;
            double tr =
                trace_at(sigma, c.angles.theta.times(k).value(), c.angles.phi.times(k).value());
            if (tr == 0.0) continue;
            double w = chi1_at_power(c.angles, c.chi, k);
            acc += std::exp(-s * len) * (w * tr * c.l0);
        }
        return acc;
    };
    return chunked_sum_complex(sp.classes.size(), f, threads);
}

}  // namespace sl4
