#include "sl4zeta/km_ring.hpp"

#include <cmath>
#include <stdexcept>

namespace sl4 {

KMType KMType::delta(int l, int k) {
    if (l == 0 && k == 0)
        throw std::invalid_argument("KMType::delta: (0,0) is reducible, not a type");
    if (l < 0 || (l == 0 && k < 0)) {
        l = -l;
        k = -k;
    }
    return {KMClass::Delta, l, k};
}

bool KMType::operator<(const KMType& o) const {
    if (cls != o.cls) return cls < o.cls;
    if (l != o.l) return l < o.l;
    return k < o.k;
}

VirtualRep VirtualRep::of(const KMType& t, long long mult) {
    VirtualRep v;
    v.add(t, mult);
    return v;
}

void VirtualRep::add(const KMType& t, long long mult) {
    if (mult == 0) return;
    auto it = m_.find(t);
    if (it == m_.end()) {
        m_.emplace(t, mult);
    } else {
        it->second += mult;
        if (it->second == 0) m_.erase(it);
    }
}

long long VirtualRep::mult(const KMType& t) const {
    auto it = m_.find(t);
    return it == m_.end() ? 0 : it->second;
}

long long VirtualRep::dimension() const {
    long long d = 0;
    for (const auto& [t, m] : m_) d += m * t.dim();
    return d;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
    for (const auto& [t, m] : o.m_) add(t, m);
    return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
    for (const auto& [t, m] : o.m_) add(t, -m);
    return *this;
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
    VirtualRep r = *this;
    r += o;
    return r;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const {
    VirtualRep r = *this;
    r -= o;
    return r;
}

VirtualRep VirtualRep::operator*(long long s) const {
    VirtualRep r;
    if (s == 0) return r;
    for (const auto& [t, m] : m_) r.add(t, m * s);
    return r;
}

int VirtualRep::max_index() const {
    int b = 0;
    for (const auto& [t, m] : m_)
        if (t.cls == KMClass::Delta) b = std::max({b, std::abs(t.l), std::abs(t.k)});
    return b;
}

namespace {

// δ_{l,k} with (l,k) possibly (0,0): the degenerate case expands to triv ⊕ δ.
void add_delta_expanded(VirtualRep& out, int l, int k, long long mult) {
    if (l == 0 && k == 0) {
        out.add(KMType::triv(), mult);
        out.add(KMType::det(), mult);
    } else {
        out.add(KMType::delta(l, k), mult);
    }
}

void tensor_types(VirtualRep& out, const KMType& a, const KMType& b, long long mult) {
    if (a.cls == KMClass::Triv) {
        out.add(b, mult);
        return;
    }
    if (b.cls == KMClass::Triv) {
        out.add(a, mult);
        return;
    }
    if (a.cls == KMClass::Det && b.cls == KMClass::Det) {
        out.add(KMType::triv(), mult);
        return;
    }
    if (a.cls == KMClass::Det) {
        out.add(b, mult);
        return;
    }
    if (b.cls == KMClass::Det) {
        out.add(a, mult);
        return;
    }
    // δ_{l,k} ⊗ δ_{l',k'} = δ_{l+l',k+k'} ⊕ δ_{l-l',k-k'}.
    add_delta_expanded(out, a.l + b.l, a.k + b.k, mult);
    add_delta_expanded(out, a.l - b.l, a.k - b.k, mult);
}

}  // namespace

VirtualRep tensor(const VirtualRep& x, const VirtualRep& y) {
    VirtualRep out;
    for (const auto& [a, ma] : x.entries())
        for (const auto& [b, mb] : y.entries()) tensor_types(out, a, b, ma * mb);
    return out;
}

double character(const KMType& t, double theta, double eta, Component c) {
    if (c == Component::Identity) {
        switch (t.cls) {
            case KMClass::Triv:
            case KMClass::Det:
                return 1.0;
            case KMClass::Delta:
                return 2.0 * std::cos(t.l * theta + t.k * eta);
        }
    }
    switch (t.cls) {
        case KMClass::Triv:
            return 1.0;
        case KMClass::Det:
            return -1.0;
        case KMClass::Delta:
            return 0.0;
    }
    return 0.0;
}

double character(const VirtualRep& x, double theta, double eta, Component c) {
    double s = 0.0;
    for (const auto& [t, m] : x.entries()) s += static_cast<double>(m) * character(t, theta, eta, c);
    return s;
}

double trace_at(const VirtualRep& x, double theta, double phi) {
    return character(x, theta, phi, Component::Identity);
}

long long dim_invariants(const VirtualRep& x) { return x.mult(KMType::triv()); }

VirtualRep wedge_of_types(const std::vector<KMType>& summands, int q) {
    if (q < 0) throw std::out_of_range("wedge_of_types: negative degree");
    // ∧*(V ⊕ τ) = ∧*V ⊗ (1 + τ + ∧²τ), with ∧²δ_{l,k} = δ and ∧²(1-dim) = 0.
    std::vector<VirtualRep> w(static_cast<std::size_t>(q) + 1);
    w[0] = VirtualRep::of(KMType::triv());
    for (const KMType& t : summands) {
        std::vector<VirtualRep> nw(w.size());
        for (int d = 0; d <= q; ++d) {
            VirtualRep acc = w[d];
            if (d >= 1) acc += tensor(w[d - 1], VirtualRep::of(t));
            if (d >= 2 && t.cls == KMClass::Delta) acc += tensor(w[d - 2], VirtualRep::of(KMType::det()));
            nw[d] = std::move(acc);
        }
        w = std::move(nw);
    }
    return w[q];
}

namespace {

const std::vector<KMType>& pM_types() {
    static const std::vector<KMType> v = {KMType::delta(2, 0), KMType::delta(0, 2)};
    return v;
}

const std::vector<KMType>& m_types() {
    static const std::vector<KMType> v = {KMType::det(), KMType::det(), KMType::delta(2, 0),
                                          KMType::delta(0, 2)};
    return v;
}

const std::vector<KMType>& n_types() {
    static const std::vector<KMType> v = {KMType::delta(1, 1), KMType::delta(1, -1)};
    return v;
}

}  // namespace

VirtualRep wedge_pM(int p) {
    if (p < 0 || p > 4) throw std::out_of_range("wedge_pM: degree must be 0..4");
    static const auto table = [] {
        std::vector<VirtualRep> t;
        for (int q = 0; q <= 4; ++q) t.push_back(wedge_of_types(pM_types(), q));
        return t;
    }();
    return table[static_cast<std::size_t>(p)];
}

VirtualRep wedge_m(int q) {
    if (q < 0 || q > 4) throw std::out_of_range("wedge_m: degree must be 0..4");
    static const auto table = [] {
        std::vector<VirtualRep> t;
        for (int d = 0; d <= 4; ++d) t.push_back(wedge_of_types(m_types(), d));
        return t;
    }();
    return table[static_cast<std::size_t>(q)];
}

VirtualRep module_n() { return wedge_of_types(n_types(), 1); }

VirtualRep wedge_nbar(int q) {
    if (q < 0 || q > 4) throw std::out_of_range("wedge_nbar: degree must be 0..4");
    static const auto table = [] {
        std::vector<VirtualRep> t;
        for (int d = 0; d <= 4; ++d) t.push_back(wedge_of_types(n_types(), d));
        return t;
    }();
    return table[static_cast<std::size_t>(q)];
}

const VirtualRep& sigma_tilde() {
    static const VirtualRep s = [] {
        const long long a[5] = {15, -10, 6, -3, 1};
        VirtualRep v;
        for (int q = 0; q <= 4; ++q) v += wedge_m(q) * a[q];
        return v;
    }();
    return s;
}

namespace {

// Invariant dimension of (δ_{j,k} ⊕ δ_{-j,k}) ⊗ X for j,k > 0, of δ_{j,0} or
// δ_{0,k} for a zero index, and of δ_{0,0} = triv ⊕ δ for j = k = 0.
long long xi_pairing(int j, int k, const VirtualRep& X) {
    if (j == 0 && k == 0) return X.mult(KMType::triv()) + X.mult(KMType::det());
    if (j == 0) return X.mult(KMType::delta(0, k));
    if (k == 0) return X.mult(KMType::delta(j, 0));
    return X.mult(KMType::delta(j, k)) + X.mult(KMType::delta(j, -k));
}

}  // namespace

long long ep_trace(int m1, int m2, const VirtualRep& sigma, int cutoff) {
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("ep_trace: parameters must be >= 0");
    // X_p = σ ⊗ ∧^p p_M; every K_M-type of V_ξ beyond the support bound of the
    // X_p pairs to zero, so the infinite type sum is exact once truncated there.
    VirtualRep X[5];
    int bound = 0;
    for (int p = 0; p <= 4; ++p) {
        X[p] = tensor(sigma, wedge_pM(p));
        bound = std::max(bound, X[p].max_index());
    }
    if (cutoff < bound)
        throw std::invalid_argument(
            "ep_trace: cutoff below the pairing bound; a boundary K_M-type could still pair");

    long long total = 0;
    auto accumulate = [&](int j, int k) {
        for (int p = 0; p <= 4; ++p) {
            long long d = xi_pairing(j, k, X[p]);
            total += (p % 2 == 0) ? d : -d;
        }
    };
    if (m1 == 0 && m2 == 0) {
        accumulate(0, 0);
    } else if (m1 == 0) {
        for (int k = m2; k <= bound; k += 2) accumulate(0, k);
    } else if (m2 == 0) {
        for (int j = m1; j <= bound; j += 2) accumulate(j, 0);
    } else {
        for (int j = m1; j <= bound; j += 2)
            for (int k = m2; k <= bound; k += 2) accumulate(j, k);
    }
    return total;
}

long long ep_trace_sl2(int n) {
    if (n < 2) throw std::invalid_argument("ep_trace_sl2: discrete-series parameter must be >= 2");
    // SO(2)-types of D_n^+ ⊕ D_n^- are ε_j, |j| >= n, j ≡ n (mod 2); the
    // exterior powers of p are ε_0, ε_2 ⊕ ε_{-2}, ε_0. Only ∧¹ can pair, and
    // only when |j| = 2, i.e. for n = 2.
    return n == 2 ? -2 : 0;
}

}  // namespace sl4
