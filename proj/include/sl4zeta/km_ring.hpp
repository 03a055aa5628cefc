// km_ring.hpp — the exact representation ring of K_M = S(O(2)×O(2)).
//
// Irreducible types are the trivial character, the determinant character δ,
// and the two-dimensional δ_{l,k} (canonical form l>0, or l=0 with k>0).
// Virtual modules are sparse integer combinations; tensor products, traces,
// invariant dimensions, the fixed exterior-power tables of p_M, m, n and n̄,
// the alternating module σ̃, and Euler–Poincaré traces all live here.
#pragma once

#include <map>
#include <vector>

namespace sl4 {

enum class KMClass { Triv, Det, Delta };

struct KMType {
    KMClass cls = KMClass::Triv;
    int l = 0, k = 0;  // meaningful for Delta only, canonical orientation

    static KMType triv() { return {KMClass::Triv, 0, 0}; }
    static KMType det() { return {KMClass::Det, 0, 0}; }
    // delta(l,k) with (l,k) ≠ (0,0); stores the canonical representative.
    static KMType delta(int l, int k);

    int dim() const { return cls == KMClass::Delta ? 2 : 1; }
    bool operator<(const KMType& o) const;
    bool operator==(const KMType& o) const = default;
};

enum class Component { Identity, Reflected };

// Integer-multiplicity virtual K_M-module. Zero entries are never stored and
// the reducible δ_{0,0} is expanded into triv ⊕ δ on insertion.
class VirtualRep {
  public:
    VirtualRep() = default;
    static VirtualRep zero() { return {}; }
    static VirtualRep of(const KMType& t, long long mult = 1);

    void add(const KMType& t, long long mult);
    long long mult(const KMType& t) const;
    long long dimension() const;
    bool operator==(const VirtualRep& o) const = default;

    VirtualRep& operator+=(const VirtualRep& o);
    VirtualRep& operator-=(const VirtualRep& o);
    VirtualRep operator+(const VirtualRep& o) const;
    VirtualRep operator-(const VirtualRep& o) const;
    VirtualRep operator*(long long s) const;

    const std::map<KMType, long long>& entries() const { return m_; }
    // Largest |l| or |k| over the support (0 for constant types only).
    int max_index() const;

  private:
    std::map<KMType, long long> m_;
};

VirtualRep tensor(const VirtualRep& x, const VirtualRep& y);

// Character value. On the identity component triv,δ ↦ 1 and
// δ_{l,k} ↦ 2cos(lθ+kη); on the reflected (T-)coset triv ↦ 1, δ ↦ -1,
// δ_{l,k} ↦ 0, independently of the angles.
double character(const VirtualRep& x, double theta, double eta, Component c);
double character(const KMType& t, double theta, double eta, Component c);

// Trace at b = blockdiag(R(theta), R(phi)) on the identity component.
double trace_at(const VirtualRep& x, double theta, double phi);

// Multiplicity of the trivial type.
long long dim_invariants(const VirtualRep& x);

// Exterior power of a genuine module given as a list of irreducible summands.
VirtualRep wedge_of_types(const std::vector<KMType>& summands, int q);

// Fixed decomposition tables (throw for q outside 0..4).
VirtualRep wedge_pM(int p);   // ∧^p p_M,  p_M ≅ δ_{2,0} ⊕ δ_{0,2}
VirtualRep wedge_m(int q);    // ∧^q m,    m   ≅ 2δ ⊕ δ_{2,0} ⊕ δ_{0,2}
VirtualRep module_n();        // n ≅ δ_{1,1} ⊕ δ_{1,-1}  (adjoint matrix trace)
VirtualRep wedge_nbar(int q); // ∧^q n̄, with n̄ ≅ n as K_M-modules

// σ̃ = 15∧⁰m − 10∧¹m + 6∧²m − 3∧³m + ∧⁴m; dimension 0 and
// tr σ̃(b) = 4(1−cos2θ)(1−cos2φ), vanishing exactly on non-regular b.
const VirtualRep& sigma_tilde();

// tr ξ(f_σ) = Σ_p (−1)^p dim(V_ξ ⊗ ∧^p p_M ⊗ V_σ)^{K_M}, with V_ξ expanded
// into its K_M-types for the discrete-series pair (m1, m2) (0 encodes the
// trivial SL2 factor). The type sum is infinite but pairing is finite; the
// required bound is computed from the support of σ ⊗ ∧*p_M and `cutoff`
// may only enlarge it — a cutoff below the bound throws.
long long ep_trace(int m1, int m2, const VirtualRep& sigma, int cutoff);

// One-factor SO(2) analogue of ep_trace for the trivial twist; equals −2 at
// n = 2 and 0 for every other n ≥ 2.
long long ep_trace_sl2(int n);

}  // namespace sl4
