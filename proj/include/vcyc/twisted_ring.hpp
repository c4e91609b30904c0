#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vcyc/coeff_ring.hpp"
#include "vcyc/finite_group.hpp"
#include "vcyc/rng.hpp"

namespace vcyc {

class GroupRingElement;

/// The group ring R[G] of a finite group. The coefficient rings supported
/// here have no ring automorphism other than the identity, so the
/// coefficient twisting is always trivial.
class TwistedGroupRing {
 public:
  TwistedGroupRing(FiniteGroup group, CoeffRing coeffs);

  const FiniteGroup& group() const noexcept { return d_->group; }
  const CoeffRing& coeffs() const noexcept { return d_->coeffs; }

  GroupRingElement zero() const;
  GroupRingElement one() const;
  /// c·g.
  GroupRingElement basis(Elem g) const;
  GroupRingElement basis(Elem g, Coeff c) const;
  GroupRingElement scalar(Coeff c) const;
  /// At most `max_terms` group elements with random coefficients.
  GroupRingElement random(Rng& rng, std::size_t max_terms = 3) const;

  bool operator==(const TwistedGroupRing& o) const;

 private:
  struct Data {
    FiniteGroup group;
    CoeffRing coeffs;
  };
  std::shared_ptr<const Data> d_;
};

/// Σ c_g·g, stored densely over the group indices.
class GroupRingElement {
 public:
  const TwistedGroupRing& ring() const noexcept { return ring_; }
  Coeff coeff(Elem g) const { return c_.at(g); }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;
  std::string to_string() const;

  /// RingMismatch across rings.
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement scaled(Coeff c) const;
  /// Σ c_g·φ(g).
  GroupRingElement twisted(const GroupAutomorphism& phi) const;

  bool operator==(const GroupRingElement& o) const { return ring_ == o.ring_ && c_ == o.c_; }

 private:
  friend class TwistedGroupRing;
  GroupRingElement(TwistedGroupRing ring, std::vector<Coeff> c) : ring_(std::move(ring)), c_(std::move(c)) {}
  TwistedGroupRing ring_;
  std::vector<Coeff> c_;
};

/// R[G] → R[G'] induced by the group map `map` (indices of G to G').
GroupRingElement map_elements(const GroupRingElement& x, const std::vector<Elem>& map,
                              const TwistedGroupRing& target);

class TwistedPolyElement;

/// RG_φ[t] (or the Laurent ring RG_φ[t, t⁻¹]) with t·λ = φ(λ)·t. An optional
/// coefficient unit u scales by u^j when passing t^j: λtⁱ·μtʲ =
/// uʲ·λ·φⁱ(μ)·tⁱ⁺ʲ. For u ≠ ±1 this product is not associative; u = 1 is
/// the default and gives the usual twisted polynomial ring.
class TwistedPolyRing {
 public:
  TwistedPolyRing(TwistedGroupRing base, GroupAutomorphism phi, bool laurent = false);
  TwistedPolyRing(TwistedGroupRing base, GroupAutomorphism phi, bool laurent, Coeff unit);

  const TwistedGroupRing& base() const noexcept { return d_->base; }
  const GroupAutomorphism& phi() const noexcept { return d_->phi; }
  const GroupAutomorphism& phi_power(std::int64_t i) const;
  bool laurent() const noexcept { return d_->laurent; }
  Coeff unit() const noexcept { return d_->unit; }

  TwistedPolyElement zero() const;
  TwistedPolyElement one() const;
  /// tⁱ.
  TwistedPolyElement t(std::int64_t i = 1) const;
  /// λ·tⁱ.
  TwistedPolyElement monomial(const GroupRingElement& lambda, std::int64_t i = 0) const;
  /// Degrees in [0, max_degree] (or [-max_degree, max_degree] for Laurent).
  TwistedPolyElement random(Rng& rng, std::int64_t max_degree = 3, std::size_t max_terms = 3) const;

  bool operator==(const TwistedPolyRing& o) const;

 private:
  struct Data {
    TwistedGroupRing base;
    GroupAutomorphism phi;
    bool laurent;
    Coeff unit;
    std::vector<GroupAutomorphism> powers;  // φ^0 .. φ^{ord-1}
  };
  std::shared_ptr<const Data> d_;
};

/// Σ λᵢ·tⁱ with no zero coefficient stored.
class TwistedPolyElement {
 public:
  using Terms = std::map<std::int64_t, GroupRingElement>;

  const TwistedPolyRing& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  /// λᵢ (zero if absent).
  GroupRingElement coefficient(std::int64_t i) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest exponent; -1 for zero.
  std::int64_t degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  std::string to_string() const;

  TwistedPolyElement operator+(const TwistedPolyElement& o) const;
  TwistedPolyElement operator-(const TwistedPolyElement& o) const;
  TwistedPolyElement operator-() const;
  TwistedPolyElement operator*(const TwistedPolyElement& o) const;

  bool operator==(const TwistedPolyElement& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

 private:
  friend class TwistedPolyRing;
  friend TwistedPolyElement poly_mul(const TwistedPolyElement&, const TwistedPolyElement&);
  explicit TwistedPolyElement(TwistedPolyRing ring) : ring_(std::move(ring)) {}
  void accumulate(std::int64_t i, const GroupRingElement& lambda);
  TwistedPolyRing ring_;
  Terms terms_;
};

/// RingMismatch unless both factors live in the same ring.
TwistedPolyElement poly_mul(const TwistedPolyElement& x, const TwistedPolyElement& y);
/// λ₀, the value at t = 0. InvalidArgument over a Laurent ring.
GroupRingElement ev_zero(const TwistedPolyElement& x);

/// Dense matrix over a ring of elements E; the map of row vectors x ↦ x·A.
template <class E>
struct RingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<E> entries;

  E& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const E& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  bool operator==(const RingMatrix&) const = default;

  static RingMatrix filled(std::size_t r, std::size_t c, const E& value) {
    return RingMatrix{r, c, std::vector<E>(r * c, value)};
  }
};

using GroupRingMatrix = RingMatrix<GroupRingElement>;
using PolyMatrix = RingMatrix<TwistedPolyElement>;

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
GroupRingMatrix mat_mul(const GroupRingMatrix& a, const GroupRingMatrix& b);

/// H ⊆ K of finite index with automorphisms φ of H and ψ of K, ψ∘i = i∘φ,
/// and representatives k₁..k_l with K = Hk₁ ⊔ … ⊔ Hk_l.
struct InclusionDatum {
  FiniteGroup h;
  FiniteGroup k;
  std::vector<Elem> emb;
  GroupAutomorphism phi;
  GroupAutomorphism psi;
  std::vector<Elem> reps;

  /// InvalidArgument when any invariant fails.
  static InclusionDatum make(FiniteGroup h, FiniteGroup k, std::vector<Elem> emb, GroupAutomorphism phi,
                             GroupAutomorphism psi, std::vector<Elem> reps);
  /// H = K, φ = ψ, one representative.
  static InclusionDatum trivial(const FiniteGroup& k, const GroupAutomorphism& psi);
  /// H = s as a group of its own (elements in the order of s.elements()),
  /// φ = ψ restricted, and the right transversal that picks the smallest
  /// index of each coset. InvalidArgument unless ψ maps s onto itself.
  static InclusionDatum from_subgroup(const Subgroup& s, const GroupAutomorphism& psi);
  std::size_t index() const noexcept { return reps.size(); }
  /// (h, i) with g = emb(h)·kᵢ'; kᵢ' = ψᵐ(kᵢ).
  std::pair<Elem, std::size_t> decompose(Elem g, std::int64_t m = 0) const;
};

/// The four rings of a datum: RH, RK, RH_φ[t], RK_ψ[t].
struct InclusionRings {
  TwistedGroupRing rh;
  TwistedGroupRing rk;
  TwistedPolyRing rh_t;
  TwistedPolyRing rk_t;
};
InclusionRings inclusion_rings(const InclusionDatum& d, const CoeffRing& r);

/// Ri[t] : RH_φ[t] → RK_ψ[t].
TwistedPolyElement include_poly(const InclusionRings& rings, const InclusionDatum& d, const TwistedPolyElement& y);
/// α(x₁..x_l) = Σ xᵢ·kᵢ and its inverse.
GroupRingElement alpha(const InclusionRings& rings, const InclusionDatum& d, const std::vector<GroupRingElement>& x);
std::vector<GroupRingElement> alpha_inverse(const InclusionRings& rings, const InclusionDatum& d,
                                            const GroupRingElement& z);
/// β(y₁..y_l) = Σ yᵢ·kᵢ and its inverse, computed degreewise against the
/// translated representatives ψᵐ(kᵢ).
TwistedPolyElement beta(const InclusionRings& rings, const InclusionDatum& d,
                        const std::vector<TwistedPolyElement>& y);
std::vector<TwistedPolyElement> beta_inverse(const InclusionRings& rings, const InclusionDatum& d,
                                             const TwistedPolyElement& z);

/// i^*(i_*(p)) for a map p of free RH-modules (resp. RH_φ[t]-modules); an
/// (l·rows) × (l·cols) matrix in the bases α (resp. β). RingMismatch if p is
/// not over RH (resp. RH_φ[t]).
GroupRingMatrix induction_restriction_transfer(const InclusionRings& rings, const InclusionDatum& d,
                                               const GroupRingMatrix& p);
PolyMatrix induction_restriction_transfer(const InclusionRings& rings, const InclusionDatum& d,
                                          const PolyMatrix& p);

struct CheckOutcome {
  bool pass = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// Both composites of the square identifying T(P) for P = RK_ψ[t]^n,
/// evaluated on the basis h ⊗ tᵐ·eᵢⱼ (h ∈ H, m ∈ {0, 1}).
CheckOutcome natural_iso_T(const InclusionRings& rings, const InclusionDatum& d, std::size_t n);
/// Naturality of T along u : RK_ψ[t]^n → RK_ψ[t]^{n'}, on `samples` random
/// elements h ⊗ x.
CheckOutcome natural_iso_T_naturality(const InclusionRings& rings, const InclusionDatum& d, const PolyMatrix& u,
                                      Rng& rng, std::size_t samples);

/// η(Σ λᵢtⁱ) = Σ λᵢkⁱtⁱ from RK_φ[t] with φ = conjugation by k into the
/// untwisted RK[t]. TwistMismatch unless x's twist is x ↦ k·x·k⁻¹.
TwistedPolyElement eta_inner(Elem k, const TwistedPolyElement& x);
TwistedPolyRing untwisted(const TwistedPolyRing& r);

/// K ⋊_φ Z/s with s = ord(φ), the inclusion of K, ψ = conjugation by t, and
/// the resulting datum (H = K, reps tʲ). CapExceeded if |K|·s exceeds
/// caps.semidirect_order.
struct SemidirectEmbedding {
  FiniteGroup ambient;
  std::vector<Elem> inclusion;
  Elem t;
  GroupAutomorphism psi;
  InclusionDatum datum;
};
SemidirectEmbedding semidirect_embed(const FiniteGroup& k, const GroupAutomorphism& phi, const Caps& caps = {});

}  // namespace vcyc
