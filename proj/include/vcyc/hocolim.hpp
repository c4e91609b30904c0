#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vcyc/coeff_ring.hpp"
#include "vcyc/index_cat.hpp"
#include "vcyc/twisted_ring.hpp"

namespace vcyc {

/// An object (c, X) of ∫_C F with F = FGF(R) twisted by the action; X = R^rank.
struct HocolimObject {
  std::int64_t base = 0;
  std::size_t rank = 0;
  bool operator==(const HocolimObject&) const = default;
};

/// A morphism Σ_f T_f ∘ φ_f of ∫_C F. Keys are morphisms f : dom.base →
/// cod.base of C (elements of the ambient group); φ_f : X → f*Y is a
/// cod.rank × dom.rank matrix. No zero matrix is stored, so equality of
/// morphisms is equality of term maps.
class HocolimMorphism {
 public:
  using Terms = std::map<VCElement, Matrix>;

  /// The zero morphism.
  HocolimMorphism(IndexCat cat, Coefficients coeffs, HocolimObject dom, HocolimObject cod);

  static HocolimMorphism identity(const IndexCat& cat, const Coefficients& coeffs, HocolimObject x);
  /// T_f ∘ φ.
  static HocolimMorphism term(const IndexCat& cat, const Coefficients& coeffs, HocolimObject dom,
                              HocolimObject cod, const VCElement& f, const Matrix& phi);
  /// The structural morphism T_f : (a, f*X) → (f·a, X).
  static HocolimMorphism structural(const IndexCat& cat, const Coefficients& coeffs, const VCElement& f,
                                    std::int64_t a, std::size_t rank);
  /// Up to `max_terms` random terms with keys of |q| ≤ max_q.
  static HocolimMorphism random(Rng& rng, const IndexCat& cat, const Coefficients& coeffs, HocolimObject dom,
                                HocolimObject cod, std::size_t max_terms = 3, std::int64_t max_q = 3);

  /// Adds T_f ∘ φ to this morphism. FilterViolation for an invalid key,
  /// ShapeMismatch for a matrix of the wrong shape.
  void add_term(const VCElement& f, const Matrix& phi);

  const IndexCat& cat() const noexcept { return cat_; }
  const Coefficients& coeffs() const noexcept { return coeffs_; }
  const HocolimObject& dom() const noexcept { return dom_; }
  const HocolimObject& cod() const noexcept { return cod_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::string to_string() const;

  bool operator==(const HocolimMorphism& o) const;

 private:
  IndexCat cat_;
  Coefficients coeffs_;
  HocolimObject dom_;
  HocolimObject cod_;
  Terms terms_;
};

/// g ∘ f: (T_a φ) ∘ (T_b ψ) = T_{ab} ∘ (b*φ · ψ).
HocolimMorphism compose(const HocolimMorphism& g, const HocolimMorphism& f);
HocolimMorphism add(const HocolimMorphism& a, const HocolimMorphism& b);
HocolimMorphism negate(const HocolimMorphism& a);

/// X ⊕ Y built at the base of X, as (c, X ⊕ f*Y) with f : c → d the
/// connecting isomorphism, together with its injections and projections.
struct DirectSum {
  HocolimObject object;
  HocolimMorphism in1, in2, out1, out2;
};
DirectSum direct_sum(const IndexCat& cat, const Coefficients& coeffs, HocolimObject x, HocolimObject y);
/// a ⊕ b : dom(a) ⊕ dom(b) → cod(a) ⊕ cod(b).
HocolimMorphism direct_sum(const HocolimMorphism& a, const HocolimMorphism& b);

/// W_*: T_f ↦ T_{W(f)} with matrices unchanged. NotAFunctor if `m` does not
/// live over W's source or W does not preserve the coefficient action.
HocolimMorphism pushforward(const IndexFunctor& w, const HocolimMorphism& m);
/// Pushforward along the inclusion into the larger category `cat`.
HocolimMorphism include(const HocolimMorphism& m, const IndexCat& cat);
/// Drops every term whose key is not a morphism of `kernel` and re-reads the
/// rest over `kernel`.
HocolimMorphism ev_sigma(const HocolimMorphism& m, const IndexCat& kernel);

/// Fiberwise additive functor on coefficients: a pipeline of ring
/// reductions and rank doublings X ↦ X ⊕ X.
class CoeffTransformation {
 public:
  static CoeffTransformation identity(const Coefficients& c);
  /// Z → Z/n; the action unit is reduced as well.
  static CoeffTransformation reduction(const Coefficients& c, std::int64_t n);
  static CoeffTransformation rank_doubling(const Coefficients& c);

  const Coefficients& source() const noexcept { return source_; }
  const Coefficients& target() const noexcept { return target_; }
  std::size_t map_rank(std::size_t r) const noexcept;
  Matrix map_matrix(const Matrix& m) const;
  std::string describe() const;

 private:
  enum class Step { Reduce, Double };
  Coefficients source_;
  Coefficients target_;
  std::vector<std::pair<Step, std::int64_t>> steps_;
  friend CoeffTransformation compose(const CoeffTransformation&, const CoeffTransformation&);
};

/// second ∘ first.
CoeffTransformation compose(const CoeffTransformation& second, const CoeffTransformation& first);

/// ∫S: keeps keys, applies S to every matrix. NotNatural if `m` does not
/// carry the source coefficients of S.
HocolimMorphism map_int_S(const CoeffTransformation& s, const HocolimMorphism& m);

/// σ̄ with p_V(σ̄) = σ, where V = p⁻¹(mZ) and σ has sign `sign`.
class SigmaLift {
 public:
  /// LiftMismatch unless p(lift) = m·sign.
  SigmaLift(VCGroup ambient, std::int64_t m, int sign, VCElement lift);
  static SigmaLift standard(const VCGroup& ambient, std::int64_t m = 1, int sign = 1);

  const VCGroup& ambient() const noexcept { return ambient_; }
  std::int64_t index() const noexcept { return m_; }
  int sign() const noexcept { return sign_; }
  const VCElement& lift() const noexcept { return lift_; }

  IndexCat v_hat() const { return IndexCat::monoid(ambient_, m_, MorphismFilter::All, sign_); }
  IndexCat v_sigma_hat() const { return IndexCat::monoid(ambient_, m_, MorphismFilter::Sigma, sign_); }
  IndexCat k_hat() const { return IndexCat::monoid(ambient_, m_, MorphismFilter::Kernel, sign_); }
  IndexCat g_v() const { return IndexCat::transport(ambient_, m_, MorphismFilter::All, sign_); }
  IndexCat g_v_sigma() const { return IndexCat::transport(ambient_, m_, MorphismFilter::Sigma, sign_); }
  IndexCat g_v_k() const { return IndexCat::transport(ambient_, m_, MorphismFilter::Kernel, sign_); }
  IndexCat g_k() const { return IndexCat::transport(ambient_, 0); }

 private:
  VCGroup ambient_;
  std::int64_t m_;
  int sign_;
  VCElement lift_;
};

/// Φⁿ on B = ∫_K̂ 𝒜: T_k ↦ T_{σ̄⁻ⁿkσ̄ⁿ}, φ ↦ (σ̄ⁿ)*φ.
HocolimMorphism phi_twist(const HocolimMorphism& m, const SigmaLift& s, std::int64_t power = 1);
/// R_σ on ∫ over G(G/K).
HocolimMorphism r_sigma(const HocolimMorphism& m, const SigmaLift& s);

/// A morphism Σ_n T_{σⁿ} ∘ β_n of ∫_Q̂ B, B = ∫_K̂ 𝒜 with σ acting by Φ.
/// Each β_n : X → Φⁿ(Y) is a morphism of B. With `sigma_only`, the morphism
/// lives over Q̂[σ] and only n ≥ 0 is allowed.
class QHatMorphism {
 public:
  using Terms = std::map<std::int64_t, HocolimMorphism>;

  QHatMorphism(SigmaLift lift, Coefficients coeffs, std::size_t dom_rank, std::size_t cod_rank,
               bool sigma_only = false);
  static QHatMorphism identity(const SigmaLift& lift, const Coefficients& coeffs, std::size_t rank);
  static QHatMorphism random(Rng& rng, const SigmaLift& lift, const Coefficients& coeffs, std::size_t dom_rank,
                             std::size_t cod_rank, bool sigma_only, std::size_t max_terms = 3);

  /// FilterViolation for n < 0 over Q̂[σ] or β not over K̂.
  void add_term(std::int64_t n, const HocolimMorphism& beta);

  const SigmaLift& lift() const noexcept { return lift_; }
  const Coefficients& coeffs() const noexcept { return coeffs_; }
  std::size_t dom_rank() const noexcept { return dom_; }
  std::size_t cod_rank() const noexcept { return cod_; }
  bool sigma_only() const noexcept { return sigma_only_; }
  const Terms& terms() const noexcept { return terms_; }
  std::string to_string() const;

  bool operator==(const QHatMorphism& o) const;

 private:
  SigmaLift lift_;
  Coefficients coeffs_;
  std::size_t dom_, cod_;
  bool sigma_only_;
  Terms terms_;
};

/// (T_{σᵃ} β) ∘ (T_{σᵇ} γ) = T_{σᵃ⁺ᵇ} ∘ (Φᵇ(β) ∘ γ).
QHatMorphism compose(const QHatMorphism& g, const QHatMorphism& f);
/// i_B : B → ∫_Q̂ B (into Q̂[σ] with `sigma_only`).
QHatMorphism i_b(const HocolimMorphism& beta, const SigmaLift& s, bool sigma_only = false);
/// ∫_{Q̂[σ]} B → B, T_{σⁿ} ↦ 0 for n > 0.
HocolimMorphism ev_b_sigma(const QHatMorphism& m);
/// ∫_{Q̂[σ]} B ⊂ ∫_Q̂ B.
QHatMorphism include_full(const QHatMorphism& m);
/// T(X) = T_σ : Φ(X) → X.
QHatMorphism structural_t(const SigmaLift& s, const Coefficients& coeffs, std::size_t rank);
/// Ψ : Σ_n T_{σⁿ} Σ_k T_k φ_{k,n} ↦ Σ T_{σ̄ⁿk} φ_{k,n}; lands over V̂[σ] for
/// Q̂[σ]-morphisms and over V̂ otherwise.
HocolimMorphism psi_iso(const QHatMorphism& m);
/// Ψ⁻¹ via v = σ̄ⁿ·k with n = p_V(v)·sign.
QHatMorphism psi_inverse(const HocolimMorphism& m, const SigmaLift& s);
/// S(X) = T_σ̄ : (eK, σ̄*X) → (σ̄K, X) over G(G/K).
HocolimMorphism structural_s(const SigmaLift& s, const Coefficients& coeffs, std::size_t rank);

/// Matrix over the Laurent ring R[K]_φ[t, t⁻¹] with (i, j) entry
/// Σ_f (φ_f)_{ij}·k_f·t^{n_f}. NotMonoidCat over transport categories.
PolyMatrix to_group_ring_matrix(const HocolimMorphism& m);
/// The Laurent ring receiving `to_group_ring_matrix` for morphisms over `cat`.
TwistedPolyRing group_ring_for(const IndexCat& cat, const Coefficients& coeffs);

}  // namespace vcyc
