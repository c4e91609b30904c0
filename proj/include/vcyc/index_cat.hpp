#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "vcyc/rng.hpp"
#include "vcyc/vc_group.hpp"

namespace vcyc {

/// Restriction on the morphisms of an index category, read off the relative
/// element r = rep(dst)⁻¹·g·rep(src) ∈ V through q = p_V(r) ∈ Z:
///   All     any r ∈ V;
///   Sigma   q·sign ≥ 0   (the monoid V[σ] generated by K and a lift of σ);
///   Kernel  q = 0        (r ∈ K).
enum class MorphismFilter { All, Sigma, Kernel };

std::string to_string(MorphismFilter f);

/// Index categories over a SemidirectZ ambient G = K ⋊ Z, with p : G → Z.
/// V = p⁻¹(mZ) for m ≥ 1; K_V = K. σ is the generator of Q_V = V/K whose
/// lifts have p = m·sign.
///
///   monoid(G, m, f, s)      the one-object category V̂ (object 0), morphisms
///                           the elements of V passing f.
///   transport(G, m, f, s)   the transport groupoid of G acting on G/V with
///                           the relative filter f. Object a ∈ [0, m) is the
///                           coset (e, a)·V; g : a → b iff g·(e,a)V = (e,b)V.
///   transport(G, 0)         G acting on G/K; objects are all integers a,
///                           standing for (e, a)·K.
///
/// Copies share a lazily filled, append-only cache of coset representatives
/// that is safe for concurrent readers.
class IndexCat {
 public:
  enum class Kind { Monoid, Transport };

  static IndexCat monoid(VCGroup ambient, std::int64_t m = 1, MorphismFilter f = MorphismFilter::All,
                         int sign = 1);
  static IndexCat transport(VCGroup ambient, std::int64_t m, MorphismFilter f = MorphismFilter::All,
                            int sign = 1);

  Kind kind() const noexcept;
  const VCGroup& ambient() const noexcept;
  std::int64_t index() const noexcept;
  MorphismFilter filter() const noexcept;
  int sign() const noexcept;

  /// Same category with another filter.
  IndexCat with_filter(MorphismFilter f) const;

  bool is_object(std::int64_t a) const noexcept;
  /// (e, a) for transport categories, e for monoids.
  VCElement representative(std::int64_t a) const;
  /// g·a on objects.
  std::int64_t act(const VCElement& g, std::int64_t a) const;
  VCElement relative(std::int64_t src, std::int64_t dst, const VCElement& g) const;
  /// p_V(r)·sign for the relative element r; the exponent of σ in Q_V.
  std::int64_t q_exponent(std::int64_t src, std::int64_t dst, const VCElement& g) const;
  bool is_morphism(std::int64_t src, std::int64_t dst, const VCElement& g) const;
  /// Throws FilterViolation (or OwnerMismatch) unless `is_morphism`.
  void require_morphism(std::int64_t src, std::int64_t dst, const VCElement& g) const;

  std::int64_t random_object(Rng& rng) const;
  /// A random morphism src → dst with |q| ≤ max_q.
  VCElement random_morphism(Rng& rng, std::int64_t src, std::int64_t dst, std::int64_t max_q = 3) const;
  /// rep(dst)·rep(src)⁻¹, an isomorphism src → dst. NoIsoAvailable if it
  /// or its inverse is rejected by the filter.
  VCElement connecting_iso(std::int64_t src, std::int64_t dst) const;

  std::string describe() const;
  /// Structural equality: same ambient, kind, index, filter, and sign.
  bool operator==(const IndexCat& o) const noexcept;

  struct Data;

 private:
  explicit IndexCat(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  std::shared_ptr<Data> d_;
};

/// A functor between index categories, given on objects and morphisms.
class IndexFunctor {
 public:
  using ObjectMap = std::function<std::int64_t(std::int64_t)>;
  using MorphismMap = std::function<VCElement(std::int64_t src, std::int64_t dst, const VCElement&)>;

  IndexFunctor(std::string name, IndexCat source, IndexCat target, ObjectMap objects, MorphismMap morphisms);

  static IndexFunctor identity(const IndexCat& c);
  /// Inclusion of a subcategory with the same objects.
  static IndexFunctor inclusion(const IndexCat& sub, const IndexCat& cat);
  /// e(G/H) : Ĥ → G(G/H), g ↦ (g : eH → eH). `source` is a monoid
  /// category; `target` a transport category whose base object 0 it fixes.
  static IndexFunctor unit(const IndexCat& source, const IndexCat& target);
  /// Inverse equivalence of `unit`: (g : a → b) ↦ rep(b)⁻¹·g·rep(a).
  static IndexFunctor unit_inverse(const IndexCat& source, const IndexCat& target);
  /// G(pr) : G(G/H) → G(G/H') for H ⊆ H', a ↦ a mod m', g ↦ g.
  static IndexFunctor projection(const IndexCat& source, const IndexCat& target);
  /// R_σ on G(G/K): a ↦ a + p(lift), g ↦ g.
  static IndexFunctor right_translation(const IndexCat& c, const VCElement& lift);

  const std::string& name() const noexcept { return name_; }
  const IndexCat& source() const noexcept { return source_; }
  const IndexCat& target() const noexcept { return target_; }
  std::int64_t object(std::int64_t a) const { return objects_(a); }
  VCElement morphism(std::int64_t src, std::int64_t dst, const VCElement& g) const {
    return morphisms_(src, dst, g);
  }

  /// Samples objects, morphisms, and composable pairs; throws NotAFunctor on
  /// the first failure of well-definedness, identities, or composition.
  void validate(Rng& rng, std::size_t samples = 100) const;

 private:
  std::string name_;
  IndexCat source_;
  IndexCat target_;
  ObjectMap objects_;
  MorphismMap morphisms_;
};

/// second ∘ first.
IndexFunctor compose(const IndexFunctor& second, const IndexFunctor& first);

}  // namespace vcyc
