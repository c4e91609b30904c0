#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcyc/finite_group.hpp"
#include "vcyc/rng.hpp"
#include "vcyc/smith.hpp"

namespace vcyc {

enum class VCType { TypeI, TypeII };
enum class Side : std::uint8_t { A, B };

class VCElement;
class VCGroup;
AbelianInvariants abelianization(const VCGroup& v);

/// An infinite virtually cyclic group in one of two normal-form models:
///
///   SemidirectZ  K ⋊_φ Z, element (k, n) = k·tⁿ, t·k·t⁻¹ = φ(k);
///   Amalgam      A *_K B with [A:K] = [B:K] = 2.
///
/// Copies share state. Two VCGroup values are the same group iff they are
/// copies of one constructed value; elements of different groups never mix.
class VCGroup {
 public:
  enum class Variant { SemidirectZ, Amalgam };

  static VCGroup semidirect(FiniteGroup k, GroupAutomorphism phi);
  /// `emb_a`, `emb_b` map indices of `k` to indices of `a`, `b`.
  static VCGroup amalgam(FiniteGroup a, FiniteGroup b, FiniteGroup k, std::vector<Elem> emb_a,
                         std::vector<Elem> emb_b);
  static VCGroup integers();
  /// Z/2 *_1 Z/2.
  static VCGroup infinite_dihedral();

  Variant variant() const noexcept;
  bool is_semidirect() const noexcept { return variant() == Variant::SemidirectZ; }

  /// The finite piece K (for amalgams the amalgamated subgroup).
  const FiniteGroup& k() const noexcept;
  /// SemidirectZ only.
  const GroupAutomorphism& phi() const;
  /// φⁿ for any integer n. SemidirectZ only.
  const GroupAutomorphism& phi_power(std::int64_t n) const;
  /// Amalgam only.
  const FiniteGroup& a() const;
  const FiniteGroup& b() const;
  const std::vector<Elem>& emb_a() const;
  const std::vector<Elem>& emb_b() const;
  /// The fixed non-trivial coset representative of K in the given side.
  Elem coset_rep(Side side) const;

  VCElement identity() const;
  /// (k, n). SemidirectZ only.
  VCElement element(Elem k, std::int64_t n) const;
  /// The reference generator (e, 1) of a SemidirectZ group.
  VCElement t() const;
  /// An element of A or B. Amalgam only.
  VCElement from_side(Side side, Elem x) const;
  /// Image of k ∈ K.
  VCElement from_k(Elem k) const;

  /// Canonical generators: K.generators() then t, or A.generators() then
  /// B.generators().
  std::vector<VCElement> generators() const;

  /// Random element; SemidirectZ exponents lie in [-max_len, max_len],
  /// amalgam words have at most `max_len` letters.
  VCElement random_element(Rng& rng, std::int64_t max_len = 4) const;

  /// Short human-readable description, e.g. "Z3 x|_phi Z".
  std::string describe() const;
  void set_name(std::string name);
  const std::string& name() const noexcept;

  bool operator==(const VCGroup& other) const noexcept { return d_ == other.d_; }

  struct Data;

 private:
  explicit VCGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  std::shared_ptr<Data> d_;
  friend class VCElement;
  friend AbelianInvariants abelianization(const VCGroup& v);
};

struct Letter {
  Side side;
  Elem rep;  ///< index in `a` or `b`
  auto operator<=>(const Letter&) const = default;
};

/// An element in canonical normal form.
///   SemidirectZ: (k, n).
///   Amalgam: reduced alternating word of coset representatives, then k.
class VCElement {
 public:
  const VCGroup& owner() const noexcept { return owner_; }
  Elem k() const noexcept { return k_; }
  std::int64_t n() const noexcept { return n_; }
  const std::vector<Letter>& word() const noexcept { return word_; }

  VCElement operator*(const VCElement& other) const;
  VCElement inverse() const;
  VCElement pow(std::int64_t e) const;
  bool is_identity() const noexcept { return n_ == 0 && word_.empty() && k_ == owner_.k().identity(); }
  /// True iff the element lies in the finite piece K.
  bool in_k() const noexcept { return n_ == 0 && word_.empty(); }

  std::string to_string() const;

  /// Normal-form equality. Elements of different owners compare unequal.
  bool operator==(const VCElement& other) const noexcept;
  /// Normal-form order: exponent, then word, then k. Owners must agree.
  std::strong_ordering operator<=>(const VCElement& other) const;

 private:
  friend class VCGroup;
  VCElement(VCGroup owner, Elem k, std::int64_t n, std::vector<Letter> word)
      : owner_(std::move(owner)), k_(k), n_(n), word_(std::move(word)) {}
  void right_multiply_side(Side side, Elem x);

  VCGroup owner_;
  Elem k_ = 0;
  std::int64_t n_ = 0;
  std::vector<Letter> word_;
};

/// H₁(V) as Zʳ ⊕ torsion, from the full-table presentation.
AbelianInvariants abelianization(const VCGroup& v);
VCType classify_type(const VCGroup& v);

/// K_V as a subgroup of the finite piece K.
Subgroup maximal_finite_normal(const VCGroup& v, const Caps& caps = {});
bool center_is_infinite(const VCGroup& v);

/// Element of Q_V: Z is (shift, false); D∞ = ⟨x, y⟩ is (shift, flip) with
/// x = (0, 1), y = (-1, 1), xy = (1, 0).
struct QElement {
  std::int64_t shift = 0;
  bool flip = false;
  QElement operator*(const QElement& o) const noexcept {
    return {shift + (flip ? -o.shift : o.shift), flip != o.flip};
  }
  bool operator==(const QElement&) const = default;
};

struct QuotientData {
  enum class Kind { InfiniteCyclic, InfiniteDihedral };
  Kind kind;
  Subgroup kv;
  VCGroup group;
  QElement project(const VCElement& x) const;
};

QuotientData quotient_data(const VCGroup& v, const Caps& caps = {});

/// p_V for a SemidirectZ group: (k, n) ↦ n.
std::int64_t project_z(const VCElement& x);

/// A homomorphism given on canonical generators; all defining relations of
/// the source are checked at construction (RelationViolation).
class VCHom {
 public:
  VCHom(VCGroup source, VCGroup target, std::vector<VCElement> generator_images);

  static VCHom identity(const VCGroup& v);
  /// x ↦ w⁻¹·x·w.
  static VCHom conjugation(const VCGroup& v, const VCElement& w);

  const VCGroup& source() const noexcept { return source_; }
  const VCGroup& target() const noexcept { return target_; }
  const std::vector<VCElement>& generator_images() const noexcept { return images_; }

  VCElement operator()(const VCElement& x) const;
  /// this ∘ inner.
  VCHom after(const VCHom& inner) const;

 private:
  VCGroup source_;
  VCGroup target_;
  std::vector<VCElement> images_;
  // Images of every element of the finite pieces (K, or A then B).
  std::vector<VCElement> piece_a_;
  std::vector<VCElement> piece_b_;
};

struct QMap {
  std::int64_t multiplier = 1;  ///< n ≥ 1
  int sign = 1;
  bool operator==(const QMap&) const = default;
};

/// The map Q_V → Q_W on reference generators, or nullopt if f has finite
/// image. TypeMismatch unless both groups are of type I.
std::optional<QMap> induced_q_map(const VCHom& f);

/// Sign of gen(f) computed through the representative w: the sign of
/// c(w)∘f where c(w)(x) = w⁻¹xw. Independent of w ∈ W.
int gen_sign(const VCHom& f, const VCElement& w);

}  // namespace vcyc
