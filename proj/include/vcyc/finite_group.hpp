#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vcyc {

/// Index of a group element. Indices, not labels, carry identity.
using Elem = std::uint32_t;

/// Brute-force limits. Every cap can be overridden, either programmatically or
/// through a `key=value,...` string (the CLI `--caps` flag and `VCYC_CAPS`).
struct Caps {
  std::size_t subgroup_order = 64;
  std::size_t automorphism_order = 16;
  std::size_t corpus_order = 8;
  std::size_t semidirect_order = 64;
  std::size_t brute_force_nodes = 20;

  /// Parses `key=value,...` on top of `base`. Unknown keys raise ParseError.
  static Caps parse(std::string_view spec, const Caps& base);
  static Caps parse(std::string_view spec);
  /// Defaults overridden by the `VCYC_CAPS` environment variable, if set.
  static Caps from_environment();

  bool operator==(const Caps&) const = default;
};

/// A finite group given by its full multiplication table.
///
/// Copies share the immutable table, so passing groups by value is cheap and
/// safe across threads.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates the table: square, entries in range, two-sided identity,
  /// Latin-square rows and columns (hence inverses), and associativity
  /// (exhaustive up to order 64, 10^4 sampled triples above).
  static FiniteGroup from_table(std::vector<std::vector<Elem>> rows,
                                std::vector<std::string> labels = {});

  std::size_t order() const noexcept;
  Elem identity() const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const noexcept;
  Elem power(Elem a, std::int64_t n) const;
  Elem conjugate(Elem x, Elem by) const noexcept { return mul(mul(by, x), inv(by)); }
  std::size_t element_order(Elem a) const;

  std::string label(Elem a) const;
  const std::vector<std::string>& labels() const noexcept;
  std::vector<std::vector<Elem>> table() const;

  /// Deterministic generating set: scan indices in order and keep every
  /// element not already in the span of the previously kept ones.
  const std::vector<Elem>& generators() const noexcept;

  bool is_abelian() const;

  /// Same multiplication table (labels are display-only and ignored).
  bool operator==(const FiniteGroup& other) const;

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  std::shared_ptr<const Data> d_;
};

/// A subgroup stored as a sorted, duplicate-free index list.
class Subgroup {
 public:
  /// Validates closure under multiplication and inverses.
  Subgroup(FiniteGroup parent, std::vector<Elem> elements);

  static Subgroup generated_by(const FiniteGroup& parent, std::span<const Elem> gens);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x]; }
  bool contains(const Subgroup& other) const;

  /// Size first, then lexicographic on the element list.
  std::strong_ordering operator<=>(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const;

 private:
  struct Unchecked {};
  Subgroup(FiniteGroup parent, std::vector<Elem> elements, Unchecked);

  FiniteGroup parent_;
  std::vector<Elem> elements_;
  std::vector<bool> mask_;
};

/// A group automorphism stored as the permutation of element indices.
class GroupAutomorphism {
 public:
  /// Validates bijectivity and the homomorphism property on all pairs.
  GroupAutomorphism(FiniteGroup group, std::vector<Elem> image);

  static GroupAutomorphism identity(const FiniteGroup& group);
  /// x ↦ by·x·by⁻¹.
  static GroupAutomorphism conjugation(const FiniteGroup& group, Elem by);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  Elem operator()(Elem x) const noexcept { return image_[x]; }

  /// this ∘ inner.
  GroupAutomorphism after(const GroupAutomorphism& inner) const;
  GroupAutomorphism inverse() const;
  GroupAutomorphism power(std::int64_t n) const;
  std::size_t order() const;
  bool is_identity() const noexcept;

  bool operator==(const GroupAutomorphism& other) const { return image_ == other.image_; }
  auto operator<=>(const GroupAutomorphism& other) const { return image_ <=> other.image_; }

 private:
  struct Unchecked {};
  GroupAutomorphism(FiniteGroup group, std::vector<Elem> image, Unchecked)
      : group_(std::move(group)), image_(std::move(image)) {}

  FiniteGroup group_;
  std::vector<Elem> image_;
};

/// Every subgroup exactly once, sorted by size then lexicographically.
/// Raises CapExceeded above `caps.subgroup_order`.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps = {});

bool is_normal(const Subgroup& s);

/// True iff `aut` maps `s` onto itself.
bool is_invariant(const Subgroup& s, const GroupAutomorphism& aut);

/// The subgroup K₁·K₂ of two normal subgroups. Raises NotNormal otherwise.
Subgroup product_subgroup(const Subgroup& k1, const Subgroup& k2);

Subgroup center(const FiniteGroup& g);

/// The full automorphism group. Raises CapExceeded above
/// `caps.automorphism_order`. Sorted by image permutation; identity first.
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, const Caps& caps = {});

/// If the assignment gens[i] ↦ images[i] extends to a homomorphism
/// src → tgt, returns the full element map. `gens` must generate `src`.
std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& src,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images,
                                                     const FiniteGroup& tgt);

bool is_homomorphism(const FiniteGroup& src, std::span<const Elem> map, const FiniteGroup& tgt);
bool is_injective(std::span<const Elem> map);

/// Some isomorphism a → b, if one exists (backtracking over generator images).
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Direct product; element (x, y) has index x·|b| + y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace vcyc
