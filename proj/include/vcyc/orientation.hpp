#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vcyc/finite_group.hpp"
#include "vcyc/vc_group.hpp"

namespace vcyc {

struct SignedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int sign = 1;
};

/// A finite diagram of type I groups. Each edge u → v carries the sign of
/// Q_f on reference generators; an orientation is ε with ε(u)·sign = ε(v).
class OrientationDiagram {
 public:
  /// TypeMismatch unless `group` is of type I.
  std::size_t add_node(std::string id, VCGroup group);
  /// Sign taken from induced_q_map. InvalidArgument if `hom` has finite
  /// image, OwnerMismatch if its groups are not the endpoint groups.
  std::size_t add_edge(std::size_t from, std::size_t to, const VCHom& hom);
  /// An edge with an explicitly given sign (no hom attached).
  std::size_t add_signed_edge(std::size_t from, std::size_t to, int sign);

  std::size_t node_count() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<std::optional<VCGroup>>& groups() const noexcept { return groups_; }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> find(const std::string& id) const;

 private:
  void check_node(std::size_t i) const;

  std::vector<std::string> ids_;
  std::vector<std::optional<VCGroup>> groups_;
  std::vector<SignedEdge> edges_;
};

struct Orientation {
  std::vector<int> assignment;  ///< ±1 per node
};

struct Unorientable {
  /// Edge indices forming a closed walk whose sign product is −1.
  std::vector<std::size_t> witness;
};

using OrientationResult = std::variant<Orientation, Unorientable>;

/// Union-find with parity. Witness: tree path between the endpoints of the
/// first contradicting edge, then that edge.
OrientationResult solve(const OrientationDiagram& d);

/// Exhaustive search over all 2ⁿ assignments; CapExceeded above
/// `caps.brute_force_nodes`. Witness found on the parity double cover.
OrientationResult brute_force_solve(const OrientationDiagram& d, const Caps& caps = {});

bool satisfies(const OrientationDiagram& d, const Orientation& o);
/// Product of the witness edge signs.
int witness_product(const OrientationDiagram& d, const Unorientable& u);
/// True iff the witness edges, read undirected, form a closed walk.
bool is_closed_walk(const OrientationDiagram& d, const Unorientable& u);

/// One node W = p_V⁻¹([Q_V, Q_V]) with the self-loop w ↦ x·w·x⁻¹ for a lift
/// x of a reflection. TypeMismatch if `ambient` is of type I.
OrientationDiagram dinfty_obstruction_fixture(const VCGroup& ambient);

}  // namespace vcyc
