#include "vcyc/orientation.hpp"

#include <algorithm>
#include <numeric>

#include "vcyc/errors.hpp"

namespace vcyc {

void OrientationDiagram::check_node(std::size_t i) const {
  if (i >= ids_.size()) throw InvalidArgument("edge endpoint " + std::to_string(i) + " is not a node");
}

std::size_t OrientationDiagram::add_node(std::string id, VCGroup group) {
  if (classify_type(group) != VCType::TypeI) throw TypeMismatch("orientation nodes must be of type I");
  if (find(id)) throw InvalidArgument("duplicate node id '" + id + "'");
  ids_.push_back(std::move(id));
  groups_.emplace_back(std::move(group));
  return ids_.size() - 1;
}

std::size_t OrientationDiagram::add_edge(std::size_t from, std::size_t to, const VCHom& hom) {
  check_node(from);
  check_node(to);
  if (!groups_[from] || !groups_[to] || !(hom.source() == *groups_[from]) || !(hom.target() == *groups_[to]))
    throw OwnerMismatch("edge hom does not connect the endpoint groups");
  const auto q = induced_q_map(hom);
  if (!q) throw InvalidArgument("edge hom has finite image");
  edges_.push_back({from, to, q->sign});
  return edges_.size() - 1;
}

std::size_t OrientationDiagram::add_signed_edge(std::size_t from, std::size_t to, int sign) {
  check_node(from);
  check_node(to);
  if (sign != 1 && sign != -1) throw InvalidArgument("edge sign must be +1 or -1");
  edges_.push_back({from, to, sign});
  return edges_.size() - 1;
}

std::optional<std::size_t> OrientationDiagram::find(const std::string& id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

namespace {

struct ParityUnionFind {
  std::vector<std::size_t> parent;
  std::vector<int> parity;  // value(x) = value(parent[x]) · parity[x]
  std::vector<std::size_t> rank;

  explicit ParityUnionFind(std::size_t n) : parent(n), parity(n, 1), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 1;
    std::size_t r = x;
    while (parent[r] != r) {
      p *= parity[r];
      r = parent[r];
    }
    // Path compression: point x's chain straight at the root.
    int q = p;
    while (parent[x] != r) {
      const std::size_t next = parent[x];
      const int px = parity[x];
      parent[x] = r;
      parity[x] = q;
      q *= px;
      x = next;
    }
    return {r, p};
  }
};

// Undirected path of edge indices from `src` to `dst` in `adj`.
std::vector<std::size_t> tree_path(const OrientationDiagram& d,
                                   const std::vector<std::vector<std::size_t>>& adj, std::size_t src,
                                   std::size_t dst) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(d.node_count(), none);
  std::vector<char> seen(d.node_count(), 0);
  std::vector<std::size_t> queue{src};
  seen[src] = 1;
  for (std::size_t i = 0; i < queue.size() && !seen[dst]; ++i) {
    const std::size_t u = queue[i];
    for (std::size_t e : adj[u]) {
      const SignedEdge& edge = d.edges()[e];
      const std::size_t w = edge.from == u ? edge.to : edge.from;
      if (seen[w]) continue;
      seen[w] = 1;
      via[w] = e;
      queue.push_back(w);
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = dst; v != src;) {
    const SignedEdge& edge = d.edges()[via[v]];
    path.push_back(via[v]);
    v = edge.from == v ? edge.to : edge.from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

OrientationResult solve(const OrientationDiagram& d) {
  const std::size_t n = d.node_count();
  ParityUnionFind uf(n);
  std::vector<std::vector<std::size_t>> forest(n);
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const SignedEdge& edge = d.edges()[e];
    const auto [ru, pu] = uf.find(edge.from);
    const auto [rv, pv] = uf.find(edge.to);
    if (ru == rv) {
      if (pu * edge.sign != pv) {
        auto witness = tree_path(d, forest, edge.from, edge.to);
        witness.push_back(e);
        return Unorientable{std::move(witness)};
      }
      continue;
    }
    // value(v) = value(u)·sign, so root parities satisfy pv·P(rv) = pu·P(ru)·sign.
    std::size_t child = ru, root = rv;
    if (uf.rank[ru] > uf.rank[rv]) std::swap(child, root);
    if (uf.rank[child] == uf.rank[root]) ++uf.rank[root];
    uf.parent[child] = root;
    uf.parity[child] = pu * pv * edge.sign;
    forest[edge.from].push_back(e);
    forest[edge.to].push_back(e);
  }
  Orientation o;
  for (std::size_t v = 0; v < n; ++v) o.assignment.push_back(uf.find(v).second);
  return o;
}

OrientationResult brute_force_solve(const OrientationDiagram& d, const Caps& caps) {
  const std::size_t n = d.node_count();
  if (n > caps.brute_force_nodes)
    throw CapExceeded("brute force limited to " + std::to_string(caps.brute_force_nodes) + " nodes");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Orientation o;
    for (std::size_t v = 0; v < n; ++v) o.assignment.push_back((mask >> v & 1) ? -1 : 1);
    if (satisfies(d, o)) return o;
  }
  // Unsatisfiable: some (v, +) reaches (v, −) in the double cover.
  const std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> via(2 * n, none);
    std::vector<char> seen(2 * n, 0);
    std::vector<std::size_t> queue{2 * start};
    seen[2 * start] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t state = queue[i], u = state / 2, p = state % 2;
      for (std::size_t e = 0; e < d.edges().size(); ++e) {
        const SignedEdge& edge = d.edges()[e];
        const std::size_t flip = edge.sign < 0 ? 1 : 0;
        for (int dir = 0; dir < 2; ++dir) {
          const std::size_t a = dir == 0 ? edge.from : edge.to, b = dir == 0 ? edge.to : edge.from;
          if (a != u) continue;
          const std::size_t next = 2 * b + (p ^ flip);
          if (seen[next]) continue;
          seen[next] = 1;
          via[next] = e;
          queue.push_back(next);
        }
      }
    }
    if (!seen[2 * start + 1]) continue;
    std::vector<std::size_t> walk;
    for (std::size_t state = 2 * start + 1; state != 2 * start;) {
      const std::size_t e = via[state];
      const SignedEdge& edge = d.edges()[e];
      const std::size_t v = state / 2, p = state % 2;
      const std::size_t prev_node = edge.from == v ? edge.to : edge.from;
      walk.push_back(e);
      state = 2 * prev_node + (p ^ (edge.sign < 0 ? 1 : 0));
    }
    std::reverse(walk.begin(), walk.end());
    return Unorientable{std::move(walk)};
  }
  throw Error("Internal", "unsatisfiable diagram without odd cycle");
}

bool satisfies(const OrientationDiagram& d, const Orientation& o) {
  if (o.assignment.size() != d.node_count()) return false;
  return std::all_of(d.edges().begin(), d.edges().end(), [&o](const SignedEdge& e) {
    return o.assignment[e.from] * e.sign == o.assignment[e.to];
  });
}

int witness_product(const OrientationDiagram& d, const Unorientable& u) {
  int p = 1;
  for (std::size_t e : u.witness) p *= d.edges().at(e).sign;
  return p;
}

bool is_closed_walk(const OrientationDiagram& d, const Unorientable& u) {
  if (u.witness.empty()) return false;
  const SignedEdge& first = d.edges().at(u.witness.front());
  for (std::size_t start : {first.from, first.to}) {
    std::size_t at = start;
    bool ok = true;
    for (std::size_t e : u.witness) {
      const SignedEdge& edge = d.edges().at(e);
      if (edge.from == at) at = edge.to;
      else if (edge.to == at) at = edge.from;
      else {
        ok = false;
        break;
      }
    }
    if (ok && at == start) return true;
  }
  return false;
}

OrientationDiagram dinfty_obstruction_fixture(const VCGroup& ambient) {
  if (classify_type(ambient) == VCType::TypeI) throw TypeMismatch("the obstruction needs a type II ambient group");
  const FiniteGroup& k = ambient.k();
  const VCElement x = ambient.from_side(Side::A, ambient.coset_rep(Side::A));
  const VCElement y = ambient.from_side(Side::B, ambient.coset_rep(Side::B));
  // τ lifts the generator (xy)² of [Q_V, Q_V].
  const VCElement tau = (x * y).pow(2);
  const VCElement tau_inv = tau.inverse();
  std::vector<Elem> psi(k.order());
  for (Elem a = 0; a < k.order(); ++a) psi[a] = (tau * ambient.from_k(a) * tau_inv).k();
  VCGroup w = VCGroup::semidirect(k, GroupAutomorphism(k, psi));
  w.set_name("W = p^-1([Q,Q])");

  const VCElement x_inv = x.inverse();
  std::vector<VCElement> images;
  for (Elem g : k.generators()) images.push_back(w.from_k((x * ambient.from_k(g) * x_inv).k()));
  // x·τ·x⁻¹ = κ·τ⁻¹ with κ ∈ K.
  const VCElement kappa = x * tau * x_inv * tau;
  if (!kappa.in_k()) throw Error("Internal", "conjugate of tau left the expected coset");
  images.push_back(w.element(kappa.k(), -1));

  OrientationDiagram d;
  const std::size_t node = d.add_node("W", w);
  d.add_edge(node, node, VCHom(w, w, std::move(images)));
  return d;
}

}  // namespace vcyc
