#include "vcyc/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "vcyc/errors.hpp"
#include "vcyc/rng.hpp"

namespace vcyc {

namespace {

constexpr std::size_t kExhaustiveAssociativityOrder = 64;
constexpr std::size_t kSampledAssociativityTriples = 10000;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Caps Caps::parse(std::string_view spec) { return parse(spec, Caps{}); }

Caps Caps::parse(std::string_view spec, const Caps& base) {
  Caps caps = base;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("caps entry '" + item + "' is not key=value");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw ParseError("caps value for '" + key + "' is not a non-negative integer");
    if (key == "subgroup_order") caps.subgroup_order = v;
    else if (key == "automorphism_order") caps.automorphism_order = v;
    else if (key == "corpus_order") caps.corpus_order = v;
    else if (key == "semidirect_order") caps.semidirect_order = v;
    else if (key == "brute_force_nodes") caps.brute_force_nodes = v;
    else throw ParseError("unknown caps key '" + key + "'");
  }
  return caps;
}

Caps Caps::from_environment() {
  const char* env = std::getenv("VCYC_CAPS");
  return env ? parse(env) : Caps{};
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Data {
  std::size_t order = 1;
  Elem identity = 0;
  std::vector<Elem> mul{0};
  std::vector<Elem> inv{0};
  std::vector<std::string> labels{"e"};
  std::vector<Elem> generators;
};

FiniteGroup::FiniteGroup() : d_(std::make_shared<const Data>()) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> rows,
                                    std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidArgument("group table must be non-empty");
  auto data = std::make_shared<Data>();
  data->order = n;
  data->mul.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidArgument("group table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) throw InvalidArgument("group table entry out of range");
      data->mul[i * n + j] = rows[i][j];
    }
  }
  const auto at = [&](std::size_t a, std::size_t b) { return data->mul[a * n + b]; };

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]++) throw InvalidArgument("group table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]++) throw InvalidArgument("group table column is not a permutation");
    }
  }

  std::optional<Elem> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = static_cast<Elem>(e);
  }
  if (!identity) throw InvalidArgument("group table has no two-sided identity");
  data->identity = *identity;

  data->inv.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (at(x, y) == *identity) {
        if (at(y, x) != *identity) throw InvalidArgument("group table has a one-sided inverse");
        data->inv[x] = static_cast<Elem>(y);
        break;
      }
    }
  }

  if (n <= kExhaustiveAssociativityOrder) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InvalidArgument("group table is not associative");
  } else {
    Rng rng(0x5eed);
    for (std::size_t i = 0; i < kSampledAssociativityTriples; ++i) {
      const auto a = rng.index(n), b = rng.index(n), c = rng.index(n);
      if (at(at(a, b), c) != at(a, at(b, c))) throw InvalidArgument("group table is not associative");
    }
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    throw InvalidArgument("label count does not match group order");
  }
  data->labels = std::move(labels);

  // Greedy generating set.
  std::vector<char> span(n, 0);
  span[*identity] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (span[x]) continue;
    data->generators.push_back(static_cast<Elem>(x));
    std::deque<Elem> queue;
    for (std::size_t y = 0; y < n; ++y)
      if (span[y]) queue.push_back(static_cast<Elem>(y));
    while (!queue.empty()) {
      const Elem y = queue.front();
      queue.pop_front();
      for (Elem g : data->generators) {
        const Elem z = at(y, g);
        if (!span[z]) {
          span[z] = 1;
          queue.push_back(z);
        }
      }
    }
  }
  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::order() const noexcept { return d_->order; }
Elem FiniteGroup::identity() const noexcept { return d_->identity; }
Elem FiniteGroup::mul(Elem a, Elem b) const noexcept { return d_->mul[a * d_->order + b]; }
Elem FiniteGroup::inv(Elem a) const noexcept { return d_->inv[a]; }

Elem FiniteGroup::power(Elem a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Elem result = identity();
  Elem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::string FiniteGroup::label(Elem a) const { return d_->labels.at(a); }
const std::vector<std::string>& FiniteGroup::labels() const noexcept { return d_->labels; }

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = d_->mul[i * n + j];
  return rows;
}

const std::vector<Elem>& FiniteGroup::generators() const noexcept { return d_->generators; }

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return d_ == other.d_ || (d_->order == other.d_->order && d_->mul == other.d_->mul);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> elements, Unchecked)
    : parent_(std::move(parent)), elements_(std::move(elements)), mask_(parent_.order(), false) {
  for (Elem x : elements_) mask_[x] = true;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), mask_(parent_.order(), false) {
  for (Elem x : elements) {
    if (x >= parent_.order()) throw InvalidArgument("subgroup element out of range");
    mask_[x] = true;
  }
  for (Elem x = 0; x < parent_.order(); ++x)
    if (mask_[x]) elements_.push_back(x);
  if (!mask_[parent_.identity()]) throw InvalidArgument("subset does not contain the identity");
  for (Elem a : elements_) {
    if (!mask_[parent_.inv(a)]) throw InvalidArgument("subset is not closed under inverses");
    for (Elem b : elements_)
      if (!mask_[parent_.mul(a, b)]) throw InvalidArgument("subset is not closed under multiplication");
  }
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::span<const Elem> gens) {
  std::vector<char> in(parent.order(), 0);
  std::deque<Elem> queue{parent.identity()};
  in[parent.identity()] = 1;
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem g : gens) {
      const Elem y = parent.mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> elements;
  for (Elem x = 0; x < parent.order(); ++x)
    if (in[x]) elements.push_back(x);
  return Subgroup(parent, std::move(elements), Unchecked{});
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  return Subgroup(parent, {parent.identity()}, Unchecked{});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Elem> all(parent.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(parent, std::move(all), Unchecked{});
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [&](Elem x) { return contains(x); });
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const {
  if (auto c = elements_.size() <=> other.elements_.size(); c != 0) return c;
  return elements_ <=> other.elements_;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return elements_ == other.elements_ && parent_ == other.parent_;
}

// ---------------------------------------------------------------------------
// Automorphisms

GroupAutomorphism::GroupAutomorphism(FiniteGroup group, std::vector<Elem> image)
    : group_(std::move(group)), image_(std::move(image)) {
  const std::size_t n = group_.order();
  if (image_.size() != n) throw InvalidArgument("automorphism image has wrong length");
  std::vector<char> hit(n, 0);
  for (Elem x : image_) {
    if (x >= n || hit[x]++) throw InvalidArgument("automorphism is not a permutation");
  }
  if (!is_homomorphism(group_, image_, group_))
    throw InvalidArgument("automorphism does not respect multiplication");
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& group) {
  std::vector<Elem> image(group.order());
  std::iota(image.begin(), image.end(), Elem{0});
  return GroupAutomorphism(group, std::move(image), Unchecked{});
}

GroupAutomorphism GroupAutomorphism::conjugation(const FiniteGroup& group, Elem by) {
  std::vector<Elem> image(group.order());
  for (Elem x = 0; x < group.order(); ++x) image[x] = group.conjugate(x, by);
  return GroupAutomorphism(group, std::move(image), Unchecked{});
}

GroupAutomorphism GroupAutomorphism::after(const GroupAutomorphism& inner) const {
  if (!(group_ == inner.group_)) throw InvalidArgument("composing automorphisms of different groups");
  std::vector<Elem> image(image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = image_[inner.image_[x]];
  return GroupAutomorphism(group_, std::move(image), Unchecked{});
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  std::vector<Elem> image(image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[image_[x]] = static_cast<Elem>(x);
  return GroupAutomorphism(group_, std::move(image), Unchecked{});
}

GroupAutomorphism GroupAutomorphism::power(std::int64_t n) const {
  GroupAutomorphism base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  e %= order();
  GroupAutomorphism result = identity(group_);
  while (e > 0) {
    if (e & 1) result = result.after(base);
    base = base.after(base);
    e >>= 1;
  }
  return result;
}

std::size_t GroupAutomorphism::order() const {
  std::size_t k = 1;
  std::vector<Elem> cur = image_;
  auto is_id = [](const std::vector<Elem>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (auto& x : cur) x = image_[x];
    ++k;
  }
  return k;
}

bool GroupAutomorphism::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.subgroup_order)
    throw CapExceeded("subgroup enumeration needs order <= " + std::to_string(caps.subgroup_order) +
                      ", got " + std::to_string(g.order()));
  // Every subgroup is reached from the trivial one by adjoining elements one
  // at a time; closures are computed from a short generator list.
  struct Node {
    Subgroup group;
    std::vector<Elem> gens;
  };
  std::set<std::vector<Elem>> seen;
  std::vector<Node> found;
  found.push_back({Subgroup::trivial(g), {}});
  seen.insert(found.back().group.elements());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < g.order(); ++x) {
      if (found[i].group.contains(x)) continue;
      std::vector<Elem> gens = found[i].gens;
      gens.push_back(x);
      Subgroup next = Subgroup::generated_by(g, gens);
      if (seen.insert(next.elements()).second) found.push_back({std::move(next), std::move(gens)});
    }
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto& node : found) result.push_back(std::move(node.group));
  std::sort(result.begin(), result.end());
  return result;
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h : s.elements())
      if (!s.contains(g.conjugate(h, x))) return false;
  return true;
}

bool is_invariant(const Subgroup& s, const GroupAutomorphism& aut) {
  return std::all_of(s.elements().begin(), s.elements().end(),
                     [&](Elem h) { return s.contains(aut(h)); });
}

Subgroup product_subgroup(const Subgroup& k1, const Subgroup& k2) {
  if (!(k1.parent() == k2.parent())) throw InvalidArgument("subgroups of different groups");
  if (!is_normal(k1) || !is_normal(k2)) throw NotNormal("product_subgroup needs normal subgroups");
  const FiniteGroup& g = k1.parent();
  std::vector<Elem> products;
  for (Elem x : k1.elements())
    for (Elem y : k2.elements()) products.push_back(g.mul(x, y));
  return Subgroup(g, std::move(products));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y : g.generators()) central = central && g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

bool is_homomorphism(const FiniteGroup& src, std::span<const Elem> map, const FiniteGroup& tgt) {
  if (map.size() != src.order()) return false;
  for (Elem x : map)
    if (x >= tgt.order()) return false;
  for (Elem a = 0; a < src.order(); ++a)
    for (Elem b = 0; b < src.order(); ++b)
      if (map[src.mul(a, b)] != tgt.mul(map[a], map[b])) return false;
  return true;
}

bool is_injective(std::span<const Elem> map) {
  std::vector<Elem> sorted(map.begin(), map.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& src,
                                                     std::span<const Elem> gens,
                                                     std::span<const Elem> images,
                                                     const FiniteGroup& tgt) {
  if (gens.size() != images.size()) throw InvalidArgument("generator/image count mismatch");
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(src.order(), kUnset);
  map[src.identity()] = tgt.identity();
  std::deque<Elem> queue{src.identity()};
  // map(x·g) = map(x)·map(g) on every Cayley-graph edge makes the map a
  // well-defined homomorphism on the subgroup generated by gens.
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = src.mul(x, gens[i]);
      const Elem img = tgt.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (std::find(map.begin(), map.end(), kUnset) != map.end())
    throw InvalidArgument("extend_homomorphism: generators do not generate the source");
  return map;
}

namespace {

// Backtracking over images of `a.generators()` in `b`, keeping maps that
// extend to bijective homomorphisms.
template <class Visit>
void for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b, Visit&& visit) {
  if (a.order() != b.order()) return;
  const auto& gens = a.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = a.element_order(gens[i]);
    for (Elem y = 0; y < b.order(); ++y)
      if (b.element_order(y) == ord) candidates[i].push_back(y);
  }
  std::vector<Elem> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto map = extend_homomorphism(a, gens, images, b);
      if (map && is_injective(*map)) return visit(std::move(*map));
      return true;
    }
    for (Elem y : candidates[depth]) {
      images[depth] = y;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  recurse(recurse, 0);
}

}  // namespace

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.automorphism_order)
    throw CapExceeded("automorphism enumeration needs order <= " +
                      std::to_string(caps.automorphism_order) + ", got " + std::to_string(g.order()));
  std::set<std::vector<Elem>> maps;
  for_each_isomorphism(g, g, [&](std::vector<Elem> map) {
    maps.insert(std::move(map));
    return true;
  });
  std::vector<GroupAutomorphism> result;
  for (const auto& m : maps) result.emplace_back(g, m);
  return result;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  std::optional<std::vector<Elem>> found;
  for_each_isomorphism(a, b, [&](std::vector<Elem> map) {
    found = std::move(map);
    return false;
  });
  return found;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Elem>> rows(na * nb, std::vector<Elem>(na * nb));
  std::vector<std::string> labels;
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1) {
      labels.push_back("(" + a.label(x1) + "," + b.label(y1) + ")");
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          rows[x1 * nb + y1][x2 * nb + y2] = static_cast<Elem>(a.mul(x1, x2) * nb + b.mul(y1, y2));
    }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

}  // namespace vcyc
