#include "vcyc/twisted_ring.hpp"

#include "vcyc/checked.hpp"
#include "vcyc/errors.hpp"

namespace vcyc {

TwistedGroupRing::TwistedGroupRing(FiniteGroup group, CoeffRing coeffs)
    : d_(std::make_shared<const Data>(Data{std::move(group), coeffs})) {}

GroupRingElement TwistedGroupRing::zero() const {
  return GroupRingElement(*this, std::vector<Coeff>(group().order(), coeffs().zero()));
}

GroupRingElement TwistedGroupRing::one() const { return basis(group().identity()); }

GroupRingElement TwistedGroupRing::basis(Elem g) const { return basis(g, coeffs().one()); }

GroupRingElement TwistedGroupRing::basis(Elem g, Coeff c) const {
  if (g >= group().order()) throw InvalidArgument("group index out of range");
  GroupRingElement x = zero();
  x.c_[g] = c;
  return x;
}

GroupRingElement TwistedGroupRing::scalar(Coeff c) const { return basis(group().identity(), c); }

GroupRingElement TwistedGroupRing::random(Rng& rng, std::size_t max_terms) const {
  GroupRingElement x = zero();
  const std::size_t terms = rng.index(max_terms + 1);
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t g = rng.index(group().order());
    x.c_[g] = coeffs().add(x.c_[g], coeffs().random(rng));
  }
  return x;
}

bool TwistedGroupRing::operator==(const TwistedGroupRing& o) const {
  return d_ == o.d_ || (d_->coeffs == o.d_->coeffs && d_->group == o.d_->group);
}

bool GroupRingElement::is_zero() const noexcept {
  for (const Coeff& c : c_)
    if (c.num != 0) return false;
  return true;
}

std::string GroupRingElement::to_string() const {
  std::string s;
  const CoeffRing& r = ring_.coeffs();
  for (Elem g = 0; g < c_.size(); ++g) {
    if (r.is_zero(c_[g])) continue;
    if (!s.empty()) s += " + ";
    s += r.format(c_[g]) + "*" + ring_.group().label(g);
  }
  return s.empty() ? "0" : s;
}

namespace {

void require_same(const TwistedGroupRing& a, const TwistedGroupRing& b) {
  if (!(a == b)) throw RingMismatch("group ring elements of different rings");
}

}  // namespace

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_same(ring_, o.ring_);
  GroupRingElement x = *this;
  for (std::size_t g = 0; g < c_.size(); ++g) x.c_[g] = ring_.coeffs().add(c_[g], o.c_[g]);
  return x;
}

GroupRingElement GroupRingElement::operator-() const { return scaled(ring_.coeffs().neg(ring_.coeffs().one())); }

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const { return *this + (-o); }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same(ring_, o.ring_);
  const CoeffRing& r = ring_.coeffs();
  const FiniteGroup& g = ring_.group();
  GroupRingElement x = ring_.zero();
  for (Elem a = 0; a < c_.size(); ++a) {
    if (r.is_zero(c_[a])) continue;
    for (Elem b = 0; b < c_.size(); ++b) {
      if (r.is_zero(o.c_[b])) continue;
      const Elem ab = g.mul(a, b);
      x.c_[ab] = r.add(x.c_[ab], r.mul(c_[a], o.c_[b]));
    }
  }
  return x;
}

GroupRingElement GroupRingElement::scaled(Coeff s) const {
  GroupRingElement x = *this;
  for (Coeff& c : x.c_) c = ring_.coeffs().mul(s, c);
  return x;
}

GroupRingElement GroupRingElement::twisted(const GroupAutomorphism& phi) const {
  if (!(phi.group() == ring_.group())) throw RingMismatch("automorphism of another group");
  GroupRingElement x = ring_.zero();
  for (Elem g = 0; g < c_.size(); ++g) x.c_[phi(g)] = c_[g];
  return x;
}

GroupRingElement map_elements(const GroupRingElement& x, const std::vector<Elem>& map,
                              const TwistedGroupRing& target) {
  if (map.size() != x.coeffs().size()) throw ShapeMismatch("group map has the wrong length");
  if (!(x.ring().coeffs() == target.coeffs())) throw RingMismatch("coefficient rings differ");
  const CoeffRing& r = target.coeffs();
  GroupRingElement y = target.zero();
  for (Elem g = 0; g < map.size(); ++g)
    if (!r.is_zero(x.coeff(g))) y = y + target.basis(map[g], x.coeff(g));
  return y;
}

TwistedPolyRing::TwistedPolyRing(TwistedGroupRing base, GroupAutomorphism phi, bool laurent)
    : TwistedPolyRing(base, std::move(phi), laurent, base.coeffs().one()) {}

TwistedPolyRing::TwistedPolyRing(TwistedGroupRing base, GroupAutomorphism phi, bool laurent, Coeff unit) {
  if (!(phi.group() == base.group())) throw RingMismatch("twist is an automorphism of another group");
  if (!base.coeffs().contains(unit) || !base.coeffs().is_unit(unit))
    throw InvalidArgument("coefficient twist is not a unit");
  std::vector<GroupAutomorphism> powers{GroupAutomorphism::identity(base.group())};
  for (std::size_t i = 1; i < phi.order(); ++i) powers.push_back(phi.after(powers.back()));
  d_ = std::make_shared<const Data>(Data{std::move(base), std::move(phi), laurent, unit, std::move(powers)});
}

const GroupAutomorphism& TwistedPolyRing::phi_power(std::int64_t i) const {
  const auto n = static_cast<std::int64_t>(d_->powers.size());
  return d_->powers[static_cast<std::size_t>(checked::mod(i, n))];
}

TwistedPolyElement TwistedPolyRing::zero() const { return TwistedPolyElement(*this); }

TwistedPolyElement TwistedPolyRing::one() const { return monomial(base().one(), 0); }

TwistedPolyElement TwistedPolyRing::t(std::int64_t i) const { return monomial(base().one(), i); }

TwistedPolyElement TwistedPolyRing::monomial(const GroupRingElement& lambda, std::int64_t i) const {
  if (i < 0 && !laurent()) throw InvalidArgument("negative exponent in a polynomial ring");
  if (!(lambda.ring() == base())) throw RingMismatch("coefficient from another group ring");
  TwistedPolyElement x(*this);
  x.accumulate(i, lambda);
  return x;
}

TwistedPolyElement TwistedPolyRing::random(Rng& rng, std::int64_t max_degree, std::size_t max_terms) const {
  TwistedPolyElement x(*this);
  const std::size_t terms = rng.index(max_terms + 1);
  for (std::size_t i = 0; i < terms; ++i)
    x.accumulate(rng.uniform(laurent() ? -max_degree : 0, max_degree), base().random(rng));
  return x;
}

bool TwistedPolyRing::operator==(const TwistedPolyRing& o) const {
  return d_ == o.d_ || (d_->base == o.d_->base && d_->phi == o.d_->phi && d_->laurent == o.d_->laurent &&
                        d_->unit == o.d_->unit);
}

void TwistedPolyElement::accumulate(std::int64_t i, const GroupRingElement& lambda) {
  auto it = terms_.find(i);
  if (it == terms_.end()) {
    if (!lambda.is_zero()) terms_.emplace(i, lambda);
    return;
  }
  it->second = it->second + lambda;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupRingElement TwistedPolyElement::coefficient(std::int64_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? ring_.base().zero() : it->second;
}

std::string TwistedPolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [i, lambda] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + lambda.to_string() + ")";
    if (i != 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s;
}

TwistedPolyElement TwistedPolyElement::operator+(const TwistedPolyElement& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("polynomials over different rings");
  TwistedPolyElement x = *this;
  for (const auto& [i, lambda] : o.terms_) x.accumulate(i, lambda);
  return x;
}

TwistedPolyElement TwistedPolyElement::operator-() const {
  TwistedPolyElement x = *this;
  for (auto& [i, lambda] : x.terms_) lambda = -lambda;
  return x;
}

TwistedPolyElement TwistedPolyElement::operator-(const TwistedPolyElement& o) const { return *this + (-o); }

TwistedPolyElement TwistedPolyElement::operator*(const TwistedPolyElement& o) const { return poly_mul(*this, o); }

TwistedPolyElement poly_mul(const TwistedPolyElement& x, const TwistedPolyElement& y) {
  if (!(x.ring() == y.ring())) throw RingMismatch("polynomials over different rings");
  const TwistedPolyRing& ring = x.ring();
  const CoeffRing& r = ring.base().coeffs();
  TwistedPolyElement out(ring);
  for (const auto& [i, lambda] : x.terms())
    for (const auto& [j, mu] : y.terms()) {
      GroupRingElement c = lambda * mu.twisted(ring.phi_power(i));
      if (!(ring.unit() == r.one())) c = c.scaled(r.pow(ring.unit(), j));
      out.accumulate(checked::add(i, j), c);
    }
  return out;
}

GroupRingElement ev_zero(const TwistedPolyElement& x) {
  if (x.ring().laurent()) throw InvalidArgument("evaluation at t = 0 is defined on polynomial rings only");
  return x.coefficient(0);
}

namespace {

template <class E, class Mul>
RingMatrix<E> generic_mul(const RingMatrix<E>& a, const RingMatrix<E>& b, const E& zero, Mul mul) {
  if (a.cols != b.rows) throw ShapeMismatch("matrix product of incompatible shapes");
  auto c = RingMatrix<E>::filled(a.rows, b.cols, zero);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      for (std::size_t l = 0; l < a.cols; ++l) c.at(i, j) = c.at(i, j) + mul(a.at(i, l), b.at(l, j));
  return c;
}

}  // namespace

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.entries.empty() || b.entries.empty()) {
    if (a.cols != b.rows) throw ShapeMismatch("matrix product of incompatible shapes");
    if (a.rows * b.cols == 0) return PolyMatrix{a.rows, b.cols, {}};
    // An inner dimension of 0 leaves the ring of the zero result unknown.
    throw InvalidArgument("matrix product through rank 0 has no ring to fill the zero result");
  }
  const TwistedPolyElement zero = a.entries.empty() ? b.entries.front().ring().zero() : a.entries.front().ring().zero();
  return generic_mul(a, b, zero, [](const TwistedPolyElement& x, const TwistedPolyElement& y) { return x * y; });
}

GroupRingMatrix mat_mul(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.entries.empty() || b.entries.empty()) {
    if (a.cols != b.rows) throw ShapeMismatch("matrix product of incompatible shapes");
    if (a.rows * b.cols == 0) return GroupRingMatrix{a.rows, b.cols, {}};
    // An inner dimension of 0 leaves the ring of the zero result unknown.
    throw InvalidArgument("matrix product through rank 0 has no ring to fill the zero result");
  }
  const GroupRingElement zero = a.entries.empty() ? b.entries.front().ring().zero() : a.entries.front().ring().zero();
  return generic_mul(a, b, zero, [](const GroupRingElement& x, const GroupRingElement& y) { return x * y; });
}

InclusionDatum InclusionDatum::make(FiniteGroup h, FiniteGroup k, std::vector<Elem> emb, GroupAutomorphism phi,
                                    GroupAutomorphism psi, std::vector<Elem> reps) {
  if (emb.size() != h.order() || !is_homomorphism(h, emb, k) || !is_injective(emb))
    throw InvalidArgument("embedding H -> K is not an injective homomorphism");
  if (!(phi.group() == h) || !(psi.group() == k)) throw InvalidArgument("automorphisms act on the wrong groups");
  for (Elem x = 0; x < h.order(); ++x)
    if (psi(emb[x]) != emb[phi(x)]) throw InvalidArgument("psi does not restrict to phi on H");
  if (reps.size() * h.order() != k.order()) throw InvalidArgument("l * |H| != |K|");
  std::vector<char> hit(k.order(), 0);
  for (Elem r : reps) {
    if (r >= k.order()) throw InvalidArgument("coset representative out of range");
    for (Elem x = 0; x < h.order(); ++x) {
      const Elem g = k.mul(emb[x], r);
      if (hit[g]) throw InvalidArgument("representatives do not give distinct cosets H k_i");
      hit[g] = 1;
    }
  }
  return InclusionDatum{std::move(h), std::move(k), std::move(emb), std::move(phi), std::move(psi), std::move(reps)};
}

InclusionDatum InclusionDatum::trivial(const FiniteGroup& k, const GroupAutomorphism& psi) {
  std::vector<Elem> id(k.order());
  for (Elem x = 0; x < k.order(); ++x) id[x] = x;
  return make(k, k, id, psi, psi, {k.identity()});
}

InclusionDatum InclusionDatum::from_subgroup(const Subgroup& s, const GroupAutomorphism& psi) {
  const FiniteGroup& k = s.parent();
  if (!(psi.group() == k)) throw InvalidArgument("psi acts on another group");
  if (!is_invariant(s, psi)) throw InvalidArgument("psi does not preserve the subgroup");
  const auto& el = s.elements();
  std::vector<Elem> pos(k.order(), 0);
  for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> rows(el.size(), std::vector<Elem>(el.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < el.size(); ++i) {
    labels.push_back(k.label(el[i]));
    for (std::size_t j = 0; j < el.size(); ++j) rows[i][j] = pos[k.mul(el[i], el[j])];
  }
  FiniteGroup h = FiniteGroup::from_table(std::move(rows), std::move(labels));
  std::vector<Elem> phi(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) phi[i] = pos[psi(el[i])];
  std::vector<Elem> reps;
  std::vector<char> covered(k.order(), 0);
  for (Elem g = 0; g < k.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (Elem x : el) covered[k.mul(x, g)] = 1;
  }
  GroupAutomorphism phi_h(h, std::move(phi));
  return make(std::move(h), k, el, std::move(phi_h), psi, std::move(reps));
}

std::pair<Elem, std::size_t> InclusionDatum::decompose(Elem g, std::int64_t m) const {
  const GroupAutomorphism shift = psi.power(m);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Elem x = k.mul(g, k.inv(shift(reps[i])));
    for (Elem y = 0; y < h.order(); ++y)
      if (emb[y] == x) return {y, i};
  }
  throw Error("Internal", "element outside every coset");
}

InclusionRings inclusion_rings(const InclusionDatum& d, const CoeffRing& r) {
  TwistedGroupRing rh(d.h, r), rk(d.k, r);
  return InclusionRings{rh, rk, TwistedPolyRing(rh, d.phi), TwistedPolyRing(rk, d.psi)};
}

TwistedPolyElement include_poly(const InclusionRings& rings, const InclusionDatum& d, const TwistedPolyElement& y) {
  if (!(y.ring() == rings.rh_t)) throw RingMismatch("expected an element of RH_phi[t]");
  TwistedPolyElement z = rings.rk_t.zero();
  for (const auto& [i, lambda] : y.terms()) z = z + rings.rk_t.monomial(map_elements(lambda, d.emb, rings.rk), i);
  return z;
}

GroupRingElement alpha(const InclusionRings& rings, const InclusionDatum& d, const std::vector<GroupRingElement>& x) {
  if (x.size() != d.index()) throw ShapeMismatch("alpha expects l coordinates");
  GroupRingElement z = rings.rk.zero();
  for (std::size_t i = 0; i < x.size(); ++i) z = z + map_elements(x[i], d.emb, rings.rk) * rings.rk.basis(d.reps[i]);
  return z;
}

std::vector<GroupRingElement> alpha_inverse(const InclusionRings& rings, const InclusionDatum& d,
                                            const GroupRingElement& z) {
  if (!(z.ring() == rings.rk)) throw RingMismatch("expected an element of RK");
  std::vector<GroupRingElement> x(d.index(), rings.rh.zero());
  const CoeffRing& r = rings.rk.coeffs();
  for (Elem g = 0; g < d.k.order(); ++g) {
    if (r.is_zero(z.coeff(g))) continue;
    const auto [h, i] = d.decompose(g, 0);
    x[i] = x[i] + rings.rh.basis(h, z.coeff(g));
  }
  return x;
}

TwistedPolyElement beta(const InclusionRings& rings, const InclusionDatum& d,
                        const std::vector<TwistedPolyElement>& y) {
  if (y.size() != d.index()) throw ShapeMismatch("beta expects l coordinates");
  TwistedPolyElement z = rings.rk_t.zero();
  for (std::size_t i = 0; i < y.size(); ++i)
    z = z + include_poly(rings, d, y[i]) * rings.rk_t.monomial(rings.rk.basis(d.reps[i]), 0);
  return z;
}

std::vector<TwistedPolyElement> beta_inverse(const InclusionRings& rings, const InclusionDatum& d,
                                             const TwistedPolyElement& z) {
  if (!(z.ring() == rings.rk_t)) throw RingMismatch("expected an element of RK_psi[t]");
  std::vector<TwistedPolyElement> y(d.index(), rings.rh_t.zero());
  const CoeffRing& r = rings.rk.coeffs();
  for (const auto& [m, lambda] : z.terms())
    for (Elem g = 0; g < d.k.order(); ++g) {
      if (r.is_zero(lambda.coeff(g))) continue;
      const auto [h, i] = d.decompose(g, m);
      y[i] = y[i] + rings.rh_t.monomial(rings.rh.basis(h, lambda.coeff(g)), m);
    }
  return y;
}

GroupRingMatrix induction_restriction_transfer(const InclusionRings& rings, const InclusionDatum& d,
                                               const GroupRingMatrix& p) {
  for (const auto& e : p.entries)
    if (!(e.ring() == rings.rh)) throw RingMismatch("transfer expects a matrix over RH");
  const std::size_t l = d.index();
  auto out = GroupRingMatrix::filled(l * p.rows, l * p.cols, rings.rh.zero());
  for (std::size_t r = 0; r < p.rows; ++r)
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t c = 0; c < p.cols; ++c) {
        const GroupRingElement image = rings.rk.basis(d.reps[a]) * map_elements(p.at(r, c), d.emb, rings.rk);
        const auto coords = alpha_inverse(rings, d, image);
        for (std::size_t b = 0; b < l; ++b) out.at(r * l + a, c * l + b) = coords[b];
      }
  return out;
}

PolyMatrix induction_restriction_transfer(const InclusionRings& rings, const InclusionDatum& d, const PolyMatrix& p) {
  for (const auto& e : p.entries)
    if (!(e.ring() == rings.rh_t)) throw RingMismatch("transfer expects a matrix over RH_phi[t]");
  const std::size_t l = d.index();
  auto out = PolyMatrix::filled(l * p.rows, l * p.cols, rings.rh_t.zero());
  for (std::size_t r = 0; r < p.rows; ++r)
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t c = 0; c < p.cols; ++c) {
        const TwistedPolyElement image =
            rings.rk_t.monomial(rings.rk.basis(d.reps[a]), 0) * include_poly(rings, d, p.at(r, c));
        const auto coords = beta_inverse(rings, d, image);
        for (std::size_t b = 0; b < l; ++b) out.at(r * l + a, c * l + b) = coords[b];
      }
  return out;
}

namespace {

std::string describe_vector(const std::vector<GroupRingElement>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

CheckOutcome natural_iso_T(const InclusionRings& rings, const InclusionDatum& d, std::size_t n) {
  CheckOutcome out;
  const std::size_t l = d.index();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < l; ++i)
      for (Elem h = 0; h < d.h.order(); ++h)
        for (std::int64_t m = 0; m <= 1; ++m) {
          const GroupRingElement hh = rings.rh.basis(h);
          const TwistedPolyElement y = rings.rh_t.t(m);
          // Through T: h ⊗ β(y·e_i) ↦ i(h) ⊗ x ↦ i(h)·ev_K(x) in RK^n.
          std::vector<TwistedPolyElement> slots(l, rings.rh_t.zero());
          slots[i] = y;
          std::vector<TwistedPolyElement> x(n, rings.rk_t.zero());
          x[j] = beta(rings, d, slots);
          std::vector<GroupRingElement> via_t(n, rings.rk.zero());
          for (std::size_t c = 0; c < n; ++c) via_t[c] = map_elements(hh, d.emb, rings.rk) * ev_zero(x[c]);
          // Directly: h ⊗ y ↦ h·ev_H(y) in slot i, then α.
          std::vector<GroupRingElement> flat(l, rings.rh.zero());
          flat[i] = hh * ev_zero(y);
          std::vector<GroupRingElement> via_alpha(n, rings.rk.zero());
          via_alpha[j] = alpha(rings, d, flat);
          ++out.checked;
          if (via_t != via_alpha && out.pass) {
            out.pass = false;
            out.counterexample = "basis (" + std::to_string(j) + ", " + std::to_string(i) + ", " +
                                 d.h.label(h) + ", t^" + std::to_string(m) + "): " + describe_vector(via_t) +
                                 " vs " + describe_vector(via_alpha);
          }
        }
  return out;
}

CheckOutcome natural_iso_T_naturality(const InclusionRings& rings, const InclusionDatum& d, const PolyMatrix& u,
                                      Rng& rng, std::size_t samples) {
  CheckOutcome out;
  for (const auto& e : u.entries)
    if (!(e.ring() == rings.rk_t)) throw RingMismatch("naturality expects a map over RK_psi[t]");
  for (std::size_t s = 0; s < samples; ++s) {
    const GroupRingElement h = map_elements(rings.rh.random(rng), d.emb, rings.rk);
    PolyMatrix x{1, u.rows, {}};
    for (std::size_t c = 0; c < u.rows; ++c) x.entries.push_back(rings.rk_t.random(rng));
    const PolyMatrix xu = mat_mul(x, u);
    bool equal = true;
    for (std::size_t c = 0; c < u.cols; ++c) {
      // T(P') after (ev_H)_* i[t]^* u, against (ev_K)_* u after T(P).
      const GroupRingElement lhs = h * ev_zero(xu.at(0, c));
      GroupRingElement rhs = rings.rk.zero();
      for (std::size_t r = 0; r < u.rows; ++r) rhs = rhs + h * ev_zero(x.at(0, r)) * ev_zero(u.at(r, c));
      equal = equal && lhs == rhs;
    }
    ++out.checked;
    if (!equal && out.pass) {
      out.pass = false;
      out.counterexample = "sample " + std::to_string(s);
    }
  }
  return out;
}

TwistedPolyRing untwisted(const TwistedPolyRing& r) {
  return TwistedPolyRing(r.base(), GroupAutomorphism::identity(r.base().group()), r.laurent(), r.unit());
}

TwistedPolyElement eta_inner(Elem k, const TwistedPolyElement& x) {
  const TwistedPolyRing& ring = x.ring();
  const FiniteGroup& g = ring.base().group();
  if (k >= g.order()) throw InvalidArgument("element index out of range");
  if (!(ring.phi() == GroupAutomorphism::conjugation(g, k)))
    throw TwistMismatch("the twist is not conjugation by " + g.label(k));
  const TwistedPolyRing target = untwisted(ring);
  TwistedPolyElement y = target.zero();
  for (const auto& [i, lambda] : x.terms())
    y = y + target.monomial(lambda * ring.base().basis(g.power(k, i)), i);
  return y;
}

SemidirectEmbedding semidirect_embed(const FiniteGroup& k, const GroupAutomorphism& phi, const Caps& caps) {
  if (!(phi.group() == k)) throw InvalidArgument("automorphism of another group");
  const std::size_t s = phi.order(), n = k.order();
  if (n * s > caps.semidirect_order)
    throw CapExceeded("|K| * ord(phi) = " + std::to_string(n * s) + " exceeds semidirect_order = " +
                      std::to_string(caps.semidirect_order));
  std::vector<GroupAutomorphism> powers{GroupAutomorphism::identity(k)};
  for (std::size_t j = 1; j < s; ++j) powers.push_back(phi.after(powers.back()));
  // (a, j) has index a + n·j; (a, j)(b, l) = (a·φʲ(b), j + l).
  std::vector<std::vector<Elem>> rows(n * s, std::vector<Elem>(n * s));
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < s; ++j)
    for (Elem a = 0; a < n; ++a) {
      labels.push_back(j == 0 ? k.label(a) : k.label(a) + "t" + (j > 1 ? "^" + std::to_string(j) : ""));
      for (std::size_t l = 0; l < s; ++l)
        for (Elem b = 0; b < n; ++b)
          rows[a + n * j][b + n * l] = static_cast<Elem>(k.mul(a, powers[j](b)) + n * ((j + l) % s));
    }
  FiniteGroup ambient = FiniteGroup::from_table(std::move(rows), std::move(labels));
  std::vector<Elem> inclusion(n);
  for (Elem a = 0; a < n; ++a) inclusion[a] = a;
  const Elem t = static_cast<Elem>(k.identity() + (s > 1 ? n : 0));
  GroupAutomorphism psi = GroupAutomorphism::conjugation(ambient, t);
  std::vector<Elem> reps;
  for (std::size_t j = 0; j < s; ++j) reps.push_back(static_cast<Elem>(k.identity() + n * j));
  InclusionDatum datum = InclusionDatum::make(k, ambient, inclusion, phi, psi, reps);
  return SemidirectEmbedding{std::move(ambient), std::move(inclusion), t, std::move(psi), std::move(datum)};
}

}  // namespace vcyc
