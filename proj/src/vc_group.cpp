#include "vcyc/vc_group.hpp"

#include <algorithm>
#include <mutex>

#include "vcyc/catalog.hpp"
#include "vcyc/checked.hpp"
#include "vcyc/errors.hpp"

namespace vcyc {

struct VCGroup::Data {
  Variant variant = Variant::SemidirectZ;
  FiniteGroup k, a, b;
  std::vector<GroupAutomorphism> phi_powers;  // φ⁰ … φ^{s-1}
  std::vector<Elem> emb_a, emb_b;
  std::vector<std::int64_t> pre_a, pre_b;  // -1 off the image of K
  Elem rep_a = 0, rep_b = 0;
  std::string name;

  std::once_flag abel_once;
  AbelianInvariants abel;
};

namespace {

std::vector<std::int64_t> preimage(const std::vector<Elem>& emb, std::size_t target_order) {
  std::vector<std::int64_t> pre(target_order, -1);
  for (std::size_t i = 0; i < emb.size(); ++i) pre[emb[i]] = static_cast<std::int64_t>(i);
  return pre;
}

Elem first_outside(const std::vector<std::int64_t>& pre) {
  for (std::size_t i = 0; i < pre.size(); ++i)
    if (pre[i] < 0) return static_cast<Elem>(i);
  throw InvalidArgument("amalgam: embedded subgroup is not proper");
}

}  // namespace

// ---------------------------------------------------------------------------
// VCGroup

VCGroup VCGroup::semidirect(FiniteGroup k, GroupAutomorphism phi) {
  if (!(phi.group() == k)) throw InvalidArgument("semidirect: automorphism is not of the given group");
  auto d = std::make_shared<Data>();
  d->variant = Variant::SemidirectZ;
  d->k = std::move(k);
  d->phi_powers.push_back(GroupAutomorphism::identity(d->k));
  for (auto p = phi; !p.is_identity(); p = phi.after(p)) d->phi_powers.push_back(p);
  return VCGroup(std::move(d));
}

VCGroup VCGroup::amalgam(FiniteGroup a, FiniteGroup b, FiniteGroup k, std::vector<Elem> emb_a,
                         std::vector<Elem> emb_b) {
  if (emb_a.size() != k.order() || emb_b.size() != k.order())
    throw InvalidArgument("amalgam: embedding size does not match |K|");
  if (!is_homomorphism(k, emb_a, a) || !is_injective(emb_a))
    throw InvalidArgument("amalgam: emb_a is not an injective homomorphism");
  if (!is_homomorphism(k, emb_b, b) || !is_injective(emb_b))
    throw InvalidArgument("amalgam: emb_b is not an injective homomorphism");
  if (a.order() != 2 * k.order() || b.order() != 2 * k.order())
    throw InvalidArgument("amalgam: K must have index 2 in both factors");
  auto d = std::make_shared<Data>();
  d->variant = Variant::Amalgam;
  d->pre_a = preimage(emb_a, a.order());
  d->pre_b = preimage(emb_b, b.order());
  d->rep_a = first_outside(d->pre_a);
  d->rep_b = first_outside(d->pre_b);
  d->k = std::move(k);
  d->a = std::move(a);
  d->b = std::move(b);
  d->emb_a = std::move(emb_a);
  d->emb_b = std::move(emb_b);
  return VCGroup(std::move(d));
}

VCGroup VCGroup::integers() {
  const FiniteGroup e = catalog::trivial();
  VCGroup v = semidirect(e, GroupAutomorphism::identity(e));
  v.set_name("Z");
  return v;
}

VCGroup VCGroup::infinite_dihedral() {
  const FiniteGroup z2 = catalog::cyclic(2);
  VCGroup v = amalgam(z2, z2, catalog::trivial(), {0}, {0});
  v.set_name("D_inf");
  return v;
}

VCGroup::Variant VCGroup::variant() const noexcept { return d_->variant; }
const FiniteGroup& VCGroup::k() const noexcept { return d_->k; }

const GroupAutomorphism& VCGroup::phi() const { return phi_power(1); }

const GroupAutomorphism& VCGroup::phi_power(std::int64_t n) const {
  if (!is_semidirect()) throw TypeMismatch("phi is defined for semidirect groups only");
  const auto s = static_cast<std::int64_t>(d_->phi_powers.size());
  return d_->phi_powers[static_cast<std::size_t>(checked::mod(n, s))];
}

const FiniteGroup& VCGroup::a() const {
  if (is_semidirect()) throw TypeMismatch("a() is defined for amalgams only");
  return d_->a;
}
const FiniteGroup& VCGroup::b() const {
  if (is_semidirect()) throw TypeMismatch("b() is defined for amalgams only");
  return d_->b;
}
const std::vector<Elem>& VCGroup::emb_a() const {
  if (is_semidirect()) throw TypeMismatch("emb_a() is defined for amalgams only");
  return d_->emb_a;
}
const std::vector<Elem>& VCGroup::emb_b() const {
  if (is_semidirect()) throw TypeMismatch("emb_b() is defined for amalgams only");
  return d_->emb_b;
}
Elem VCGroup::coset_rep(Side side) const {
  if (is_semidirect()) throw TypeMismatch("coset_rep() is defined for amalgams only");
  return side == Side::A ? d_->rep_a : d_->rep_b;
}

VCElement VCGroup::identity() const { return VCElement(*this, d_->k.identity(), 0, {}); }

VCElement VCGroup::element(Elem k, std::int64_t n) const {
  if (!is_semidirect()) throw TypeMismatch("element(k, n) is defined for semidirect groups only");
  if (k >= d_->k.order()) throw InvalidArgument("element index out of range");
  return VCElement(*this, k, n, {});
}

VCElement VCGroup::t() const { return element(d_->k.identity(), 1); }

VCElement VCGroup::from_side(Side side, Elem x) const {
  const FiniteGroup& g = side == Side::A ? a() : b();
  if (x >= g.order()) throw InvalidArgument("element index out of range");
  VCElement e = identity();
  e.right_multiply_side(side, x);
  return e;
}

VCElement VCGroup::from_k(Elem k) const {
  if (k >= d_->k.order()) throw InvalidArgument("element index out of range");
  return VCElement(*this, k, 0, {});
}

std::vector<VCElement> VCGroup::generators() const {
  std::vector<VCElement> out;
  if (is_semidirect()) {
    for (Elem g : d_->k.generators()) out.push_back(from_k(g));
    out.push_back(t());
  } else {
    for (Elem g : d_->a.generators()) out.push_back(from_side(Side::A, g));
    for (Elem g : d_->b.generators()) out.push_back(from_side(Side::B, g));
  }
  return out;
}

VCElement VCGroup::random_element(Rng& rng, std::int64_t max_len) const {
  if (is_semidirect())
    return element(static_cast<Elem>(rng.index(d_->k.order())), rng.uniform(-max_len, max_len));
  VCElement e = identity();
  const std::int64_t len = rng.uniform(0, max_len);
  for (std::int64_t i = 0; i < len; ++i) {
    const Side side = rng.coin() ? Side::A : Side::B;
    const FiniteGroup& g = side == Side::A ? d_->a : d_->b;
    e.right_multiply_side(side, static_cast<Elem>(rng.index(g.order())));
  }
  return e;
}

std::string VCGroup::describe() const {
  if (!d_->name.empty()) return d_->name;
  if (is_semidirect())
    return "K(order " + std::to_string(d_->k.order()) + ") x|_phi Z, |phi| = " +
           std::to_string(d_->phi_powers.size());
  return "A(order " + std::to_string(d_->a.order()) + ") *_K B(order " + std::to_string(d_->b.order()) + ")";
}

void VCGroup::set_name(std::string name) { d_->name = std::move(name); }
const std::string& VCGroup::name() const noexcept { return d_->name; }

// ---------------------------------------------------------------------------
// VCElement

void VCElement::right_multiply_side(Side side, Elem x) {
  const VCGroup::Data& d = *owner_.d_;
  const FiniteGroup& g = side == Side::A ? d.a : d.b;
  const auto& emb = side == Side::A ? d.emb_a : d.emb_b;
  const auto& pre = side == Side::A ? d.pre_a : d.pre_b;
  const Elem r = side == Side::A ? d.rep_a : d.rep_b;
  const Elem y = g.mul(emb[k_], x);
  if (pre[y] >= 0) {
    k_ = static_cast<Elem>(pre[y]);
    return;
  }
  if (!word_.empty() && word_.back().side == side) {
    // r·y lies in K because both factors lie in the non-trivial coset.
    word_.pop_back();
    k_ = static_cast<Elem>(pre[g.mul(r, y)]);
    return;
  }
  word_.push_back({side, r});
  k_ = static_cast<Elem>(pre[g.mul(g.inv(r), y)]);
}

VCElement VCElement::operator*(const VCElement& other) const {
  if (!(owner_ == other.owner_)) throw OwnerMismatch("elements of different groups");
  if (owner_.is_semidirect()) {
    const Elem k = owner_.k().mul(k_, owner_.phi_power(n_)(other.k_));
    return VCElement(owner_, k, checked::add(n_, other.n_), {});
  }
  VCElement out = *this;
  for (const Letter& l : other.word_) out.right_multiply_side(l.side, l.rep);
  out.right_multiply_side(Side::A, owner_.d_->emb_a[other.k_]);
  return out;
}

VCElement VCElement::inverse() const {
  const FiniteGroup& k = owner_.k();
  if (owner_.is_semidirect()) {
    const std::int64_t m = checked::neg(n_);
    return VCElement(owner_, owner_.phi_power(m)(k.inv(k_)), m, {});
  }
  VCElement out = owner_.identity();
  out.right_multiply_side(Side::A, owner_.d_->emb_a[k.inv(k_)]);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    const FiniteGroup& g = it->side == Side::A ? owner_.d_->a : owner_.d_->b;
    out.right_multiply_side(it->side, g.inv(it->rep));
  }
  return out;
}

VCElement VCElement::pow(std::int64_t e) const {
  VCElement base = e < 0 ? inverse() : *this;
  std::uint64_t m = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  VCElement acc = owner_.identity();
  while (m > 0) {
    if (m & 1) acc = acc * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return acc;
}

std::string VCElement::to_string() const {
  const FiniteGroup& k = owner_.k();
  if (owner_.is_semidirect()) return "(" + k.label(k_) + ", " + std::to_string(n_) + ")";
  std::string s;
  for (const Letter& l : word_) {
    const FiniteGroup& g = l.side == Side::A ? owner_.a() : owner_.b();
    s += (l.side == Side::A ? "A:" : "B:") + g.label(l.rep) + " ";
  }
  return s + "[" + k.label(k_) + "]";
}

bool VCElement::operator==(const VCElement& other) const noexcept {
  return owner_ == other.owner_ && k_ == other.k_ && n_ == other.n_ && word_ == other.word_;
}

std::strong_ordering VCElement::operator<=>(const VCElement& other) const {
  if (!(owner_ == other.owner_)) throw OwnerMismatch("comparing elements of different groups");
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
  if (auto c = word_ <=> other.word_; c != 0) return c;
  return k_ <=> other.k_;
}

// ---------------------------------------------------------------------------
// Structure

AbelianInvariants abelianization(const VCGroup& v) {
  VCGroup::Data& d = *v.d_;
  std::call_once(d.abel_once, [&] {
    std::vector<std::vector<std::int64_t>> rows;
    auto add_table = [&rows](const FiniteGroup& g, std::size_t offset, std::size_t cols) {
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) {
          std::vector<std::int64_t> r(cols, 0);
          r[offset + x] += 1;
          r[offset + y] += 1;
          r[offset + g.mul(x, y)] -= 1;
          rows.push_back(std::move(r));
        }
    };
    std::size_t cols = 0;
    if (v.is_semidirect()) {
      // Generators: elements of K, then t. t·k·t⁻¹ = φ(k) abelianizes to k = φ(k).
      const std::size_t n = d.k.order();
      cols = n + 1;
      add_table(d.k, 0, cols);
      for (Elem x = 0; x < n; ++x) {
        std::vector<std::int64_t> r(cols, 0);
        r[x] += 1;
        r[v.phi()(x)] -= 1;
        rows.push_back(std::move(r));
      }
    } else {
      const std::size_t na = d.a.order();
      cols = na + d.b.order();
      add_table(d.a, 0, cols);
      add_table(d.b, na, cols);
      for (Elem x = 0; x < d.k.order(); ++x) {
        std::vector<std::int64_t> r(cols, 0);
        r[d.emb_a[x]] += 1;
        r[na + d.emb_b[x]] -= 1;
        rows.push_back(std::move(r));
      }
    }
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    d.abel = cokernel_invariants(m);
  });
  return d.abel;
}

VCType classify_type(const VCGroup& v) {
  return abelianization(v).free_rank >= 1 ? VCType::TypeI : VCType::TypeII;
}

Subgroup maximal_finite_normal(const VCGroup& v, const Caps& caps) {
  const FiniteGroup& k = v.k();
  std::vector<Subgroup> admissible;
  for (const Subgroup& s : all_subgroups(k, caps)) {
    bool ok = false;
    if (v.is_semidirect()) {
      ok = is_normal(s) && is_invariant(s, v.phi());
    } else {
      auto image_normal = [&s](const FiniteGroup& g, const std::vector<Elem>& emb) {
        std::vector<Elem> img;
        for (Elem x : s.elements()) img.push_back(emb[x]);
        std::sort(img.begin(), img.end());
        return is_normal(Subgroup(g, std::move(img)));
      };
      ok = image_normal(v.a(), v.emb_a()) && image_normal(v.b(), v.emb_b());
    }
    if (ok) admissible.push_back(s);
  }
  Subgroup join = Subgroup::trivial(k);
  for (const Subgroup& s : admissible) join = product_subgroup(join, s);
  if (std::find(admissible.begin(), admissible.end(), join) == admissible.end())
    throw Error("Internal", "join of admissible subgroups is not admissible");
  return join;
}

namespace {

bool is_central(const VCElement& x, const std::vector<VCElement>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&x](const VCElement& g) { return x * g == g * x; });
}

}  // namespace

bool center_is_infinite(const VCGroup& v) {
  const auto gens = v.generators();
  const std::size_t korder = v.k().order();
  if (v.is_semidirect()) {
    const auto bound = static_cast<std::int64_t>(v.phi().order() * korder);
    for (std::int64_t n = 1; n <= bound; ++n)
      for (Elem k = 0; k < korder; ++k)
        if (is_central(v.element(k, n), gens)) return true;
    return false;
  }
  const std::size_t bound = 2 * v.a().order() * v.b().order();
  for (Side start : {Side::A, Side::B}) {
    VCElement word = v.identity();
    Side side = start;
    for (std::size_t len = 1; len <= bound; ++len) {
      word = word * v.from_side(side, v.coset_rep(side));
      side = side == Side::A ? Side::B : Side::A;
      for (Elem k = 0; k < korder; ++k)
        if (is_central(word * v.from_k(k), gens)) return true;
    }
  }
  return false;
}

QElement QuotientData::project(const VCElement& x) const {
  if (!(x.owner() == group)) throw OwnerMismatch("projection applied to a foreign element");
  if (kind == Kind::InfiniteCyclic) return {x.n(), false};
  QElement q;
  for (const Letter& l : x.word()) q = q * (l.side == Side::A ? QElement{0, true} : QElement{-1, true});
  return q;
}

QuotientData quotient_data(const VCGroup& v, const Caps& caps) {
  const auto kind = classify_type(v) == VCType::TypeI ? QuotientData::Kind::InfiniteCyclic
                                                      : QuotientData::Kind::InfiniteDihedral;
  return QuotientData{kind, maximal_finite_normal(v, caps), v};
}

std::int64_t project_z(const VCElement& x) {
  if (!x.owner().is_semidirect()) throw TypeMismatch("p_V to Z needs a type I group");
  return x.n();
}

// ---------------------------------------------------------------------------
// VCHom

namespace {

// Images of all elements of `g` from images of g.generators(), with the
// homomorphism property verified on every pair.
std::vector<VCElement> extend_piece(const FiniteGroup& g, const std::vector<VCElement>& images,
                                    const VCGroup& target) {
  const auto& gens = g.generators();
  std::vector<std::optional<VCElement>> img(g.order());
  img[g.identity()] = target.identity();
  std::vector<Elem> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = g.mul(queue[i], gens[j]);
      if (!img[y]) {
        img[y] = *img[queue[i]] * images[j];
        queue.push_back(y);
      }
    }
  std::vector<VCElement> out;
  for (auto& x : img) out.push_back(std::move(*x));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (!(out[g.mul(x, y)] == out[x] * out[y]))
        throw RelationViolation("generator images do not respect the finite piece's table");
  return out;
}

}  // namespace

VCHom::VCHom(VCGroup source, VCGroup target, std::vector<VCElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  for (const auto& x : images_)
    if (!(x.owner() == target_)) throw OwnerMismatch("generator image is not an element of the target");
  if (source_.is_semidirect()) {
    const auto& kg = source_.k().generators();
    if (images_.size() != kg.size() + 1) throw InvalidArgument("VCHom: expected |K gens| + 1 images");
    piece_a_ = extend_piece(source_.k(), {images_.begin(), images_.end() - 1}, target_);
    const VCElement& t = images_.back();
    const VCElement t_inv = t.inverse();
    for (Elem k = 0; k < source_.k().order(); ++k)
      if (!(t * piece_a_[k] * t_inv == piece_a_[source_.phi()(k)]))
        throw RelationViolation("image of t does not conjugate K by phi");
  } else {
    const std::size_t na = source_.a().generators().size();
    if (images_.size() != na + source_.b().generators().size())
      throw InvalidArgument("VCHom: expected |A gens| + |B gens| images");
    piece_a_ = extend_piece(source_.a(), {images_.begin(), images_.begin() + na}, target_);
    piece_b_ = extend_piece(source_.b(), {images_.begin() + na, images_.end()}, target_);
    for (Elem k = 0; k < source_.k().order(); ++k)
      if (!(piece_a_[source_.emb_a()[k]] == piece_b_[source_.emb_b()[k]]))
        throw RelationViolation("images of the amalgamated subgroup disagree");
  }
}

VCHom VCHom::identity(const VCGroup& v) { return VCHom(v, v, v.generators()); }

VCHom VCHom::conjugation(const VCGroup& v, const VCElement& w) {
  const VCElement w_inv = w.inverse();
  std::vector<VCElement> images;
  for (const auto& g : v.generators()) images.push_back(w_inv * g * w);
  return VCHom(v, v, std::move(images));
}

VCElement VCHom::operator()(const VCElement& x) const {
  if (!(x.owner() == source_)) throw OwnerMismatch("hom applied to a foreign element");
  if (source_.is_semidirect()) return piece_a_[x.k()] * images_.back().pow(x.n());
  VCElement out = target_.identity();
  for (const Letter& l : x.word()) out = out * (l.side == Side::A ? piece_a_[l.rep] : piece_b_[l.rep]);
  return out * piece_a_[source_.emb_a()[x.k()]];
}

VCHom VCHom::after(const VCHom& inner) const {
  if (!(inner.target_ == source_)) throw OwnerMismatch("homs are not composable");
  std::vector<VCElement> images;
  for (const auto& x : inner.images_) images.push_back((*this)(x));
  return VCHom(inner.source_, target_, std::move(images));
}

std::optional<QMap> induced_q_map(const VCHom& f) {
  if (!f.source().is_semidirect() || !f.target().is_semidirect())
    throw TypeMismatch("induced_q_map needs type I source and target");
  const std::int64_t m = project_z(f(f.source().t()));
  if (m == 0) return std::nullopt;
  return QMap{m > 0 ? m : checked::neg(m), m > 0 ? 1 : -1};
}

int gen_sign(const VCHom& f, const VCElement& w) {
  const auto q = induced_q_map(VCHom::conjugation(f.target(), w).after(f));
  if (!q) throw InvalidArgument("gen(f) is undefined for a hom with finite image");
  return q->sign;
}

}  // namespace vcyc
