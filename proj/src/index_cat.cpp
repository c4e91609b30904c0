#include "vcyc/index_cat.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "vcyc/checked.hpp"
#include "vcyc/errors.hpp"

namespace vcyc {

std::string to_string(MorphismFilter f) {
  switch (f) {
    case MorphismFilter::All: return "all";
    case MorphismFilter::Sigma: return "sigma";
    default: return "kernel";
  }
}

struct IndexCat::Data {
  Data(Kind kind_, VCGroup ambient_, std::int64_t m_, MorphismFilter filter_, int sign_)
      : kind(kind_), ambient(std::move(ambient_)), m(m_), filter(filter_), sign(sign_) {}
  Kind kind;
  VCGroup ambient;
  std::int64_t m;
  MorphismFilter filter;
  int sign;
  mutable std::shared_mutex mu;
  mutable std::map<std::int64_t, VCElement> reps;
};

namespace {

std::shared_ptr<IndexCat::Data> make_data(IndexCat::Kind kind, VCGroup ambient, std::int64_t m,
                                          MorphismFilter f, int sign) {
  if (!ambient.is_semidirect()) throw TypeMismatch("index categories need a SemidirectZ ambient");
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  if (m < 0 || (kind == IndexCat::Kind::Monoid && m == 0)) throw InvalidArgument("index must be positive");
  if (m == 0 && f == MorphismFilter::Sigma) throw InvalidArgument("G/K has no sigma filter");
  return std::make_shared<IndexCat::Data>(kind, std::move(ambient), m, m == 0 ? MorphismFilter::All : f, sign);
}

}  // namespace

IndexCat IndexCat::monoid(VCGroup ambient, std::int64_t m, MorphismFilter f, int sign) {
  return IndexCat(make_data(Kind::Monoid, std::move(ambient), m, f, sign));
}

IndexCat IndexCat::transport(VCGroup ambient, std::int64_t m, MorphismFilter f, int sign) {
  return IndexCat(make_data(Kind::Transport, std::move(ambient), m, f, sign));
}

IndexCat::Kind IndexCat::kind() const noexcept { return d_->kind; }
const VCGroup& IndexCat::ambient() const noexcept { return d_->ambient; }
std::int64_t IndexCat::index() const noexcept { return d_->m; }
MorphismFilter IndexCat::filter() const noexcept { return d_->filter; }
int IndexCat::sign() const noexcept { return d_->sign; }

IndexCat IndexCat::with_filter(MorphismFilter f) const {
  return IndexCat(make_data(d_->kind, d_->ambient, d_->m, f, d_->sign));
}

bool IndexCat::is_object(std::int64_t a) const noexcept {
  if (d_->kind == Kind::Monoid) return a == 0;
  return d_->m == 0 || (a >= 0 && a < d_->m);
}

VCElement IndexCat::representative(std::int64_t a) const {
  if (!is_object(a)) throw InvalidArgument("no object " + std::to_string(a) + " in " + describe());
  if (d_->kind == Kind::Monoid) return d_->ambient.identity();
  {
    std::shared_lock lock(d_->mu);
    if (auto it = d_->reps.find(a); it != d_->reps.end()) return it->second;
  }
  std::unique_lock lock(d_->mu);
  return d_->reps.try_emplace(a, d_->ambient.element(d_->ambient.k().identity(), a)).first->second;
}

std::int64_t IndexCat::act(const VCElement& g, std::int64_t a) const {
  if (!(g.owner() == d_->ambient)) throw OwnerMismatch("morphism is not an element of the ambient group");
  if (d_->kind == Kind::Monoid) return 0;
  const std::int64_t moved = checked::add(a, project_z(g));
  return d_->m == 0 ? moved : checked::mod(moved, d_->m);
}

VCElement IndexCat::relative(std::int64_t src, std::int64_t dst, const VCElement& g) const {
  return representative(dst).inverse() * g * representative(src);
}

std::int64_t IndexCat::q_exponent(std::int64_t src, std::int64_t dst, const VCElement& g) const {
  const std::int64_t p = project_z(relative(src, dst, g));
  if (d_->m == 0) return 0;
  return p / d_->m * d_->sign;
}

bool IndexCat::is_morphism(std::int64_t src, std::int64_t dst, const VCElement& g) const {
  if (!(g.owner() == d_->ambient) || !is_object(src) || !is_object(dst)) return false;
  if (d_->kind == Kind::Monoid) {
    if (project_z(g) % d_->m != 0) return false;
  } else if (act(g, src) != dst) {
    return false;
  }
  switch (d_->filter) {
    case MorphismFilter::All: return true;
    case MorphismFilter::Sigma: return q_exponent(src, dst, g) >= 0;
    default: return q_exponent(src, dst, g) == 0;
  }
}

void IndexCat::require_morphism(std::int64_t src, std::int64_t dst, const VCElement& g) const {
  if (!(g.owner() == d_->ambient)) throw OwnerMismatch("morphism is not an element of the ambient group");
  if (!is_morphism(src, dst, g))
    throw FilterViolation(g.to_string() + " is not a morphism " + std::to_string(src) + " -> " +
                          std::to_string(dst) + " of " + describe());
}

std::int64_t IndexCat::random_object(Rng& rng) const {
  if (d_->kind == Kind::Monoid) return 0;
  if (d_->m == 0) return rng.uniform(-4, 4);
  return rng.uniform(0, d_->m - 1);
}

VCElement IndexCat::random_morphism(Rng& rng, std::int64_t src, std::int64_t dst, std::int64_t max_q) const {
  std::int64_t q = 0;
  if (d_->m != 0) {
    if (d_->filter == MorphismFilter::All) q = rng.uniform(-max_q, max_q);
    if (d_->filter == MorphismFilter::Sigma) q = rng.uniform(0, max_q);
  }
  const VCGroup& g = d_->ambient;
  const VCElement r = g.element(static_cast<Elem>(rng.index(g.k().order())), q * d_->m * d_->sign);
  return representative(dst) * r * representative(src).inverse();
}

VCElement IndexCat::connecting_iso(std::int64_t src, std::int64_t dst) const {
  const VCElement f = representative(dst) * representative(src).inverse();
  if (!is_morphism(src, dst, f) || !is_morphism(dst, src, f.inverse()))
    throw NoIsoAvailable("no isomorphism " + std::to_string(src) + " -> " + std::to_string(dst) + " in " +
                         describe());
  return f;
}

std::string IndexCat::describe() const {
  const std::string base = d_->ambient.name().empty() ? d_->ambient.describe() : d_->ambient.name();
  std::string s = d_->kind == Kind::Monoid ? "monoid(" : "transport(";
  s += base + ", m=" + std::to_string(d_->m);
  if (d_->filter != MorphismFilter::All) s += ", " + to_string(d_->filter);
  if (d_->filter == MorphismFilter::Sigma) s += d_->sign > 0 ? "+" : "-";
  return s + ")";
}

bool IndexCat::operator==(const IndexCat& o) const noexcept {
  if (d_ == o.d_) return true;
  return d_->kind == o.d_->kind && d_->ambient == o.d_->ambient && d_->m == o.d_->m &&
         d_->filter == o.d_->filter && (d_->filter != MorphismFilter::Sigma || d_->sign == o.d_->sign);
}

IndexFunctor::IndexFunctor(std::string name, IndexCat source, IndexCat target, ObjectMap objects,
                           MorphismMap morphisms)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)) {
  if (!(source_.ambient() == target_.ambient())) throw OwnerMismatch("functor between different ambients");
}

namespace {

VCElement keep(std::int64_t, std::int64_t, const VCElement& g) { return g; }

}  // namespace

IndexFunctor IndexFunctor::identity(const IndexCat& c) {
  return IndexFunctor("id", c, c, [](std::int64_t a) { return a; }, keep);
}

IndexFunctor IndexFunctor::inclusion(const IndexCat& sub, const IndexCat& cat) {
  if (sub.kind() != cat.kind() || sub.index() != cat.index())
    throw InvalidArgument("inclusion needs categories with the same objects");
  return IndexFunctor("incl", sub, cat, [](std::int64_t a) { return a; }, keep);
}

IndexFunctor IndexFunctor::unit(const IndexCat& source, const IndexCat& target) {
  if (source.kind() != IndexCat::Kind::Monoid || target.kind() != IndexCat::Kind::Transport)
    throw InvalidArgument("unit functor goes from a monoid to a transport category");
  return IndexFunctor("e", source, target, [](std::int64_t) { return std::int64_t{0}; }, keep);
}

IndexFunctor IndexFunctor::unit_inverse(const IndexCat& source, const IndexCat& target) {
  if (source.kind() != IndexCat::Kind::Transport || target.kind() != IndexCat::Kind::Monoid)
    throw InvalidArgument("inverse unit functor goes from a transport to a monoid category");
  return IndexFunctor(
      "e^-1", source, target, [](std::int64_t) { return std::int64_t{0}; },
      [source](std::int64_t a, std::int64_t b, const VCElement& g) { return source.relative(a, b, g); });
}

IndexFunctor IndexFunctor::projection(const IndexCat& source, const IndexCat& target) {
  if (source.kind() != IndexCat::Kind::Transport || target.kind() != IndexCat::Kind::Transport)
    throw InvalidArgument("projection needs transport categories");
  const std::int64_t m = source.index(), m2 = target.index();
  if (m2 == 0 || (m != 0 && m % m2 != 0)) throw InvalidArgument("projection needs H inside H'");
  return IndexFunctor(
      "pr", source, target, [m2](std::int64_t a) { return checked::mod(a, m2); }, keep);
}

IndexFunctor IndexFunctor::right_translation(const IndexCat& c, const VCElement& lift) {
  if (c.kind() != IndexCat::Kind::Transport || c.index() != 0)
    throw InvalidArgument("R_sigma acts on the transport groupoid of G/K");
  const std::int64_t shift = project_z(lift);
  return IndexFunctor(
      "R_sigma", c, c, [shift](std::int64_t a) { return checked::add(a, shift); }, keep);
}

void IndexFunctor::validate(Rng& rng, std::size_t samples) const {
  auto fail = [this](const std::string& what) {
    throw NotAFunctor(name_ + ": " + what + " (" + source_.describe() + " -> " + target_.describe() + ")");
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const std::int64_t a = source_.random_object(rng);
    const std::int64_t b = source_.random_object(rng);
    const std::int64_t c = source_.random_object(rng);
    if (!target_.is_object(object(a))) fail("object " + std::to_string(a) + " has no image");
    const VCElement e = source_.ambient().identity();
    if (!morphism(a, a, e).is_identity()) fail("identity not preserved at " + std::to_string(a));
    const VCElement f = source_.random_morphism(rng, a, b);
    const VCElement g = source_.random_morphism(rng, b, c);
    const VCElement wf = morphism(a, b, f), wg = morphism(b, c, g);
    if (!target_.is_morphism(object(a), object(b), wf)) fail("image of " + f.to_string() + " is not a morphism");
    if (!(morphism(a, c, g * f) == wg * wf)) fail("composition not preserved at " + f.to_string());
  }
}

IndexFunctor compose(const IndexFunctor& second, const IndexFunctor& first) {
  if (!(first.target() == second.source())) throw InvalidArgument("functors are not composable");
  return IndexFunctor(
      second.name() + " o " + first.name(), first.source(), second.target(),
      [first, second](std::int64_t a) { return second.object(first.object(a)); },
      [first, second](std::int64_t a, std::int64_t b, const VCElement& g) {
        return second.morphism(first.object(a), first.object(b), first.morphism(a, b, g));
      });
}

}  // namespace vcyc
