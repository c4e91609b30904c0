#include "vcyc/hocolim.hpp"

#include "vcyc/checked.hpp"
#include "vcyc/errors.hpp"

namespace vcyc {

namespace {

Matrix stacked_identity(const CoeffRing& r, std::size_t total, std::size_t offset, std::size_t n, bool column) {
  Matrix m = column ? Matrix(total, n) : Matrix(n, total);
  for (std::size_t i = 0; i < n; ++i) {
    if (column)
      m.at(offset + i, i) = r.one();
    else
      m.at(i, offset + i) = r.one();
  }
  return m;
}

std::string object_string(const HocolimObject& x) {
  return "(" + std::to_string(x.base) + ", rank " + std::to_string(x.rank) + ")";
}

}  // namespace

HocolimMorphism::HocolimMorphism(IndexCat cat, Coefficients coeffs, HocolimObject dom, HocolimObject cod)
    : cat_(std::move(cat)), coeffs_(std::move(coeffs)), dom_(dom), cod_(cod) {
  if (!cat_.is_object(dom_.base) || !cat_.is_object(cod_.base))
    throw InvalidArgument("base object outside " + cat_.describe());
}

HocolimMorphism HocolimMorphism::identity(const IndexCat& cat, const Coefficients& coeffs, HocolimObject x) {
  return term(cat, coeffs, x, x, cat.ambient().identity(), Matrix::identity(coeffs.ring, x.rank));
}

HocolimMorphism HocolimMorphism::term(const IndexCat& cat, const Coefficients& coeffs, HocolimObject dom,
                                      HocolimObject cod, const VCElement& f, const Matrix& phi) {
  HocolimMorphism m(cat, coeffs, dom, cod);
  m.add_term(f, phi);
  return m;
}

HocolimMorphism HocolimMorphism::structural(const IndexCat& cat, const Coefficients& coeffs, const VCElement& f,
                                            std::int64_t a, std::size_t rank) {
  return term(cat, coeffs, {a, rank}, {cat.act(f, a), rank}, f, Matrix::identity(coeffs.ring, rank));
}

HocolimMorphism HocolimMorphism::random(Rng& rng, const IndexCat& cat, const Coefficients& coeffs,
                                        HocolimObject dom, HocolimObject cod, std::size_t max_terms,
                                        std::int64_t max_q) {
  HocolimMorphism m(cat, coeffs, dom, cod);
  const std::size_t terms = 1 + rng.index(max_terms);
  for (std::size_t i = 0; i < terms; ++i)
    m.add_term(cat.random_morphism(rng, dom.base, cod.base, max_q),
               Matrix::random(coeffs.ring, rng, cod.rank, dom.rank));
  return m;
}

void HocolimMorphism::add_term(const VCElement& f, const Matrix& phi) {
  cat_.require_morphism(dom_.base, cod_.base, f);
  if (phi.rows() != cod_.rank || phi.cols() != dom_.rank)
    throw ShapeMismatch("term matrix is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                        ", expected " + std::to_string(cod_.rank) + "x" + std::to_string(dom_.rank));
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (!coeffs_.ring.contains(phi.at(i, j))) throw RingMismatch("matrix entry outside " + coeffs_.ring.name());
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    if (!phi.is_zero()) terms_.emplace(f, phi);
    return;
  }
  it->second = mat_add(coeffs_.ring, it->second, phi);
  if (it->second.is_zero()) terms_.erase(it);
}

std::string HocolimMorphism::to_string() const {
  std::string s = object_string(dom_) + " -> " + object_string(cod_) + ": ";
  if (terms_.empty()) return s + "0";
  bool first = true;
  for (const auto& [f, phi] : terms_) {
    s += (first ? "" : " + ") + std::string("T[") + f.to_string() + "]" + phi.format(coeffs_.ring);
    first = false;
  }
  return s;
}

bool HocolimMorphism::operator==(const HocolimMorphism& o) const {
  return cat_ == o.cat_ && coeffs_ == o.coeffs_ && dom_ == o.dom_ && cod_ == o.cod_ && terms_ == o.terms_;
}

namespace {

void require_same_context(const HocolimMorphism& a, const HocolimMorphism& b) {
  if (!(a.cat() == b.cat())) throw InvalidArgument("morphisms over different index categories");
  if (!(a.coeffs() == b.coeffs())) throw RingMismatch("morphisms with different coefficients");
}

}  // namespace

HocolimMorphism compose(const HocolimMorphism& g, const HocolimMorphism& f) {
  require_same_context(g, f);
  if (!(f.cod() == g.dom()))
    throw ShapeMismatch("cannot compose: " + object_string(f.cod()) + " vs " + object_string(g.dom()));
  const Coefficients& c = f.coeffs();
  HocolimMorphism out(f.cat(), c, f.dom(), g.cod());
  for (const auto& [a, phi] : g.terms())
    for (const auto& [b, psi] : f.terms()) out.add_term(a * b, mat_mul(c.ring, c.act(project_z(b), phi), psi));
  return out;
}

HocolimMorphism add(const HocolimMorphism& a, const HocolimMorphism& b) {
  require_same_context(a, b);
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw ShapeMismatch("sum of morphisms with different ends");
  HocolimMorphism out = a;
  for (const auto& [f, phi] : b.terms()) out.add_term(f, phi);
  return out;
}

HocolimMorphism negate(const HocolimMorphism& a) {
  HocolimMorphism out(a.cat(), a.coeffs(), a.dom(), a.cod());
  for (const auto& [f, phi] : a.terms()) out.add_term(f, mat_neg(a.coeffs().ring, phi));
  return out;
}

DirectSum direct_sum(const IndexCat& cat, const Coefficients& coeffs, HocolimObject x, HocolimObject y) {
  const CoeffRing& r = coeffs.ring;
  const VCElement f = cat.connecting_iso(x.base, y.base);
  const VCElement e = cat.ambient().identity();
  const HocolimObject s{x.base, x.rank + y.rank};
  const HocolimObject fy{x.base, y.rank};  // (c, f*Y)
  const std::size_t n = s.rank;
  HocolimMorphism in1 = HocolimMorphism::term(cat, coeffs, x, s, e, stacked_identity(r, n, 0, x.rank, true));
  HocolimMorphism out1 = HocolimMorphism::term(cat, coeffs, s, x, e, stacked_identity(r, n, 0, x.rank, false));
  HocolimMorphism t_f = HocolimMorphism::structural(cat, coeffs, f, x.base, y.rank);
  HocolimMorphism t_f_inv = HocolimMorphism::term(cat, coeffs, y, fy, f.inverse(), Matrix::identity(r, y.rank));
  HocolimMorphism in2 = compose(
      HocolimMorphism::term(cat, coeffs, fy, s, e, stacked_identity(r, n, x.rank, y.rank, true)), t_f_inv);
  HocolimMorphism out2 =
      compose(t_f, HocolimMorphism::term(cat, coeffs, s, fy, e, stacked_identity(r, n, x.rank, y.rank, false)));
  return DirectSum{s, std::move(in1), std::move(in2), std::move(out1), std::move(out2)};
}

HocolimMorphism direct_sum(const HocolimMorphism& a, const HocolimMorphism& b) {
  require_same_context(a, b);
  const DirectSum src = direct_sum(a.cat(), a.coeffs(), a.dom(), b.dom());
  const DirectSum dst = direct_sum(a.cat(), a.coeffs(), a.cod(), b.cod());
  return add(compose(dst.in1, compose(a, src.out1)), compose(dst.in2, compose(b, src.out2)));
}

HocolimMorphism pushforward(const IndexFunctor& w, const HocolimMorphism& m) {
  if (!(m.cat() == w.source()))
    throw NotAFunctor(w.name() + " starts at " + w.source().describe() + ", morphism lives over " +
                      m.cat().describe());
  const HocolimObject dom{w.object(m.dom().base), m.dom().rank};
  const HocolimObject cod{w.object(m.cod().base), m.cod().rank};
  HocolimMorphism out(w.target(), m.coeffs(), dom, cod);
  for (const auto& [f, phi] : m.terms()) {
    const VCElement wf = w.morphism(m.dom().base, m.cod().base, f);
    if (!m.coeffs().action.is_trivial() && project_z(wf) != project_z(f))
      throw NotAFunctor(w.name() + " does not preserve the coefficient action at " + f.to_string());
    if (!w.target().is_morphism(dom.base, cod.base, wf))
      throw NotAFunctor(w.name() + " sends " + f.to_string() + " outside " + w.target().describe());
    out.add_term(wf, phi);
  }
  return out;
}

HocolimMorphism include(const HocolimMorphism& m, const IndexCat& cat) {
  return pushforward(IndexFunctor::inclusion(m.cat(), cat), m);
}

HocolimMorphism ev_sigma(const HocolimMorphism& m, const IndexCat& kernel) {
  if (kernel.kind() != m.cat().kind() || kernel.index() != m.cat().index() ||
      !(kernel.ambient() == m.cat().ambient()))
    throw InvalidArgument("kernel category does not match " + m.cat().describe());
  HocolimMorphism out(kernel, m.coeffs(), m.dom(), m.cod());
  for (const auto& [f, phi] : m.terms())
    if (kernel.is_morphism(m.dom().base, m.cod().base, f)) out.add_term(f, phi);
  return out;
}

CoeffTransformation CoeffTransformation::identity(const Coefficients& c) {
  CoeffTransformation s;
  s.source_ = c;
  s.target_ = c;
  return s;
}

CoeffTransformation CoeffTransformation::reduction(const Coefficients& c, std::int64_t n) {
  if (c.ring.kind() != CoeffRing::Kind::Integers) throw NotNatural("reduction mod n starts at the integers");
  CoeffTransformation s = identity(c);
  s.target_.ring = CoeffRing::integers_mod(n);
  s.target_.action = c.action.is_trivial() ? RingAction::trivial()
                                           : RingAction::unit_power(s.target_.ring, s.target_.ring.from_int(c.action.unit().num));
  s.steps_.emplace_back(Step::Reduce, n);
  return s;
}

CoeffTransformation CoeffTransformation::rank_doubling(const Coefficients& c) {
  CoeffTransformation s = identity(c);
  s.steps_.emplace_back(Step::Double, 2);
  return s;
}

std::size_t CoeffTransformation::map_rank(std::size_t r) const noexcept {
  for (const auto& [step, arg] : steps_)
    if (step == Step::Double) r *= 2;
  return r;
}

Matrix CoeffTransformation::map_matrix(const Matrix& m) const {
  Matrix out = m;
  for (const auto& [step, arg] : steps_) {
    if (step == Step::Double) {
      out = block_diag(out, out);
    } else {
      const CoeffRing target = CoeffRing::integers_mod(arg);
      out = mat_map(out, [&target](Coeff c) { return target.from_int(c.num); });
    }
  }
  return out;
}

std::string CoeffTransformation::describe() const {
  if (steps_.empty()) return "id";
  std::string s;
  for (const auto& [step, arg] : steps_) {
    if (!s.empty()) s = " o " + s;
    s = (step == Step::Double ? std::string("double") : "mod " + std::to_string(arg)) + s;
  }
  return s;
}

CoeffTransformation compose(const CoeffTransformation& second, const CoeffTransformation& first) {
  if (!(first.target() == second.source())) throw NotNatural("coefficient transformations are not composable");
  CoeffTransformation s = first;
  s.target_ = second.target_;
  s.steps_.insert(s.steps_.end(), second.steps_.begin(), second.steps_.end());
  return s;
}

HocolimMorphism map_int_S(const CoeffTransformation& s, const HocolimMorphism& m) {
  if (!(m.coeffs() == s.source()))
    throw NotNatural(s.describe() + " does not start at the coefficients of the morphism");
  HocolimMorphism out(m.cat(), s.target(), {m.dom().base, s.map_rank(m.dom().rank)},
                      {m.cod().base, s.map_rank(m.cod().rank)});
  for (const auto& [f, phi] : m.terms()) out.add_term(f, s.map_matrix(phi));
  return out;
}

SigmaLift::SigmaLift(VCGroup ambient, std::int64_t m, int sign, VCElement lift)
    : ambient_(std::move(ambient)), m_(m), sign_(sign), lift_(std::move(lift)) {
  if (!ambient_.is_semidirect()) throw TypeMismatch("sigma lifts need a SemidirectZ ambient");
  if (m_ < 1 || (sign_ != 1 && sign_ != -1)) throw InvalidArgument("lift needs m >= 1 and sign +-1");
  if (!(lift_.owner() == ambient_)) throw OwnerMismatch("lift is not an element of the ambient group");
  if (project_z(lift_) != checked::mul(m_, sign_))
    throw LiftMismatch("p(" + lift_.to_string() + ") = " + std::to_string(project_z(lift_)) + ", sigma needs " +
                       std::to_string(m_ * sign_));
}

SigmaLift SigmaLift::standard(const VCGroup& ambient, std::int64_t m, int sign) {
  return SigmaLift(ambient, m, sign, ambient.element(ambient.k().identity(), checked::mul(m, sign)));
}

HocolimMorphism phi_twist(const HocolimMorphism& m, const SigmaLift& s, std::int64_t power) {
  if (!(m.cat() == s.k_hat())) throw InvalidArgument("Phi acts on morphisms over " + s.k_hat().describe());
  const VCElement c = s.lift().pow(power);
  const VCElement c_inv = c.inverse();
  HocolimMorphism out(m.cat(), m.coeffs(), m.dom(), m.cod());
  for (const auto& [k, phi] : m.terms()) out.add_term(c_inv * k * c, m.coeffs().act(project_z(c), phi));
  return out;
}

HocolimMorphism r_sigma(const HocolimMorphism& m, const SigmaLift& s) {
  return pushforward(IndexFunctor::right_translation(s.g_k(), s.lift()), m);
}

QHatMorphism::QHatMorphism(SigmaLift lift, Coefficients coeffs, std::size_t dom_rank, std::size_t cod_rank,
                           bool sigma_only)
    : lift_(std::move(lift)), coeffs_(std::move(coeffs)), dom_(dom_rank), cod_(cod_rank), sigma_only_(sigma_only) {}

QHatMorphism QHatMorphism::identity(const SigmaLift& lift, const Coefficients& coeffs, std::size_t rank) {
  return i_b(HocolimMorphism::identity(lift.k_hat(), coeffs, {0, rank}), lift, true);
}

QHatMorphism QHatMorphism::random(Rng& rng, const SigmaLift& lift, const Coefficients& coeffs,
                                  std::size_t dom_rank, std::size_t cod_rank, bool sigma_only,
                                  std::size_t max_terms) {
  QHatMorphism m(lift, coeffs, dom_rank, cod_rank, sigma_only);
  const std::size_t terms = 1 + rng.index(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const std::int64_t n = sigma_only ? rng.uniform(0, 3) : rng.uniform(-3, 3);
    m.add_term(n, HocolimMorphism::random(rng, lift.k_hat(), coeffs, {0, dom_rank}, {0, cod_rank}, 2));
  }
  return m;
}

void QHatMorphism::add_term(std::int64_t n, const HocolimMorphism& beta) {
  if (sigma_only_ && n < 0) throw FilterViolation("T_sigma^" + std::to_string(n) + " is not in Q^[sigma]");
  if (!(beta.cat() == lift_.k_hat())) throw FilterViolation("coefficient morphism is not over " + lift_.k_hat().describe());
  if (!(beta.coeffs() == coeffs_)) throw RingMismatch("coefficient morphism with other coefficients");
  if (beta.dom().rank != dom_ || beta.cod().rank != cod_) throw ShapeMismatch("coefficient morphism of wrong ranks");
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    if (!beta.is_zero()) terms_.emplace(n, beta);
    return;
  }
  it->second = add(it->second, beta);
  if (it->second.is_zero()) terms_.erase(it);
}

std::string QHatMorphism::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [n, beta] : terms_)
    s += (s.empty() ? "" : " + ") + std::string("T[sigma^") + std::to_string(n) + "](" + beta.to_string() + ")";
  return s;
}

bool QHatMorphism::operator==(const QHatMorphism& o) const {
  return lift_.lift() == o.lift_.lift() && lift_.index() == o.lift_.index() && coeffs_ == o.coeffs_ &&
         dom_ == o.dom_ && cod_ == o.cod_ && sigma_only_ == o.sigma_only_ && terms_ == o.terms_;
}

QHatMorphism compose(const QHatMorphism& g, const QHatMorphism& f) {
  if (f.cod_rank() != g.dom_rank()) throw ShapeMismatch("cannot compose Q^ morphisms of mismatched ranks");
  if (f.sigma_only() != g.sigma_only()) throw InvalidArgument("Q^ morphisms over different categories");
  QHatMorphism out(f.lift(), f.coeffs(), f.dom_rank(), g.cod_rank(), f.sigma_only());
  for (const auto& [a, beta] : g.terms())
    for (const auto& [b, gamma] : f.terms())
      out.add_term(checked::add(a, b), compose(phi_twist(beta, f.lift(), b), gamma));
  return out;
}

QHatMorphism i_b(const HocolimMorphism& beta, const SigmaLift& s, bool sigma_only) {
  QHatMorphism m(s, beta.coeffs(), beta.dom().rank, beta.cod().rank, sigma_only);
  m.add_term(0, beta);
  return m;
}

HocolimMorphism ev_b_sigma(const QHatMorphism& m) {
  if (!m.sigma_only()) throw InvalidArgument("ev_B[sigma] is defined on Q^[sigma]");
  auto it = m.terms().find(0);
  if (it != m.terms().end()) return it->second;
  return HocolimMorphism(m.lift().k_hat(), m.coeffs(), {0, m.dom_rank()}, {0, m.cod_rank()});
}

QHatMorphism include_full(const QHatMorphism& m) {
  QHatMorphism out(m.lift(), m.coeffs(), m.dom_rank(), m.cod_rank(), false);
  for (const auto& [n, beta] : m.terms()) out.add_term(n, beta);
  return out;
}

QHatMorphism structural_t(const SigmaLift& s, const Coefficients& coeffs, std::size_t rank) {
  QHatMorphism m(s, coeffs, rank, rank, true);
  m.add_term(1, HocolimMorphism::identity(s.k_hat(), coeffs, {0, rank}));
  return m;
}

HocolimMorphism psi_iso(const QHatMorphism& m) {
  const SigmaLift& s = m.lift();
  HocolimMorphism out(m.sigma_only() ? s.v_sigma_hat() : s.v_hat(), m.coeffs(), {0, m.dom_rank()},
                      {0, m.cod_rank()});
  for (const auto& [n, beta] : m.terms()) {
    const VCElement c = s.lift().pow(n);
    for (const auto& [k, phi] : beta.terms()) out.add_term(c * k, phi);
  }
  return out;
}

QHatMorphism psi_inverse(const HocolimMorphism& m, const SigmaLift& s) {
  const bool sigma_only = m.cat() == s.v_sigma_hat();
  if (!sigma_only && !(m.cat() == s.v_hat())) throw InvalidArgument("Psi^-1 is defined over V^ and V^[sigma]");
  std::map<std::int64_t, HocolimMorphism> parts;
  for (const auto& [v, phi] : m.terms()) {
    const std::int64_t n = m.cat().q_exponent(0, 0, v);
    const VCElement k = s.lift().pow(checked::neg(n)) * v;
    auto it = parts.try_emplace(n, s.k_hat(), m.coeffs(), m.dom(), m.cod()).first;
    it->second.add_term(k, phi);
  }
  QHatMorphism out(s, m.coeffs(), m.dom().rank, m.cod().rank, sigma_only);
  for (const auto& [n, beta] : parts) out.add_term(n, beta);
  return out;
}

HocolimMorphism structural_s(const SigmaLift& s, const Coefficients& coeffs, std::size_t rank) {
  return HocolimMorphism::structural(s.g_k(), coeffs, s.lift(), 0, rank);
}

TwistedPolyRing group_ring_for(const IndexCat& cat, const Coefficients& coeffs) {
  const VCGroup& v = cat.ambient();
  return TwistedPolyRing(TwistedGroupRing(v.k(), coeffs.ring), v.phi(), true,
                         coeffs.action.is_trivial() ? coeffs.ring.one() : coeffs.action.unit());
}

PolyMatrix to_group_ring_matrix(const HocolimMorphism& m) {
  if (m.cat().kind() != IndexCat::Kind::Monoid)
    throw NotMonoidCat("group-ring matrices need a one-object category, got " + m.cat().describe());
  const TwistedPolyRing ring = group_ring_for(m.cat(), m.coeffs());
  const TwistedGroupRing& base = ring.base();
  auto out = PolyMatrix::filled(m.cod().rank, m.dom().rank, ring.zero());
  // Column-vector convention: a y × x matrix maps R^x to R^y.
  for (const auto& [f, phi] : m.terms())
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (std::size_t j = 0; j < phi.cols(); ++j)
        if (!m.coeffs().ring.is_zero(phi.at(i, j)))
          out.at(i, j) = out.at(i, j) + ring.monomial(base.basis(f.k(), phi.at(i, j)), project_z(f));
  return out;
}

}  // namespace vcyc
