// Acceptance battery: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vcyc/catalog.hpp"
#include "vcyc/cli.hpp"
#include "vcyc/diagrams.hpp"
#include "vcyc/errors.hpp"
#include "vcyc/hocolim.hpp"
#include "vcyc/orientation.hpp"
#include "vcyc/twisted_ring.hpp"
#include "vcyc/vc_group.hpp"

using namespace vcyc;

namespace {

struct Verdict {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

// ------------------------------------------------------------------ fixtures

VCGroup z3_inversion() {
  const FiniteGroup z3 = catalog::cyclic(3);
  VCGroup v = VCGroup::semidirect(z3, GroupAutomorphism(z3, {0, 2, 1}));
  v.set_name("Z3 x|inv Z");
  return v;
}

VCGroup z2_times_z() {
  const FiniteGroup z2 = catalog::cyclic(2);
  VCGroup v = VCGroup::semidirect(z2, GroupAutomorphism::identity(z2));
  v.set_name("Z2 x| Z");
  return v;
}

VCGroup klein_swap() {
  const FiniteGroup v4 = catalog::klein_four();
  VCGroup v = VCGroup::semidirect(v4, GroupAutomorphism(v4, {0, 2, 1, 3}));
  v.set_name("Z2xZ2 x|swap Z");
  return v;
}

Coefficients integers() { return {CoeffRing::integers(), RingAction::trivial()}; }

// Aut(Z/2) is trivial; the twist enters through the lift σ̄ = (a, 1).
std::vector<SigmaLift> diagram_lifts() {
  const VCGroup a = z2_times_z(), b = z3_inversion();
  return {SigmaLift(a, 1, 1, a.element(1, 1)), SigmaLift(b, 1, 1, b.element(0, 1))};
}

Elem element_of_order(const FiniteGroup& g, std::size_t n) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == n) return x;
  throw Error("Internal", "missing element");
}

// ------------------------------------------------------------------ 1

// Subgroups of K found by testing every subset for closure.
std::vector<std::vector<Elem>> subsets_closed(const FiniteGroup& k) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = k.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & (std::uint64_t{1} << k.identity()))) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1)) closed = (mask >> k.mul(a, b)) & 1;
    if (!closed) continue;
    std::vector<Elem> s;
    for (Elem a = 0; a < n; ++a)
      if (mask >> a & 1) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

Verdict criterion1() {
  Verdict v;
  const auto corpus = cli::corpus(Caps{});
  if (corpus.size() < 40) v.fail("corpus has only " + std::to_string(corpus.size()) + " groups");
  for (const auto& e : corpus) {
    const VCGroup& g = e.group;
    const bool t1 = classify_type(g) == VCType::TypeI;
    if (t1 != (abelianization(g).free_rank >= 1) || t1 != center_is_infinite(g) || t1 != g.is_semidirect())
      v.fail("verdicts disagree on " + e.name);
    const Subgroup kv = maximal_finite_normal(g);
    const auto gens = g.generators();
    for (const auto& s : subsets_closed(g.k())) {
      std::set<Elem> members(s.begin(), s.end());
      bool normal = true;
      for (const auto& x : gens)
        for (Elem a : s) {
          const VCElement c = x * g.from_k(a) * x.inverse();
          normal = normal && c.in_k() && members.count(c.k());
        }
      if (!normal) continue;
      for (Elem a : s)
        if (!kv.contains(a)) v.fail("finite normal subgroup escapes K_V in " + e.name);
    }
  }
  if (v.pass) v.note = std::to_string(corpus.size()) + " groups";
  return v;
}

// ------------------------------------------------------------------ 2

Verdict criterion2() {
  Verdict v;
  Rng rng(2);
  const CoeffRing z5 = CoeffRing::integers_mod(5);
  const VCGroup z = VCGroup::integers(), v3 = z3_inversion();
  struct Fixture {
    std::string name;
    IndexCat cat;
    Coefficients coeffs;
  };
  const std::vector<Fixture> fixtures{
      {"Z^ trivial", IndexCat::monoid(z), integers()},
      {"Z^ Mod-5 unit 2", IndexCat::monoid(z), {z5, RingAction::unit_power(z5, z5.from_int(2))}},
      {"V^ Z3 x|inv Z", IndexCat::monoid(v3), integers()},
      {"G^V(V/K)", IndexCat::transport(v3, 0), integers()}};
  std::ostringstream notes;
  for (const auto& fx : fixtures) {
    std::size_t bad = 0, noncanonical = 0;
    for (int i = 0; i < 1000; ++i) {
      HocolimObject o[4];
      for (auto& x : o) x = {fx.cat.random_object(rng), 1 + rng.index(2)};
      const auto f = HocolimMorphism::random(rng, fx.cat, fx.coeffs, o[0], o[1]);
      const auto g = HocolimMorphism::random(rng, fx.cat, fx.coeffs, o[1], o[2]);
      const auto h = HocolimMorphism::random(rng, fx.cat, fx.coeffs, o[2], o[3]);
      const auto left = compose(compose(h, g), f), right = compose(h, compose(g, f));
      if (!(left == right)) ++bad;
      // Canonical form: no zero matrix stored, every key a morphism dom → cod.
      for (const auto* m : {&left, &right})
        for (const auto& [key, phi] : m->terms())
          if (phi.is_zero() || !fx.cat.is_morphism(m->dom().base, m->cod().base, key)) ++noncanonical;
      if (!(compose(HocolimMorphism::identity(fx.cat, fx.coeffs, o[1]), f) == f)) ++noncanonical;
    }
    notes << fx.name << ": " << bad << " non-associative";
    if (noncanonical) notes << ", " << noncanonical << " non-canonical";
    notes << "; ";
    if (bad || noncanonical) v.fail("");
  }
  v.note = notes.str();
  return v;
}

// ------------------------------------------------------------------ 3

Verdict criterion3() {
  Verdict v;
  Rng rng(3);
  const Coefficients c = integers();
  std::size_t cells = 0;
  for (const SigmaLift& lift : diagram_lifts()) {
    // ev ∘ incl = id on each retraction pair.
    for (int i = 0; i < 200; ++i) {
      const auto b = HocolimMorphism::random(rng, lift.k_hat(), c, {0, 1 + rng.index(2)}, {0, 1 + rng.index(2)});
      if (!(ev_sigma(include(b, lift.v_sigma_hat()), lift.k_hat()) == b)) v.fail("ev_V o incl != id");
      if (!(ev_b_sigma(i_b(b, lift, true)) == b)) v.fail("ev_B o i_B != id");
      const IndexCat gk = lift.g_v_k();
      const HocolimObject x{gk.random_object(rng), 1}, y{gk.random_object(rng), 2};
      const auto t = HocolimMorphism::random(rng, gk, c, x, y);
      if (!(ev_sigma(include(t, lift.g_v_sigma()), gk) == t)) v.fail("ev(G/V) o incl != id");
    }
    for (const char* name :
         {"diagram_reducing_to_groups_ev", "diagram_of_cat_i_i[sigma]", "passage_to_calb", "mapping_torus"}) {
      const DiagramReport r = check_diagram(name, {lift, c, 100, 7});
      for (const auto& cell : r.cells) {
        ++cells;
        if (cell.samples < 100) v.fail(std::string(name) + "/" + cell.name + " ran too few samples");
        if (!cell.pass) v.fail(std::string(name) + "/" + cell.name + " @ " + lift.ambient().describe() + ": " +
                               cell.counterexample);
      }
    }
  }
  if (v.pass) v.note = std::to_string(cells) + " cells on 2 groups";
  return v;
}

// ------------------------------------------------------------------ 4

Verdict criterion4() {
  Verdict v;
  Rng rng(4);
  const Coefficients c = integers();
  std::vector<SigmaLift> lifts = diagram_lifts();
  const VCGroup k = klein_swap(), v3 = z3_inversion();
  lifts.emplace_back(k, 2, -1, k.element(2, -2));
  lifts.emplace_back(v3, 2, 1, v3.element(1, 2));
  for (const SigmaLift& s : lifts) {
    for (int i = 0; i < 200; ++i) {
      const bool sigma_only = rng.coin();
      const auto q = QHatMorphism::random(rng, s, c, 1 + rng.index(2), 1 + rng.index(2), sigma_only);
      if (!(psi_inverse(psi_iso(q), s) == q)) v.fail("Psi^-1 o Psi != id");
      const auto m = HocolimMorphism::random(rng, sigma_only ? s.v_sigma_hat() : s.v_hat(), c, {0, 1}, {0, 2});
      if (!(psi_iso(psi_inverse(m, s)) == m)) v.fail("Psi o Psi^-1 != id");
    }
  }
  // Bounded supports: keys (n, k) with |n| ≤ 3, at most 3 of them, unit
  // coefficients, on both sides of Ψ.
  std::size_t enumerated = 0;
  for (const SigmaLift& s : diagram_lifts()) {
    const VCGroup& g = s.ambient();
    std::vector<std::pair<std::int64_t, Elem>> keys;
    for (std::int64_t n = -3; n <= 3; ++n)
      for (Elem a = 0; a < g.k().order(); ++a) keys.emplace_back(n, a);
    const Matrix one = Matrix::from_ints(c.ring, {{1}});
    std::set<std::string> q_side, v_side, images, preimages;
    const std::size_t nk = keys.size();
    auto each_support = [&](const std::function<void(const std::vector<std::size_t>&)>& f) {
      for (std::size_t a = 0; a <= nk; ++a)
        for (std::size_t b = a; b <= nk; ++b)
          for (std::size_t d = b; d <= nk; ++d) {
            std::vector<std::size_t> sup;
            for (std::size_t x : {a, b, d})
              if (x < nk && (sup.empty() || sup.back() != x)) sup.push_back(x);
            if ((a < nk && a == b) || (b < nk && b == d)) continue;
            f(sup);
          }
    };
    each_support([&](const std::vector<std::size_t>& sup) {
      QHatMorphism q(s, c, 1, 1);
      for (std::size_t x : sup)
        q.add_term(keys[x].first, HocolimMorphism::term(s.k_hat(), c, {0, 1}, {0, 1}, g.from_k(keys[x].second), one));
      HocolimMorphism m(s.v_hat(), c, {0, 1}, {0, 1});
      for (std::size_t x : sup) m.add_term(g.element(keys[x].second, keys[x].first * s.index() * s.sign()), one);
      q_side.insert(q.to_string());
      v_side.insert(m.to_string());
      images.insert(psi_iso(q).to_string());
      preimages.insert(psi_inverse(m, s).to_string());
      if (!(psi_inverse(psi_iso(q), s) == q)) v.fail("enumerated Psi^-1 o Psi != id");
      ++enumerated;
    });
    if (images.size() != q_side.size()) v.fail("Psi is not injective on bounded supports");
    if (images != v_side) v.fail("Psi does not map bounded supports onto bounded supports");
    if (preimages != q_side) v.fail("Psi^-1 does not map bounded supports onto bounded supports");
  }
  if (v.pass) v.note = std::to_string(enumerated) + " enumerated hom-set elements";
  return v;
}

// ------------------------------------------------------------------ 5

// Laurent polynomials over Z[K]: degree ↦ coefficient vector, with
// λtⁱ·μtʲ = λ·φⁱ(μ)·tⁱ⁺ʲ.
using Dense = std::map<std::int64_t, std::vector<std::int64_t>>;

void prune(Dense& d) {
  for (auto it = d.begin(); it != d.end();) {
    bool zero = true;
    for (auto x : it->second) zero = zero && x == 0;
    it = zero ? d.erase(it) : std::next(it);
  }
}

Dense dense_mul(const VCGroup& g, const Dense& x, const Dense& y) {
  const FiniteGroup& k = g.k();
  Dense out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      auto& r = out[i + j];
      r.resize(k.order(), 0);
      const GroupAutomorphism& p = g.phi_power(i);
      for (Elem s = 0; s < k.order(); ++s)
        for (Elem t = 0; t < k.order(); ++t) r[k.mul(s, p(t))] += a[s] * b[t];
    }
  prune(out);
  return out;
}

using DenseMatrix = std::vector<std::vector<Dense>>;

DenseMatrix to_dense(const PolyMatrix& m) {
  DenseMatrix out(m.rows, std::vector<Dense>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      for (const auto& [n, lambda] : m.at(i, j).terms()) {
        auto& v = out[i][j][n];
        for (const Coeff& c : lambda.coeffs()) v.push_back(c.num);
      }
  return out;
}

DenseMatrix dense_matmul(const VCGroup& g, const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  DenseMatrix out(n, std::vector<Dense>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Dense acc;
      for (std::size_t l = 0; l < inner; ++l)
        for (const auto& [d, v] : dense_mul(g, a[i][l], b[l][j])) {
          auto& r = acc[d];
          r.resize(v.size(), 0);
          for (std::size_t x = 0; x < v.size(); ++x) r[x] += v[x];
        }
      prune(acc);
      out[i][j] = acc;
    }
  return out;
}

Verdict criterion5() {
  Verdict v;
  Rng rng(5);
  const Coefficients c = integers();
  std::size_t pairs = 0;
  for (const IndexCat& cat : {IndexCat::monoid(VCGroup::integers()), IndexCat::monoid(z3_inversion()),
                              IndexCat::monoid(klein_swap(), 2)}) {
    for (int i = 0; i < 300; ++i) {
      const HocolimObject x{0, 1 + rng.index(3)}, y{0, 1 + rng.index(3)}, z{0, 1 + rng.index(3)};
      const auto f = HocolimMorphism::random(rng, cat, c, x, y);
      const auto g = HocolimMorphism::random(rng, cat, c, y, z);
      const auto lhs = to_dense(to_group_ring_matrix(compose(g, f)));
      const auto rhs = dense_matmul(cat.ambient(), to_dense(to_group_ring_matrix(g)), to_dense(to_group_ring_matrix(f)));
      if (lhs != rhs) v.fail("mismatch over " + cat.describe() + " at pair " + std::to_string(i));
      ++pairs;
    }
  }
  if (v.pass) v.note = std::to_string(pairs) + " pairs";
  return v;
}

// ------------------------------------------------------------------ 6

bool oracle_orientable(const OrientationDiagram& d) {
  const std::size_t n = d.node_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const SignedEdge& e : d.edges()) {
      const int a = (mask >> e.from & 1) ? -1 : 1, b = (mask >> e.to & 1) ? -1 : 1;
      ok = ok && a * e.sign == b;
    }
    if (ok) return true;
  }
  return false;
}

bool valid_witness(const OrientationDiagram& d, const std::vector<std::size_t>& w) {
  if (w.empty()) return false;
  for (std::size_t start : {d.edges()[w[0]].from, d.edges()[w[0]].to}) {
    std::size_t at = start;
    int product = 1;
    bool ok = true;
    for (std::size_t e : w) {
      const SignedEdge& s = d.edges()[e];
      if (s.from == at) at = s.to;
      else if (s.to == at) at = s.from;
      else ok = false;
      product *= s.sign;
    }
    if (ok && at == start && product == -1) return true;
  }
  return false;
}

Verdict criterion6() {
  Verdict v;
  Rng rng(6);
  const VCGroup z = VCGroup::integers();
  std::size_t unorientable = 0;
  for (int i = 0; i < 500; ++i) {
    OrientationDiagram d;
    const std::size_t n = 1 + rng.index(10);
    for (std::size_t j = 0; j < n; ++j) d.add_node("n" + std::to_string(j), z);
    const std::size_t edges = rng.index(2 * n + 1);
    for (std::size_t j = 0; j < edges; ++j) d.add_signed_edge(rng.index(n), rng.index(n), rng.sign());
    const bool expect = oracle_orientable(d);
    const OrientationResult r = solve(d);
    if (std::holds_alternative<Orientation>(r) != expect) v.fail("verdict differs from exhaustive search");
    if (const auto* o = std::get_if<Orientation>(&r)) {
      for (const SignedEdge& e : d.edges())
        if (o->assignment[e.from] * e.sign != o->assignment[e.to]) v.fail("assignment violates an edge");
    } else {
      ++unorientable;
      if (!valid_witness(d, std::get<Unorientable>(r).witness)) v.fail("invalid witness");
    }
  }
  const OrientationDiagram dinf = dinfty_obstruction_fixture(VCGroup::infinite_dihedral());
  const OrientationResult r = solve(dinf);
  if (!std::holds_alternative<Unorientable>(r)) v.fail("D_inf obstruction reported orientable");
  else if (!valid_witness(dinf, std::get<Unorientable>(r).witness)) v.fail("D_inf witness invalid");
  if (v.pass) v.note = "500 diagrams, " + std::to_string(unorientable) + " unorientable; D_inf obstruction ok";
  return v;
}

// ------------------------------------------------------------------ 7

template <class E>
RingMatrix<E> random_matrix(std::size_t r, std::size_t c, const std::function<E()>& gen) {
  RingMatrix<E> m{r, c, {}};
  for (std::size_t i = 0; i < r * c; ++i) m.entries.push_back(gen());
  return m;
}

std::vector<InclusionDatum> ring_fixtures() {
  std::vector<InclusionDatum> out;
  const FiniteGroup z4 = catalog::cyclic(4), s3 = catalog::symmetric(3), d4 = catalog::dihedral(4);
  const FiniteGroup z3 = catalog::cyclic(3), v4 = catalog::klein_four(), s4 = catalog::symmetric(4);
  out.push_back(InclusionDatum::from_subgroup(Subgroup(z4, {0, 2}), GroupAutomorphism::identity(z4)));
  const std::vector<Elem> r3{element_of_order(s3, 3)}, r4{1};
  out.push_back(InclusionDatum::from_subgroup(Subgroup::generated_by(s3, r3),
                                              GroupAutomorphism::conjugation(s3, element_of_order(s3, 2))));
  out.push_back(semidirect_embed(z3, GroupAutomorphism(z3, {0, 2, 1})).datum);
  out.push_back(InclusionDatum::from_subgroup(Subgroup::generated_by(d4, r4), GroupAutomorphism::conjugation(d4, 4)));
  for (const auto& a : automorphisms(v4))
    if (a.order() == 3) {
      out.push_back(semidirect_embed(v4, a).datum);
      break;
    }
  for (const Subgroup& s : all_subgroups(s4))
    if (s.size() == 6) {
      out.push_back(InclusionDatum::from_subgroup(s, GroupAutomorphism::conjugation(s4, s.elements()[1])));
      break;
    }
  return out;
}

Verdict criterion7() {
  Verdict v;
  Rng rng(7);
  const CoeffRing zr = CoeffRing::integers();
  const auto fixtures = ring_fixtures();
  for (std::size_t f = 0; f < 5; ++f) {
    const InclusionDatum& d = fixtures[f];
    const InclusionRings rings = inclusion_rings(d, zr);
    for (int i = 0; i < 300; ++i) {
      const auto z = rings.rk_t.random(rng, 3, 4);
      if (!(beta(rings, d, beta_inverse(rings, d, z)) == z)) v.fail("beta o beta^-1 != id");
      std::vector<TwistedPolyElement> y;
      for (std::size_t j = 0; j < d.index(); ++j) y.push_back(rings.rh_t.random(rng));
      if (!(beta_inverse(rings, d, beta(rings, d, y)) == y)) v.fail("beta^-1 o beta != id");
    }
    for (std::size_t n = 1; n <= 3; ++n)
      if (!natural_iso_T(rings, d, n).pass) v.fail("T(P) square fails at rank " + std::to_string(n));
  }
  // η on S3 and D4 with every inner twist.
  std::size_t eta_samples = 0;
  for (const FiniteGroup& g : {catalog::symmetric(3), catalog::dihedral(4)}) {
    for (Elem k = 0; k < g.order(); ++k) {
      const TwistedPolyRing ring(TwistedGroupRing(g, zr), GroupAutomorphism::conjugation(g, k));
      const TwistedPolyRing flat = untwisted(ring);
      const int per = 500 / static_cast<int>(g.order()) + 1;
      for (int i = 0; i < per; ++i, ++eta_samples) {
        const auto x = ring.random(rng), y = ring.random(rng);
        if (!(eta_inner(k, x * y) == eta_inner(k, x) * eta_inner(k, y))) v.fail("eta not multiplicative");
        if (!(eta_inner(k, x + y) == eta_inner(k, x) + eta_inner(k, y))) v.fail("eta not additive");
        if (!(ev_zero(eta_inner(k, x)) == ev_zero(x))) v.fail("eta does not commute with ev_zero");
        // Inverse: μtⁱ ↦ μ·k⁻ⁱ·tⁱ.
        const auto w = flat.random(rng);
        TwistedPolyElement back = ring.zero();
        for (const auto& [d, mu] : w.terms()) back = back + ring.monomial(mu * ring.base().basis(g.power(k, -d)), d);
        if (!(eta_inner(k, back) == w)) v.fail("eta not surjective");
      }
    }
  }
  // Rank law over 50 random (fixture, matrix) pairs.
  for (int i = 0; i < 50; ++i) {
    const InclusionDatum& d = fixtures[rng.index(fixtures.size())];
    const InclusionRings rings = inclusion_rings(d, zr);
    const std::size_t r = 1 + rng.index(3), c = 1 + rng.index(3);
    const auto p = random_matrix<GroupRingElement>(r, c, [&] { return rings.rh.random(rng); });
    const auto m = induction_restriction_transfer(rings, d, p);
    if (m.rows != d.index() * r || m.cols != d.index() * c) v.fail("transfer rank law");
  }
  if (v.pass) v.note = "5 beta fixtures, " + std::to_string(eta_samples) + " eta samples, 50 transfers";
  return v;
}

// ------------------------------------------------------------------ 8

Verdict criterion8() {
  Verdict v;
  Rng rng(8);
  const std::vector<std::string> names{"Z2", "Z3", "Z4", "Z5", "S3", "Z2xZ2", "D4", "Q8"};
  for (int i = 0; i < 100; ++i) {
    const FiniteGroup k = catalog::by_name(names[rng.index(names.size())]);
    const auto auts = automorphisms(k);
    const GroupAutomorphism& phi = auts[rng.index(auts.size())];
    const GroupAutomorphism& alpha = auts[rng.index(auts.size())];
    const Elem k0 = static_cast<Elem>(rng.index(k.order()));
    const std::int64_t m = rng.sign() * rng.uniform(1, 3);
    // f(a) = α(a), f(t) = (k0, m) forces ψ = α⁻¹ ∘ c(k0) ∘ φᵐ ∘ α on V.
    const GroupAutomorphism psi =
        alpha.inverse().after(GroupAutomorphism::conjugation(k, k0)).after(phi.power(m)).after(alpha);
    const VCGroup vg = VCGroup::semidirect(k, psi), wg = VCGroup::semidirect(k, phi);
    std::vector<VCElement> images;
    for (Elem g : k.generators()) images.push_back(wg.from_k(alpha(g)));
    images.push_back(wg.element(k0, m));
    const VCHom f(vg, wg, images);
    const int expected = m > 0 ? 1 : -1;
    for (int j = 0; j < 6; ++j) {
      const VCElement w = wg.random_element(rng, 5);
      if (gen_sign(f, w) != expected)
        v.fail("gen(f) changes with the representative " + w.to_string() + " in " + wg.describe());
    }
  }
  if (v.pass) v.note = "100 triples x 6 representatives";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "structure battery over the corpus", 60, criterion1},
      {2, "hocolim associativity and canonicity", 30, criterion2},
      {3, "retractions and diagram suite", 120, criterion3},
      {4, "Psi isomorphism", 30, criterion4},
      {5, "group-ring oracle", 30, criterion5},
      {6, "orientation solver", 30, criterion6},
      {7, "twisted ring suite", 60, criterion7},
      {8, "gen(f) well-definedness", 30, criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) v.fail("runtime " + std::to_string(secs) + " s over the limit");
    std::printf("criterion %d [%s] %s (%.2f s / %.0f s): %s\n", c.id, v.pass ? "PASS" : "FAIL", c.title, secs,
                c.limit_s, v.note.c_str());
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
