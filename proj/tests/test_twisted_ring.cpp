#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "vcyc/catalog.hpp"
#include "vcyc/errors.hpp"
#include "vcyc/twisted_ring.hpp"

using namespace vcyc;

namespace {

const CoeffRing kZ = CoeffRing::integers();

Elem find(const FiniteGroup& g, std::size_t order) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) return x;
  throw Error("Internal", "no element of the requested order");
}

// H ⊆ K from a subgroup S, ψ = conjugation by `by` (S must be invariant),
// and a greedy right transversal.
InclusionDatum datum_from(const FiniteGroup& k, const Subgroup& s, Elem by) {
  const auto& el = s.elements();
  std::vector<Elem> pos(k.order(), 0);
  for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> rows(el.size(), std::vector<Elem>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) rows[i][j] = pos[k.mul(el[i], el[j])];
  const FiniteGroup h = FiniteGroup::from_table(rows);
  const GroupAutomorphism psi = GroupAutomorphism::conjugation(k, by);
  std::vector<Elem> phi(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) phi[i] = pos[psi(el[i])];
  std::vector<Elem> reps;
  std::vector<char> covered(k.order(), 0);
  for (Elem g = 0; g < k.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (Elem x : el) covered[k.mul(x, g)] = 1;
  }
  return InclusionDatum::make(h, k, el, GroupAutomorphism(h, phi), psi, reps);
}

struct Fixture {
  std::string name;
  InclusionDatum datum;
};

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  const FiniteGroup z4 = catalog::cyclic(4);
  out.push_back({"Z4 > Z2", datum_from(z4, Subgroup(z4, {0, 2}), 0)});
  const FiniteGroup s3 = catalog::symmetric(3);
  const Elem r3 = find(s3, 3), tau = find(s3, 2);
  out.push_back({"S3 > A3", datum_from(s3, Subgroup::generated_by(s3, std::vector<Elem>{r3}), tau)});
  const FiniteGroup z3 = catalog::cyclic(3);
  out.push_back({"Z3 x| Z/2", semidirect_embed(z3, GroupAutomorphism(z3, {0, 2, 1})).datum});
  const FiniteGroup d4 = catalog::dihedral(4);
  out.push_back({"D4 > Z4", datum_from(d4, Subgroup::generated_by(d4, std::vector<Elem>{1}), 4)});
  const FiniteGroup v4 = catalog::klein_four();
  for (const auto& a : automorphisms(v4))
    if (a.order() == 3) {
      out.push_back({"V4 x| Z/3", semidirect_embed(v4, a).datum});
      break;
    }
  const FiniteGroup s4 = catalog::symmetric(4);
  for (const Subgroup& s : all_subgroups(s4))
    if (s.size() == 6) {
      out.push_back({"S4 > S3", datum_from(s4, s, s.elements()[1])});
      break;
    }
  return out;
}

// Convolution in Z[G] computed from the multiplication table.
std::vector<std::int64_t> convolve(const FiniteGroup& g, const GroupRingElement& x, const GroupRingElement& y) {
  std::vector<std::int64_t> out(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) out[g.mul(a, b)] += x.coeff(a).num * y.coeff(b).num;
  return out;
}

// Degree ↦ coefficient vector, multiplied with λtⁱ·μtʲ = λφⁱ(μ)tⁱ⁺ʲ.
using Dense = std::map<std::int64_t, std::vector<std::int64_t>>;

Dense dense(const TwistedPolyElement& x) {
  Dense d;
  for (const auto& [i, lambda] : x.terms()) {
    auto& v = d[i];
    for (const Coeff& c : lambda.coeffs()) v.push_back(c.num);
  }
  return d;
}

Dense dense_mul(const FiniteGroup& g, const GroupAutomorphism& phi, const Dense& x, const Dense& y) {
  Dense out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      auto& v = out[i + j];
      v.resize(g.order(), 0);
      const GroupAutomorphism p = phi.power(i);
      for (Elem s = 0; s < g.order(); ++s)
        for (Elem t = 0; t < g.order(); ++t) v[g.mul(s, p(t))] += a[s] * b[t];
    }
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (auto c : it->second) zero = zero && c == 0;
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class E>
RingMatrix<E> random_matrix(std::size_t r, std::size_t c, const std::function<E()>& gen) {
  RingMatrix<E> m{r, c, {}};
  for (std::size_t i = 0; i < r * c; ++i) m.entries.push_back(gen());
  return m;
}

}  // namespace

TEST_CASE("twisted multiplication") {
  const FiniteGroup z3 = catalog::cyclic(3);
  const TwistedGroupRing rk(z3, kZ);
  const TwistedPolyRing ring(rk, GroupAutomorphism(z3, {0, 2, 1}));
  // t·a = φ(a)·t = a²·t
  CHECK(ring.t() * ring.monomial(rk.basis(1)) == ring.monomial(rk.basis(2), 1));
  CHECK(ring.t(2) * ring.monomial(rk.basis(1)) == ring.monomial(rk.basis(1), 2));
  CHECK(ring.monomial(rk.basis(1)) * ring.t() == ring.monomial(rk.basis(1), 1));
  CHECK_THROWS_AS(ring.monomial(rk.one(), -1), InvalidArgument);
  const TwistedPolyRing other(rk, GroupAutomorphism::identity(z3));
  CHECK_THROWS_AS(poly_mul(ring.t(), other.t()), RingMismatch);
}

TEST_CASE("evaluation at zero") {
  const FiniteGroup z3 = catalog::cyclic(3);
  const TwistedGroupRing rk(z3, kZ);
  const TwistedPolyRing ring(rk, GroupAutomorphism(z3, {0, 2, 1}));
  const auto x = ring.monomial(rk.basis(1, {3, 1})) + ring.monomial(rk.basis(2), 2);
  CHECK(ev_zero(x) == rk.basis(1, {3, 1}));
  CHECK(ev_zero(ring.t()).is_zero());
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto a = ring.random(rng), b = ring.random(rng);
    CHECK(ev_zero(a * b) == ev_zero(a) * ev_zero(b));
  }
  const TwistedPolyRing laurent(rk, GroupAutomorphism(z3, {0, 2, 1}), true);
  CHECK_THROWS_AS(ev_zero(laurent.t(-1)), InvalidArgument);
}

TEST_CASE("ring products against direct convolution") {
  Rng rng(31);
  for (const FiniteGroup& g : {catalog::symmetric(3), catalog::dihedral(4), catalog::quaternion()}) {
    const TwistedGroupRing r(g, kZ);
    for (int i = 0; i < 300; ++i) {
      const auto x = r.random(rng), y = r.random(rng), z = r.random(rng);
      const auto xy = x * y;
      for (Elem e = 0; e < g.order(); ++e) CHECK(xy.coeff(e).num == convolve(g, x, y)[e]);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
  for (const auto& fx : fixtures()) {
    const TwistedPolyRing ring(TwistedGroupRing(fx.datum.k, kZ), fx.datum.psi, true);
    for (int i = 0; i < 200; ++i) {
      const auto x = ring.random(rng), y = ring.random(rng), z = ring.random(rng);
      CHECK(dense(x * y) == dense_mul(fx.datum.k, fx.datum.psi, dense(x), dense(y)));
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) * z == x * z + y * z);
    }
  }
}

TEST_CASE("unit scaling in the polynomial product") {
  const FiniteGroup z1 = catalog::trivial();
  const CoeffRing z5 = CoeffRing::integers_mod(5);
  const TwistedPolyRing ring(TwistedGroupRing(z1, z5), GroupAutomorphism::identity(z1), true, z5.from_int(2));
  const auto t = ring.t();
  CHECK((t * t) == ring.monomial(ring.base().scalar(z5.from_int(2)), 2));
  CHECK_FALSE((t * t) * t == t * (t * t));
}

TEST_CASE("beta decomposition") {
  const auto fx = fixtures();
  SUBCASE("Z4 over {0, 2}") {
    const InclusionDatum& d = fx[0].datum;
    const InclusionRings rings = inclusion_rings(d, kZ);
    const auto y = beta_inverse(rings, d, rings.rk_t.monomial(rings.rk.basis(1), 1));
    REQUIRE(y.size() == 2);
    CHECK(y[0].is_zero());
    CHECK(y[1] == rings.rh_t.t());
    const auto y3 = beta_inverse(rings, d, rings.rk_t.monomial(rings.rk.basis(3)));
    CHECK(y3[1] == rings.rh_t.monomial(rings.rh.basis(1)));
  }
  SUBCASE("round trips") {
    Rng rng(37);
    for (const auto& f : fx) {
      const InclusionRings rings = inclusion_rings(f.datum, kZ);
      for (int i = 0; i < 300; ++i) {
        const auto z = rings.rk_t.random(rng, 3, 4);
        CHECK(beta(rings, f.datum, beta_inverse(rings, f.datum, z)) == z);
        std::vector<TwistedPolyElement> y;
        for (std::size_t j = 0; j < f.datum.index(); ++j) y.push_back(rings.rh_t.random(rng));
        CHECK(beta_inverse(rings, f.datum, beta(rings, f.datum, y)) == y);
        std::vector<GroupRingElement> x;
        for (std::size_t j = 0; j < f.datum.index(); ++j) x.push_back(rings.rh.random(rng));
        CHECK(alpha_inverse(rings, f.datum, alpha(rings, f.datum, x)) == x);
      }
    }
  }
  SUBCASE("invalid data") {
    const FiniteGroup z4 = catalog::cyclic(4);
    const FiniteGroup z2 = catalog::cyclic(2);
    const auto id2 = GroupAutomorphism::identity(z2), id4 = GroupAutomorphism::identity(z4);
    CHECK_THROWS_AS(InclusionDatum::make(z2, z4, {0, 2}, id2, id4, {0, 2}), InvalidArgument);
    CHECK_THROWS_AS(InclusionDatum::make(z2, z4, {0, 1}, id2, id4, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(InclusionDatum::make(z2, z4, {0, 2}, id2, id4, {0}), InvalidArgument);
  }
}

TEST_CASE("induction-restriction transfer") {
  Rng rng(41);
  const auto fx = fixtures();
  SUBCASE("S3 over A3") {
    const InclusionDatum& d = fx[1].datum;
    const InclusionRings rings = inclusion_rings(d, kZ);
    // r is H's generator; k₀ = e so the first block is r itself.
    Elem r = 0;
    for (Elem x = 0; x < d.h.order(); ++x)
      if (d.emb[x] == find(d.k, 3)) r = x;
    const GroupRingMatrix p{1, 1, {rings.rh.basis(r)}};
    const auto m = induction_restriction_transfer(rings, d, p);
    REQUIRE(m.rows == 2);
    CHECK(m.at(0, 0) == rings.rh.basis(r));
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 0).is_zero());
    CHECK(m.at(1, 1) == rings.rh.basis(d.h.mul(r, r)));
  }
  SUBCASE("matrix of right multiplication") {
    for (const auto& f : fx) {
      const InclusionDatum& d = f.datum;
      const InclusionRings rings = inclusion_rings(d, kZ);
      const std::size_t l = d.index();
      for (int i = 0; i < 30; ++i) {
        const std::size_t rr = 1 + rng.index(2), cc = 1 + rng.index(2);
        const auto p = random_matrix<TwistedPolyElement>(rr, cc, [&] { return rings.rh_t.random(rng, 2, 2); });
        const auto m = induction_restriction_transfer(rings, d, p);
        CHECK(m.rows == l * rr);
        CHECK(m.cols == l * cc);
        // β(x·M) = β(x)·i(p) for a random row vector x over RH_φ[t].
        const auto x = random_matrix<TwistedPolyElement>(1, l * rr, [&] { return rings.rh_t.random(rng, 2, 2); });
        const auto xm = mat_mul(x, m);
        for (std::size_t c = 0; c < cc; ++c) {
          auto lhs = rings.rk_t.zero();
          for (std::size_t r = 0; r < rr; ++r) {
            std::vector<TwistedPolyElement> block(x.entries.begin() + static_cast<std::ptrdiff_t>(r * l),
                                                  x.entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * l));
            lhs = lhs + beta(rings, d, block) * include_poly(rings, d, p.at(r, c));
          }
          std::vector<TwistedPolyElement> out(xm.entries.begin() + static_cast<std::ptrdiff_t>(c * l),
                                              xm.entries.begin() + static_cast<std::ptrdiff_t>((c + 1) * l));
          CHECK(beta(rings, d, out) == lhs);
        }
        const auto q = random_matrix<TwistedPolyElement>(cc, 1, [&] { return rings.rh_t.random(rng, 2, 2); });
        CHECK(induction_restriction_transfer(rings, d, mat_mul(p, q)) ==
              mat_mul(m, induction_restriction_transfer(rings, d, q)));
      }
    }
  }
  SUBCASE("ring mismatch") {
    const InclusionRings rings = inclusion_rings(fx[0].datum, kZ);
    const PolyMatrix p{1, 1, {rings.rk_t.one()}};
    CHECK_THROWS_AS(induction_restriction_transfer(rings, fx[0].datum, p), RingMismatch);
  }
}

TEST_CASE("natural isomorphism T") {
  Rng rng(43);
  for (const auto& f : fixtures()) {
    const InclusionRings rings = inclusion_rings(f.datum, kZ);
    for (std::size_t n = 1; n <= 3; ++n) {
      const CheckOutcome o = natural_iso_T(rings, f.datum, n);
      INFO(f.name << " n=" << n << ": " << o.counterexample);
      CHECK(o.pass);
      CHECK(o.checked == 2 * n * f.datum.index() * f.datum.h.order());
    }
    const auto u = random_matrix<TwistedPolyElement>(2, 3, [&] { return rings.rk_t.random(rng, 2, 2); });
    const CheckOutcome o = natural_iso_T_naturality(rings, f.datum, u, rng, 50);
    CHECK(o.pass);
    CHECK(o.checked == 50);
  }
}

TEST_CASE("eta untwists inner automorphisms") {
  Rng rng(47);
  SUBCASE("example") {
    const FiniteGroup s3 = catalog::symmetric(3);
    const Elem tau = find(s3, 2);
    const TwistedGroupRing rk(s3, kZ);
    const TwistedPolyRing ring(rk, GroupAutomorphism::conjugation(s3, tau));
    const auto x = ring.monomial(rk.basis(find(s3, 3)), 1) + ring.monomial(rk.one(), 2);
    const TwistedPolyRing flat = untwisted(ring);
    CHECK(eta_inner(tau, x) ==
          flat.monomial(rk.basis(s3.mul(find(s3, 3), tau)), 1) + flat.monomial(rk.one(), 2));
  }
  SUBCASE("multiplicative") {
    for (const FiniteGroup& g : {catalog::symmetric(3), catalog::dihedral(4)}) {
      for (Elem k = 0; k < g.order(); ++k) {
        const TwistedPolyRing ring(TwistedGroupRing(g, kZ), GroupAutomorphism::conjugation(g, k));
        for (int i = 0; i < 500 / static_cast<int>(g.order()) + 1; ++i) {
          const auto x = ring.random(rng), y = ring.random(rng);
          CHECK(eta_inner(k, x * y) == eta_inner(k, x) * eta_inner(k, y));
          CHECK(eta_inner(k, x + y) == eta_inner(k, x) + eta_inner(k, y));
        }
      }
    }
  }
  SUBCASE("wrong twist") {
    const FiniteGroup s3 = catalog::symmetric(3);
    const TwistedPolyRing ring(TwistedGroupRing(s3, kZ), GroupAutomorphism::identity(s3));
    CHECK_THROWS_AS(eta_inner(find(s3, 2), ring.t()), TwistMismatch);
    CHECK_NOTHROW(eta_inner(s3.identity(), ring.t()));
  }
}

TEST_CASE("semidirect embedding") {
  const FiniteGroup z3 = catalog::cyclic(3);
  const auto e = semidirect_embed(z3, GroupAutomorphism(z3, {0, 2, 1}));
  CHECK(e.ambient.order() == 6);
  CHECK(find_isomorphism(e.ambient, catalog::symmetric(3)).has_value());
  CHECK(e.t == 3);
  // t·a·t⁻¹ = a⁻¹ inside the ambient group.
  CHECK(e.ambient.conjugate(e.inclusion[1], e.t) == e.inclusion[2]);
  CHECK(e.datum.index() == 2);
  const FiniteGroup z4 = catalog::cyclic(4);
  const auto trivial = semidirect_embed(z4, GroupAutomorphism::identity(z4));
  CHECK(trivial.ambient.order() == 4);
  Caps caps;
  caps.semidirect_order = 4;
  CHECK_THROWS_AS(semidirect_embed(z3, GroupAutomorphism(z3, {0, 2, 1}), caps), CapExceeded);
}
