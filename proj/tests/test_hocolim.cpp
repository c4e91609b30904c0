#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <thread>

#include "vcyc/catalog.hpp"
#include "vcyc/diagrams.hpp"
#include "vcyc/errors.hpp"
#include "vcyc/hocolim.hpp"

using namespace vcyc;

namespace {

VCGroup z3_inversion() {
  const FiniteGroup z3 = catalog::cyclic(3);
  VCGroup v = VCGroup::semidirect(z3, GroupAutomorphism(z3, {0, 2, 1}));
  v.set_name("Z3 x|inv Z");
  return v;
}

VCGroup z2_times_z() {
  const FiniteGroup z2 = catalog::cyclic(2);
  return VCGroup::semidirect(z2, GroupAutomorphism::identity(z2));
}

VCGroup klein_swap() {
  const FiniteGroup v4 = catalog::klein_four();
  return VCGroup::semidirect(v4, GroupAutomorphism(v4, {0, 2, 1, 3}));
}

Coefficients integers() { return {CoeffRing::integers(), RingAction::trivial()}; }

Coefficients mod5_unit() {
  const CoeffRing z5 = CoeffRing::integers_mod(5);
  return {z5, RingAction::unit_power(z5, z5.from_int(2))};
}

Matrix ints(const CoeffRing& r, std::vector<std::vector<std::int64_t>> rows) { return Matrix::from_ints(r, rows); }

// Triples h∘g∘f of random composable morphisms over `cat`.
struct Triple {
  HocolimMorphism f, g, h;
};

Triple random_triple(Rng& rng, const IndexCat& cat, const Coefficients& c) {
  HocolimObject x[4];
  for (auto& o : x) o = {cat.random_object(rng), rng.index(3)};
  return {HocolimMorphism::random(rng, cat, c, x[0], x[1]), HocolimMorphism::random(rng, cat, c, x[1], x[2]),
          HocolimMorphism::random(rng, cat, c, x[2], x[3])};
}

}  // namespace

TEST_CASE("coefficient ring axioms") {
  Rng rng(7);
  for (const CoeffRing& r : {CoeffRing::integers(), CoeffRing::rationals(), CoeffRing::integers_mod(6)}) {
    for (int i = 0; i < 1000; ++i) {
      const Coeff a = r.random(rng, 20), b = r.random(rng, 20), c = r.random(rng, 20);
      CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
      CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
      CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
      CHECK(r.add(a, b) == r.add(b, a));
      CHECK(r.mul(a, b) == r.mul(b, a));
      CHECK(r.add(a, r.neg(a)) == r.zero());
      CHECK(r.mul(a, r.one()) == a);
      CHECK(r.contains(r.mul(a, b)));
    }
  }
  // Exactness against plain integer arithmetic.
  const CoeffRing q = CoeffRing::rationals();
  CHECK(q.add(q.from_fraction(1, 3), q.from_fraction(1, 6)) == q.from_fraction(1, 2));
  CHECK(q.mul(q.from_fraction(-2, 4), q.from_fraction(4, 3)) == Coeff{-2, 3});
  const CoeffRing z7 = CoeffRing::integers_mod(7);
  CHECK(z7.inv(z7.from_int(3)) == z7.from_int(5));
  CHECK(z7.from_int(-1) == z7.from_int(6));
  CHECK_THROWS_AS(CoeffRing::integers_mod(6).inv({2, 1}), InvalidArgument);
  CHECK(CoeffRing::parse("Z/5") == CoeffRing::integers_mod(5));
  CHECK_THROWS_AS(CoeffRing::parse("F5"), ParseError);
}

TEST_CASE("composition examples") {
  const VCGroup z = VCGroup::integers();
  const IndexCat zhat = IndexCat::monoid(z);
  const VCElement s = z.t();
  SUBCASE("trivial action multiplies matrices") {
    const Coefficients c = integers();
    const auto a = HocolimMorphism::term(zhat, c, {0, 1}, {0, 1}, s, ints(c.ring, {{3}}));
    const auto b = HocolimMorphism::term(zhat, c, {0, 1}, {0, 1}, s, ints(c.ring, {{5}}));
    const auto ab = compose(a, b);
    REQUIRE(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->first == s * s);
    CHECK(ab.terms().begin()->second == ints(c.ring, {{15}}));
  }
  SUBCASE("unit action mod 5") {
    const Coefficients c = mod5_unit();
    const auto a = HocolimMorphism::term(zhat, c, {0, 1}, {0, 1}, s, ints(c.ring, {{1}}));
    const auto b = HocolimMorphism::term(zhat, c, {0, 1}, {0, 1}, s, ints(c.ring, {{3}}));
    const auto ab = compose(a, b);
    CHECK(ab == HocolimMorphism::term(zhat, c, {0, 1}, {0, 1}, s * s, ints(c.ring, {{1}})));
  }
  SUBCASE("identities") {
    Rng rng(3);
    const Coefficients c = integers();
    const auto m = HocolimMorphism::random(rng, zhat, c, {0, 2}, {0, 3});
    CHECK(compose(m, HocolimMorphism::identity(zhat, c, {0, 2})) == m);
    CHECK(compose(HocolimMorphism::identity(zhat, c, {0, 3}), m) == m);
  }
  SUBCASE("shape and filter errors") {
    const Coefficients c = integers();
    HocolimMorphism m(zhat, c, {0, 1}, {0, 2});
    CHECK_THROWS_AS(m.add_term(s, ints(c.ring, {{1}})), ShapeMismatch);
    const IndexCat zsigma = IndexCat::monoid(z, 1, MorphismFilter::Sigma);
    HocolimMorphism p(zsigma, c, {0, 1}, {0, 1});
    CHECK_THROWS_AS(p.add_term(s.inverse(), ints(c.ring, {{1}})), FilterViolation);
    CHECK_THROWS_AS(compose(m, m), ShapeMismatch);
  }
}

TEST_CASE("associativity") {
  Rng rng(11);
  const VCGroup v = z3_inversion();
  struct Fixture {
    IndexCat cat;
    Coefficients coeffs;
  };
  for (const Fixture& fx : {Fixture{IndexCat::monoid(VCGroup::integers()), integers()},
                            Fixture{IndexCat::monoid(v), integers()},
                            Fixture{IndexCat::transport(v, 0), integers()},
                            Fixture{IndexCat::transport(klein_swap(), 2, MorphismFilter::Sigma), integers()}}) {
    for (int i = 0; i < 200; ++i) {
      const Triple t = random_triple(rng, fx.cat, fx.coeffs);
      CHECK(compose(t.h, compose(t.g, t.f)) == compose(compose(t.h, t.g), t.f));
    }
  }
}

TEST_CASE("unit scaling action is not multiplicative") {
  // With g* = u^{p(g)}·(-), (h∘g)∘f carries u^{p(g)+p(f)} on h's matrix and
  // h∘(g∘f) carries u^{p(g)+2p(f)}; the two differ whenever u^{p(f)} ≠ 1.
  const VCGroup z = VCGroup::integers();
  const IndexCat zhat = IndexCat::monoid(z);
  const Coefficients c = mod5_unit();
  const auto one = [&](std::int64_t n) {
    return HocolimMorphism::term(zhat, c, {0, 1}, {0, 1}, z.element(0, n), ints(c.ring, {{1}}));
  };
  const auto left = compose(compose(one(1), one(1)), one(1));
  const auto right = compose(one(1), compose(one(1), one(1)));
  CHECK(left.terms().begin()->second == ints(c.ring, {{4}}));   // u^{1+1}
  CHECK(right.terms().begin()->second == ints(c.ring, {{3}}));  // u^{1+2} = 8
  CHECK_FALSE(left == right);
  // The defect vanishes when the innermost key has exponent zero.
  CHECK(compose(compose(one(1), one(1)), one(0)) == compose(one(1), compose(one(1), one(0))));
}

TEST_CASE("additive structure") {
  Rng rng(5);
  const VCGroup v = z3_inversion();
  const Coefficients c = integers();
  SUBCASE("negation cancels") {
    const IndexCat cat = IndexCat::monoid(v);
    const auto m = HocolimMorphism::random(rng, cat, c, {0, 2}, {0, 2});
    CHECK(add(m, negate(m)).is_zero());
    CHECK(add(m, negate(m)).terms().empty());
  }
  SUBCASE("sum over one base") {
    const IndexCat cat = IndexCat::monoid(v);
    const DirectSum s = direct_sum(cat, c, {0, 1}, {0, 2});
    CHECK(s.object == HocolimObject{0, 3});
  }
  SUBCASE("sum across bases") {
    const IndexCat cat = IndexCat::transport(v, 0);
    const HocolimObject x{0, 1}, y{3, 2};
    const DirectSum s = direct_sum(cat, c, x, y);
    CHECK(s.object == HocolimObject{0, 3});
    CHECK(compose(s.out1, s.in1) == HocolimMorphism::identity(cat, c, x));
    CHECK(compose(s.out2, s.in2) == HocolimMorphism::identity(cat, c, y));
    CHECK(compose(s.out2, s.in1).is_zero());
    CHECK(compose(s.out1, s.in2).is_zero());
    CHECK(add(compose(s.in1, s.out1), compose(s.in2, s.out2)) == HocolimMorphism::identity(cat, c, s.object));
    // The second summand is reached through T_f with f = (e, 3).
    REQUIRE(s.out2.terms().size() == 1);
    CHECK(s.out2.terms().begin()->first == v.element(0, 3));
  }
  SUBCASE("sum of morphisms projects back") {
    const IndexCat cat = IndexCat::transport(v, 0);
    for (int i = 0; i < 50; ++i) {
      const HocolimObject x{cat.random_object(rng), 1}, y{cat.random_object(rng), 2};
      const HocolimObject x2{cat.random_object(rng), 2}, y2{cat.random_object(rng), 1};
      const auto a = HocolimMorphism::random(rng, cat, c, x, y);
      const auto b = HocolimMorphism::random(rng, cat, c, x2, y2);
      const auto ab = direct_sum(a, b);
      const DirectSum src = direct_sum(cat, c, x, x2), dst = direct_sum(cat, c, y, y2);
      CHECK(compose(dst.out1, compose(ab, src.in1)) == a);
      CHECK(compose(dst.out2, compose(ab, src.in2)) == b);
      CHECK(compose(dst.out2, compose(ab, src.in1)).is_zero());
    }
  }
}

TEST_CASE("index categories") {
  const VCGroup v = z3_inversion();
  Rng rng(9);
  SUBCASE("filter closure") {
    for (const IndexCat& cat :
         {IndexCat::monoid(v, 1, MorphismFilter::Sigma), IndexCat::monoid(v, 2, MorphismFilter::Kernel),
          IndexCat::monoid(v, 1, MorphismFilter::Sigma, -1), IndexCat::transport(v, 2, MorphismFilter::Sigma),
          IndexCat::transport(v, 3, MorphismFilter::Kernel, -1)}) {
      for (int i = 0; i < 200; ++i) {
        const std::int64_t a = cat.random_object(rng), b = cat.random_object(rng), d = cat.random_object(rng);
        const VCElement f = cat.random_morphism(rng, a, b), g = cat.random_morphism(rng, b, d);
        REQUIRE(cat.is_morphism(a, b, f));
        CHECK(cat.is_morphism(a, d, g * f));
        CHECK(cat.is_morphism(a, a, v.identity()));
      }
    }
  }
  SUBCASE("kernel filter: composite in K iff both factors are") {
    const IndexCat all = IndexCat::monoid(v, 1, MorphismFilter::Sigma);
    const IndexCat ker = all.with_filter(MorphismFilter::Kernel);
    for (int i = 0; i < 200; ++i) {
      const VCElement f = all.random_morphism(rng, 0, 0), g = all.random_morphism(rng, 0, 0);
      CHECK(ker.is_morphism(0, 0, g * f) == (ker.is_morphism(0, 0, f) && ker.is_morphism(0, 0, g)));
    }
  }
  SUBCASE("transport morphisms") {
    const IndexCat gk = IndexCat::transport(v, 0);
    CHECK(gk.is_morphism(2, 5, v.element(1, 3)));
    CHECK_FALSE(gk.is_morphism(2, 4, v.element(1, 3)));
    const IndexCat gv = IndexCat::transport(v, 2, MorphismFilter::Kernel);
    CHECK(gv.is_morphism(0, 1, v.element(2, 1)));
    CHECK_FALSE(gv.is_morphism(0, 1, v.element(2, -1)));  // relative (·, -2) ∉ K
    CHECK_THROWS_AS(IndexCat::transport(v, 0, MorphismFilter::Sigma), InvalidArgument);
    CHECK_THROWS_AS(IndexCat::monoid(VCGroup::infinite_dihedral()), TypeMismatch);
  }
  SUBCASE("concurrent representative lookups") {
    const IndexCat gk = IndexCat::transport(v, 0);
    std::vector<std::thread> pool;
    std::vector<int> ok(4, 1);
    for (int w = 0; w < 4; ++w)
      pool.emplace_back([&, w] {
        for (std::int64_t a = -200; a <= 200; ++a)
          if (!(gk.representative(a) == v.element(0, a))) ok[w] = 0;
      });
    for (auto& t : pool) t.join();
    CHECK(ok == std::vector<int>(4, 1));
  }
  SUBCASE("functor validation rejects non-functors") {
    const IndexCat vh = IndexCat::monoid(v);
    const IndexFunctor square("square", vh, vh, [](std::int64_t a) { return a; },
                              [](std::int64_t, std::int64_t, const VCElement& g) { return g * g; });
    CHECK_THROWS_AS(square.validate(rng), NotAFunctor);
    CHECK_NOTHROW(IndexFunctor::unit(vh, IndexCat::transport(v, 1)).validate(rng));
  }
}

TEST_CASE("pushforward") {
  Rng rng(13);
  const VCGroup v = z3_inversion();
  const Coefficients c = integers();
  const SigmaLift s = SigmaLift::standard(v, 2);
  const IndexCat vh = s.v_hat();
  SUBCASE("identity functor") {
    const auto m = HocolimMorphism::random(rng, vh, c, {0, 2}, {0, 1});
    CHECK(pushforward(IndexFunctor::identity(vh), m) == m);
  }
  SUBCASE("unit functor re-reads keys") {
    const VCElement g = v.element(1, 2);
    const auto m = HocolimMorphism::term(vh, c, {0, 1}, {0, 1}, g, ints(c.ring, {{4}}));
    const auto pm = pushforward(IndexFunctor::unit(vh, s.g_v()), m);
    CHECK(pm.cat() == s.g_v());
    CHECK(pm == HocolimMorphism::term(s.g_v(), c, {0, 1}, {0, 1}, g, ints(c.ring, {{4}})));
  }
  SUBCASE("composite functors") {
    const IndexFunctor w1 = IndexFunctor::unit(s.k_hat(), s.g_k());
    const IndexFunctor w2 = IndexFunctor::projection(s.g_k(), s.g_v());
    for (int i = 0; i < 100; ++i) {
      const auto m = HocolimMorphism::random(rng, s.k_hat(), c, {0, rng.index(3)}, {0, rng.index(3)});
      CHECK(pushforward(w2, pushforward(w1, m)) == pushforward(compose(w2, w1), m));
    }
  }
  SUBCASE("wrong source") {
    const auto m = HocolimMorphism::random(rng, vh, c, {0, 1}, {0, 1});
    CHECK_THROWS_AS(pushforward(IndexFunctor::identity(s.k_hat()), m), NotAFunctor);
  }
  SUBCASE("action must be preserved") {
    const CoeffRing z5 = CoeffRing::integers_mod(5);
    const Coefficients u{z5, RingAction::unit_power(z5, z5.from_int(2))};
    const IndexCat gk = s.g_k();
    const auto m = HocolimMorphism::term(gk, u, {0, 1}, {1, 1}, v.element(0, 1), ints(z5, {{1}}));
    CHECK_THROWS_AS(pushforward(IndexFunctor::unit_inverse(gk, IndexCat::monoid(v)), m), NotAFunctor);
  }
}

TEST_CASE("coefficient transformations") {
  Rng rng(17);
  const VCGroup v = z3_inversion();
  const Coefficients c = integers();
  const IndexCat vh = IndexCat::monoid(v);
  SUBCASE("identity") {
    const auto m = HocolimMorphism::random(rng, vh, c, {0, 2}, {0, 2});
    CHECK(map_int_S(CoeffTransformation::identity(c), m) == m);
  }
  SUBCASE("reduction") {
    const auto m = HocolimMorphism::term(vh, c, {0, 1}, {0, 1}, v.t(), ints(c.ring, {{4}}));
    const auto s = CoeffTransformation::reduction(c, 3);
    const CoeffRing z3 = CoeffRing::integers_mod(3);
    CHECK(map_int_S(s, m) == HocolimMorphism::term(vh, s.target(), {0, 1}, {0, 1}, v.t(), ints(z3, {{1}})));
    const auto zero = HocolimMorphism::term(vh, c, {0, 1}, {0, 1}, v.t(), ints(c.ring, {{3}}));
    CHECK(map_int_S(s, zero).is_zero());
  }
  SUBCASE("functoriality") {
    const auto s1 = CoeffTransformation::reduction(c, 6);
    const auto s2 = CoeffTransformation::rank_doubling(s1.target());
    for (int i = 0; i < 100; ++i) {
      const auto f = HocolimMorphism::random(rng, vh, c, {0, 1}, {0, 2});
      const auto g = HocolimMorphism::random(rng, vh, c, {0, 2}, {0, 2});
      CHECK(map_int_S(s2, map_int_S(s1, f)) == map_int_S(compose(s2, s1), f));
      CHECK(map_int_S(s1, compose(g, f)) == compose(map_int_S(s1, g), map_int_S(s1, f)));
      CHECK(map_int_S(s2, map_int_S(s1, compose(g, f))) ==
            compose(map_int_S(s2, map_int_S(s1, g)), map_int_S(s2, map_int_S(s1, f))));
    }
  }
  SUBCASE("compatibility with pushforward") {
    const SigmaLift sl = SigmaLift::standard(v);
    const IndexFunctor w = IndexFunctor::unit(sl.v_hat(), sl.g_v());
    const auto s = compose(CoeffTransformation::rank_doubling(CoeffTransformation::reduction(c, 4).target()),
                           CoeffTransformation::reduction(c, 4));
    for (int i = 0; i < 100; ++i) {
      const auto m = HocolimMorphism::random(rng, sl.v_hat(), c, {0, 1}, {0, 2});
      CHECK(map_int_S(s, pushforward(w, m)) == pushforward(w, map_int_S(s, m)));
    }
  }
  SUBCASE("not natural") {
    const Coefficients q{CoeffRing::rationals(), RingAction::trivial()};
    CHECK_THROWS_AS(CoeffTransformation::reduction(q, 3), NotNatural);
    const auto m = HocolimMorphism::random(rng, vh, q, {0, 1}, {0, 1});
    CHECK_THROWS_AS(map_int_S(CoeffTransformation::identity(c), m), NotNatural);
  }
}

TEST_CASE("evaluation at sigma") {
  const Coefficients c = integers();
  SUBCASE("positive powers vanish") {
    const VCGroup z = VCGroup::integers();
    const IndexCat zs = IndexCat::monoid(z, 1, MorphismFilter::Sigma);
    const auto m = HocolimMorphism::term(zs, c, {0, 1}, {0, 1}, z.element(0, 3), ints(c.ring, {{7}}));
    CHECK(ev_sigma(m, zs.with_filter(MorphismFilter::Kernel)).is_zero());
  }
  SUBCASE("mixed support") {
    const VCGroup v = z3_inversion();
    const SigmaLift s = SigmaLift::standard(v);
    HocolimMorphism m(s.v_sigma_hat(), c, {0, 1}, {0, 1});
    m.add_term(v.identity(), ints(c.ring, {{1}}));
    m.add_term(v.element(0, 1) * v.from_k(1), ints(c.ring, {{2}}));
    CHECK(ev_sigma(m, s.k_hat()) == HocolimMorphism::identity(s.k_hat(), c, {0, 1}));
  }
}

TEST_CASE("Phi, Psi and R_sigma") {
  Rng rng(19);
  const Coefficients c = integers();
  const VCGroup v = z3_inversion();
  const SigmaLift s = SigmaLift::standard(v);
  SUBCASE("lift validation") {
    CHECK_THROWS_AS(SigmaLift(v, 1, 1, v.element(0, 2)), LiftMismatch);
    CHECK_THROWS_AS(SigmaLift(v, 2, -1, v.element(1, 2)), LiftMismatch);
    CHECK_NOTHROW(SigmaLift(v, 2, -1, v.element(1, -2)));
  }
  SUBCASE("Phi on trivial K is the identity") {
    const SigmaLift sz = SigmaLift::standard(VCGroup::integers());
    const auto m = HocolimMorphism::random(rng, sz.k_hat(), c, {0, 2}, {0, 1});
    CHECK(phi_twist(m, sz) == m);
  }
  SUBCASE("Phi conjugates keys") {
    const auto m = HocolimMorphism::term(s.k_hat(), c, {0, 1}, {0, 1}, v.from_k(1), ints(c.ring, {{1}}));
    const auto pm = phi_twist(m, s);
    CHECK(pm.terms().begin()->first == v.from_k(2));
  }
  SUBCASE("Phi has finite order on keys") {
    for (const VCGroup& w : {v, klein_swap(), z2_times_z()}) {
      const SigmaLift sl(w, 1, 1, w.element(static_cast<Elem>(w.k().order() - 1), 1));
      const std::int64_t n = static_cast<std::int64_t>(w.phi().order() * w.k().order());
      for (int i = 0; i < 20; ++i) {
        const auto m = HocolimMorphism::random(rng, sl.k_hat(), c, {0, 1}, {0, 2});
        CHECK(phi_twist(m, sl, n) == m);
      }
    }
  }
  SUBCASE("Psi examples") {
    const auto id = QHatMorphism::identity(s, c, 1);
    CHECK(psi_iso(id) == HocolimMorphism::identity(s.v_sigma_hat(), c, {0, 1}));
    QHatMorphism q(s, c, 1, 1);
    q.add_term(1, HocolimMorphism::term(s.k_hat(), c, {0, 1}, {0, 1}, v.from_k(1), ints(c.ring, {{5}})));
    const auto pq = psi_iso(q);
    REQUIRE(pq.terms().size() == 1);
    CHECK(pq.terms().begin()->first == v.element(2, 1));  // t·a = φ(a)·t = a²t
    CHECK(pq.terms().begin()->second == ints(c.ring, {{5}}));
  }
  SUBCASE("Psi round trips") {
    for (const VCGroup& w : {v, klein_swap(), z2_times_z()})
      for (int sign : {1, -1}) {
        const SigmaLift sl(w, 2, sign, w.element(static_cast<Elem>(w.k().order() - 1), 2 * sign));
        for (int i = 0; i < 100; ++i) {
          const bool sigma_only = rng.coin();
          const auto q = QHatMorphism::random(rng, sl, c, rng.index(3), rng.index(3), sigma_only);
          CHECK(psi_inverse(psi_iso(q), sl) == q);
          const IndexCat cat = sigma_only ? sl.v_sigma_hat() : sl.v_hat();
          const auto m = HocolimMorphism::random(rng, cat, c, {0, 1}, {0, 2});
          CHECK(psi_iso(psi_inverse(m, sl)) == m);
        }
      }
  }
  SUBCASE("Psi is bijective on bounded supports") {
    // Every key σ̄ⁿk with |n| ≤ 3; supports of size ≤ 2 with unit coefficients.
    std::vector<std::pair<std::int64_t, Elem>> keys;
    for (std::int64_t n = -3; n <= 3; ++n)
      for (Elem k = 0; k < 3; ++k) keys.emplace_back(n, k);
    std::set<std::string> images;
    std::size_t count = 0;
    for (std::size_t i = 0; i <= keys.size(); ++i)
      for (std::size_t j = i + 1; j <= keys.size(); ++j) {
        QHatMorphism q(s, c, 1, 1);
        for (std::size_t x : {i, j}) {
          if (x == keys.size()) continue;
          q.add_term(keys[x].first, HocolimMorphism::term(s.k_hat(), c, {0, 1}, {0, 1}, v.from_k(keys[x].second),
                                                          ints(c.ring, {{1}})));
        }
        const auto m = psi_iso(q);
        images.insert(m.to_string());
        ++count;
        CHECK(psi_inverse(m, s) == q);
      }
    CHECK(images.size() == count);
  }
  SUBCASE("R_sigma on Z shifts objects") {
    const SigmaLift sz = SigmaLift::standard(VCGroup::integers());
    const auto m = HocolimMorphism::random(rng, sz.g_k(), c, {2, 1}, {5, 1});
    const auto rm = r_sigma(m, sz);
    CHECK(rm.dom() == HocolimObject{3, 1});
    CHECK(rm.cod() == HocolimObject{6, 1});
    CHECK(rm.terms() == m.terms());
  }
}

TEST_CASE("diagrams") {
  struct Case {
    VCGroup group;
    std::int64_t m;
    int sign;
    Elem lift_k;
  };
  const std::vector<Case> cases{{z3_inversion(), 1, 1, 0}, {z3_inversion(), 2, -1, 1}, {z2_times_z(), 1, 1, 1},
                                {z2_times_z(), 2, 1, 1},   {klein_swap(), 1, 1, 2},    {VCGroup::integers(), 1, 1, 0}};
  for (const Case& cs : cases)
    for (const std::string& name : diagram_names()) {
      const SigmaLift lift(cs.group, cs.m, cs.sign, cs.group.element(cs.lift_k, cs.m * cs.sign));
      const DiagramReport r = check_diagram(name, {lift, integers(), 40, 3});
      CHECK(r.diagram == name);
      CHECK(!r.cells.empty());
      for (const auto& cell : r.cells) {
        INFO(name << " / " << cell.name << " / " << cs.group.describe() << ": " << cell.counterexample);
        CHECK(cell.pass);
      }
    }
  const SigmaLift lift = SigmaLift::standard(z3_inversion());
  CHECK_THROWS_AS(check_diagram("no_such_diagram", {lift, integers()}), UnknownDiagram);
}

TEST_CASE("group ring oracle") {
  Rng rng(23);
  const VCGroup v = z3_inversion();
  SUBCASE("identity and zero") {
    const IndexCat cat = IndexCat::monoid(v);
    const Coefficients c = integers();
    const PolyMatrix id = to_group_ring_matrix(HocolimMorphism::identity(cat, c, {0, 2}));
    const TwistedPolyRing ring = group_ring_for(cat, c);
    CHECK(id.at(0, 0) == ring.one());
    CHECK(id.at(0, 1).is_zero());
    CHECK(id.at(1, 1) == ring.one());
    const PolyMatrix z = to_group_ring_matrix(HocolimMorphism(cat, c, {0, 2}, {0, 1}));
    CHECK(z.rows == 1);
    CHECK(z.cols == 2);
    for (const auto& e : z.entries) CHECK(e.is_zero());
  }
  SUBCASE("composition is the matrix product") {
    struct Fixture {
      IndexCat cat;
      Coefficients coeffs;
    };
    for (const Fixture& fx : {Fixture{IndexCat::monoid(VCGroup::integers()), integers()},
                              Fixture{IndexCat::monoid(v), integers()},
                              Fixture{IndexCat::monoid(klein_swap(), 2), integers()},
                              Fixture{IndexCat::monoid(VCGroup::integers()), mod5_unit()}}) {
      for (int i = 0; i < 100; ++i) {
        const HocolimObject x{0, 1 + rng.index(3)}, y{0, 1 + rng.index(3)}, z{0, 1 + rng.index(3)};
        const auto f = HocolimMorphism::random(rng, fx.cat, fx.coeffs, x, y);
        const auto g = HocolimMorphism::random(rng, fx.cat, fx.coeffs, y, z);
        CHECK(to_group_ring_matrix(compose(g, f)) == mat_mul(to_group_ring_matrix(g), to_group_ring_matrix(f)));
      }
    }
  }
  SUBCASE("transport categories are rejected") {
    const IndexCat cat = IndexCat::transport(v, 0);
    CHECK_THROWS_AS(to_group_ring_matrix(HocolimMorphism::identity(cat, integers(), {0, 1})), NotMonoidCat);
  }
}
