#include "vcyc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "vcyc/catalog.hpp"
#include "vcyc/diagrams.hpp"
#include "vcyc/orientation.hpp"
#include "vcyc/twisted_ring.hpp"

namespace vcyc::cli {

namespace {

using io::Json;

Json caps_json(const Caps& c) {
  Json j;
  j["subgroup_order"] = c.subgroup_order;
  j["automorphism_order"] = c.automorphism_order;
  j["corpus_order"] = c.corpus_order;
  j["semidirect_order"] = c.semidirect_order;
  j["brute_force_nodes"] = c.brute_force_nodes;
  return j;
}

struct Outcome {
  bool pass = true;
  std::size_t samples = 0;
  std::string counterexample;
  Json details;

  // Keeps the first failure.
  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      counterexample = what;
    }
  }
};

Record timed(const std::string& name, const std::function<Outcome()>& f) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = f();
  const auto stop = std::chrono::steady_clock::now();
  Record r{name, o.pass, o.samples, o.counterexample, 0.0, o.details};
  r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<Json> inputs_or_default(const Scenario& s) {
  std::vector<Json> docs;
  for (const auto& path : s.inputs) docs.push_back(io::read_file(path));
  return docs;
}

// ---------------------------------------------------------------- corpus

Elem element_of_order(const FiniteGroup& g, std::size_t order) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) return x;
  throw Error("Internal", "no element of order " + std::to_string(order));
}

std::vector<Elem> cyclic_into(std::size_t n, const FiniteGroup& target, Elem gen) {
  const FiniteGroup c = catalog::cyclic(n);
  const std::vector<Elem> one{1}, img{gen};
  return *extend_homomorphism(c, one, img, target);
}

Json amalgam_spec(const std::string& name, const std::string& a, const std::string& b, const std::string& k,
                  const std::vector<Elem>& ea, const std::vector<Elem>& eb) {
  Json j;
  j["name"] = name;
  j["variant"] = "amalgam";
  j["a"] = a;
  j["b"] = b;
  j["k"] = k;
  j["emb_a"] = ea;
  j["emb_b"] = eb;
  return j;
}

std::vector<std::pair<std::size_t, Json>> amalgam_fixtures() {
  const FiniteGroup s3 = catalog::symmetric(3), q8 = catalog::quaternion();
  const std::vector<Elem> a3 = cyclic_into(3, s3, element_of_order(s3, 3));
  const std::vector<Elem> r4{0, 1, 2, 3};  // rotations of D4
  std::vector<std::pair<std::size_t, Json>> out;
  out.emplace_back(2, amalgam_spec("D_inf", "Z2", "Z2", "trivial", {0}, {0}));
  out.emplace_back(4, amalgam_spec("Z4 *_Z2 Z4", "Z4", "Z4", "Z2", {0, 2}, {0, 2}));
  out.emplace_back(4, amalgam_spec("Z2xZ2 *_Z2 Z4", "Z2xZ2", "Z4", "Z2", {0, 1}, {0, 2}));
  out.emplace_back(4, amalgam_spec("Z2xZ2 *_Z2 Z2xZ2", "Z2xZ2", "Z2xZ2", "Z2", {0, 1}, {0, 2}));
  out.emplace_back(6, amalgam_spec("S3 *_Z3 S3", "S3", "S3", "Z3", a3, a3));
  out.emplace_back(6, amalgam_spec("Z6 *_Z3 S3", "Z6", "S3", "Z3", {0, 2, 4}, a3));
  out.emplace_back(8, amalgam_spec("D4 *_Z4 D4", "D4", "D4", "Z4", r4, r4));
  out.emplace_back(8, amalgam_spec("Q8 *_Z4 D4", "Q8", "D4", "Z4", cyclic_into(4, q8, element_of_order(q8, 4)), r4));
  return out;
}

// ---------------------------------------------------------------- structure

std::vector<Subgroup> brute_force_normal(const VCGroup& v, const Caps& caps) {
  std::vector<Subgroup> out;
  const auto gens = v.generators();
  for (const Subgroup& s : all_subgroups(v.k(), caps)) {
    bool ok = true;
    for (const auto& g : gens)
      for (Elem x : s.elements()) {
        const VCElement c = g * v.from_k(x) * g.inverse();
        ok = ok && c.in_k() && s.contains(c.k());
      }
    if (ok) out.push_back(s);
  }
  return out;
}

Json abelianization_json(const AbelianInvariants& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  j["torsion"] = a.torsion;
  return j;
}

Outcome classify_one(const VCGroup& v) {
  Outcome o;
  o.samples = 1;
  const bool semidirect = v.is_semidirect();
  const VCType t = classify_type(v);
  const AbelianInvariants ab = abelianization(v);
  const bool center = center_is_infinite(v);
  o.expect((t == VCType::TypeI) == semidirect, "classify_type disagrees with the constructor variant");
  o.expect((ab.free_rank >= 1) == semidirect, "abelianization rank disagrees with the constructor variant");
  o.expect(center == semidirect, "center_is_infinite disagrees with the constructor variant");
  o.details["type"] = t == VCType::TypeI ? "I" : "II";
  o.details["abelianization"] = abelianization_json(ab);
  o.details["center_infinite"] = center;
  return o;
}

Outcome structure_one(const VCGroup& v, const Scenario& s, Rng rng) {
  Outcome o;
  const Subgroup kv = maximal_finite_normal(v, s.caps);
  for (const Subgroup& n : brute_force_normal(v, s.caps)) {
    ++o.samples;
    o.expect(kv.contains(n), "finite normal subgroup of order " + std::to_string(n.size()) + " not inside K_V");
  }
  const QuotientData q = quotient_data(v, s.caps);
  for (std::size_t i = 0; i < s.samples; ++i) {
    const auto x = v.random_element(rng), y = v.random_element(rng);
    ++o.samples;
    o.expect(q.project(x * y) == q.project(x) * q.project(y), "projection is not multiplicative at " +
                                                                  x.to_string() + ", " + y.to_string());
    const bool trivial = q.project(x) == QElement{};
    o.expect(trivial == (x.in_k() && q.kv.contains(x.k())), "kernel of the projection is not K_V at " + x.to_string());
  }
  o.details["k_v_order"] = kv.size();
  o.details["k_v"] = kv.elements();
  o.details["quotient"] = q.kind == QuotientData::Kind::InfiniteCyclic ? "Z" : "D_inf";
  return o;
}

// ---------------------------------------------------------------- orient

Outcome orient_one(const OrientationDiagram& d, const Caps& caps) {
  Outcome o;
  o.samples = 1;
  const OrientationResult r = solve(d);
  if (d.node_count() <= caps.brute_force_nodes) {
    const OrientationResult b = brute_force_solve(d, caps);
    o.expect(r.index() == b.index(), "solver and exhaustive search disagree on orientability");
  }
  if (const auto* ok = std::get_if<Orientation>(&r)) {
    o.expect(satisfies(d, *ok), "assignment violates an edge");
    o.details["verdict"] = "orientable";
    Json a = Json::object();
    for (std::size_t i = 0; i < d.node_count(); ++i) a[d.ids()[i]] = ok->assignment[i];
    o.details["assignment"] = a;
  } else {
    const auto& u = std::get<Unorientable>(r);
    o.expect(is_closed_walk(d, u), "witness is not a closed walk");
    o.expect(witness_product(d, u) == -1, "witness sign product is not -1");
    o.details["verdict"] = "unorientable";
    Json w = Json::array();
    for (std::size_t e : u.witness) {
      const SignedEdge& se = d.edges()[e];
      w.push_back(Json{{"edge", e}, {"from", d.ids()[se.from]}, {"to", d.ids()[se.to]}, {"sign", se.sign}});
    }
    o.details["witness"] = w;
  }
  return o;
}

// ---------------------------------------------------------------- diagrams

struct DiagramCase {
  VCGroup group;
  std::int64_t m = 1;
  int sign = 1;
  Elem lift_k = 0;
};

std::vector<DiagramCase> default_diagram_cases() {
  const FiniteGroup z2 = catalog::cyclic(2), z3 = catalog::cyclic(3), v4 = catalog::klein_four();
  VCGroup a = VCGroup::semidirect(z2, GroupAutomorphism::identity(z2));
  a.set_name("Z2 x| Z, lift (1,1)");
  VCGroup b = VCGroup::semidirect(z3, GroupAutomorphism(z3, {0, 2, 1}));
  b.set_name("Z3 x|inv Z");
  VCGroup c = VCGroup::semidirect(v4, GroupAutomorphism(v4, {0, 2, 1, 3}));
  c.set_name("Z2xZ2 x|swap Z");
  return {{a, 1, 1, 1}, {b, 1, 1, 0}, {c, 1, 1, 0}};
}

// ---------------------------------------------------------------- transfer

std::vector<std::pair<std::string, InclusionDatum>> default_transfer_fixtures() {
  std::vector<std::pair<std::string, InclusionDatum>> out;
  const FiniteGroup z4 = catalog::cyclic(4);
  out.emplace_back("Z4 > Z2", InclusionDatum::from_subgroup(Subgroup(z4, {0, 2}), GroupAutomorphism::identity(z4)));
  const FiniteGroup s3 = catalog::symmetric(3);
  const std::vector<Elem> r3{element_of_order(s3, 3)};
  out.emplace_back("S3 > A3", InclusionDatum::from_subgroup(Subgroup::generated_by(s3, r3),
                                                            GroupAutomorphism::conjugation(s3, element_of_order(s3, 2))));
  const FiniteGroup z3 = catalog::cyclic(3);
  out.emplace_back("Z3 x| Z/2", semidirect_embed(z3, GroupAutomorphism(z3, {0, 2, 1})).datum);
  const FiniteGroup d4 = catalog::dihedral(4);
  const std::vector<Elem> r{1};
  out.emplace_back("D4 > Z4", InclusionDatum::from_subgroup(Subgroup::generated_by(d4, r),
                                                            GroupAutomorphism::conjugation(d4, 4)));
  const FiniteGroup v4 = catalog::klein_four();
  for (const auto& a : automorphisms(v4))
    if (a.order() == 3) {
      out.emplace_back("Z2xZ2 x| Z/3", semidirect_embed(v4, a).datum);
      break;
    }
  return out;
}

template <class E>
RingMatrix<E> random_matrix(std::size_t r, std::size_t c, const std::function<E()>& gen) {
  RingMatrix<E> m{r, c, {}};
  for (std::size_t i = 0; i < r * c; ++i) m.entries.push_back(gen());
  return m;
}

std::vector<Record> transfer_battery(const std::string& name, const InclusionDatum& d, const Scenario& s, Rng& rng) {
  std::vector<Record> out;
  const InclusionRings rings = inclusion_rings(d, CoeffRing::integers());
  const std::size_t l = d.index();
  Rng r1 = rng.fork(), r2 = rng.fork(), r3 = rng.fork();
  out.push_back(timed(name + ": beta round trip", [&] {
    Outcome o;
    for (std::size_t i = 0; i < s.samples; ++i) {
      const auto z = rings.rk_t.random(r1, 3, 4);
      o.expect(beta(rings, d, beta_inverse(rings, d, z)) == z, "beta(beta^-1(z)) != z for z = " + z.to_string());
      std::vector<TwistedPolyElement> y;
      for (std::size_t j = 0; j < l; ++j) y.push_back(rings.rh_t.random(r1));
      o.expect(beta_inverse(rings, d, beta(rings, d, y)) == y, "beta^-1(beta(y)) != y");
      o.samples += 2;
    }
    return o;
  }));
  out.push_back(timed(name + ": T(P) square, ranks 1-3", [&] {
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
      const CheckOutcome c = natural_iso_T(rings, d, n);
      o.samples += c.checked;
      o.expect(c.pass, "rank " + std::to_string(n) + ": " + c.counterexample);
    }
    return o;
  }));
  out.push_back(timed(name + ": T naturality", [&] {
    Outcome o;
    const auto u = random_matrix<TwistedPolyElement>(2, 2, [&] { return rings.rk_t.random(r2, 2, 2); });
    const CheckOutcome c = natural_iso_T_naturality(rings, d, u, r2, s.samples);
    o.samples = c.checked;
    o.expect(c.pass, c.counterexample);
    return o;
  }));
  out.push_back(timed(name + ": transfer rank law", [&] {
    Outcome o;
    const std::size_t trials = std::max<std::size_t>(1, s.samples / 10);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t rr = 1 + r3.index(2), cc = 1 + r3.index(2);
      const auto p = random_matrix<TwistedPolyElement>(rr, cc, [&] { return rings.rh_t.random(r3, 2, 2); });
      const auto m = induction_restriction_transfer(rings, d, p);
      ++o.samples;
      o.expect(m.rows == l * rr && m.cols == l * cc, "transfer of a " + std::to_string(rr) + "x" +
                                                         std::to_string(cc) + " map has the wrong rank");
      // β(x·M) = β(x)·i(p) on a random row vector.
      const auto x = random_matrix<TwistedPolyElement>(1, l * rr, [&] { return rings.rh_t.random(r3, 2, 2); });
      const auto xm = mat_mul(x, m);
      for (std::size_t c = 0; c < cc; ++c) {
        TwistedPolyElement lhs = rings.rk_t.zero();
        for (std::size_t r = 0; r < rr; ++r) {
          const std::vector<TwistedPolyElement> blk(x.entries.begin() + static_cast<std::ptrdiff_t>(r * l),
                                                    x.entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * l));
          lhs = lhs + beta(rings, d, blk) * include_poly(rings, d, p.at(r, c));
        }
        const std::vector<TwistedPolyElement> col(xm.entries.begin() + static_cast<std::ptrdiff_t>(c * l),
                                                  xm.entries.begin() + static_cast<std::ptrdiff_t>((c + 1) * l));
        o.expect(beta(rings, d, col) == lhs, "transfer matrix is not right multiplication by i(p)");
      }
    }
    o.details["index"] = l;
    return o;
  }));
  return out;
}

// ---------------------------------------------------------------- eta

TwistedPolyElement eta_inverse(Elem k, const TwistedPolyElement& y, const TwistedPolyRing& twisted) {
  const FiniteGroup& g = twisted.base().group();
  TwistedPolyElement x = twisted.zero();
  for (const auto& [i, mu] : y.terms()) x = x + twisted.monomial(mu * twisted.base().basis(g.power(k, -i)), i);
  return x;
}

std::vector<Record> eta_battery(const std::string& name, const FiniteGroup& g, Elem k, const Scenario& s, Rng& rng) {
  const TwistedPolyRing ring(TwistedGroupRing(g, CoeffRing::integers()), GroupAutomorphism::conjugation(g, k));
  const TwistedPolyRing flat = untwisted(ring);
  Rng r1 = rng.fork(), r2 = rng.fork();
  std::vector<Record> out;
  out.push_back(timed(name + ": ring homomorphism", [&] {
    Outcome o;
    for (std::size_t i = 0; i < s.samples; ++i) {
      const auto x = ring.random(r1), y = ring.random(r1);
      o.expect(eta_inner(k, x * y) == eta_inner(k, x) * eta_inner(k, y), "eta(xy) != eta(x)eta(y) for x = " +
                                                                             x.to_string() + ", y = " + y.to_string());
      o.expect(eta_inner(k, x + y) == eta_inner(k, x) + eta_inner(k, y), "eta is not additive");
      ++o.samples;
    }
    o.expect(eta_inner(k, ring.one()) == flat.one(), "eta(1) != 1");
    // k' with the same conjugation gives eta_{k'}(t) = z·eta_k(t), z = k'k⁻¹ central. Recorded only.
    Json alternatives = Json::array();
    for (Elem k2 = 0; k2 < g.order(); ++k2)
      if (k2 != k && GroupAutomorphism::conjugation(g, k2) == ring.phi())
        alternatives.push_back({{"k", g.label(k2)}, {"unit", g.label(g.mul(k2, g.inv(k)))}});
    o.details["k"] = g.label(k);
    o.details["same_twist"] = alternatives;
    return o;
  }));
  out.push_back(timed(name + ": bijective and compatible with ev_zero", [&] {
    Outcome o;
    for (std::size_t i = 0; i < s.samples; ++i) {
      const auto x = ring.random(r2), y = flat.random(r2);
      o.expect(eta_inverse(k, eta_inner(k, x), ring) == x, "eta is not injective on " + x.to_string());
      o.expect(eta_inner(k, eta_inverse(k, y, ring)) == y, "eta is not surjective onto " + y.to_string());
      o.expect(ev_zero(eta_inner(k, x)) == ev_zero(x), "ev_zero(eta(x)) != ev_zero(x)");
      ++o.samples;
    }
    return o;
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"classify",     "structure", "orient", "verify-diagrams",
                                          "transfer-check", "eta-check", "corpus"};
  return c;
}

bool Report::pass() const noexcept {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

std::size_t Report::passed() const noexcept {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.pass; }));
}

io::Json Report::to_json(bool with_timing) const {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["command"] = scenario.command;
  j["inputs"] = scenario.inputs;
  j["seed"] = scenario.seed;
  j["samples"] = scenario.samples;
  j["caps"] = caps_json(scenario.caps);
  Json recs = Json::array();
  for (const Record& r : records) {
    Json x;
    x["name"] = r.name;
    x["status"] = r.pass ? "pass" : "fail";
    x["samples"] = r.samples;
    if (!r.pass) x["counterexample"] = r.counterexample;
    if (with_timing) x["timing_ms"] = std::round(r.timing_ms * 1000) / 1000;
    if (!r.details.is_null()) x["details"] = r.details;
    recs.push_back(std::move(x));
  }
  j["records"] = std::move(recs);
  j["summary"] = Json{{"total", records.size()}, {"passed", passed()}, {"failed", records.size() - passed()}};
  return j;
}

std::string Report::to_markdown() const {
  std::ostringstream out;
  out << "# vcyc " << scenario.command << "\n\n";
  out << "seed " << scenario.seed << ", samples " << scenario.samples << "\n\n";
  out << "| check | status | samples | ms | counterexample |\n|---|---|---|---|---|\n";
  for (const Record& r : records) {
    std::string ce = r.counterexample;
    std::replace(ce.begin(), ce.end(), '|', '/');
    out << "| " << r.name << " | " << (r.pass ? "pass" : "**fail**") << " | " << r.samples << " | " << std::fixed
        << std::setprecision(1) << r.timing_ms << " | " << ce << " |\n";
  }
  out << "\n" << passed() << " of " << records.size() << " checks passed.\n";
  return out.str();
}

std::vector<CorpusEntry> corpus(const Caps& caps) {
  std::vector<CorpusEntry> out;
  std::vector<FiniteGroup> seen;
  std::vector<std::string> names = catalog::names();
  std::stable_sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    return catalog::by_name(a).order() < catalog::by_name(b).order();
  });
  for (const std::string& name : names) {
    const FiniteGroup k = catalog::by_name(name);
    if (k.order() > caps.corpus_order) continue;
    // D3 and S3 are the same group; keep the first spelling.
    if (std::any_of(seen.begin(), seen.end(), [&](const FiniteGroup& g) {
          return g.order() == k.order() && find_isomorphism(g, k).has_value();
        }))
      continue;
    seen.push_back(k);
    const auto auts = automorphisms(k, caps);
    for (std::size_t i = 0; i < auts.size(); ++i) {
      Json spec;
      spec["name"] = k.order() == 1 ? std::string("Z")
                                    : name + " x| Z" + (auts[i].is_identity() ? "" : " [phi " + std::to_string(i) + "]");
      spec["variant"] = "semidirect_z";
      spec["k"] = name;
      spec["phi"] = auts[i].image();
      out.push_back({spec["name"].get<std::string>(), spec, io::vc_group_from_json(spec)});
    }
  }
  for (const auto& [order, spec] : amalgam_fixtures()) {
    if (order > caps.corpus_order) continue;
    out.push_back({spec["name"].get<std::string>(), spec, io::vc_group_from_json(spec)});
  }
  return out;
}

io::Json generate_corpus(const Caps& caps) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["caps"] = caps_json(caps);
  Json groups = Json::array();
  for (const auto& e : corpus(caps)) groups.push_back(e.spec);
  j["groups"] = std::move(groups);
  return j;
}

std::vector<CorpusEntry> load_groups(const io::Json& doc) {
  std::vector<CorpusEntry> out;
  if (doc.is_object() && doc.contains("groups")) {
    const Json& gs = doc["groups"];
    if (!gs.is_array()) throw ParseError("field 'groups': expected an array");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const std::string field = "groups[" + std::to_string(i) + "]";
      const VCGroup g = io::vc_group_from_json(gs[i], field);
      const std::string name = gs[i].contains("name") && gs[i]["name"].is_string() ? gs[i]["name"].get<std::string>() : field;
      out.push_back({name, gs[i], g});
    }
    return out;
  }
  const VCGroup g = io::vc_group_from_json(doc);
  out.push_back({doc.contains("name") ? doc["name"].get<std::string>() : g.describe(), doc, g});
  return out;
}

Report run(const Scenario& s) {
  Report rep{s, {}};
  Rng rng(s.seed);
  const std::vector<Json> docs = inputs_or_default(s);
  auto groups = [&] {
    std::vector<CorpusEntry> gs;
    if (docs.empty()) return corpus(s.caps);
    for (const Json& d : docs)
      for (auto& e : load_groups(d)) gs.push_back(std::move(e));
    return gs;
  };

  if (s.command == "classify") {
    for (const auto& e : groups()) rep.records.push_back(timed(e.name, [&] { return classify_one(e.group); }));
  } else if (s.command == "structure") {
    for (const auto& e : groups()) {
      Rng local = rng.fork();
      rep.records.push_back(timed(e.name, [&] { return structure_one(e.group, s, local); }));
    }
  } else if (s.command == "orient") {
    if (docs.empty()) {
      const OrientationDiagram d = dinfty_obstruction_fixture(VCGroup::infinite_dihedral());
      rep.records.push_back(timed("D_inf obstruction", [&] { return orient_one(d, s.caps); }));
    }
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const OrientationDiagram d = io::diagram_from_json(docs[i]);
      rep.records.push_back(timed(s.inputs[i], [&] { return orient_one(d, s.caps); }));
    }
  } else if (s.command == "verify-diagrams") {
    const auto& all = diagram_names();
    for (const auto& name : s.diagrams)
      if (std::find(all.begin(), all.end(), name) == all.end() && name != "diagram_of_cat_i_i[sigma]")
        throw UnknownDiagram("unknown diagram '" + name + "'");
    std::vector<DiagramCase> cases;
    Coefficients coeffs;
    if (docs.empty()) cases = default_diagram_cases();
    for (const Json& d : docs) {
      if (auto it = d.find("coefficients"); it != d.end()) coeffs.ring = CoeffRing::parse(it->get<std::string>());
      if (auto it = d.find("unit"); it != d.end())
        coeffs.action = RingAction::unit_power(coeffs.ring, coeffs.ring.from_int(it->get<std::int64_t>()));
      if (!d.contains("cases")) throw ParseError("field 'cases': missing");
      for (std::size_t i = 0; i < d["cases"].size(); ++i) {
        const Json& c = d["cases"][i];
        const std::string f = "cases[" + std::to_string(i) + "]";
        if (!c.contains("group")) throw ParseError("field '" + f + ".group': missing");
        cases.push_back({io::vc_group_from_json(c["group"], f + ".group"), c.value("m", std::int64_t{1}),
                         c.value("sign", 1), c.value("lift_k", Elem{0})});
      }
    }
    const std::vector<std::string> names = s.diagrams.empty() ? all : s.diagrams;
    for (const DiagramCase& c : cases) {
      if (!c.group.is_semidirect()) throw TypeMismatch("diagram checks need a SemidirectZ group");
      if (c.lift_k >= c.group.k().order()) throw ParseError("field 'lift_k': element index out of range");
      const SigmaLift lift(c.group, c.m, c.sign, c.group.element(c.lift_k, c.m * c.sign));
      for (const std::string& name : names) {
        const auto start = std::chrono::steady_clock::now();
        const DiagramReport r = check_diagram(name, {lift, coeffs, s.samples, rng.next()});
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (const auto& cell : r.cells)
          rep.records.push_back({r.diagram + "/" + cell.name + " @ " + c.group.describe(), cell.pass, cell.samples,
                                 cell.counterexample, ms / static_cast<double>(r.cells.size()), nullptr});
      }
    }
  } else if (s.command == "transfer-check") {
    std::vector<std::pair<std::string, InclusionDatum>> fixtures;
    if (docs.empty()) fixtures = default_transfer_fixtures();
    for (const Json& d : docs) {
      if (d.contains("fixtures")) {
        for (std::size_t i = 0; i < d["fixtures"].size(); ++i) {
          const Json& f = d["fixtures"][i];
          const std::string field = "fixtures[" + std::to_string(i) + "]";
          fixtures.emplace_back(f.value("name", field), io::inclusion_from_json(f, field));
        }
      } else {
        fixtures.emplace_back(d.value("name", std::string("fixture")), io::inclusion_from_json(d));
      }
    }
    for (const auto& [name, datum] : fixtures)
      for (auto& r : transfer_battery(name, datum, s, rng)) rep.records.push_back(std::move(r));
  } else if (s.command == "eta-check") {
    std::vector<std::tuple<std::string, FiniteGroup, Elem>> fixtures;
    if (docs.empty()) {
      const FiniteGroup s3 = catalog::symmetric(3), d4 = catalog::dihedral(4);
      fixtures.emplace_back("S3, k = transposition", s3, element_of_order(s3, 2));
      fixtures.emplace_back("D4, k = rotation", d4, 1);
      fixtures.emplace_back("D4, k = reflection", d4, 4);
    }
    for (const Json& d : docs) {
      const Json& list = d.contains("fixtures") ? d["fixtures"] : Json::array({d});
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string field = "fixtures[" + std::to_string(i) + "]";
        const Json& f = list[i];
        if (!f.contains("group") || !f.contains("k")) throw ParseError("field '" + field + "': needs group and k");
        const FiniteGroup g = io::group_from_json(f["group"], field + ".group");
        if (!f["k"].is_number_unsigned() || f["k"].get<std::size_t>() >= g.order())
          throw ParseError("field '" + field + ".k': element index out of range");
        fixtures.emplace_back(f.value("name", field), g, f["k"].get<Elem>());
      }
    }
    for (const auto& [name, g, k] : fixtures)
      for (auto& r : eta_battery(name, g, k, s, rng)) rep.records.push_back(std::move(r));
  } else if (s.command == "corpus") {
    const auto entries = corpus(s.caps);
    for (const auto& e : entries)
      rep.records.push_back(timed(e.name, [&] {
        Outcome o = classify_one(e.group);
        const Outcome st = structure_one(e.group, s, rng.fork());
        o.expect(st.pass, st.counterexample);
        o.samples += st.samples;
        return o;
      }));
  } else {
    throw InvalidArgument("unknown command '" + s.command + "'");
  }
  return rep;
}

io::Json error_payload(const Scenario& s, const std::string& kind, const std::string& message) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["command"] = s.command;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace vcyc::cli
