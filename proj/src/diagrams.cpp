#include "vcyc/diagrams.hpp"

#include <functional>
#include <optional>

#include "vcyc/errors.hpp"

namespace vcyc {

bool DiagramReport::pass() const noexcept {
  for (const auto& c : cells)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> diagram_names() {
  return {"diagram_reducing_to_groups_ev", "diagram_of_cat_i_i_sigma", "passage_to_calb",
          "mapping_torus",                 "transport_evaluated_at_e", "z_action_triangle"};
}

namespace {

using Probe = std::function<std::optional<std::string>(Rng&)>;

std::string mismatch(const std::string& input, const HocolimMorphism& lhs, const HocolimMorphism& rhs) {
  return "input " + input + "; left " + lhs.to_string() + "; right " + rhs.to_string();
}

std::optional<std::string> compare(const std::string& input, const HocolimMorphism& lhs,
                                   const HocolimMorphism& rhs) {
  if (lhs == rhs) return std::nullopt;
  return mismatch(input, lhs, rhs);
}

class Checker {
 public:
  explicit Checker(const DiagramContext& ctx)
      : ctx_(ctx),
        s_(ctx.lift),
        c_(ctx.coeffs),
        k_hat_(s_.k_hat()),
        v_hat_(s_.v_hat()),
        v_sigma_(s_.v_sigma_hat()),
        g_v_(s_.g_v()),
        g_v_sigma_(s_.g_v_sigma()),
        g_v_k_(s_.g_v_k()),
        g_k_(s_.g_k()),
        e_k_(IndexFunctor::unit(k_hat_, g_v_k_)),
        e_sigma_(IndexFunctor::unit(v_sigma_, g_v_sigma_)),
        e_(IndexFunctor::unit(v_hat_, g_v_)),
        e_gk_(IndexFunctor::unit(k_hat_, g_k_)),
        pr_v_(IndexFunctor::projection(g_k_, g_v_)),
        r_(IndexFunctor::right_translation(g_k_, s_.lift())),
        rng_(ctx.seed) {}

  DiagramReport run(const std::string& name) {
    report_.diagram = name;
    report_.group = s_.ambient().name().empty() ? s_.ambient().describe() : s_.ambient().name();
    if (name == "diagram_reducing_to_groups_ev") {
      retraction_cells();
      reducing_squares();
      ev_functor_cells();
    } else if (name == "diagram_of_cat_i_i_sigma" || name == "diagram_of_cat_i_i[sigma]") {
      report_.diagram = "diagram_of_cat_i_i_sigma";
      inclusion_square();
      cell("e(G/V)_* preserves composition", [this](Rng& rng) {
        const auto [f, g] = composable(rng, v_hat_);
        return compare(f.to_string(), pushforward(e_, compose(g, f)),
                       compose(pushforward(e_, g), pushforward(e_, f)));
      });
      functor_cell(e_sigma_);
      functor_cell(e_);
    } else if (name == "passage_to_calb") {
      reducing_squares();
      inclusion_square();
      passage_lower_cells();
    } else if (name == "mapping_torus") {
      mapping_torus_cells();
    } else if (name == "transport_evaluated_at_e") {
      transport_square();
    } else if (name == "z_action_triangle") {
      z_action_cells();
    } else {
      throw UnknownDiagram("unknown diagram '" + name + "'");
    }
    return report_;
  }

 private:
  std::size_t rank(Rng& rng) const { return rng.index(3); }

  HocolimMorphism random_over(Rng& rng, const IndexCat& cat) {
    const HocolimObject dom{cat.random_object(rng), rank(rng)};
    const HocolimObject cod{cat.random_object(rng), rank(rng)};
    return HocolimMorphism::random(rng, cat, c_, dom, cod);
  }

  std::pair<HocolimMorphism, HocolimMorphism> composable(Rng& rng, const IndexCat& cat) {
    const HocolimMorphism f = random_over(rng, cat);
    const HocolimObject next{cat.random_object(rng), rank(rng)};
    return {f, HocolimMorphism::random(rng, cat, c_, f.cod(), next)};
  }

  QHatMorphism random_q(Rng& rng, bool sigma_only) {
    return QHatMorphism::random(rng, s_, c_, rank(rng), rank(rng), sigma_only);
  }

  void cell(const std::string& name, const Probe& probe) {
    DiagramCell out{name, ctx_.samples, true, {}};
    Rng rng = rng_.fork();
    for (std::size_t i = 0; i < ctx_.samples && out.pass; ++i) {
      try {
        if (auto bad = probe(rng)) {
          out.pass = false;
          out.counterexample = *bad;
        }
      } catch (const Error& e) {
        out.pass = false;
        out.counterexample = e.kind() + ": " + e.what();
      }
    }
    report_.cells.push_back(std::move(out));
  }

  void functor_cell(const IndexFunctor& w) {
    DiagramCell out{"functor laws of " + w.name() + ": " + w.source().describe() + " -> " + w.target().describe(),
                    ctx_.samples, true, {}};
    Rng rng = rng_.fork();
    try {
      w.validate(rng, ctx_.samples);
    } catch (const Error& e) {
      out.pass = false;
      out.counterexample = e.what();
    }
    report_.cells.push_back(std::move(out));
  }

  void retraction_cells() {
    cell("top row: ev(G/V)[s]_K o incl = id", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, g_v_k_);
      return compare(m.to_string(), ev_sigma(include(m, g_v_sigma_), g_v_k_), m);
    });
    cell("bottom row: ev_V[s] o incl = id", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, k_hat_);
      return compare(m.to_string(), ev_sigma(include(m, v_sigma_), k_hat_), m);
    });
  }

  void reducing_squares() {
    cell("left square: incl o (e_K)_* = e[s]_* o incl", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, k_hat_);
      return compare(m.to_string(), include(pushforward(e_k_, m), g_v_sigma_),
                     pushforward(e_sigma_, include(m, v_sigma_)));
    });
    cell("right square: (e_K)_* o ev_V[s] = ev(G/V)[s]_K o e[s]_*", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, v_sigma_);
      return compare(m.to_string(), pushforward(e_k_, ev_sigma(m, k_hat_)),
                     ev_sigma(pushforward(e_sigma_, m), g_v_k_));
    });
  }

  void ev_functor_cells() {
    cell("ev(G/V)[s]_K preserves composition", [this](Rng& rng) {
      const auto [f, g] = composable(rng, g_v_sigma_);
      return compare(f.to_string() + " then " + g.to_string(), ev_sigma(compose(g, f), g_v_k_),
                     compose(ev_sigma(g, g_v_k_), ev_sigma(f, g_v_k_)));
    });
    cell("ev_V[s] preserves composition", [this](Rng& rng) {
      const auto [f, g] = composable(rng, v_sigma_);
      return compare(f.to_string() + " then " + g.to_string(), ev_sigma(compose(g, f), k_hat_),
                     compose(ev_sigma(g, k_hat_), ev_sigma(f, k_hat_)));
    });
  }

  void inclusion_square() {
    cell("square: e(G/V)_* o incl = incl o e(G/V)[s]_*", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, v_sigma_);
      return compare(m.to_string(), pushforward(e_, include(m, v_hat_)),
                     include(pushforward(e_sigma_, m), g_v_));
    });
  }

  void passage_lower_cells() {
    cell("retraction: ev_B[s] o incl = id", [this](Rng& rng) {
      const HocolimMorphism b = random_over(rng, k_hat_);
      return compare(b.to_string(), ev_b_sigma(i_b(b, s_, true)), b);
    });
    cell("lower left square: ev_V[s] o Psi[s] = ev_B[s]", [this](Rng& rng) {
      const QHatMorphism q = random_q(rng, true);
      return compare(q.to_string(), ev_sigma(psi_iso(q), k_hat_), ev_b_sigma(q));
    });
    cell("lower right square: incl o Psi[s] = Psi o incl", [this](Rng& rng) {
      const QHatMorphism q = random_q(rng, true);
      return compare(q.to_string(), include(psi_iso(q), v_hat_), psi_iso(include_full(q)));
    });
    cell("Psi preserves composition", [this](Rng& rng) {
      const QHatMorphism f = random_q(rng, false);
      const QHatMorphism g = QHatMorphism::random(rng, s_, c_, f.cod_rank(), rank(rng), false);
      return compare(f.to_string() + " then " + g.to_string(), psi_iso(compose(g, f)),
                     compose(psi_iso(g), psi_iso(f)));
    });
  }

  void mapping_torus_cells() {
    cell("top triangle: G(pr_V)_* o R_s = G(pr_V)_*", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, g_k_);
      return compare(m.to_string(), pushforward(pr_v_, r_sigma(m, s_)), pushforward(pr_v_, m));
    });
    cell("upper squares: G(pr_V)_* o e(G/K)_* = e(G/V)_* o incl", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, k_hat_);
      return compare(m.to_string(), pushforward(pr_v_, pushforward(e_gk_, m)),
                     pushforward(e_, include(m, v_hat_)));
    });
    cell("lower squares: Psi o i_B = incl", [this](Rng& rng) {
      const HocolimMorphism b = random_over(rng, k_hat_);
      return compare(b.to_string(), psi_iso(i_b(b, s_)), include(b, v_hat_));
    });
    cell("Phi preserves composition", [this](Rng& rng) {
      const auto [f, g] = composable(rng, k_hat_);
      return compare(f.to_string() + " then " + g.to_string(), phi_twist(compose(g, f), s_),
                     compose(phi_twist(g, s_), phi_twist(f, s_)));
    });
    cell("naturality of T: i_B(u) o T(X) = T(Y) o i_B(Phi(u))", [this](Rng& rng) {
      const HocolimMorphism u = random_over(rng, k_hat_);
      const QHatMorphism lhs = compose(i_b(u, s_, true), structural_t(s_, c_, u.dom().rank));
      const QHatMorphism rhs = compose(structural_t(s_, c_, u.cod().rank), i_b(phi_twist(u, s_), s_, true));
      if (lhs == rhs) return std::optional<std::string>{};
      return std::optional<std::string>{"u = " + u.to_string() + "; left " + lhs.to_string() + "; right " +
                                        rhs.to_string()};
    });
    cell("naturality of S: R_s(e_K(u)) o S(X) = S(Y) o e_K(Phi(u))", [this](Rng& rng) {
      const HocolimMorphism u = random_over(rng, k_hat_);
      return compare(u.to_string(),
                     compose(r_sigma(pushforward(e_gk_, u), s_), structural_s(s_, c_, u.dom().rank)),
                     compose(structural_s(s_, c_, u.cod().rank), pushforward(e_gk_, phi_twist(u, s_))));
    });
    cell("coherence: e(G/V)[s]_* o Psi o T = G(pr_V)_* o S", [this](Rng& rng) {
      const std::size_t r = rank(rng) + 1;
      return compare("rank " + std::to_string(r),
                     include(pushforward(e_sigma_, psi_iso(structural_t(s_, c_, r))), g_v_),
                     pushforward(pr_v_, structural_s(s_, c_, r)));
    });
  }

  void transport_square() {
    const IndexFunctor left = compose(IndexFunctor::inclusion(g_v_sigma_, g_v_), e_sigma_);
    const IndexFunctor right = compose(e_, IndexFunctor::inclusion(v_sigma_, v_hat_));
    cell("square: incl o e(G/V)[s] = e(G/V) o incl", [&](Rng& rng) -> std::optional<std::string> {
      const VCElement g = v_sigma_.random_morphism(rng, 0, 0);
      if (left.object(0) == right.object(0) && left.morphism(0, 0, g) == right.morphism(0, 0, g)) return {};
      return "g = " + g.to_string();
    });
    const IndexFunctor back = IndexFunctor::unit_inverse(g_v_, v_hat_);
    cell("e(G/V)^-1 o e(G/V) = id", [&](Rng& rng) -> std::optional<std::string> {
      const VCElement g = v_hat_.random_morphism(rng, 0, 0);
      if (back.morphism(0, 0, e_.morphism(0, 0, g)) == g) return {};
      return "g = " + g.to_string();
    });
    functor_cell(e_sigma_);
    functor_cell(e_k_);
    functor_cell(back);
  }

  void z_action_cells() {
    const IndexFunctor lhs = compose(pr_v_, r_);
    cell("pr_V o R_s = pr_V on G(G/K)", [&](Rng& rng) -> std::optional<std::string> {
      const std::int64_t a = g_k_.random_object(rng), b = g_k_.random_object(rng);
      const VCElement g = g_k_.random_morphism(rng, a, b);
      if (lhs.object(a) == pr_v_.object(a) && lhs.morphism(a, b, g) == pr_v_.morphism(a, b, g)) return {};
      return "g = " + g.to_string() + " : " + std::to_string(a) + " -> " + std::to_string(b);
    });
    cell("R_s depends only on s", [&](Rng& rng) -> std::optional<std::string> {
      const VCGroup& v = s_.ambient();
      const VCElement other = s_.lift() * v.from_k(static_cast<Elem>(rng.index(v.k().order())));
      const IndexFunctor r2 = IndexFunctor::right_translation(g_k_, SigmaLift(v, s_.index(), s_.sign(), other).lift());
      const std::int64_t a = g_k_.random_object(rng);
      if (r2.object(a) == r_.object(a)) return {};
      return "lift " + other.to_string() + " at object " + std::to_string(a);
    });
    functor_cell(r_);
    functor_cell(pr_v_);
    cell("G(pr_V)_* o R_s = G(pr_V)_* on morphisms", [this](Rng& rng) {
      const HocolimMorphism m = random_over(rng, g_k_);
      return compare(m.to_string(), pushforward(pr_v_, r_sigma(m, s_)), pushforward(pr_v_, m));
    });
  }

  const DiagramContext& ctx_;
  const SigmaLift& s_;
  const Coefficients& c_;
  IndexCat k_hat_, v_hat_, v_sigma_, g_v_, g_v_sigma_, g_v_k_, g_k_;
  IndexFunctor e_k_, e_sigma_, e_, e_gk_, pr_v_, r_;
  Rng rng_;
  DiagramReport report_;
};

}  // namespace

DiagramReport check_diagram(const std::string& name, const DiagramContext& ctx) {
  return Checker(ctx).run(name);
}

}  // namespace vcyc
