#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vcyc/hocolim.hpp"

namespace vcyc {

struct DiagramCell {
  std::string name;
  std::size_t samples = 0;
  bool pass = true;
  std::string counterexample;  ///< empty when pass
};

struct DiagramReport {
  std::string diagram;
  std::string group;
  std::vector<DiagramCell> cells;
  bool pass() const noexcept;
};

struct DiagramContext {
  SigmaLift lift;
  Coefficients coeffs;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
};

/// diagram_reducing_to_groups_ev, diagram_of_cat_i_i_sigma, passage_to_calb,
/// mapping_torus, transport_evaluated_at_e, z_action_triangle.
std::vector<std::string> diagram_names();

/// Evaluates every cell of the named diagram on `samples` random inputs.
/// Strict cells compare both composites; the cells commuting up to
/// isomorphism are checked through naturality of T and S and the coherence
/// e(G/V)[σ]_* ∘ Ψ ∘ T = G(pr_V)_* ∘ S. UnknownDiagram for other names.
DiagramReport check_diagram(const std::string& name, const DiagramContext& ctx);

}  // namespace vcyc
