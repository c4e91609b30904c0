#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vcyc/finite_group.hpp"
#include "vcyc/orientation.hpp"
#include "vcyc/twisted_ring.hpp"
#include "vcyc/vc_group.hpp"

namespace vcyc::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses text; ParseError carries the line and column of the failure.
Json parse_text(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);

/// A catalog name ("S3", "Z/4") or { "order", "mul", "labels"? }.
FiniteGroup group_from_json(const Json& j, const std::string& field = "group");
Json group_to_json(const FiniteGroup& g);

/// { "variant": "semidirect_z", "k": <group>, "phi"?: [...] } or
/// { "variant": "amalgam", "a", "b", "k": <group>, "emb_a", "emb_b" };
/// an optional "name" is kept as the display name.
VCGroup vc_group_from_json(const Json& j, const std::string& field = "group");

/// { "nodes": [{ "id", "group" }], "edges": [{ "from", "to", "hom" }] }.
/// "hom" is { "images": [[k, n], ...] } on the canonical generators of the
/// source, or { "sign": ±1 } for a bare signed edge.
OrientationDiagram diagram_from_json(const Json& j);

/// { "k": <group>, "h": <group>, "emb", "phi", "psi", "reps" },
/// { "k": <group>, "subgroup": [...], "psi": [...] }, or
/// { "semidirect": { "k": <group>, "phi": [...] } }.
InclusionDatum inclusion_from_json(const Json& j, const std::string& field = "fixture");

}  // namespace vcyc::io
