#include "vcyc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "vcyc/catalog.hpp"
#include "vcyc/errors.hpp"

namespace vcyc::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field + "." + key, "missing");
  return *it;
}

std::vector<Elem> elem_list(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of element indices");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned() && !(j[i].is_number_integer() && j[i].get<std::int64_t>() >= 0))
      fail(field + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    out.push_back(j[i].get<Elem>());
  }
  return out;
}

std::int64_t integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

// Library errors raised while building an object from valid JSON keep their
// kind but gain the field path.
template <class F>
auto at_field(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("field '" + field + "': " + e.kind() + ": " + e.what());
  }
}

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

FiniteGroup group_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (catalog::canonical_name(name).empty()) fail(field, "unknown catalog group '" + name + "'");
    return catalog::by_name(name);
  }
  const std::int64_t order = integer(member(j, "order", field), field + ".order");
  const Json& mul = member(j, "mul", field);
  if (!mul.is_array() || static_cast<std::int64_t>(mul.size()) != order)
    fail(field + ".mul", "expected " + std::to_string(order) + " rows");
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < mul.size(); ++i) rows.push_back(elem_list(mul[i], field + ".mul[" + std::to_string(i) + "]"));
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) fail(field + ".labels", "expected an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) fail(field + ".labels", "expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return at_field(field, [&] { return FiniteGroup::from_table(std::move(rows), std::move(labels)); });
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["mul"] = g.table();
  j["labels"] = g.labels();
  return j;
}

VCGroup vc_group_from_json(const Json& j, const std::string& field) {
  const Json& variant = member(j, "variant", field);
  if (!variant.is_string()) fail(field + ".variant", "expected a string");
  const std::string v = variant.get<std::string>();
  VCGroup out = [&] {
    if (v == "semidirect_z") {
      const FiniteGroup k = group_from_json(member(j, "k", field), field + ".k");
      if (auto it = j.find("phi"); it != j.end()) {
        const auto image = elem_list(*it, field + ".phi");
        return at_field(field + ".phi",
                        [&] { return VCGroup::semidirect(k, GroupAutomorphism(k, image)); });
      }
      return VCGroup::semidirect(k, GroupAutomorphism::identity(k));
    }
    if (v == "amalgam") {
      const FiniteGroup a = group_from_json(member(j, "a", field), field + ".a");
      const FiniteGroup b = group_from_json(member(j, "b", field), field + ".b");
      const FiniteGroup k = group_from_json(member(j, "k", field), field + ".k");
      const auto ea = elem_list(member(j, "emb_a", field), field + ".emb_a");
      const auto eb = elem_list(member(j, "emb_b", field), field + ".emb_b");
      return at_field(field, [&] { return VCGroup::amalgam(a, b, k, ea, eb); });
    }
    fail(field + ".variant", "expected \"semidirect_z\" or \"amalgam\", got \"" + v + "\"");
  }();
  if (auto it = j.find("name"); it != j.end() && it->is_string()) out.set_name(it->get<std::string>());
  return out;
}

OrientationDiagram diagram_from_json(const Json& j) {
  OrientationDiagram d;
  const Json& nodes = member(j, "nodes", "diagram");
  if (!nodes.is_array()) fail("nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string f = "nodes[" + std::to_string(i) + "]";
    const Json& id = member(nodes[i], "id", f);
    if (!id.is_string()) fail(f + ".id", "expected a string");
    if (d.find(id.get<std::string>())) fail(f + ".id", "duplicate node id");
    const VCGroup g = vc_group_from_json(member(nodes[i], "group", f), f + ".group");
    at_field(f, [&] { return d.add_node(id.get<std::string>(), g); });
  }
  const Json& edges = member(j, "edges", "diagram");
  if (!edges.is_array()) fail("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string f = "edges[" + std::to_string(i) + "]";
    auto endpoint = [&](const char* key) {
      const Json& e = member(edges[i], key, f);
      if (!e.is_string()) fail(f + "." + key, "expected a node id");
      const auto n = d.find(e.get<std::string>());
      if (!n) fail(f + "." + key, "unknown node '" + e.get<std::string>() + "'");
      return *n;
    };
    const std::size_t from = endpoint("from"), to = endpoint("to");
    const Json& hom = member(edges[i], "hom", f);
    if (auto s = hom.find("sign"); s != hom.end()) {
      const std::int64_t sign = integer(*s, f + ".hom.sign");
      if (sign != 1 && sign != -1) fail(f + ".hom.sign", "expected 1 or -1");
      d.add_signed_edge(from, to, static_cast<int>(sign));
      continue;
    }
    const Json& images = member(hom, "images", f + ".hom");
    if (!images.is_array()) fail(f + ".hom.images", "expected an array of [k, n] pairs");
    const VCGroup& tgt = *d.groups()[to];
    std::vector<VCElement> imgs;
    for (std::size_t g = 0; g < images.size(); ++g) {
      const std::string gf = f + ".hom.images[" + std::to_string(g) + "]";
      if (!images[g].is_array() || images[g].size() != 2) fail(gf, "expected [k, n]");
      const std::int64_t k = integer(images[g][0], gf + "[0]");
      const std::int64_t n = integer(images[g][1], gf + "[1]");
      if (k < 0 || static_cast<std::size_t>(k) >= tgt.k().order()) fail(gf + "[0]", "element index out of range");
      imgs.push_back(tgt.element(static_cast<Elem>(k), n));
    }
    at_field(f + ".hom", [&] { return d.add_edge(from, to, VCHom(*d.groups()[from], tgt, imgs)); });
  }
  return d;
}

InclusionDatum inclusion_from_json(const Json& j, const std::string& field) {
  if (auto it = j.find("semidirect"); it != j.end()) {
    const std::string f = field + ".semidirect";
    const FiniteGroup k = group_from_json(member(*it, "k", f), f + ".k");
    const auto phi = elem_list(member(*it, "phi", f), f + ".phi");
    return at_field(f, [&] { return semidirect_embed(k, GroupAutomorphism(k, phi)).datum; });
  }
  const FiniteGroup k = group_from_json(member(j, "k", field), field + ".k");
  if (auto it = j.find("subgroup"); it != j.end()) {
    const auto elements = elem_list(*it, field + ".subgroup");
    const auto psi = elem_list(member(j, "psi", field), field + ".psi");
    return at_field(field, [&] {
      return InclusionDatum::from_subgroup(Subgroup(k, elements), GroupAutomorphism(k, psi));
    });
  }
  const FiniteGroup h = group_from_json(member(j, "h", field), field + ".h");
  const auto emb = elem_list(member(j, "emb", field), field + ".emb");
  const auto phi = elem_list(member(j, "phi", field), field + ".phi");
  const auto psi = elem_list(member(j, "psi", field), field + ".psi");
  const auto reps = elem_list(member(j, "reps", field), field + ".reps");
  return at_field(field, [&] {
    return InclusionDatum::make(h, k, emb, GroupAutomorphism(h, phi), GroupAutomorphism(k, psi), reps);
  });
}

}  // namespace vcyc::io
