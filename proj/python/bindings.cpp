#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vcyc/catalog.hpp"
#include "vcyc/cli.hpp"
#include "vcyc/diagrams.hpp"
#include "vcyc/json_io.hpp"
#include "vcyc/orientation.hpp"
#include "vcyc/vc_group.hpp"

namespace py = pybind11;
using namespace vcyc;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
VCGroup group_from_text(const std::string& text) { return io::vc_group_from_json(io::parse_text(text)); }

cli::Scenario scenario(const std::string& command, std::vector<std::string> inputs, std::uint64_t seed,
                       std::size_t samples, const std::string& caps, std::vector<std::string> diagrams) {
  cli::Scenario s;
  s.command = command;
  s.inputs = std::move(inputs);
  s.seed = seed;
  s.samples = samples;
  s.caps = caps.empty() ? Caps::from_environment() : Caps::parse(caps, Caps::from_environment());
  s.diagrams = std::move(diagrams);
  return s;
}

}  // namespace

PYBIND11_MODULE(_vcyc, m) {
  m.doc() = "Infinite virtually cyclic groups, homotopy colimit categories and twisted group rings";

  static py::exception<Error> error(m, "VcycError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("catalog", [](const std::string& name) { return catalog::by_name(name); })
      .def_static("from_table", [](std::vector<std::vector<Elem>> rows) { return FiniteGroup::from_table(std::move(rows)); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("label", &FiniteGroup::label)
      .def("table", &FiniteGroup::table)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("automorphisms",
           [](const FiniteGroup& g) {
             std::vector<std::vector<Elem>> out;
             for (const auto& a : automorphisms(g)) out.push_back(a.image());
             return out;
           })
      .def("__len__", &FiniteGroup::order);

  m.def("catalog_names", &catalog::names);

  py::class_<VCGroup>(m, "VCGroup")
      .def_static("from_json", &group_from_text, py::arg("text"))
      .def_static("integers", &VCGroup::integers)
      .def_static("infinite_dihedral", &VCGroup::infinite_dihedral)
      .def_property_readonly("is_semidirect", &VCGroup::is_semidirect)
      .def_property_readonly("k", &VCGroup::k)
      .def("describe", &VCGroup::describe)
      .def("__repr__", [](const VCGroup& v) { return "<VCGroup " + v.describe() + ">"; });

  m.def("classify_type", [](const VCGroup& v) { return classify_type(v) == VCType::TypeI ? "I" : "II"; });
  m.def("abelianization", [](const VCGroup& v) {
    const AbelianInvariants a = abelianization(v);
    return py::make_tuple(a.free_rank, a.torsion);
  });
  m.def("center_is_infinite", &center_is_infinite);
  m.def("maximal_finite_normal", [](const VCGroup& v) { return maximal_finite_normal(v).elements(); });

  m.def("diagram_names", &diagram_names);
  m.def("_run", [](const std::string& command, std::vector<std::string> inputs, std::uint64_t seed,
                   std::size_t samples, const std::string& caps, std::vector<std::string> diagrams) {
    return cli::run(scenario(command, std::move(inputs), seed, samples, caps, std::move(diagrams))).to_json(false).dump();
  });
  m.def("_generate_corpus", [](const std::string& caps) {
    return cli::generate_corpus(caps.empty() ? Caps{} : Caps::parse(caps)).dump();
  });
  m.def("_orient", [](const std::string& text) {
    const OrientationDiagram d = io::diagram_from_json(io::parse_text(text));
    const OrientationResult r = solve(d);
    io::Json j;
    if (const auto* o = std::get_if<Orientation>(&r)) {
      j["verdict"] = "orientable";
      j["assignment"] = o->assignment;
    } else {
      j["verdict"] = "unorientable";
      j["witness"] = std::get<Unorientable>(r).witness;
    }
    return j.dump();
  });
  m.def("_check_diagram", [](const std::string& name, const VCGroup& g, std::int64_t index, int sign, Elem lift_k,
                             std::size_t samples, std::uint64_t seed) {
    const SigmaLift lift(g, index, sign, g.element(lift_k, index * sign));
    const DiagramReport r = check_diagram(name, {lift, Coefficients{}, samples, seed});
    io::Json j;
    j["diagram"] = r.diagram;
    j["group"] = r.group;
    j["cells"] = io::Json::array();
    for (const auto& c : r.cells) {
      io::Json cell{{"name", c.name}, {"samples", c.samples}, {"pass", c.pass}};
      if (!c.pass) cell["counterexample"] = c.counterexample;
      j["cells"].push_back(cell);
    }
    return j.dump();
  });
}
