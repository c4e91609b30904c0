#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcyc/errors.hpp"
#include "vcyc/finite_group.hpp"
#include "vcyc/json_io.hpp"
#include "vcyc/vc_group.hpp"

namespace vcyc::cli {

/// classify, structure, orient, verify-diagrams, transfer-check, eta-check,
/// corpus.
const std::vector<std::string>& commands();

struct Scenario {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  Caps caps;
  /// verify-diagrams only; empty means every diagram.
  std::vector<std::string> diagrams;
};

struct Record {
  std::string name;
  bool pass = true;
  std::size_t samples = 0;
  std::string counterexample;
  double timing_ms = 0;
  io::Json details;  ///< null or an object of command-specific facts
};

struct Report {
  Scenario scenario;
  std::vector<Record> records;

  bool pass() const noexcept;
  std::size_t passed() const noexcept;
  /// Canonical JSON. Without timing the output is a pure function of the
  /// scenario.
  io::Json to_json(bool with_timing = true) const;
  std::string to_markdown() const;
};

struct CorpusEntry {
  std::string name;
  io::Json spec;  ///< vc_group_from_json input
  VCGroup group;
};

/// Every SemidirectZ(K, φ) with K from the catalog (up to isomorphism),
/// |K| ≤ caps.corpus_order, and φ ∈ Aut(K); then the amalgam fixtures whose
/// factors have order ≤ caps.corpus_order. Deterministic order.
std::vector<CorpusEntry> corpus(const Caps& caps);
io::Json generate_corpus(const Caps& caps);
/// Entries of a corpus document or of a single group document.
std::vector<CorpusEntry> load_groups(const io::Json& doc);

/// Runs the battery of a non-corpus command. Throws Error subclasses for bad
/// input (ParseError, CapExceeded, UnknownDiagram, ...).
Report run(const Scenario& s);

io::Json error_payload(const Scenario& s, const std::string& kind, const std::string& message);

}  // namespace vcyc::cli
