#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "vcyc/cli.hpp"

using namespace vcyc;

namespace {

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtually cyclic group and twisted ring batteries"};
  cli::Scenario s;
  std::string caps_spec, format = "json", out;
  bool check = false;
  app.add_option("command", s.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(cli::commands()));
  app.add_option("--input", s.inputs, "Input file (repeatable)");
  app.add_option("--seed", s.seed, "Sampling seed");
  app.add_option("--samples", s.samples, "Samples per property check");
  app.add_option("--caps", caps_spec, "Cap overrides, key=value,...");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_option("--diagram", s.diagrams, "verify-diagrams: restrict to these diagrams (repeatable)");
  app.add_flag("--check", check, "corpus: run the structure battery instead of writing the corpus");
  CLI11_PARSE(app, argc, argv);

  try {
    s.caps = Caps::from_environment();
    if (!caps_spec.empty()) s.caps = Caps::parse(caps_spec, s.caps);
    if (s.command == "corpus" && !check) return emit(cli::generate_corpus(s.caps).dump(2) + "\n", out);
    const cli::Report report = cli::run(s);
    const std::string text = format == "md" ? report.to_markdown() : report.to_json().dump(2) + "\n";
    if (const int rc = emit(text, out); rc != 0) return rc;
    return report.pass() ? 0 : 1;
  } catch (const Error& e) {
    std::cout << cli::error_payload(s, e.kind(), e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << cli::error_payload(s, "Internal", e.what()).dump(2) << "\n";
    return 2;
  }
}
