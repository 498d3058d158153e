#include "covercalc/config.hpp"
#include "covercalc/presets.hpp"
#include "covercalc/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace covercalc;

namespace {

unsigned thread_count() {
  const char* env = std::getenv("COVERCALC_THREADS");
  if (!env || !*env) return 1;
  try {
    const long v = std::stol(env);
    return v < 1 ? 1U : static_cast<unsigned>(v);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring COVERCALC_THREADS=" << env << "\n";
    return 1;
  }
}

int run_analyze(const std::string& path, bool as_json, bool universal, bool divisors, bool curves) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  cli::CoverConfig cfg = cli::parse_config(buf.str());
  cfg.universal = cfg.universal || universal;
  cfg.torsion_divisors = cfg.torsion_divisors || divisors;
  cfg.curves = cfg.curves || curves;
  const cli::Report report = cli::analyze(cfg, thread_count());
  std::cout << cli::emit_report(report, as_json ? cli::Format::Json : cli::Format::Text);
  return 0;
}

int run_preset(bool list, const std::string& name, bool emit) {
  if (list) {
    for (const auto& n : geometry::preset_names()) std::cout << n << "\n";
    return 0;
  }
  if (name.empty()) {
    std::cerr << "error: give a preset name or --list\n";
    return 2;
  }
  const cover::CoverSpec spec = geometry::preset(name);
  if (emit) {
    std::cout << cli::emit_config(spec, "preset " + name);
  } else {
    std::cout << name << ": (Z/" << spec.q << "Z)^" << spec.k << " cover branched over " << spec.n() << " lines\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of abelian covers of the projective plane branched over line arrangements"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze a cover described by a config file");
  std::string path;
  bool as_json = false, universal = false, divisors = false, curves = false;
  analyze->add_option("file", path, "Config file")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");
  analyze->add_flag("--universal", universal, "Also analyze the universal cover");
  analyze->add_flag("--torsion-divisors", divisors, "Enumerate even-pullback divisors in |D_K| (q = 2)");
  analyze->add_flag("--curves", curves, "Print the curve table");

  auto* preset = app.add_subcommand("preset", "Catalog access");
  bool list = false, emit = false;
  std::string name;
  preset->add_flag("--list", list, "List preset names");
  preset->add_option("name", name, "Preset name");
  preset->add_flag("--emit", emit, "Print the preset as a config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(path, as_json, universal, divisors, curves);
    return run_preset(list, name, emit);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
