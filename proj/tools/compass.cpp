#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "compass/cli.hpp"
#include "compass/fuzz.hpp"

namespace {

// --tol wins over COMPASS_TOL; both set the degeneracy threshold.
bool resolve_tolerance(const std::string& flag, compass::Tolerance& tol) {
  std::string text = flag;
  std::string source = "--tol";
  if (text.empty()) {
    const char* env = std::getenv("COMPASS_TOL");
    if (!env) return true;
    text = env;
    source = "COMPASS_TOL";
  }
  const auto value = compass::cli::parse_tolerance(text);
  if (!value) {
    std::cerr << "compass: " << source << " must be a positive number, got '" << text << "'\n";
    return false;
  }
  tol.eps_degenerate = *value;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compass-only geometric constructions: run scripts, demos and oracle fuzzing."};
  app.require_subcommand(1);

  compass::cli::ArtifactOptions artifacts;
  std::string tol_flag;
  std::string script;
  std::string demo;

  auto add_artifact_flags = [&](CLI::App* cmd) {
    cmd->add_option("--svg", artifacts.svg_path, "Write an SVG figure to PATH");
    cmd->add_option("--trace", artifacts.trace_path, "Write the JSON trace to PATH");
    cmd->add_flag("--points", artifacts.points, "Print NAME x y for every bound point");
    cmd->add_option("--tol", tol_flag, "Degeneracy threshold (default 1e-12, env COMPASS_TOL)");
  };

  CLI::App* run = app.add_subcommand("run", "Run a .compass script");
  run->add_option("script", script, "Script path")->required();
  add_artifact_flags(run);

  std::string demo_help = "Demo name:";
  for (const auto& d : compass::cli::demos()) demo_help += " " + std::string(d.name);
  CLI::App* demo_cmd = app.add_subcommand("demo", "Run a built-in demo");
  demo_cmd->add_option("name", demo, demo_help)->required();
  add_artifact_flags(demo_cmd);

  compass::FuzzOptions fuzz;
  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "Compare constructions against analytic oracles");
  fuzz_cmd->add_option("--cases", fuzz.cases, "Random instances per operation")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed")->capture_default_str();
  fuzz_cmd->add_option("--op", fuzz.op, "Operation name or 'all'")->capture_default_str();
  fuzz_cmd->add_option("--tol", tol_flag, "Degeneracy threshold (default 1e-12, env COMPASS_TOL)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : compass::cli::kExitScript;
  }

  if (*fuzz_cmd) {
    if (!resolve_tolerance(tol_flag, fuzz.tol)) return compass::cli::kExitScript;
    return compass::run_fuzz(fuzz, std::cout, std::cerr);
  }
  if (!resolve_tolerance(tol_flag, artifacts.tol)) return compass::cli::kExitScript;
  if (*run) return compass::cli::cmd_run(script, artifacts, std::cout, std::cerr);
  return compass::cli::cmd_demo(demo, artifacts, std::cout, std::cerr);
}
