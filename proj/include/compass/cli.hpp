#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compass/numeric.hpp"

namespace compass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitScript = 2;
inline constexpr int kExitMismatch = 3;

struct ArtifactOptions {
  std::string svg_path;
  std::string trace_path;
  bool points = false;
  Tolerance tol;
};

struct Demo {
  std::string_view name;
  std::string_view script;  // same text as scripts/<name>.compass
};

const std::vector<Demo>& demos();

// Parses a --tol / COMPASS_TOL value: a positive finite number.
std::optional<double> parse_tolerance(std::string_view text);

// Runs a script file, performing its emit requests and the flag artifacts.
// A path of "-" in an emit means standard output.
int cmd_run(const std::string& script_path, const ArtifactOptions& options, std::ostream& out,
            std::ostream& err);

// Runs a built-in demo and prints "x y" for each point bound by its last
// statement. Emit statements inside the demo script are not performed.
int cmd_demo(const std::string& name, const ArtifactOptions& options, std::ostream& out, std::ostream& err);

}  // namespace compass::cli
