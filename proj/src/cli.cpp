#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "compass/cli.hpp"
#include "compass/dsl.hpp"
#include "compass/trace_io.hpp"

namespace compass::cli {

namespace {

#include "demo_scripts.inc"

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string points_listing(const dsl::Interpretation& r) {
  std::string out;
  for (const auto& [name, node] : r.outputs) {
    const Point& p = r.trace.point(node);
    out += name + " " + num(p.x) + " " + num(p.y) + "\n";
  }
  return out;
}

TraceDocument document(const dsl::Interpretation& r) { return {r.trace, r.seed_names, r.outputs}; }

bool write(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    err << "compass: cannot write " << path << "\n";
    return false;
  }
  return true;
}

bool write_artifacts(const dsl::Interpretation& r, const std::vector<dsl::EmitRequest>& requests, bool points,
                     std::ostream& out, std::ostream& err) {
  bool points_to_stdout = points;
  for (const auto& req : requests) {
    std::string text;
    switch (req.target) {
      case dsl::EmitTarget::Points:
        // The listing goes to standard output at most once.
        if (req.path == "-") {
          points_to_stdout = true;
          continue;
        }
        text = points_listing(r);
        break;
      case dsl::EmitTarget::Svg: text = to_svg(document(r)); break;
      case dsl::EmitTarget::Trace: text = to_json(document(r)); break;
    }
    if (!write(req.path, text, out, err)) return false;
  }
  if (points_to_stdout) out << points_listing(r);
  return true;
}

std::vector<dsl::EmitRequest> flag_requests(const ArtifactOptions& options) {
  std::vector<dsl::EmitRequest> reqs;
  if (!options.svg_path.empty()) reqs.push_back({dsl::EmitTarget::Svg, options.svg_path, 0});
  if (!options.trace_path.empty()) reqs.push_back({dsl::EmitTarget::Trace, options.trace_path, 0});
  return reqs;
}

void diagnose(const std::string& where, const dsl::ScriptError& e, std::ostream& err) {
  err << where << ": line " << e.line() << ", column " << e.column() << ": " << dsl::to_string(e.kind()) << ": "
      << e.what() << "\n";
}

}  // namespace

const std::vector<Demo>& demos() {
  static const std::vector<Demo> list(std::begin(kDemoScripts), std::end(kDemoScripts));
  return list;
}

std::optional<double> parse_tolerance(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v) || !(v > 0.0)) return std::nullopt;
  return v;
}

int cmd_run(const std::string& script_path, const ArtifactOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream in(script_path, std::ios::binary);
  std::ostringstream source;
  source << in.rdbuf();
  if (!in) {
    err << "compass: cannot read " << script_path << "\n";
    return kExitIo;
  }
  dsl::Interpretation result;
  try {
    result = dsl::run(source.str(), options.tol);
  } catch (const dsl::ScriptError& e) {
    diagnose(script_path, e, err);
    return kExitScript;
  }
  std::vector<dsl::EmitRequest> requests = result.emits;
  for (auto& r : flag_requests(options)) requests.push_back(std::move(r));
  return write_artifacts(result, requests, options.points, out, err) ? kExitOk : kExitIo;
}

int cmd_demo(const std::string& name, const ArtifactOptions& options, std::ostream& out, std::ostream& err) {
  const Demo* demo = nullptr;
  for (const Demo& d : demos()) {
    if (d.name == name) demo = &d;
  }
  if (!demo) {
    err << "compass: unknown demo '" << name << "'; choose one of:";
    for (const Demo& d : demos()) err << " " << d.name;
    err << "\n";
    return kExitScript;
  }

  std::vector<dsl::Statement> ast;
  dsl::Interpretation result;
  try {
    ast = dsl::parse(demo->script);
    result = dsl::interpret(ast, options.tol);
  } catch (const dsl::ScriptError& e) {
    diagnose("demo " + name, e, err);
    return kExitScript;
  }

  const dsl::Let* last = nullptr;
  for (const auto& st : ast) {
    if (const auto* l = std::get_if<dsl::Let>(&st.node)) last = l;
  }
  if (last) {
    for (const std::string& n : last->names) {
      const Point p = result.point(n);
      out << num(p.x) << " " << num(p.y) << "\n";
    }
  }
  return write_artifacts(result, flag_requests(options), options.points, out, err) ? kExitOk : kExitIo;
}

}  // namespace compass::cli
