#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compass/kernel.hpp"

namespace compass {

// A trace with names attached, as written by `--trace` and `emit trace`.
struct TraceDocument {
  Trace trace;
  std::vector<std::string> seed_names;  // empty entries are unnamed
  std::vector<std::pair<std::string, NodeId>> outputs;
};

inline constexpr int kTraceVersion = 1;

// Deterministic JSON with coordinates at 17 significant digits, so that
// to_json(from_json(to_json(d))) == to_json(d).
std::string to_json(const TraceDocument& doc);

// Throws Error{MalformedTrace} on any schema or consistency problem, including
// a failed purity audit.
TraceDocument from_json(std::string_view text, const Tolerance& tol = {});

// SVG 1.1 figure: given points black, construction circles and picked points
// red, one <circle> element per Circle step.
std::string to_svg(const TraceDocument& doc);

}  // namespace compass
