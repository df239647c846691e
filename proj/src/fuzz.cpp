#include "compass/fuzz.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "compass/constructions.hpp"
#include "compass/error.hpp"
#include "compass/oracle.hpp"

namespace compass {

namespace {

constexpr std::size_t kMaxReported = 5;
constexpr double kBox = 5.0;
constexpr double kSpacing = 0.1;

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string fmt(Point p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }

double gap(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<Point> spaced(SplitMix64& rng, std::size_t count) {
  std::vector<Point> pts;
  while (pts.size() < count) {
    const Point p = rng.point(-kBox, kBox);
    if (std::all_of(pts.begin(), pts.end(), [&](Point q) { return gap(p, q) >= kSpacing; })) pts.push_back(p);
  }
  return pts;
}

double line_gap(Point a, Point b, Point p) {
  const Point u = b - a;
  return std::abs(cross(u, p - a)) / std::hypot(u.x, u.y);
}

// One fuzz instance: a description of the inputs, what the oracle expects and
// what the construction produced (empty when the oracle expects no points).
struct Case {
  std::string inputs;
  std::vector<Point> expected;
  std::function<std::vector<Point>()> construct;
};

using Generator = std::function<Case(SplitMix64&, const Tolerance&, std::size_t index)>;

Case apex_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  const auto p = spaced(rng, 2);
  const bool left = rng.below(2) == 0;
  return {"a=" + fmt(p[0]) + " b=" + fmt(p[1]) + (left ? " left" : " right"),
          {oracle::apex(p[0], p[1], left)},
          [=] { return apex(p[0], p[1], left ? Selector::Left : Selector::Right, tol).outputs; }};
}

Case extend_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  const auto p = spaced(rng, 2);
  return {"x=" + fmt(p[0]) + " y=" + fmt(p[1]), {oracle::reflect_through(p[0], p[1])},
          [=] { return extend(p[0], p[1], tol).outputs; }};
}

Case nth_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  const auto p = spaced(rng, 2);
  const auto n = static_cast<std::uint32_t>(1 + rng.below(8));
  return {"o=" + fmt(p[0]) + " p=" + fmt(p[1]) + " n=" + std::to_string(n),
          {oracle::scale_from(p[0], p[1], n)},
          [=] { return nth_point(p[0], p[1], n, tol).outputs; }};
}

Case midpoint_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  const auto p = spaced(rng, 2);
  return {"a=" + fmt(p[0]) + " b=" + fmt(p[1]), {oracle::midpoint(p[0], p[1])},
          [=] { return midpoint(p[0], p[1], tol).outputs; }};
}

Case foot_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  const auto p = spaced(rng, 3);
  return {"a=" + fmt(p[0]) + " b=" + fmt(p[1]) + " c=" + fmt(p[2]), {oracle::foot(p[0], p[1], p[2])},
          [=] { return perp_foot(p[0], p[1], p[2], tol).outputs; }};
}

// Strata rotate with the case index: exterior, on the circle, interior.
Case invert_case(SplitMix64& rng, const Tolerance& tol, std::size_t index) {
  const auto p = spaced(rng, 2);
  const CircleByCenterAndPoint omega{p[0], p[1]};
  const double r = gap(p[0], p[1]);
  const double angle = rng.uniform(0.0, 2.0 * std::acos(-1.0));
  double factor = 1.0;
  switch (index % 3) {
    case 0: factor = rng.uniform(1.05, 4.0); break;
    case 1: factor = 1.0; break;
    default: factor = rng.uniform(0.05, 0.95); break;
  }
  const Point target = p[0] + (factor * r) * Point{std::cos(angle), std::sin(angle)};
  return {"center=" + fmt(p[0]) + " through=" + fmt(p[1]) + " p=" + fmt(target),
          {oracle::invert({p[0], r}, target)},
          [=] { return invert_general(omega, target, tol).outputs; }};
}

Case line_line_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  std::vector<Point> p;
  do {
    p = spaced(rng, 4);
  } while (std::asin(std::min(1.0, std::abs(cross(p[1] - p[0], p[3] - p[2])) /
                                       (gap(p[0], p[1]) * gap(p[2], p[3])))) < 0.1);
  const auto expected = oracle::line_line(p[0], p[1], p[2], p[3], tol);
  return {"a=" + fmt(p[0]) + " b=" + fmt(p[1]) + " c=" + fmt(p[2]) + " d=" + fmt(p[3]),
          {expected.value()},
          [=] { return line_line(p[0], p[1], p[2], p[3], tol).outputs; }};
}

// Lines clear the center by at least 0.1 r and miss the tangency band by 0.05.
Case line_circle_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  for (;;) {
    const auto p = spaced(rng, 4);
    const double r = gap(p[2], p[3]);
    const double clearance = line_gap(p[0], p[1], p[2]);
    if (clearance < 0.1 * r || std::abs(clearance - r) < 0.05) continue;
    const CircleByCenterAndPoint omega{p[2], p[3]};
    return {"a=" + fmt(p[0]) + " b=" + fmt(p[1]) + " center=" + fmt(p[2]) + " through=" + fmt(p[3]),
            oracle::line_circle(p[0], p[1], {p[2], r}, tol),
            [=]() -> std::vector<Point> {
              try {
                return line_circle_off_center(p[0], p[1], omega, tol).outputs;
              } catch (const Error& e) {
                if (e.kind() == ErrorKind::NoSuchIntersection) return {};
                throw;
              }
            }};
  }
}

Case line_circle_center_case(SplitMix64& rng, const Tolerance& tol, std::size_t) {
  const auto p = spaced(rng, 3);
  const double r = gap(p[0], p[2]);
  const Point o = p[0], a = p[1], through = p[2];
  return {"o=" + fmt(o) + " a=" + fmt(a) + " through=" + fmt(through),
          oracle::line_circle(o, a, {o, r}, tol),
          [=] { return line_circle_center_on_line(o, a, {o, through}, tol).outputs; }};
}

Case field_case(SplitMix64& rng, const Tolerance& tol, const std::string& op) {
  const RandomValue a = random_constructible(rng, 2, tol);
  const RandomValue b = random_constructible(rng, 2, tol);
  if (op == "conj") {
    return {"a=" + a.expr, {oracle::complex_conj(a.expected)}, [=] { return std::vector{conj(a.value, tol).value(tol)}; }};
  }
  if (op == "add") {
    return {"a=" + a.expr + " b=" + b.expr, {oracle::complex_add(a.expected, b.expected)},
            [=] { return std::vector{add(a.value, b.value, tol).value(tol)}; }};
  }
  return {"a=" + a.expr + " b=" + b.expr, {oracle::complex_mul(a.expected, b.expected)},
          [=] { return std::vector{mul(a.value, b.value, tol).value(tol)}; }};
}

const std::map<std::string, Generator>& generators() {
  static const std::map<std::string, Generator> table = {
      {"apex", apex_case},
      {"extend", extend_case},
      {"nth", nth_case},
      {"midpoint", midpoint_case},
      {"foot", foot_case},
      {"invert", invert_case},
      {"line-line", line_line_case},
      {"line-circle", line_circle_case},
      {"line-circle-center", line_circle_center_case},
      {"mul", [](SplitMix64& r, const Tolerance& t, std::size_t) { return field_case(r, t, "mul"); }},
      {"add", [](SplitMix64& r, const Tolerance& t, std::size_t) { return field_case(r, t, "add"); }},
      {"conj", [](SplitMix64& r, const Tolerance& t, std::size_t) { return field_case(r, t, "conj"); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fuzz_ops() {
  static const std::vector<std::string> ops = {"apex", "extend",      "nth",         "midpoint",
                                               "foot", "invert",      "line-line",   "line-circle",
                                               "line-circle-center", "mul", "add", "conj"};
  return ops;
}

OpReport fuzz_op(const std::string& op, const FuzzOptions& options) {
  const auto it = generators().find(op);
  if (it == generators().end()) throw std::invalid_argument("unknown fuzz op: " + op);
  SplitMix64 rng(SplitMix64(options.seed ^ fnv1a64(op)).next());
  OpReport report{op, options.cases, 0, 0.0, {}};
  for (std::size_t index = 0; index < options.cases; ++index) {
    const Case c = it->second(rng, options.tol, index);
    std::string problem;
    try {
      const std::vector<Point> got = c.construct();
      if (got.size() != c.expected.size()) {
        problem = "expected " + std::to_string(c.expected.size()) + " points, got " + std::to_string(got.size());
      } else {
        for (std::size_t k = 0; k < got.size(); ++k) {
          const double err = gap(got[k], c.expected[k]);
          report.max_error = std::max(report.max_error, err);
          if (!(err <= options.threshold)) {
            problem = "error " + fmt(err) + " expected " + fmt(c.expected[k]) + " got " + fmt(got[k]);
          }
        }
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      ++report.failures;
      if (report.failing_cases.size() < kMaxReported) {
        report.failing_cases.push_back("case " + std::to_string(index) + ": " + c.inputs + ": " + problem);
      }
    }
  }
  return report;
}

int run_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ops;
  if (options.op == "all") {
    ops = fuzz_ops();
  } else if (generators().count(options.op) != 0) {
    ops = {options.op};
  } else {
    err << "error: unknown fuzz op '" << options.op << "'\n";
    return 2;
  }
  if (options.cases == 0) err << "warning: --cases 0 checks nothing\n";

  out << "fuzz seed=" << options.seed << " cases=" << options.cases  << " threshold=" << fmt_short(options.threshold) << '\n';
  std::size_t total = 0;
  for (const std::string& op : ops) {
    const OpReport r = fuzz_op(op, options);
    char line[160];
    std::snprintf(line, sizeof line, "%-20s cases=%zu failures=%zu max_error=%s", op.c_str(), r.cases, r.failures,
                  fmt(r.max_error).c_str());
    out << line << '\n';
    for (const std::string& detail : r.failing_cases) out << "  FAIL " << detail << '\n';
    total += r.failures;
  }
  out << "total failures=" << total << '\n';
  return total == 0 ? 0 : 3;
}

RandomValue random_constructible(SplitMix64& rng, int depth, const Tolerance& tol) {
  const double root3 = std::sqrt(3.0);
  if (depth <= 0 || rng.below(3) == 0) {
    switch (rng.below(6)) {
      case 0: return {one(), {1, 0}, "1"};
      case 1: {
        Builder bld({{0, 0}, {1, 0}}, tol);
        const NodeId out = extend(bld, bld.seed(1), bld.seed(0));
        return {from_program(bld.program({out}), out, tol), {-1, 0}, "-1"};
      }
      case 2: {
        Builder bld({{0, 0}, {1, 0}}, tol);
        const NodeId out = extend(bld, bld.seed(0), bld.seed(1));
        return {from_program(bld.program({out}), out, tol), {2, 0}, "2"};
      }
      case 3: return {alpha(), {0.75, std::sqrt(15.0) / 4.0}, "alpha"};
      default: {
        const bool left = rng.below(2) == 0;
        Builder bld({{0, 0}, {1, 0}}, tol);
        const NodeId out = apex(bld, bld.seed(0), bld.seed(1), left ? Selector::Left : Selector::Right);
        return {from_program(bld.program({out}), out, tol), {0.5, left ? root3 / 2 : -root3 / 2},
                left ? "omega" : "conj(omega)"};
      }
    }
  }
  switch (rng.below(4)) {
    case 0: {
      const RandomValue a = random_constructible(rng, depth - 1, tol);
      const RandomValue b = random_constructible(rng, depth - 1, tol);
      return {add(a.value, b.value, tol), oracle::complex_add(a.expected, b.expected),
              "add(" + a.expr + ", " + b.expr + ")"};
    }
    case 1: {
      const RandomValue a = random_constructible(rng, depth - 1, tol);
      const RandomValue b = random_constructible(rng, depth - 1, tol);
      return {mul(a.value, b.value, tol), oracle::complex_mul(a.expected, b.expected),
              "mul(" + a.expr + ", " + b.expr + ")"};
    }
    case 2: {
      const RandomValue a = random_constructible(rng, depth - 1, tol);
      return {conj(a.value, tol), oracle::complex_conj(a.expected), "conj(" + a.expr + ")"};
    }
    default: {
      const RandomValue a = random_constructible(rng, depth - 1, tol);
      return {neg(a.value, tol), oracle::complex_mul({-1, 0}, a.expected), "neg(" + a.expr + ")"};
    }
  }
}

}  // namespace compass
