// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "compass/constructions.hpp"
#include "compass/dsl.hpp"
#include "compass/error.hpp"
#include "compass/field_ops.hpp"
#include "compass/fuzz.hpp"
#include "compass/oracle.hpp"
#include "corpus.hpp"
#include "test_support.hpp"

using namespace compass;
using compass::testing::gap;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> problems;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok) ++failures;
  }
  std::size_t failures = 0;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fmt(Point p) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", p.x, p.y);
  return buf;
}

// Every construction trace produced by criteria 1-7 passes through here.
struct PurityLedger {
  std::size_t traces = 0;
  std::size_t impure = 0;
  std::size_t steps = 0;

  void audit(const Trace& t) {
    ++traces;
    steps += t.program.steps.size();
    try {
      const AuditReport r = purity_audit(t);
      if (r.circles + r.picks + r.seeds != t.program.steps.size() || r.seeds != t.program.seed_count) ++impure;
    } catch (const Error&) {
      ++impure;
    }
  }
} purity;

Construction audited(Construction c) {
  purity.audit(c.trace);
  return c;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void budget(Check& c, Clock::time_point start, double limit) {
  const double s = seconds_since(start);
  c.detail += (c.detail.empty() ? "" : ", ") + std::string("time ") + fmt(s) + " s";
  c.expect(s < limit, "took " + fmt(s) + " s, budget " + fmt(limit) + " s");
}

Point pick_two(const IntersectionOutcome& o, bool left) {
  const auto* two = std::get_if<TwoPoints>(&o);
  if (!two) return {NAN, NAN};
  return left ? two->left : two->right;
}

// 1. The intersection that defines alpha.
void golden_alpha(Check& c) {
  const ResolvedCircle big{{-1, 0}, 2}, small{{1, 0}, 1};
  const auto start = Clock::now();
  const IntersectionOutcome o = circle_circle_intersect(big, small, Tolerance{});
  const double micros = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
  const Point left = pick_two(o, true), right = pick_two(o, false);
  const Point want{0.75, std::sqrt(15.0) / 4.0};
  c.expect(gap(left, want) <= 1e-12, "left " + fmt(left));
  c.expect(gap(right, {want.x, -want.y}) <= 1e-12, "right " + fmt(right));
  c.expect(micros < 1000.0, "took " + fmt(micros) + " us");

  Builder bld({{-1, 0}, {1, 0}, {0, 0}});
  const NodeId a = bld.circle(bld.seed(0), bld.seed(1));
  const NodeId b = bld.circle(bld.seed(1), bld.seed(2));
  const NodeId p = bld.pick(a, b, Selector::Left);
  purity.audit(bld.trace({p}));
  c.detail = "alpha " + fmt(left) + ", error " + fmt(gap(left, want)) + ", " + fmt(micros) + " us";
}

// 2. Hexagon walk.
void hexagon(Check& c) {
  const Construction& back = audited(extend({1, 0}, {0, 0}));
  const Construction& fwd = audited(extend({0, 0}, {1, 0}));
  c.expect(gap(back.output(), {-1, 0}) <= 1e-9, "extend((1,0),(0,0)) = " + fmt(back.output()));
  c.expect(gap(fwd.output(), {2, 0}) <= 1e-9, "extend((0,0),(1,0)) = " + fmt(fwd.output()));
  c.expect(back.trace.circle_count == 4 && fwd.trace.circle_count == 4,
           "circle counts " + std::to_string(back.trace.circle_count) + ", " + std::to_string(fwd.trace.circle_count));
  c.detail = "4 circles each, errors " + fmt(gap(back.output(), {-1, 0})) + ", " + fmt(gap(fwd.output(), {2, 0}));
}

// 3. Midpoint on the figure and on random pairs.
void midpoints(Check& c) {
  const auto start = Clock::now();
  const Construction& figure = audited(midpoint({1, 0}, {2, 0}));
  c.expect(gap(figure.output(), {1.5, 0}) <= 1e-9, "figure midpoint " + fmt(figure.output()));
  SplitMix64 rng(3);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing::spaced_points(rng, 2, -5, 5, 0.1);
    const Point got = audited(midpoint(p[0], p[1])).output();
    const double err = gap(got, oracle::midpoint(p[0], p[1]));
    worst = std::max(worst, err);
    c.expect(err <= 1e-6, "a=" + fmt(p[0]) + " b=" + fmt(p[1]) + " error " + fmt(err));
  }
  c.detail = "1000 pairs, max error " + fmt(worst);
  budget(c, start, 1.0);
}

// 4. Field operations against complex arithmetic.
void field_arithmetic(Check& c) {
  const auto start = Clock::now();
  const Point frame[] = {{0, 0}, {1, 0}};
  auto eval = [&](const ConstructibleValue& v) {
    purity.audit(execute(v.program, frame));
    return v.value();
  };
  SplitMix64 rng(4);
  double worst = 0;
  auto near = [&](Point got, Point want, double tol, const std::string& what) {
    const double err = gap(got, want);
    worst = std::max(worst, err);
    c.expect(err <= tol, what + " error " + fmt(err));
  };
  for (int i = 0; i < 200; ++i) {
    const RandomValue a = random_constructible(rng, 2);
    const RandomValue b = random_constructible(rng, 2);
    near(eval(add(a.value, b.value)), oracle::complex_add(a.expected, b.expected), 1e-6, "add " + a.expr + " " + b.expr);
    near(eval(mul(a.value, b.value)), oracle::complex_mul(a.expected, b.expected), 1e-6, "mul " + a.expr + " " + b.expr);
    near(eval(conj(a.value)), oracle::complex_conj(a.expected), 1e-6, "conj " + a.expr);
    near(eval(conj(conj(a.value))), a.expected, 1e-6, "conj conj " + a.expr);
  }
  const ConstructibleValue al = alpha();
  near(eval(mul(al, conj(al))), {1.5, 0}, 1e-6, "alpha conj(alpha)");
  const Point half = eval(demo_half());
  near(half, {0.5, 0}, 1e-7, "half");
  c.detail = "200 values, max error " + fmt(worst) + ", half " + fmt(half);
  budget(c, start, 5.0);
}

// 5. Inversion across strata, involution and the figure.
void inversion(Check& c) {
  const auto start = Clock::now();
  const Construction& figure = audited(invert_general({{0, 0}, {1.5, 0}}, {1.5, 1.5}));
  c.expect(gap(figure.output(), {0.75, 0.75}) <= 1e-6, "figure " + fmt(figure.output()));
  SplitMix64 rng(5);
  double worst = 0, worst_back = 0;
  std::size_t strata[3] = {0, 0, 0};
  const double two_pi = 2 * std::acos(-1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing::spaced_points(rng, 2, -5, 5, 0.1);
    const double r = gap(p[0], p[1]);
    const double factor = i % 3 == 0 ? rng.uniform(1.05, 4.0) : i % 3 == 1 ? 1.0 : rng.uniform(0.05, 0.95);
    const double angle = rng.uniform(0, two_pi);
    const Point target = p[0] + (factor * r) * Point{std::cos(angle), std::sin(angle)};
    ++strata[i % 3];
    const CircleByCenterAndPoint omega{p[0], p[1]};
    const std::string where = "center=" + fmt(p[0]) + " through=" + fmt(p[1]) + " p=" + fmt(target);
    try {
      const Point image = audited(invert_general(omega, target)).output();
      const double err = gap(image, oracle::invert({p[0], r}, target));
      worst = std::max(worst, err);
      c.expect(err <= 1e-6, where + " error " + fmt(err));
      const Point back = audited(invert_general(omega, image)).output();
      worst_back = std::max(worst_back, gap(back, target));
      c.expect(gap(back, target) <= 1e-5, where + " involution error " + fmt(gap(back, target)));
    } catch (const Error& e) {
      c.expect(false, where + ": " + e.what());
    }
  }
  c.detail = "strata " + std::to_string(strata[0]) + "/" + std::to_string(strata[1]) + "/" +
             std::to_string(strata[2]) + ", max error " + fmt(worst) + ", involution " + fmt(worst_back);
  budget(c, start, 2.0);
}

// 6. Line-line.
void line_lines(Check& c) {
  const auto start = Clock::now();
  const Construction& figure = audited(line_line({-0.4, -0.4}, {2.3, 2.3}, {0.2, 1.8}, {2.7, -0.7}));
  c.expect(gap(figure.output(), {1, 1}) <= 1e-9, "figure " + fmt(figure.output()));
  SplitMix64 rng(6);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Point> p;
    do {
      p = testing::spaced_points(rng, 4, -5, 5, 0.1);
    } while (testing::line_angle(p[0], p[1], p[2], p[3]) < 0.1);
    const Point want = oracle::line_line(p[0], p[1], p[2], p[3]).value();
    const Point got = audited(line_line(p[0], p[1], p[2], p[3])).output();
    worst = std::max(worst, gap(got, want));
    c.expect(gap(got, want) <= 1e-6, "quadruple " + std::to_string(i) + " error " + fmt(gap(got, want)));
  }
  c.detail = "1000 quadruples, max error " + fmt(worst);
  budget(c, start, 2.0);
}

std::vector<Point> engine_line_circle(Point a, Point b, const CircleByCenterAndPoint& omega) {
  try {
    return audited(line_circle_off_center(a, b, omega)).outputs;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoSuchIntersection) return {};
    throw;
  }
}

// 7. Line-circle, both cases, and tangency.
void line_circles(Check& c) {
  const auto start = Clock::now();
  SplitMix64 rng(7);
  double worst = 0;
  std::size_t misses = 0;
  auto compare = [&](const std::vector<Point>& got, const std::vector<Point>& want, const std::string& where) {
    if (got.size() != want.size()) {
      c.expect(false, where + ": " + std::to_string(got.size()) + " points, oracle " + std::to_string(want.size()));
      return;
    }
    for (std::size_t k = 0; k < got.size(); ++k) {
      worst = std::max(worst, gap(got[k], want[k]));
      c.expect(gap(got[k], want[k]) <= 1e-6, where + " error " + fmt(gap(got[k], want[k])));
    }
  };
  for (int i = 0; i < 1000; ++i) {
    std::vector<Point> p;
    double r = 0, clearance = 0;
    do {
      p = testing::spaced_points(rng, 4, -5, 5, 0.1);
      r = gap(p[2], p[3]);
      clearance = testing::line_gap(p[0], p[1], p[2]);
    } while (clearance < 0.1 * r || std::abs(clearance - r) < 0.05);
    const auto want = oracle::line_circle(p[0], p[1], {p[2], r});
    misses += want.empty();
    compare(engine_line_circle(p[0], p[1], {p[2], p[3]}), want, "off-center " + std::to_string(i));
  }
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing::spaced_points(rng, 3, -5, 5, 0.1);
    const auto want = oracle::line_circle(p[0], p[1], {p[0], gap(p[0], p[2])});
    compare(audited(line_circle_center_on_line(p[0], p[1], {p[0], p[2]})).outputs, want, "center " + std::to_string(i));
  }
  const Construction& figure =
      audited(line_circle_center_on_line({0, 0}, {2, 0}, {{0, 0}, {std::sqrt(3.0) / 2, 0.5}}));
  compare(figure.outputs, {{1, 0}, {-1, 0}}, "figure");

  // Lines at distance r + offset from the center, on the unit circle and on
  // random circles and directions.
  const double offsets[] = {0, 1e-10, -1e-10, 1e-8, -1e-8, 1e-6, -1e-6, 1e-4, -1e-4, 1e-2, -1e-2};
  std::size_t swept = 0, agree = 0;
  for (int k = 0; k < 20; ++k) {
    const Point center = k == 0 ? Point{0, 0} : rng.point(-3, 3);
    const double r = k == 0 ? 1.0 : rng.uniform(0.5, 3);
    const double theta = k == 0 ? std::acos(-1.0) / 2 : rng.uniform(0, 2 * std::acos(-1.0));
    const Point u{std::cos(theta), std::sin(theta)};
    const Point v{-u.y, u.x};
    const Point through = k == 0 ? Point{1, 0} : center + r * v;
    for (double off : offsets) {
      const Point foot = k == 0 ? Point{0, 1 + off} : center + (r + off) * u;
      const Point a = foot + (-1.3) * v, b = foot + 0.9 * v;
      const auto want = oracle::line_circle(a, b, {center, r});
      const auto got = engine_line_circle(a, b, {center, through});
      ++swept;
      agree += got.size() == want.size();
      c.expect(got.size() == want.size(), "tangency offset " + fmt(off) + ": " + std::to_string(got.size()) +
                                              " points, oracle " + std::to_string(want.size()));
    }
  }
  c.detail = "2000 instances (" + std::to_string(misses) + " misses), max error " + fmt(worst) + ", tangency " +
             std::to_string(agree) + "/" + std::to_string(swept) + " agree";
  budget(c, start, 3.0);
}

// 8. Purity of everything above.
void purity_check(Check& c) {
  c.expect(purity.traces > 0, "no traces audited");
  c.expect(purity.impure == 0, std::to_string(purity.impure) + " traces failed the audit");
  c.detail = std::to_string(purity.traces) + " traces, " + std::to_string(purity.steps) + " steps, all compass";
}

// 9. Similarity transport.
void rebase_soundness(Check& c) {
  SplitMix64 rng(9);
  std::size_t steps = 0;
  for (int i = 0; i < 500; ++i) {
    const Program prog = testing::random_program(rng, 1 + static_cast<int>(rng.below(6)));
    Similarity sim;
    do {
      sim = {rng.point(-5, 5), rng.point(-5, 5)};
    } while (sim.scale() < 0.1);
    steps += prog.steps.size();
    bool ok = false;
    try {
      ok = similarity_transport_check(prog, sim);
    } catch (const Error& e) {
      c.expect(false, "pair " + std::to_string(i) + ": " + e.what());
      continue;
    }
    c.expect(ok, "pair " + std::to_string(i) + " p=" + fmt(sim.p) + " q=" + fmt(sim.q));
  }
  c.detail = "500 pairs, " + std::to_string(steps) + " steps";
}

// 10. Script corpus.
void dsl_corpus(Check& c) {
  const auto good = testing::good_scripts();
  const auto bad = testing::malformed_scripts();
  c.expect(good.size() >= 10, "only " + std::to_string(good.size()) + " scripts");
  c.expect(bad.size() >= 10, "only " + std::to_string(bad.size()) + " malformed scripts");
  for (const auto& path : good) {
    const std::string name = path.filename().string();
    try {
      const std::string text = testing::slurp(path);
      const auto ast = dsl::parse(text);
      c.expect(dsl::parse(dsl::print(ast)) == ast, name + ": round trip differs");
      const dsl::Interpretation r = dsl::interpret(ast);
      c.expect(!r.outputs.empty(), name + ": binds no points");
      const AuditReport audit = purity_audit(r.trace);
      c.expect(audit.circles + audit.picks + audit.seeds == r.trace.program.steps.size(), name + ": impure trace");
    } catch (const std::exception& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  std::size_t located = 0;
  for (const auto& path : bad) {
    const std::string name = path.filename().string();
    const std::string text = testing::slurp(path);
    const auto want = testing::expectation(text);
    try {
      dsl::run(text);
      c.expect(false, name + ": no diagnostic");
    } catch (const dsl::ScriptError& e) {
      const bool ok = e.line() == want.line && e.column() == want.column && dsl::to_string(e.kind()) == want.kind;
      located += ok;
      c.expect(ok, name + ": got " + std::to_string(e.line()) + ":" + std::to_string(e.column()) + " " +
                       std::string(dsl::to_string(e.kind())));
    }
  }
  c.detail = std::to_string(good.size()) + " scripts green, " + std::to_string(located) + "/" +
             std::to_string(bad.size()) + " malformed located";
}

// 11. The full fuzz report, twice.
void determinism(Check& c) {
  FuzzOptions options;
  options.cases = 1000;
  options.seed = 42;
  options.op = "all";
  std::ostringstream first, second, err;
  const int code1 = run_fuzz(options, first, err);
  const int code2 = run_fuzz(options, second, err);
  c.expect(code1 == 0 && code2 == 0, "exit codes " + std::to_string(code1) + ", " + std::to_string(code2));
  c.expect(first.str() == second.str(), "reports differ");
  c.expect(first.str().find("total failures=0") != std::string::npos, "report shows failures");
  c.detail = std::to_string(first.str().size()) + " byte report, identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"golden alpha", golden_alpha},
      {"hexagon extend", hexagon},
      {"midpoint", midpoints},
      {"field arithmetic", field_arithmetic},
      {"inversion", inversion},
      {"line-line", line_lines},
      {"line-circle", line_circles},
      {"purity", purity_check},
      {"rebase soundness", rebase_soundness},
      {"script corpus", dsl_corpus},
      {"fuzz determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures == 0;
    failed += !ok;
    std::printf("[%s] %2zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), c.detail.c_str());
    for (const auto& p : c.problems) std::printf("       %s\n", p.c_str());
    if (c.failures > c.problems.size()) std::printf("       ... %zu failures in total\n", c.failures);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
