#include <cmath>

#include "compass/constructions.hpp"
#include "compass/error.hpp"
#include "compass/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace compass;
using compass::testing::gap;
using compass::testing::near;

namespace {

constexpr double kTol = 1e-9;
const double kRoot3 = std::sqrt(3.0);

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidProgram;
}

const CircleByCenterAndPoint kUnitCircle{{0, 0}, {1, 0}};

}  // namespace

TEST_CASE("apex") {
  CHECK(near(apex({0, 0}, {1, 0}, Selector::Left).output(), {0.5, kRoot3 / 2}, kTol));
  CHECK(near(apex({0, 0}, {1, 0}, Selector::Right).output(), {0.5, -kRoot3 / 2}, kTol));
  CHECK(near(apex({0, 0}, {0, 2}, Selector::Left).output(), oracle::complex_mul({0, 2}, {0.5, kRoot3 / 2}), kTol));
  CHECK(near(apex({0, 0}, {0, 2}, Selector::Left).output(), {-kRoot3, 1}, kTol));
  CHECK(kind_of([] { apex({0, 0}, {0, 0}, Selector::Left); }) == ErrorKind::DegenerateCircle);
}

TEST_CASE("extend walks the hexagon") {
  const Construction minus_one = extend({1, 0}, {0, 0});
  CHECK(near(minus_one.output(), {-1, 0}, kTol));
  CHECK(minus_one.trace.circle_count == 4);
  CHECK(near(extend({0, 0}, {1, 0}).output(), {2, 0}, kTol));
  CHECK(near(extend({3, 4}, {3, 4.5}).output(), oracle::reflect_through({3, 4}, {3, 4.5}), kTol));
  CHECK(near(extend({3, 4}, {3, 4.5}).output(), {3, 5}, kTol));
  CHECK(kind_of([] { extend({1, 1}, {1, 1}); }) == ErrorKind::DegenerateCircle);
}

TEST_CASE("nth_point") {
  CHECK(near(nth_point({0, 0}, {1, 0}, 1).output(), {1, 0}, kTol));
  CHECK(near(nth_point({0, 0}, {1, 0}, 5).output(), oracle::scale_from({0, 0}, {1, 0}, 5), 5 * kTol));
  CHECK(near(nth_point({2, 2}, {2.5, 2}, 4).output(), {4, 2}, 4 * kTol));
  CHECK(kind_of([] { nth_point({0, 0}, {1, 0}, kMaxScale + 1); }) == ErrorKind::ScaleOverflow);
  CHECK(nth_point({0, 0}, {1, 0}, 5).trace.circle_count == 16);
}

TEST_CASE("midpoint") {
  CHECK(near(midpoint({0, 0}, {1, 0}).output(), {0.5, 0}, kTol));
  const Construction figure = midpoint({1, 0}, {2, 0});
  CHECK(near(figure.output(), {1.5, 0}, kTol));
  CHECK(figure.trace.circle_count == 7);
  CHECK(near(midpoint({-3, 1}, {5, -7}).output(), oracle::midpoint({-3, 1}, {5, -7}), kTol));
  CHECK(near(midpoint({-3, 1}, {5, -7}).output(), {1, -3}, kTol));
  CHECK(kind_of([] { midpoint({2, 2}, {2, 2}); }) == ErrorKind::DegenerateCircle);
}

TEST_CASE("midpoint reproduces the figure's seven circles") {
  const Trace t = midpoint({1, 0}, {2, 0}).trace;
  // (center, radius) pairs as drawn.
  const std::pair<Point, double> expected[] = {
      {{1, 0}, 1},      {{2, 0}, 1},   {{1.5, kRoot3 / 2}, 1}, {{0.5, kRoot3 / 2}, 1},
      {{0, 0}, 2},      {{1.75, std::sqrt(15.0) / 4}, 1},      {{1.75, -std::sqrt(15.0) / 4}, 1},
  };
  std::vector<ResolvedCircle> drawn;
  for (const auto& v : t.resolved) {
    if (const auto* c = std::get_if<ResolvedCircle>(&v)) drawn.push_back(*c);
  }
  REQUIRE(drawn.size() == 7);
  for (const auto& [center, radius] : expected) {
    bool found = false;
    for (const auto& c : drawn) found = found || (near(c.center, center, kTol) && std::abs(c.radius - radius) < kTol);
    CHECK_MESSAGE(found, "missing circle at ", center.x, ",", center.y);
  }
}

TEST_CASE("diameter_circle") {
  const auto check = [](Point a, Point b, Point center, double radius) {
    const Construction c = diameter_circle(a, b);
    CHECK(near(c.outputs.at(0), center, kTol));
    CHECK(std::abs(distance(c.outputs.at(0), c.outputs.at(1)) - radius) <= kTol);
  };
  check({0, 0}, {2, 0}, {1, 0}, 1);
  check({0, 0}, {0, 3}, {0, 1.5}, 1.5);
  check({1, 1}, {4, 5}, {2.5, 3}, 2.5);
  CHECK(kind_of([] { diameter_circle({1, 1}, {1, 1}); }) == ErrorKind::DegenerateCircle);
}

TEST_CASE("perp_foot") {
  const Construction figure = perp_foot({0, 0}, {3, 0}, {1, 2});
  CHECK(near(figure.output(), {1, 0}, kTol));
  CHECK(figure.trace.circle_count == 16);
  CHECK(near(perp_foot({0, 0}, {1, 0}, {0.5, 0}).output(), {0.5, 0}, kTol));
  CHECK(near(perp_foot({0, 0}, {0, 1}, {7, 0.3}).output(), oracle::foot({0, 0}, {0, 1}, {7, 0.3}), kTol));
  CHECK(near(perp_foot({0, 0}, {0, 1}, {7, 0.3}).output(), {0, 0.3}, kTol));
  CHECK(kind_of([] { perp_foot({0, 0}, {0, 0}, {1, 1}); }) == ErrorKind::DegenerateCircle);
  CHECK(kind_of([] { perp_foot({0, 0}, {1, 0}, {0, 0}); }) == ErrorKind::DegenerateCircle);
}

TEST_CASE("invert_exterior") {
  const Construction figure = invert_exterior({{0, 0}, {1.5, 0}}, {1.5, 1.5});
  CHECK(near(figure.output(), {0.75, 0.75}, kTol));
  CHECK(figure.trace.circle_count == 25);
  CHECK(near(invert_exterior(kUnitCircle, {4, 0}).output(), oracle::invert({{0, 0}, 1}, {4, 0}), kTol));
  CHECK(near(invert_exterior(kUnitCircle, {2, 0}).output(), {0.5, 0}, kTol));
  CHECK(kind_of([] { invert_exterior(kUnitCircle, {0.5, 0}); }) == ErrorKind::NotExterior);
  CHECK(kind_of([] { invert_exterior(kUnitCircle, {0, 1}); }) == ErrorKind::NotExterior);
}

TEST_CASE("invert_general") {
  // n = floor(1 / 0.5) + 2 = 4.
  const Construction inner = invert_general(kUnitCircle, {0.5, 0});
  CHECK(near(inner.output(), oracle::invert({{0, 0}, 1}, {0.5, 0}), 4 * kTol));
  CHECK(near(inner.output(), {2, 0}, 4 * kTol));
  const Construction on = invert_general(kUnitCircle, {1, 0});
  CHECK(on.output() == Point{1, 0});
  CHECK(on.trace.circle_count == 0);
  CHECK(kind_of([] { invert_general(kUnitCircle, {1e-15, 0}); }) == ErrorKind::CenterInversion);
  CHECK(kind_of([] { invert_general(kUnitCircle, {1e-7, 0}); }) == ErrorKind::ScaleOverflow);
}

TEST_CASE("line_line") {
  CHECK(near(line_line({-0.4, -0.4}, {2.3, 2.3}, {0.2, 1.8}, {2.7, -0.7}).output(), {1, 1}, kTol));
  CHECK(near(line_line({0, 0}, {1, 0}, {0.5, -1}, {0.5, 1}).output(), {0.5, 0}, kTol));
  // Every apex of ab lies on cd and every apex of cd lies on ab.
  CHECK(near(line_line({-1, 0}, {1, 0}, {0, -1}, {0, 1}).output(), {0, 0}, kTol));
  CHECK(kind_of([] { line_line({0, 0}, {1, 0}, {0, 1}, {1, 1}); }) == ErrorKind::ParallelLines);
  CHECK(kind_of([] { line_line({0, 0}, {0, 0}, {0, 1}, {1, 1}); }) == ErrorKind::DegenerateCircle);
}

TEST_CASE("line_circle_off_center") {
  const Construction figure = line_circle_off_center({-2.5, 0.5}, {-1.5, 0.5}, kUnitCircle);
  REQUIRE(figure.outputs.size() == 2);
  CHECK(near(figure.outputs[0], {std::sqrt(0.75), 0.5}, kTol));
  CHECK(near(figure.outputs[1], {-std::sqrt(0.75), 0.5}, kTol));

  const Construction grazing = line_circle_off_center({-2, 0.999999}, {2, 0.999999}, kUnitCircle);
  const auto expected = oracle::line_circle({-2, 0.999999}, {2, 0.999999}, {{0, 0}, 1});
  REQUIRE(grazing.outputs.size() == 2);
  REQUIRE(expected.size() == 2);
  CHECK(near(grazing.outputs[0], expected[0], 1e-6));
  CHECK(near(grazing.outputs[1], expected[1], 1e-6));
  CHECK(grazing.outputs[0].x > 0);
  CHECK(grazing.outputs[1].x < 0);

  const Construction touching = line_circle_off_center({-2, 1}, {2, 1}, kUnitCircle);
  REQUIRE(touching.outputs.size() == 1);
  CHECK(near(touching.output(), {0, 1}, kTol));

  CHECK(kind_of([] { line_circle_off_center({-2, 2}, {2, 2}, kUnitCircle); }) == ErrorKind::NoSuchIntersection);
  CHECK(kind_of([] { line_circle_off_center({-2, 0}, {2, 0}, kUnitCircle); }) == ErrorKind::CenterOnLine);
}

TEST_CASE("line_circle_center_on_line") {
  const Construction unit = line_circle_center_on_line({0, 0}, {2, 0}, {{0, 0}, {0, 1}});
  REQUIRE(unit.outputs.size() == 2);
  CHECK(near(unit.outputs[0], {1, 0}, kTol));
  CHECK(near(unit.outputs[1], {-1, 0}, kTol));

  // The figure: C = (cos 30, sin 30), Q = 3C, Lambda of radius 2, H = (Q.x, 0),
  // I = (Q.x, 1.5 - 4 / 1.5).
  const Point c{std::sqrt(3.0) / 2, 0.5};
  const Construction figure = line_circle_center_on_line({0, 0}, {2, 0}, {{0, 0}, c});
  REQUIRE(figure.outputs.size() == 2);
  CHECK(near(figure.outputs[0], {1, 0}, kTol));
  CHECK(near(figure.outputs[1], {-1, 0}, kTol));
  bool saw_lambda = false, saw_h = false, saw_i = false;
  for (const auto& v : figure.trace.resolved) {
    if (const auto* circle = std::get_if<ResolvedCircle>(&v)) {
      saw_lambda = saw_lambda || (near(circle->center, 3.0 * c, kTol) && std::abs(circle->radius - 2) < kTol);
    } else {
      const Point p = std::get<Point>(v);
      saw_h = saw_h || near(p, {3 * c.x, 0}, kTol);
      saw_i = saw_i || near(p, {3 * c.x, 1.5 - 4 / 1.5}, 1e-8);
    }
  }
  CHECK(saw_lambda);
  CHECK(saw_h);
  CHECK(saw_i);

  // Radius point already on the line: answered by the antipode directly.
  const Construction aligned = line_circle_center_on_line({0, 0}, {2, 0}, {{0, 0}, {-1, 0}});
  CHECK(near(aligned.outputs[0], {1, 0}, kTol));
  CHECK(near(aligned.outputs[1], {-1, 0}, kTol));

  // Radius point close to the line takes the 60-degree neighbour instead.
  const Construction shallow = line_circle_center_on_line({1, 1}, {4, 2}, {{1, 1}, {2, 1.3}});
  const double r = std::hypot(1.0, 0.3);
  const double len = std::hypot(3.0, 1.0);
  CHECK(near(shallow.outputs[0], {1 + r * 3 / len, 1 + r / len}, 1e-8));
  CHECK(near(shallow.outputs[1], {1 - r * 3 / len, 1 - r / len}, 1e-8));
}

TEST_CASE("antipode") {
  CHECK(near(antipode(kUnitCircle, {1, 0}).output(), {-1, 0}, kTol));
  CHECK(near(antipode(kUnitCircle, {0, 1}).output(), {0, -1}, kTol));
  CHECK(near(antipode({{1, 1}, {2, 1}}, {2, 1}).output(), oracle::reflect_through({2, 1}, {1, 1}), kTol));
  CHECK(kind_of([] { antipode(kUnitCircle, {0.5, 0}); }) == ErrorKind::NotOnCircle);
}

TEST_CASE("construction invariants on random inputs") {
  SplitMix64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto pts = compass::testing::spaced_points(rng, 3, -5, 5, 0.1);
    const Point a = pts[0], b = pts[1], c = pts[2];

    CHECK(near(midpoint(a, b).output(), midpoint(b, a).output(), kTol));

    const Point h = perp_foot(a, b, c).output();
    if (gap(h, a) > 0.1 && gap(h, b) > 0.1) CHECK(near(perp_foot(a, b, h).output(), h, kTol));

    const CircleByCenterAndPoint omega{a, b};
    const double r = gap(a, b);
    if (gap(c, a) >= 0.05 * r && std::abs(gap(c, a) - r) > 1e-6) {
      const Point i1 = invert_general(omega, c).output();
      CHECK(near(invert_general(omega, i1).output(), c, 1e-5));
    }
  }
}

TEST_CASE("every construction trace is pure") {
  const Construction all[] = {
      apex({0, 0}, {1, 0}, Selector::Left),
      line_line({-0.4, -0.4}, {2.3, 2.3}, {0.2, 1.8}, {2.7, -0.7}),
      line_circle_center_on_line({0, 0}, {2, 0}, {{0, 0}, {0, 1}}),
      invert_general(kUnitCircle, {0.3, 0.2}),
  };
  for (const auto& c : all) {
    const AuditReport r = purity_audit(c.trace);
    CHECK(r.circles + r.picks + r.seeds == c.trace.program.steps.size());
    CHECK(r.circles == c.trace.circle_count);
  }
}
