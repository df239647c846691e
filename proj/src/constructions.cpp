#include "compass/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "compass/error.hpp"

namespace compass {

namespace {

void require_distinct(const Builder& bld, NodeId a, NodeId b, const char* what) {
  if (distance(bld.point(a), bld.point(b)) <= bld.tolerance().eps_degenerate) {
    throw Error(ErrorKind::DegenerateCircle, std::string(what) + ": points coincide");
  }
}

double line_distance(Point a, Point b, Point p) {
  const Point dir = b - a;
  return std::abs(cross(dir, p - a)) / std::hypot(dir.x, dir.y);
}

double normalized_cross(Point u, Point v) {
  return cross(u, v) / (std::hypot(u.x, u.y) * std::hypot(v.x, v.y));
}

Point rotate60(Point v, Selector side) {
  const double c = 0.5;
  const double s = (side == Selector::Left ? 1.0 : -1.0) * std::sqrt(3.0) / 2.0;
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

double radius_of(const Builder& bld, CircleNodes c) { return distance(bld.point(c.center), bld.point(c.through)); }

template <class Order>
void sort_by_projection(const Builder& bld, Point origin, Point dir, Order& nodes) {
  std::stable_sort(nodes.begin(), nodes.end(), [&](NodeId lhs, NodeId rhs) {
    return dot(bld.point(lhs) - origin, dir) > dot(bld.point(rhs) - origin, dir);
  });
}

}  // namespace

NodeId draw(Builder& bld, CircleNodes c) { return bld.circle(c.center, c.through); }

NodeId pick_away_from(Builder& bld, NodeId circle1, NodeId circle2, NodeId avoid) {
  const IntersectionOutcome outcome = bld.probe(circle1, circle2);
  if (const auto* two = std::get_if<TwoPoints>(&outcome)) {
    const Point from = bld.point(avoid);
    const bool left_farther = distance(two->left, from) >= distance(two->right, from);
    return bld.pick(circle1, circle2, left_farther ? Selector::Left : Selector::Right);
  }
  // Tangent resolves under either selector; the other outcomes throw.
  return bld.pick(circle1, circle2, Selector::Left);
}

NodeId apex(Builder& bld, NodeId a, NodeId b, Selector side) {
  require_distinct(bld, a, b, "apex");
  return bld.pick(bld.circle(a, b), bld.circle(b, a), side);
}

NodeId extend(Builder& bld, NodeId x, NodeId y) {
  require_distinct(bld, x, y, "extend");
  // Three 60-degree turns around y: x, then two hexagon vertices, then 2y - x.
  const NodeId base = bld.circle(y, x);
  NodeId current = x;
  for (int turn = 0; turn < 3; ++turn) {
    current = bld.pick(base, bld.circle(current, y), Selector::Left);
  }
  return current;
}

NodeId nth_point(Builder& bld, NodeId o, NodeId p, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidProgram, "nth_point: n must be positive");
  if (n > kMaxScale) throw Error(ErrorKind::ScaleOverflow, "nth_point: n = " + std::to_string(n));
  require_distinct(bld, o, p, "nth_point");
  NodeId previous = o;
  NodeId current = p;
  for (std::uint32_t k = 1; k < n; ++k) {
    const NodeId next = extend(bld, previous, current);
    previous = current;
    current = next;
  }
  return current;
}

NodeId midpoint(Builder& bld, NodeId a, NodeId b) {
  require_distinct(bld, a, b, "midpoint");
  const NodeId c = extend(bld, b, a);
  const NodeId big = bld.circle(c, b);
  const NodeId small = bld.circle(b, a);
  const NodeId m = bld.pick(big, small, Selector::Left);
  const NodeId n = bld.pick(big, small, Selector::Right);
  return pick_away_from(bld, bld.circle(m, b), bld.circle(n, b), b);
}

CircleNodes diameter_circle(Builder& bld, NodeId a, NodeId b) {
  require_distinct(bld, a, b, "diameter_circle");
  return {midpoint(bld, a, b), a};
}

NodeId perp_foot(Builder& bld, NodeId a, NodeId b, NodeId c) {
  require_distinct(bld, a, b, "perp_foot: line");
  require_distinct(bld, a, c, "perp_foot: first diameter");
  require_distinct(bld, b, c, "perp_foot: second diameter");
  const NodeId first = draw(bld, diameter_circle(bld, a, c));
  const NodeId second = draw(bld, diameter_circle(bld, b, c));
  return pick_away_from(bld, first, second, c);
}

NodeId invert_exterior(Builder& bld, CircleNodes omega, NodeId p) {
  const double r = radius_of(bld, omega);
  const double d = distance(bld.point(omega.center), bld.point(p));
  if (!(d > r + bld.tolerance().eps_degenerate)) {
    throw Error(ErrorKind::NotExterior, "invert_exterior: point is not outside the circle");
  }
  const NodeId around = draw(bld, diameter_circle(bld, omega.center, p));
  const NodeId circle = draw(bld, omega);
  const NodeId m = bld.pick(around, circle, Selector::Left);
  const NodeId n = bld.pick(around, circle, Selector::Right);
  return perp_foot(bld, m, n, omega.center);
}

NodeId invert_general(Builder& bld, CircleNodes omega, NodeId p) {
  const double eps = bld.tolerance().eps_degenerate;
  const double r = radius_of(bld, omega);
  const double d = distance(bld.point(omega.center), bld.point(p));
  if (d <= eps) throw Error(ErrorKind::CenterInversion, "inversion is undefined at the center");
  if (std::abs(d - r) <= eps) return p;
  if (d > r + eps) return invert_exterior(bld, omega, p);

  const double scale = std::floor(r / d) + 2.0;
  if (scale > static_cast<double>(kMaxScale)) {
    throw Error(ErrorKind::ScaleOverflow, "invert_general: point too close to the center");
  }
  const auto n = static_cast<std::uint32_t>(scale);
  const NodeId q = nth_point(bld, omega.center, p, n);
  const NodeId j = invert_exterior(bld, omega, q);
  return nth_point(bld, omega.center, j, n);
}

NodeId line_line(Builder& bld, NodeId a, NodeId b, NodeId c, NodeId d) {
  require_distinct(bld, a, b, "line_line: first line");
  require_distinct(bld, c, d, "line_line: second line");
  const Point pa = bld.point(a), pb = bld.point(b), pc = bld.point(c), pd = bld.point(d);
  if (std::abs(normalized_cross(pb - pa, pd - pc)) <= bld.tolerance().eps_degenerate) {
    throw Error(ErrorKind::ParallelLines, "line_line: lines are parallel");
  }

  // Pole candidates are equilateral apexes over pairs of the given points. The
  // first one that sits well away from both lines wins; failing that, the one
  // with the largest clearance relative to its circle.
  struct Candidate {
    NodeId from, to;
    Selector side;
  };
  const NodeId pts[] = {a, b, c, d};
  std::vector<Candidate> candidates;
  const std::pair<int, int> pairs[] = {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (auto [i, j] : pairs) {
    for (Selector side : {Selector::Left, Selector::Right}) candidates.push_back({pts[i], pts[j], side});
  }
  constexpr double kClearance = 0.25;
  std::size_t best = candidates.size();
  double best_ratio = 0.0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Point from = bld.point(candidates[k].from);
    const Point to = bld.point(candidates[k].to);
    const double radius = distance(from, to);
    if (radius <= bld.tolerance().eps_degenerate) continue;
    const Point pole = from + rotate60(to - from, candidates[k].side);
    const double ratio = std::min(line_distance(pa, pb, pole), line_distance(pc, pd, pole)) / radius;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = k;
    }
    if (ratio >= kClearance) {
      best = k;
      break;
    }
  }
  if (best == candidates.size()) throw Error(ErrorKind::DegenerateCircle, "line_line: no usable pole");

  const Candidate& chosen = candidates[best];
  const NodeId pole = apex(bld, chosen.from, chosen.to, chosen.side);
  const CircleNodes gamma{pole, chosen.from};
  const NodeId n = perp_foot(bld, a, b, pole);
  const NodeId m = perp_foot(bld, c, d, pole);
  const NodeId i = invert_general(bld, gamma, n);
  const NodeId j = invert_general(bld, gamma, m);
  const NodeId first = draw(bld, diameter_circle(bld, i, pole));
  const NodeId second = draw(bld, diameter_circle(bld, j, pole));
  const NodeId k = pick_away_from(bld, first, second, pole);
  return invert_general(bld, gamma, k);
}

std::vector<NodeId> line_circle_off_center(Builder& bld, NodeId a, NodeId b, CircleNodes omega) {
  require_distinct(bld, a, b, "line_circle: line");
  const double eps = bld.tolerance().eps_degenerate;
  const Point pa = bld.point(a), pb = bld.point(b), o = bld.point(omega.center);
  const double r = radius_of(bld, omega);
  if (r <= eps) throw Error(ErrorKind::DegenerateCircle, "line_circle: circle has zero radius");
  const double gap = line_distance(pa, pb, o);
  if (gap <= eps) throw Error(ErrorKind::CenterOnLine, "line_circle: center lies on the line");
  if (gap > r + eps) throw Error(ErrorKind::NoSuchIntersection, "line_circle: line misses the circle");

  const NodeId h = perp_foot(bld, a, b, omega.center);
  const NodeId k = invert_general(bld, omega, h);
  const NodeId around = draw(bld, diameter_circle(bld, omega.center, k));
  const NodeId circle = draw(bld, omega);
  const IntersectionOutcome outcome = bld.probe(around, circle);
  std::vector<NodeId> result;
  if (std::holds_alternative<TwoPoints>(outcome)) {
    result = {bld.pick(around, circle, Selector::Left), bld.pick(around, circle, Selector::Right)};
  } else {
    result = {bld.pick(around, circle, Selector::Left)};
  }
  sort_by_projection(bld, pa, pb - pa, result);
  return result;
}

std::array<NodeId, 2> line_circle_center_on_line(Builder& bld, NodeId o, NodeId a, CircleNodes omega) {
  require_distinct(bld, o, a, "line_circle_center_on_line: line");
  const double eps = bld.tolerance().eps_degenerate;
  const Point po = bld.point(o), pa = bld.point(a);
  if (distance(bld.point(omega.center), po) > eps) {
    throw Error(ErrorKind::InvalidProgram, "line_circle_center_on_line: circle is not centered on o");
  }
  require_distinct(bld, omega.center, omega.through, "line_circle_center_on_line: circle");
  const NodeId given = omega.through;
  const double sine = normalized_cross(pa - po, bld.point(given) - po);

  std::array<NodeId, 2> result;
  if (std::abs(sine) <= eps) {
    result = {given, antipode(bld, omega, given)};
  } else {
    // C must sit on the circle and off the line; a radius point within 30
    // degrees of the line is swapped for its 60-degree neighbour on the circle.
    const NodeId c = std::abs(sine) >= 0.5 ? given : apex(bld, omega.center, given, Selector::Left);
    const NodeId p = extend(bld, omega.center, c);
    const NodeId q = extend(bld, c, p);
    const CircleNodes lambda{q, c};
    const NodeId h = perp_foot(bld, o, a, q);
    const NodeId i = invert_general(bld, lambda, h);
    const NodeId pi = draw(bld, diameter_circle(bld, q, i));
    const NodeId sigma = draw(bld, diameter_circle(bld, c, p));
    const NodeId x1 = bld.pick(sigma, pi, Selector::Left);
    const NodeId x2 = bld.pick(sigma, pi, Selector::Right);
    result = {invert_general(bld, lambda, x1), invert_general(bld, lambda, x2)};
  }
  sort_by_projection(bld, po, pa - po, result);
  return result;
}

NodeId antipode(Builder& bld, CircleNodes omega, NodeId p) {
  const double r = radius_of(bld, omega);
  if (std::abs(distance(bld.point(omega.center), bld.point(p)) - r) > bld.tolerance().eps_degenerate) {
    throw Error(ErrorKind::NotOnCircle, "antipode: point is not on the circle");
  }
  return extend(bld, p, omega.center);
}

Construction apex(Point a, Point b, Selector side, const Tolerance& tol) {
  return construct({a, b}, tol, [&](Builder& g) { return std::vector{apex(g, g.seed(0), g.seed(1), side)}; });
}

Construction extend(Point x, Point y, const Tolerance& tol) {
  return construct({x, y}, tol, [](Builder& g) { return std::vector{extend(g, g.seed(0), g.seed(1))}; });
}

Construction nth_point(Point o, Point p, std::uint32_t n, const Tolerance& tol) {
  return construct({o, p}, tol, [n](Builder& g) { return std::vector{nth_point(g, g.seed(0), g.seed(1), n)}; });
}

Construction midpoint(Point a, Point b, const Tolerance& tol) {
  return construct({a, b}, tol, [](Builder& g) { return std::vector{midpoint(g, g.seed(0), g.seed(1))}; });
}

Construction diameter_circle(Point a, Point b, const Tolerance& tol) {
  return construct({a, b}, tol, [](Builder& g) {
    const CircleNodes c = diameter_circle(g, g.seed(0), g.seed(1));
    draw(g, c);
    return std::vector{c.center, c.through};
  });
}

Construction perp_foot(Point a, Point b, Point c, const Tolerance& tol) {
  return construct({a, b, c}, tol,
                   [](Builder& g) { return std::vector{perp_foot(g, g.seed(0), g.seed(1), g.seed(2))}; });
}

Construction invert_exterior(const CircleByCenterAndPoint& omega, Point p, const Tolerance& tol) {
  return construct({omega.center, omega.through, p}, tol, [](Builder& g) {
    return std::vector{invert_exterior(g, {g.seed(0), g.seed(1)}, g.seed(2))};
  });
}

Construction invert_general(const CircleByCenterAndPoint& omega, Point p, const Tolerance& tol) {
  return construct({omega.center, omega.through, p}, tol, [](Builder& g) {
    return std::vector{invert_general(g, {g.seed(0), g.seed(1)}, g.seed(2))};
  });
}

Construction line_line(Point a, Point b, Point c, Point d, const Tolerance& tol) {
  return construct({a, b, c, d}, tol, [](Builder& g) {
    return std::vector{line_line(g, g.seed(0), g.seed(1), g.seed(2), g.seed(3))};
  });
}

Construction line_circle_off_center(Point a, Point b, const CircleByCenterAndPoint& omega, const Tolerance& tol) {
  return construct({a, b, omega.center, omega.through}, tol, [](Builder& g) {
    return line_circle_off_center(g, g.seed(0), g.seed(1), {g.seed(2), g.seed(3)});
  });
}

Construction line_circle_center_on_line(Point o, Point a, const CircleByCenterAndPoint& omega, const Tolerance& tol) {
  if (distance(o, omega.center) > tol.eps_degenerate) {
    throw Error(ErrorKind::InvalidProgram, "line_circle_center_on_line: circle is not centered on o");
  }
  return construct({o, a, omega.through}, tol, [](Builder& g) {
    const auto pair = line_circle_center_on_line(g, g.seed(0), g.seed(1), {g.seed(0), g.seed(2)});
    return std::vector<NodeId>(pair.begin(), pair.end());
  });
}

Construction antipode(const CircleByCenterAndPoint& omega, Point p, const Tolerance& tol) {
  return construct({omega.center, omega.through, p}, tol,
                   [](Builder& g) { return std::vector{antipode(g, {g.seed(0), g.seed(1)}, g.seed(2))}; });
}

}  // namespace compass
