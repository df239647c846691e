#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "compass/kernel.hpp"

namespace compass {

// A circle as compass data: a center node and a node it passes through.
struct CircleNodes {
  NodeId center;
  NodeId through;
};

struct CircleByCenterAndPoint {
  Point center;
  Point through;
};

inline constexpr std::uint32_t kMaxScale = 1u << 20;

NodeId draw(Builder& bld, CircleNodes c);

// The intersection of two circles that is farther from `avoid`; the tangency
// point when they touch.
NodeId pick_away_from(Builder& bld, NodeId circle1, NodeId circle2, NodeId avoid);

// Node-level constructions. Each appends compass steps to `bld` and returns the
// node(s) holding the result.
NodeId apex(Builder& bld, NodeId a, NodeId b, Selector side);
NodeId extend(Builder& bld, NodeId x, NodeId y);
NodeId nth_point(Builder& bld, NodeId o, NodeId p, std::uint32_t n);
NodeId midpoint(Builder& bld, NodeId a, NodeId b);
CircleNodes diameter_circle(Builder& bld, NodeId a, NodeId b);
NodeId perp_foot(Builder& bld, NodeId a, NodeId b, NodeId c);
NodeId invert_exterior(Builder& bld, CircleNodes omega, NodeId p);
NodeId invert_general(Builder& bld, CircleNodes omega, NodeId p);
NodeId line_line(Builder& bld, NodeId a, NodeId b, NodeId c, NodeId d);
// One node for a tangent line, two otherwise, ordered by decreasing
// projection onto the direction a -> b.
std::vector<NodeId> line_circle_off_center(Builder& bld, NodeId a, NodeId b, CircleNodes omega);
// Ordered so the first point lies on the ray o -> a.
std::array<NodeId, 2> line_circle_center_on_line(Builder& bld, NodeId o, NodeId a, CircleNodes omega);
NodeId antipode(Builder& bld, CircleNodes omega, NodeId p);

// A finished construction: the program, its executed trace and output points.
struct Construction {
  Program program;
  Trace trace;
  std::vector<Point> outputs;

  Point output() const { return outputs.at(0); }
};

template <class Body>
Construction construct(std::vector<Point> seeds, const Tolerance& tol, Body&& body) {
  Builder b(std::move(seeds), tol);
  std::vector<NodeId> outs = body(b);
  Construction c;
  c.trace = b.trace(std::move(outs));
  c.program = c.trace.program;
  c.outputs = c.trace.outputs();
  return c;
}

// Point-level entry points. Seeds are the arguments in order; a circle
// argument contributes its center then its through point.
Construction apex(Point a, Point b, Selector side, const Tolerance& tol = {});
Construction extend(Point x, Point y, const Tolerance& tol = {});
Construction nth_point(Point o, Point p, std::uint32_t n, const Tolerance& tol = {});
Construction midpoint(Point a, Point b, const Tolerance& tol = {});
// Outputs are the circle's center and through point.
Construction diameter_circle(Point a, Point b, const Tolerance& tol = {});
Construction perp_foot(Point a, Point b, Point c, const Tolerance& tol = {});
Construction invert_exterior(const CircleByCenterAndPoint& omega, Point p, const Tolerance& tol = {});
Construction invert_general(const CircleByCenterAndPoint& omega, Point p, const Tolerance& tol = {});
Construction line_line(Point a, Point b, Point c, Point d, const Tolerance& tol = {});
Construction line_circle_off_center(Point a, Point b, const CircleByCenterAndPoint& omega,
                                    const Tolerance& tol = {});
Construction line_circle_center_on_line(Point o, Point a, const CircleByCenterAndPoint& omega,
                                        const Tolerance& tol = {});
Construction antipode(const CircleByCenterAndPoint& omega, Point p, const Tolerance& tol = {});

}  // namespace compass
