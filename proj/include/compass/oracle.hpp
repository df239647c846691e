#pragma once

#include <optional>
#include <vector>

#include "compass/numeric.hpp"

// Closed-form analytic geometry used only to check constructions. Nothing in
// the construction path may include this header.
namespace compass::oracle {

// nullopt when the lines are parallel (|det| <= eps_degenerate * |b-a| |d-c|).
std::optional<Point> line_line(Point a, Point b, Point c, Point d, const Tolerance& tol = {});

// Zero, one or two points, ordered by decreasing projection onto b - a. One
// point iff |dist(center, line) - r| <= eps_degenerate.
std::vector<Point> line_circle(Point a, Point b, const ResolvedCircle& omega, const Tolerance& tol = {});

// Intersections by substitution into a quadratic; empty for disjoint,
// nested or concentric circles.
std::vector<Point> circle_circle(const ResolvedCircle& c1, const ResolvedCircle& c2);

Point invert(const ResolvedCircle& omega, Point p);
Point midpoint(Point a, Point b);
Point foot(Point a, Point b, Point c);
Point reflect_through(Point x, Point y);
Point scale_from(Point o, Point p, double n);
// Third vertex of the equilateral triangle on ab, counterclockwise when left.
Point apex(Point a, Point b, bool left);

Point complex_mul(Point a, Point b);
Point complex_add(Point a, Point b);
Point complex_conj(Point a);

}  // namespace compass::oracle
