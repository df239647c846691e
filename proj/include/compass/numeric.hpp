#pragma once

#include <cmath>
#include <variant>

namespace compass {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// A circle with its radius already measured. Only the kernel produces these
// from a (center, through) pair; oracles may build them freely.
struct ResolvedCircle {
  Point center;
  double radius = 0.0;
};

struct Tolerance {
  double eps_abs = 1e-9;
  double eps_degenerate = 1e-12;
};

// Validates 0 < eps_abs and 0 < eps_degenerate; throws std::invalid_argument.
Tolerance checked(Tolerance tol);

struct TwoPoints {
  Point left;
  Point right;
};
struct Tangent {
  Point point;
};
struct NoIntersection {};
struct Coincident {};

using IntersectionOutcome = std::variant<TwoPoints, Tangent, NoIntersection, Coincident>;

// Radical-line intersection. `left` lies to the left of the directed center
// line c1 -> c2. Throws Error{DegenerateCircle} when a radius is at or below
// eps_degenerate and Error{NonFiniteInput} on NaN/inf input.
IntersectionOutcome circle_circle_intersect(const ResolvedCircle& c1, const ResolvedCircle& c2,
                                            const Tolerance& tol = {});

double distance(Point p, Point q);

// Sign of cross(b - a, c - a); magnitudes within eps_degenerate * max(1, |b-a||c-a|) are 0.
int orientation_sign(Point a, Point b, Point c, const Tolerance& tol = {});

}  // namespace compass
