#include "compass/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "compass/error.hpp"

namespace compass {

namespace {

void require_finite(Point p, const char* what) {
  if (!is_finite(p)) throw Error(ErrorKind::NonFiniteInput, what);
}

}  // namespace

Tolerance checked(Tolerance tol) {
  if (!(tol.eps_abs > 0.0) || !(tol.eps_degenerate > 0.0) || !std::isfinite(tol.eps_abs) ||
      !std::isfinite(tol.eps_degenerate)) {
    throw std::invalid_argument("tolerances must be positive and finite");
  }
  return tol;
}

double distance(Point p, Point q) {
  require_finite(p, "distance: first point");
  require_finite(q, "distance: second point");
  return std::hypot(q.x - p.x, q.y - p.y);
}

int orientation_sign(Point a, Point b, Point c, const Tolerance& tol) {
  require_finite(a, "orientation_sign");
  require_finite(b, "orientation_sign");
  require_finite(c, "orientation_sign");
  const Point ab = b - a;
  const Point ac = c - a;
  const double value = cross(ab, ac);
  const double scale = std::max(1.0, std::hypot(ab.x, ab.y) * std::hypot(ac.x, ac.y));
  if (std::abs(value) <= tol.eps_degenerate * scale) return 0;
  return value > 0.0 ? 1 : -1;
}

IntersectionOutcome circle_circle_intersect(const ResolvedCircle& c1, const ResolvedCircle& c2,
                                            const Tolerance& tol) {
  require_finite(c1.center, "circle_circle_intersect: first center");
  require_finite(c2.center, "circle_circle_intersect: second center");
  if (!std::isfinite(c1.radius) || !std::isfinite(c2.radius)) {
    throw Error(ErrorKind::NonFiniteInput, "circle_circle_intersect: radius");
  }
  const double eps = tol.eps_degenerate;
  if (c1.radius <= eps || c2.radius <= eps) {
    throw Error(ErrorKind::DegenerateCircle, "circle_circle_intersect: radius at or below eps_degenerate");
  }

  const double r1 = c1.radius;
  const double r2 = c2.radius;
  const Point axis = c2.center - c1.center;
  const double d = std::hypot(axis.x, axis.y);

  if (d <= eps) {
    if (std::abs(r1 - r2) <= eps) return Coincident{};
    return NoIntersection{};
  }

  const Point u{axis.x / d, axis.y / d};
  const Point normal{-u.y, u.x};
  // Signed offset of the radical line from c1 along the axis.
  const double along = 0.5 * (d + (r1 - r2) * (r1 + r2) / d);
  const Point foot = c1.center + along * u;

  const double sum = r1 + r2;
  const double diff = std::abs(r1 - r2);
  if (std::abs(d - sum) <= eps || std::abs(d - diff) <= eps) return Tangent{foot};
  if (d > sum || d < diff) return NoIntersection{};

  const double h_sq = (r1 - along) * (r1 + along);
  if (h_sq <= 0.0) return Tangent{foot};
  const double h = std::sqrt(h_sq);
  if (2.0 * h <= eps) return Tangent{foot};
  return TwoPoints{foot + h * normal, foot - h * normal};
}

}  // namespace compass
