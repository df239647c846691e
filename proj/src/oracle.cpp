#include "compass/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace compass::oracle {

namespace {

using C = std::complex<double>;

C to_c(Point p) { return {p.x, p.y}; }
Point from_c(C z) { return {z.real(), z.imag()}; }

}  // namespace

std::optional<Point> line_line(Point a, Point b, Point c, Point d, const Tolerance& tol) {
  // a + t (b - a) = c + s (d - c), solved by Cramer's rule.
  const double a11 = b.x - a.x, a12 = -(d.x - c.x);
  const double a21 = b.y - a.y, a22 = -(d.y - c.y);
  const double det = a11 * a22 - a12 * a21;
  const double scale = std::hypot(a11, a21) * std::hypot(a12, a22);
  if (std::abs(det) <= tol.eps_degenerate * scale) return std::nullopt;
  const double r1 = c.x - a.x, r2 = c.y - a.y;
  const double t = (r1 * a22 - a12 * r2) / det;
  return Point{a.x + t * a11, a.y + t * a21};
}

std::vector<Point> line_circle(Point a, Point b, const ResolvedCircle& omega, const Tolerance& tol) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
  const double t0 = (omega.center.x - a.x) * ux + (omega.center.y - a.y) * uy;
  const Point closest{a.x + t0 * ux, a.y + t0 * uy};
  const double gap = std::hypot(omega.center.x - closest.x, omega.center.y - closest.y);
  if (std::abs(gap - omega.radius) <= tol.eps_degenerate) return {closest};
  if (gap > omega.radius) return {};
  const double half = std::sqrt(omega.radius * omega.radius - gap * gap);
  return {Point{closest.x + half * ux, closest.y + half * uy}, Point{closest.x - half * ux, closest.y - half * uy}};
}

std::vector<Point> circle_circle(const ResolvedCircle& c1, const ResolvedCircle& c2) {
  // Subtracting the two circle equations leaves the line  A x + B y = K.
  const double x1 = c1.center.x, y1 = c1.center.y, x2 = c2.center.x, y2 = c2.center.y;
  const double A = 2.0 * (x2 - x1);
  const double B = 2.0 * (y2 - y1);
  const double K = (c1.radius * c1.radius - c2.radius * c2.radius) - (x1 * x1 - x2 * x2) - (y1 * y1 - y2 * y2);
  if (A == 0.0 && B == 0.0) return {};
  // Parametrize the line by its dominant coordinate to keep the division safe.
  const bool solve_y = std::abs(B) >= std::abs(A);
  std::vector<Point> out;
  if (solve_y) {
    // y = (K - A x) / B; substitute into (x - x1)^2 + (y - y1)^2 = r1^2.
    const double m = -A / B, k = K / B - y1;
    const double qa = 1.0 + m * m;
    const double qb = -2.0 * x1 + 2.0 * m * k;
    const double qc = x1 * x1 + k * k - c1.radius * c1.radius;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return {};
    const double root = std::sqrt(disc);
    for (double x : {(-qb + root) / (2.0 * qa), (-qb - root) / (2.0 * qa)}) out.push_back({x, (K - A * x) / B});
  } else {
    const double m = -B / A, k = K / A - x1;
    const double qa = 1.0 + m * m;
    const double qb = -2.0 * y1 + 2.0 * m * k;
    const double qc = y1 * y1 + k * k - c1.radius * c1.radius;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return {};
    const double root = std::sqrt(disc);
    for (double y : {(-qb + root) / (2.0 * qa), (-qb - root) / (2.0 * qa)}) out.push_back({(K - B * y) / A, y});
  }
  return out;
}

Point invert(const ResolvedCircle& omega, Point p) {
  const double dx = p.x - omega.center.x, dy = p.y - omega.center.y;
  const double f = omega.radius * omega.radius / (dx * dx + dy * dy);
  return {omega.center.x + f * dx, omega.center.y + f * dy};
}

Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

Point foot(Point a, Point b, Point c) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double t = ((c.x - a.x) * dx + (c.y - a.y) * dy) / (dx * dx + dy * dy);
  return {a.x + t * dx, a.y + t * dy};
}

Point reflect_through(Point x, Point y) { return {2.0 * y.x - x.x, 2.0 * y.y - x.y}; }

Point scale_from(Point o, Point p, double n) { return {o.x + n * (p.x - o.x), o.y + n * (p.y - o.y)}; }

Point apex(Point a, Point b, bool left) {
  const C turn = std::polar(1.0, (left ? 1.0 : -1.0) * std::acos(-1.0) / 3.0);
  return from_c(to_c(a) + turn * (to_c(b) - to_c(a)));
}

Point complex_mul(Point a, Point b) { return from_c(to_c(a) * to_c(b)); }
Point complex_add(Point a, Point b) { return from_c(to_c(a) + to_c(b)); }
Point complex_conj(Point a) { return from_c(std::conj(to_c(a))); }

}  // namespace compass::oracle
