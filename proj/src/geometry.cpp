#include "niemytzki/geometry.hpp"

#include <string>

#include "niemytzki/errors.hpp"

namespace niemytzki {

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_boundary(const Point& a) {
  if (!a.on_hyperplane()) throw DomainError("tangent-ball anchor must lie on L_n");
}

void require_positive(const Rat& eps, const char* what) {
  if (eps.sign() <= 0) throw DomainError(std::string(what) + " must be positive");
}

// Σ_{i<n}(x_i - a_i)^2 + x_n^2, the left side of the tangent-ball inequality.
Rat tangent_form(const Point& x, const Point& a) {
  Rat acc;
  const std::size_t n = x.dimension();
  for (std::size_t i = 0; i + 1 < n; ++i) acc += square(x[i] - a[i]);
  acc += square(x.height());
  return acc;
}

}  // namespace

Point::Point(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DimensionError("points need dimension n >= 2");
  if (coords_.back().sign() < 0) throw DomainError("point lies below the half-space (x_n < 0)");
}

Point Point::on_boundary(std::span<const Rat> coords) {
  std::vector<Rat> c(coords.begin(), coords.end());
  c.emplace_back(0);
  return Point(std::move(c));
}

BallSpec::BallSpec(Point c, Rat r) : center(std::move(c)), radius(std::move(r)) {
  require_positive(radius, "ball radius");
}

Rat sq_dist(std::span<const Rat> p, std::span<const Rat> q) {
  require_same_dimension(p.size(), q.size());
  Rat acc;
  for (std::size_t i = 0; i < p.size(); ++i) acc += square(p[i] - q[i]);
  return acc;
}

Rat sq_dist(const Point& p, const Point& q) { return sq_dist(p.coords(), q.coords()); }

bool in_ball(const Point& x, const BallSpec& b) {
  return sq_dist(x, b.center) < square(b.radius);
}

Point tangent_center(const Point& a, const Rat& eps) {
  require_boundary(a);
  require_positive(eps, "tangent-ball radius");
  std::vector<Rat> c(a.coords().begin(), a.coords().end());
  c.back() = eps;
  return Point(std::move(c));
}

bool in_tangent_ball(const Point& x, const Point& a, const Rat& eps) {
  require_same_dimension(x.dimension(), a.dimension());
  require_boundary(a);
  require_positive(eps, "tangent-ball radius");
  if (x == a) return true;
  if (!x.interior()) return false;
  return tangent_form(x, a) < Rat(2) * eps * x.height();
}

Rat t_level(const Point& x, const Point& a, const Rat& eps) {
  require_same_dimension(x.dimension(), a.dimension());
  require_boundary(a);
  require_positive(eps, "tangent-ball radius");
  if (!x.interior()) throw DomainError("t_level is undefined on the hyperplane x_n = 0");
  return tangent_form(x, a) / (Rat(2) * eps * x.height());
}

Rat separating_f(const Point& x, const Point& a, const Rat& eps) {
  if (x == a) return Rat(0);
  if (in_tangent_ball(x, a, eps)) return t_level(x, a, eps);
  return Rat(1);
}

Rat inner_ball_radius(const Point& q, const BallSpec& b) {
  const Rat d2 = sq_dist(q, b.center);
  const Rat r2 = square(b.radius);
  if (!(d2 < r2)) throw DomainError("inner_ball_radius: point is not inside the ball");
  return (r2 - d2) / (Rat(2) * b.radius);
}

}  // namespace niemytzki
