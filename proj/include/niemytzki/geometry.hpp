#pragma once

// Exact predicates on the closed half-space X_n = P_n ∪ L_n.
//
// Every predicate works on squared distances and cross-multiplied rational
// inequalities, so no square root is ever taken and each test is decided
// exactly.

#include <cstddef>
#include <span>
#include <vector>

#include "niemytzki/rational.hpp"

namespace niemytzki {

/// Coordinates of a point of the boundary hyperplane L_n with the last
/// (zero) coordinate dropped, i.e. a point of R^{n-1}.
using Coords = std::vector<Rat>;

/// A point of X_n: n >= 2 rational coordinates with x_n >= 0.
class Point {
 public:
  explicit Point(std::vector<Rat> coords);

  /// Lifts (a_1, ..., a_{n-1}) to the boundary point (a_1, ..., a_{n-1}, 0).
  static Point on_boundary(std::span<const Rat> coords);

  std::size_t dimension() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const Rat& height() const { return coords_.back(); }
  std::span<const Rat> coords() const { return coords_; }

  bool on_hyperplane() const { return height().is_zero(); }
  bool interior() const { return height().sign() > 0; }

  /// First n-1 coordinates.
  Coords horizontal() const { return {coords_.begin(), coords_.end() - 1}; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rat> coords_;
};

/// Open Euclidean ball B(center, radius).
struct BallSpec {
  Point center;
  Rat radius;

  BallSpec(Point c, Rat r);
};

Rat sq_dist(std::span<const Rat> p, std::span<const Rat> q);
Rat sq_dist(const Point& p, const Point& q);

/// Strict: points on the sphere are outside.
bool in_ball(const Point& x, const BallSpec& b);

/// Centre of the tangent ball at a: a(eps) = (a_1, ..., a_{n-1}, eps).
Point tangent_center(const Point& a, const Rat& eps);

/// x ∈ {a} ∪ B(a(eps), eps), decided as
/// x = a, or x_n > 0 and Σ_{i<n}(x_i - a_i)^2 + x_n^2 < 2·eps·x_n.
bool in_tangent_ball(const Point& x, const Point& a, const Rat& eps);

/// The unique t with x on the boundary sphere of B(a(t·eps), t·eps):
/// (Σ_{i<n}(x_i - a_i)^2 + x_n^2) / (2·eps·x_n). Requires x_n > 0.
Rat t_level(const Point& x, const Point& a, const Rat& eps);

/// The [0,1]-valued function separating a from the complement of its tangent
/// ball: 0 at a, t_level inside the ball, 1 elsewhere.
Rat separating_f(const Point& x, const Point& a, const Rat& eps);

/// δ = (r^2 - |q - c|^2) / (2r). Since r - d >= (r^2 - d^2)/(2r) for
/// 0 <= d < r, B(q, δ) ⊆ B(c, r). Requires q strictly inside b.
Rat inner_ball_radius(const Point& q, const BallSpec& b);

}  // namespace niemytzki
