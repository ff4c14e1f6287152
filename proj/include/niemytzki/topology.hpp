#pragma once

// The topologies τ(A) on X_n, given by their local bases:
//
//   p ∈ P_n        B(p, ε) with 0 < ε < p_n
//   p ∈ A          B(p, ε) ∩ X_n
//   p ∈ L_n \ A    {p} ∪ B(p(ε), ε)
//
// τ(L_n) is the Euclidean topology and τ(∅) the Niemytzki topology.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "niemytzki/geometry.hpp"
#include "niemytzki/set_expr.hpp"

namespace niemytzki {

enum class TopologyKind { Euclidean, Niemytzki, Modified };

class TopologySpec {
 public:
  static TopologySpec euclidean(std::size_t n);
  static TopologySpec niemytzki(std::size_t n);
  /// Normalizes: A = all gives euclidean, A = empty gives niemytzki.
  static TopologySpec modified(std::size_t n, SetExpr a);

  std::size_t dimension() const { return n_; }
  TopologyKind kind() const { return kind_; }
  /// Present only for Modified.
  const std::optional<SetExpr>& boundary_set() const { return a_; }

  /// Whether the boundary point p keeps Euclidean (half-ball) neighbourhoods,
  /// i.e. p ∈ A.
  MemberVerdict euclidean_at(const Point& p) const;

  std::string str() const;

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;

 private:
  TopologySpec(std::size_t n, TopologyKind kind, std::optional<SetExpr> a)
      : n_(n), kind_(kind), a_(std::move(a)) {}

  std::size_t n_;
  TopologyKind kind_;
  std::optional<SetExpr> a_;
};

/// B(center, radius) with radius < center_n, so the ball stays in P_n.
struct InteriorBall {
  Point center;
  Rat radius;
  InteriorBall(Point c, Rat r);
  friend bool operator==(const InteriorBall&, const InteriorBall&) = default;
};

/// B(center, radius) ∩ X_n for a boundary centre.
struct HalfBall {
  Point center;
  Rat radius;
  HalfBall(Point c, Rat r);
  friend bool operator==(const HalfBall&, const HalfBall&) = default;
};

/// {center} ∪ B(center(radius), radius) for a boundary centre.
struct TangentBall {
  Point center;
  Rat radius;
  TangentBall(Point c, Rat r);
  friend bool operator==(const TangentBall&, const TangentBall&) = default;
};

using BasicOpen = std::variant<InteriorBall, HalfBall, TangentBall>;

std::string_view kind_name(const BasicOpen& b);
const Point& center_of(const BasicOpen& b);
const Rat& radius_of(const BasicOpen& b);

/// The ε-element of the local base of topo at p. Interior radii are clamped
/// to min(ε, p_n/2). Throws UndecidableMembership when p ∈ L_n and A cannot
/// decide p.
BasicOpen local_base_element(const TopologySpec& topo, const Point& p, const Rat& eps);

bool contains(const BasicOpen& b, const Point& x);

/// A basic open set containing x inside b1 ∩ b2. Requires x in both.
BasicOpen refine(const BasicOpen& b1, const BasicOpen& b2, const Point& x);

// ---------------------------------------------------------------------------
// Sequences with closed-form terms.

/// x_k = a + (0, ..., 0, r/k).
struct VerticalFamily {
  Point anchor;
  Rat step;
};

/// x_k = (a_1 + 2εk/(k²+1), a_2, ..., a_{n-1}, 2ε/(k²+1)); every term lies on
/// the sphere bounding B(a(ε), ε) and the terms tend to a.
struct TangentCircleFamily {
  Point anchor;
  Rat eps;
};

struct FiniteListFamily {
  std::vector<Point> terms;
};

using SequenceFamily = std::variant<VerticalFamily, TangentCircleFamily, FiniteListFamily>;

/// k-th term, k >= 1.
Point term(const SequenceFamily& fam, long k);

/// Parses "vertical((a_1,...,a_{n-1});r)" or "tangent-circle((...);eps)".
SequenceFamily parse_family(std::string_view text, std::size_t n);
std::string family_string(const SequenceFamily& fam);

/// "Every term with index k satisfying the bound lies in the δ-element of the
/// local base at the limit", for every δ > 0:
///   Linear:    k·δ > c
///   Quadratic: (k² + 1)·δ² > c
struct IndexBound {
  enum class Form { Linear, Quadratic };
  Form form;
  Rat coefficient;

  bool admits(long k, const Rat& delta) const;
  std::string description() const;
  friend bool operator==(const IndexBound&, const IndexBound&) = default;
};

struct IsolatingBall {
  Point point;
  Rat radius;
  friend bool operator==(const IsolatingBall&, const IsolatingBall&) = default;
};

struct ConvergenceVerdict {
  bool converges = false;
  /// False for finite lists: a prefix never decides convergence.
  bool conclusive = true;
  std::optional<IndexBound> bound;
  std::optional<BasicOpen> blocking;
  std::vector<IsolatingBall> isolating;
};

inline constexpr long kCertificateTerms = 100;

/// Decides convergence of a closed-form family to `limit` (its anchor).
ConvergenceVerdict decide_convergence(const SequenceFamily& fam, const TopologySpec& topo,
                                      const Point& limit);

/// Re-checks every certificate in v on the first `terms` terms. Returns an
/// empty string on success, otherwise a description of the first failure.
std::string verify_certificate(const SequenceFamily& fam, const TopologySpec& topo,
                               const ConvergenceVerdict& v, long terms = kCertificateTerms);

}  // namespace niemytzki
