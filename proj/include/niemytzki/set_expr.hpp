#pragma once

// Boundary-set expressions A ⊆ L_n ≅ R^{n-1}.
//
// Grammar (whitespace allowed between tokens):
//
//   expr      := term { "|" term }
//   term      := factor { "&" factor }
//   factor    := "!" factor | "(" expr ")" | primitive
//   primitive := "empty" | "all" | "rationals" | "lattice" | "cantor"
//              | "bernstein" | "point(" coords ")"
//              | "finite{" coords { ";" coords } "}"
//              | "cball(" coords ";" rat ")" | "oball(" coords ";" rat ")"
//   rat       := integer [ "/" positive-integer ]
//   coords    := rat { "," rat }            (exactly n-1 entries)

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "niemytzki/geometry.hpp"
#include "niemytzki/rational.hpp"
#include "niemytzki/tribool.hpp"

namespace niemytzki {

enum class SetKind : std::uint8_t {
  Empty,
  All,
  Rationals,  // Q^{n-1}: countable and dense
  Lattice,    // Z^{n-1}
  Point,
  Finite,
  CBall,      // closed ball of L_n
  OBall,      // open ball of L_n
  Cantor,     // C × {0}^{n-2}
  Bernstein,  // symbolic; membership is never decidable
  Complement,
  Union,
  Inter,
};

/// Immutable, structurally normalized AST. Copies share nodes.
///
/// The factories normalize as they build: double complements cancel,
/// nested unions (intersections) are flattened, and one-element unions
/// (intersections) collapse to their element.
class SetExpr {
 public:
  static SetExpr empty();
  static SetExpr all();
  static SetExpr rationals();
  static SetExpr lattice();
  static SetExpr cantor();
  static SetExpr bernstein();
  static SetExpr point(Coords p);
  static SetExpr finite(std::vector<Coords> pts);
  static SetExpr cball(Coords center, Rat radius);
  static SetExpr oball(Coords center, Rat radius);
  static SetExpr complement(SetExpr e);
  static SetExpr union_of(std::vector<SetExpr> es);
  static SetExpr inter(std::vector<SetExpr> es);

  SetKind kind() const;
  bool is_primitive() const;

  /// Point: one entry. Finite: all entries. Balls: the centre.
  const std::vector<Coords>& points() const;
  const Rat& radius() const;
  /// Complement: one child. Union/Inter: two or more.
  const std::vector<SetExpr>& children() const;

  /// Printed form in the grammar above; parse(str()) == *this.
  std::string str() const;

  friend bool operator==(const SetExpr& a, const SetExpr& b);

 private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static SetExpr make(SetKind kind);

  std::shared_ptr<const Node> node_;
};

/// Parses an expression for a session of dimension n (coordinates have n-1
/// entries). Throws ParseError carrying the byte offset of the problem.
SetExpr parse_set(std::string_view text, std::size_t n);

/// Parses a comma-separated coordinate list with exactly `arity` entries.
Coords parse_coords(std::string_view text, std::size_t arity);

/// Throws DimensionError unless every coordinate tuple has n-1 entries.
void check_arity(const SetExpr& e, std::size_t n);

/// Exact membership of a rational in the middle-thirds Cantor set: follows
/// the ternary digits of x until the remainder repeats.
bool in_cantor_set(const Rat& x);

/// Three-valued membership of the boundary point p (n-1 coordinates).
MemberVerdict member(const SetExpr& e, std::span<const Rat> p);

std::string_view member_string(MemberVerdict v);

/// Deterministic candidate points drawn from the structure of e: the
/// origin, primitive centres and nearby offsets, Cantor endpoints and gap
/// points, lattice neighbours. `m` is the boundary dimension n-1.
std::vector<Coords> structural_candidates(const SetExpr& e, std::size_t m);

/// Searches for p with member(e, p) = In among at most `budget` candidates:
/// structural candidates first, then seeded random rationals. A miss is not
/// a proof of emptiness.
std::optional<Coords> find_witness(const SetExpr& e, std::size_t n, std::size_t budget,
                                   std::uint64_t seed);

}  // namespace niemytzki
