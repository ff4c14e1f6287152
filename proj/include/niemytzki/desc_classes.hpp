#pragma once

// Sound three-valued inference of descriptive-set flags for A ⊆ L_n ≅ R^{n-1}.
//
// Every True/False produced here is backed by a primitive axiom, a
// combinator rule, or one of the closure rules below; anything else stays
// Unknown. Each flag remembers the rule (and, where one exists, the quoted
// statement) that fixed it, so reports can trace their inputs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "niemytzki/set_expr.hpp"
#include "niemytzki/tribool.hpp"

namespace niemytzki {

enum class ClassFlag : std::uint8_t {
  Countable,
  CoCountable,
  Closed,
  Open,
  GDelta,
  FSigma,
  Compact,
  Bounded,
  ContainsClosedUncountable,
  EqualsAll,
  EqualsEmpty,
};

inline constexpr std::array kClassFlags = {
    ClassFlag::Countable, ClassFlag::CoCountable, ClassFlag::Closed,
    ClassFlag::Open,      ClassFlag::GDelta,      ClassFlag::FSigma,
    ClassFlag::Compact,   ClassFlag::Bounded,     ClassFlag::ContainsClosedUncountable,
    ClassFlag::EqualsAll, ClassFlag::EqualsEmpty,
};

std::string_view flag_name(ClassFlag f);

struct Justification {
  std::string rule;
  std::string citation;  // empty for standard facts
};

class DescClass {
 public:
  Verdict get(ClassFlag f) const { return values_[index(f)]; }
  const Justification& why(ClassFlag f) const { return why_[index(f)]; }

  /// Fixes an Unknown flag. Returns true if the flag changed; setting a known
  /// flag to the opposite value is a soundness bug and throws std::logic_error.
  bool set(ClassFlag f, Verdict v, Justification j);

  Verdict countable() const { return get(ClassFlag::Countable); }
  Verdict co_countable() const { return get(ClassFlag::CoCountable); }
  Verdict closed() const { return get(ClassFlag::Closed); }
  Verdict open() const { return get(ClassFlag::Open); }
  Verdict g_delta() const { return get(ClassFlag::GDelta); }
  Verdict f_sigma() const { return get(ClassFlag::FSigma); }
  Verdict compact() const { return get(ClassFlag::Compact); }
  Verdict bounded() const { return get(ClassFlag::Bounded); }
  Verdict contains_closed_uncountable() const { return get(ClassFlag::ContainsClosedUncountable); }
  Verdict equals_all() const { return get(ClassFlag::EqualsAll); }
  Verdict equals_empty() const { return get(ClassFlag::EqualsEmpty); }

  friend bool operator==(const DescClass& a, const DescClass& b) { return a.values_ == b.values_; }

 private:
  static constexpr std::size_t index(ClassFlag f) { return static_cast<std::size_t>(f); }

  std::array<Verdict, kClassFlags.size()> values_{
      Verdict::Unknown, Verdict::Unknown, Verdict::Unknown, Verdict::Unknown,
      Verdict::Unknown, Verdict::Unknown, Verdict::Unknown, Verdict::Unknown,
      Verdict::Unknown, Verdict::Unknown, Verdict::Unknown};
  std::array<Justification, kClassFlags.size()> why_{};
};

struct InferOptions {
  std::size_t ball_budget = 1000;  // candidate (centre, radius) pairs per node
  std::uint64_t seed = 42;
};

/// Flags of e viewed as a subset of R^{n-1}.
DescClass infer(const SetExpr& e, std::size_t n, const InferOptions& opts = {});

Verdict contains_closed_uncountable(const SetExpr& e, std::size_t n, const InferOptions& opts = {});

/// Closed ball of L_n used as a witness that a set has interior.
struct ClosedBall {
  Coords center;
  Rat radius;
};

/// Exact or conservative test: is the closed ball inside e / disjoint from e?
Verdict ball_inside(const SetExpr& e, const ClosedBall& b);
Verdict ball_disjoint(const SetExpr& e, const ClosedBall& b);

/// Deterministic search for a closed ball contained in e.
std::optional<ClosedBall> find_contained_ball(const SetExpr& e, std::size_t n,
                                              std::size_t budget, std::uint64_t seed);

struct SubsetResult {
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::optional<Coords> witness;  // a point of e1 \ e2 when verdict is False
};

/// e1 ⊆ e2: True by structural rules, False by a witness of e1 \ e2.
SubsetResult subset(const SetExpr& e1, const SetExpr& e2, std::size_t n,
                    std::size_t budget = 1000, std::uint64_t seed = 42);

enum class TopologyOrder : std::uint8_t { Finer, Coarser, Equal, Incomparable, Unknown };

std::string_view to_string(TopologyOrder o);

struct Comparison {
  TopologyOrder order = TopologyOrder::Unknown;
  /// For Finer/Coarser: the reverse inclusion of the boundary sets is refuted,
  /// so the topologies differ.
  bool strict = false;
  SubsetResult a_in_b;
  SubsetResult b_in_a;
};

/// Orders τ(A) against τ(B), using A ⊆ B iff τ(A) ⊇ τ(B). Finer means
/// τ(A) ⊇ τ(B).
Comparison compare_topologies(const SetExpr& a, const SetExpr& b, std::size_t n,
                              std::size_t budget = 1000, std::uint64_t seed = 42);

}  // namespace niemytzki
