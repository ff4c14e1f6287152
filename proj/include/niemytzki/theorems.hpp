#pragma once

// Classification of (X_n, τ(A)) and of the boundary subspace (L_n, τ(A)|L_n)
// from the descriptive flags of A. Each verdict is produced by one rule of
// the table below, and the trace records which flags fed it.
//
//   R1  metrizable = second countable = hereditarily Lindelöf  <=>  |L_n \ A| <= ℵ0
//   R2  locally compact                                         <=>  A = L_n
//   R3  perfect                                                 <=>  A is G_δ
//   R4  Lindelöf = normal = paracompact = countably paracompact
//                               <=>  L_n \ A has no closed uncountable subset
//   R5  σ-compact                    <=>  A is F_σ and |L_n \ A| <= ℵ0
//   R6  L_n z-embedded = L_n C*-embedded = normal
//   R7  separable, first countable, Tychonoff, completely Hausdorff: always
//   R8  dim X = n whenever the space is normal

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "niemytzki/desc_classes.hpp"
#include "niemytzki/set_expr.hpp"
#include "niemytzki/tribool.hpp"

namespace niemytzki {

struct TraceStep {
  std::string property;
  std::string rule;
  std::string citation;
  std::vector<std::string> inputs;
  std::string verdict;
};

struct PropertyVerdict {
  std::string name;
  Verdict value = Verdict::Unknown;
};

struct PropertyReport {
  std::string space;  // printed boundary-set expression
  std::size_t dimension = 0;
  std::vector<PropertyVerdict> properties;
  std::optional<long> dim_x;  // unknown when empty
  std::vector<PropertyVerdict> boundary;
  std::optional<long> boundary_dim;
  std::vector<TraceStep> trace;
  DescClass set_classes;         // flags of A
  DescClass complement_classes;  // flags of L_n \ A

  /// Verdict by name. Boundary-block entries use the "boundary." prefix.
  Verdict get(std::string_view name) const;
};

/// Names accepted by PropertyReport::get and explain, in report order.
const std::vector<std::string>& property_names();

PropertyReport classify(const SetExpr& a, std::size_t n, const InferOptions& opts = {});

/// Trace steps that produced `property` (a name from property_names(), or
/// "dim_X" / "boundary.dim"). Throws std::invalid_argument for other names.
std::vector<TraceStep> explain(const PropertyReport& report, std::string_view property);

/// Checks the equivalence-class and implication invariants; returns the
/// first violation or an empty string.
std::string check_report_invariants(const PropertyReport& report);

}  // namespace niemytzki
