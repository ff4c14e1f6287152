#pragma once

// Seeded exact-arithmetic property suites.
//
//   S1 boundary-identity   sphere points lie on Bd B̃(a, ε) and nowhere else
//   S2 decomposition       interior points of B(a(ε), ε) sit on exactly one level
//   S3 level-uniqueness    the level equation has the single root t_level
//   S4 sublevel            f(x) < s  <=>  x ∈ B̃(a, sε), and the level duality
//   S5 discreteness        tangent-circle certificates on 100-term prefixes
//   S6 refinement          refine() witnesses lie inside both containers
//   S7 three-valued        Kleene laws of member() and parse/print round trips

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "niemytzki/json_io.hpp"
#include "niemytzki/sampling.hpp"
#include "niemytzki/set_expr.hpp"

namespace niemytzki {

struct SuiteConfig {
  std::string suite;
  std::optional<std::size_t> samples;  // per-suite default when empty
  std::uint64_t seed = 42;
  std::size_t dimension = 2;
  Rat coord_bound = Rat(4);  // anchors in [-bound, bound]^{n-1}
  Rat max_radius = Rat(4);   // ε in (0, max_radius]
  long max_den = 10000;
};

struct SuiteFailure {
  std::size_t index;
  std::string reason;
  Json input;
};

struct SuiteResult {
  std::string suite;
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;  // sorted by sample index
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Canonical suite id ("S1".."S7") for an id or long name; nullopt if unknown.
std::optional<std::string> canonical_suite(std::string_view name);
const std::vector<std::string>& suite_names();
std::size_t default_samples(std::string_view suite);

/// A point-level sample for the geometric suites S1-S4.
struct Sample {
  std::size_t index = 0;
  Point anchor;  // on L_n
  Rat eps;
  Point x;
  Rat s;   // level parameter in (0, 1]
  Rat s2;  // second parameter (suite specific)
};

/// Deterministic samples for S1-S4. Sphere samples (S1) come from the
/// rational parameterization u ↦ a + (2εu, 2ε)/(|u|^2 + 1); interior samples
/// are rejection-sampled. Throws DomainError if rejection exhausts its budget.
std::vector<Sample> generate_samples(const SuiteConfig& cfg);

/// Random normalized expression of depth <= max_depth for dimension n.
SetExpr random_set_expr(RationalSampler& rng, std::size_t n, int max_depth);

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const SuiteConfig& cfg);

/// {"suite", "dimension", "seed", "samples", "checks", "passed", "failures"}.
/// Elapsed time is left out so repeated runs serialize identically.
Json to_json(const SuiteResult& r);

}  // namespace niemytzki
