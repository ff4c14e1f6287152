#pragma once

// Quoted statements attached to trace steps, so every verdict in a report can
// be checked against the statement it relies on.

#include <string_view>

namespace niemytzki::cite {

// Boundary-set axioms.
inline constexpr std::string_view kBernsteinNotBorel = "neither a G_δ-set nor";
inline constexpr std::string_view kBernsteinNoCompacta = "do not contain uncountable compacta";
inline constexpr std::string_view kBernsteinContinuum = "of the cardinality continuum";
inline constexpr std::string_view kBernsteinComplement = "is also a Bernstein set";
inline constexpr std::string_view kBernsteinMeetsCompacta = "intersect every uncountable compact subspace";
inline constexpr std::string_view kCantor = "homeomorphic to the Cantor set";
inline constexpr std::string_view kCountableDense = "any countable dense subset";

// Characterizations of (X_n, τ(A)).
inline constexpr std::string_view kSecondCountable = "The space (X_n, τ(A)) is second-countable.";
inline constexpr std::string_view kLocallyCompact = "locally compact iff A = L_n";
inline constexpr std::string_view kPerfect = "perfect iff A is a G_δ-set";
inline constexpr std::string_view kParacompact = "The space (X_n, τ(A)) is paracompact.";
inline constexpr std::string_view kNoClosedUncountable = "does not contain a closed uncountable subset";
inline constexpr std::string_view kSigmaCompact = "A is a F_σ-set";
inline constexpr std::string_view kSigmaCompactSecondCountable =
    "σ-compact then (X_n, τ(A)) is second-countable";
inline constexpr std::string_view kCStarEmbedded = "is C*-embedded in";
inline constexpr std::string_view kTychonoff = "The space (X_n, τ_N) is Tychonoff";
inline constexpr std::string_view kSeparable = "is separable and perfect";
inline constexpr std::string_view kFirstCountable = "is first-countable and separable";
inline constexpr std::string_view kCompletelyHausdorff = "completely Hausdorff";
inline constexpr std::string_view kDimension = "dim (X_n, τ(A)) = n";
inline constexpr std::string_view kBoundaryReduction = "perfect (resp. Lindelöf or σ-compact)";
inline constexpr std::string_view kCollectionwiseNormal = "is hereditarily collectionwise normal";
inline constexpr std::string_view kBoundaryDimension = "dim (L_n, τ(A)|L_n) = dim A";
inline constexpr std::string_view kNiemytzkiNotWeaklyParacompact =
    "neither normal, countably paracompact nor weakly paracompact";

}  // namespace niemytzki::cite
