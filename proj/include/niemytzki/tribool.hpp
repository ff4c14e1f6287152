#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace niemytzki {

/// Kleene three-valued truth value. Unknown is always a sound answer.
enum class Verdict : std::uint8_t { False, True, Unknown };

constexpr Verdict from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

constexpr bool is_known(Verdict v) { return v != Verdict::Unknown; }

constexpr Verdict operator!(Verdict v) {
  switch (v) {
    case Verdict::True: return Verdict::False;
    case Verdict::False: return Verdict::True;
    default: return Verdict::Unknown;
  }
}

constexpr Verdict operator&&(Verdict a, Verdict b) {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::True && b == Verdict::True) return Verdict::True;
  return Verdict::Unknown;
}

constexpr Verdict operator||(Verdict a, Verdict b) {
  if (a == Verdict::True || b == Verdict::True) return Verdict::True;
  if (a == Verdict::False && b == Verdict::False) return Verdict::False;
  return Verdict::Unknown;
}

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
  }
}

constexpr std::optional<Verdict> verdict_from_string(std::string_view s) {
  if (s == "true") return Verdict::True;
  if (s == "false") return Verdict::False;
  if (s == "unknown") return Verdict::Unknown;
  return std::nullopt;
}

/// Membership answers use the same lattice: In = True, Out = False.
using MemberVerdict = Verdict;

}  // namespace niemytzki
