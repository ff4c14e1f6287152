#include "niemytzki/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "niemytzki/citations.hpp"
#include "niemytzki/errors.hpp"

namespace niemytzki {

namespace {

constexpr std::string_view kBoundaryPrefix = "boundary.";

std::string join(std::string_view a, std::string_view b) {
  if (a.ends_with('.')) a.remove_suffix(1);
  return std::string(a) + "; " + std::string(b);
}

std::string dim_string(const std::optional<long>& d) {
  return d ? std::to_string(*d) : std::string("unknown");
}

struct Input {
  std::string label;  // e.g. "g_delta(A)"
  const DescClass* classes;
  ClassFlag flag;

  Verdict value() const { return classes->get(flag); }
  std::string with_value() const { return label + "=" + std::string(to_string(value())); }
};

class ReportBuilder {
 public:
  explicit ReportBuilder(PropertyReport& r) : r_(r) {}

  void property(std::string name, Verdict v, std::string rule, std::string citation,
                const std::vector<Input>& inputs, bool boundary = false) {
    const std::string key = boundary ? std::string(kBoundaryPrefix) + name : name;
    std::vector<std::string> labels;
    for (const auto& in : inputs) {
      const Justification& why = in.classes->why(in.flag);
      r_.trace.push_back({key, why.rule.empty() ? "unresolved" : why.rule, why.citation,
                          {in.label}, std::string(to_string(in.value()))});
      labels.push_back(in.with_value());
    }
    r_.trace.push_back({key, std::move(rule), std::move(citation), std::move(labels),
                        std::string(to_string(v))});
    (boundary ? r_.boundary : r_.properties).push_back({std::move(name), v});
  }

 private:
  PropertyReport& r_;
};

std::optional<long> boundary_dimension(const SetExpr& a, std::size_t n) {
  const long top = static_cast<long>(n) - 1;
  switch (a.kind()) {
    case SetKind::Empty: return -1;
    case SetKind::Point:
    case SetKind::Finite:
    case SetKind::Lattice:
    case SetKind::Rationals:
    case SetKind::Cantor:
      return 0;
    case SetKind::CBall:
    case SetKind::OBall:
    case SetKind::All:
      return top;
    default:
      return std::nullopt;
  }
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "separable",
      "first_countable",
      "tychonoff",
      "completely_hausdorff",
      "metrizable",
      "second_countable",
      "hereditarily_lindelof",
      "locally_compact",
      "perfect",
      "lindelof",
      "normal",
      "paracompact",
      "countably_paracompact",
      "sigma_compact",
      "L_n_z_embedded",
      "L_n_Cstar_embedded",
      "weakly_paracompact",
      "boundary.hered_collectionwise_normal",
      "boundary.perfect",
      "boundary.lindelof",
      "boundary.sigma_compact",
  };
  return names;
}

Verdict PropertyReport::get(std::string_view name) const {
  const auto& list = name.substr(0, kBoundaryPrefix.size()) == kBoundaryPrefix ? boundary : properties;
  if (&list == &boundary) name.remove_prefix(kBoundaryPrefix.size());
  for (const auto& p : list) {
    if (p.name == name) return p.value;
  }
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

PropertyReport classify(const SetExpr& a, std::size_t n, const InferOptions& opts) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  PropertyReport r;
  r.space = a.str();
  r.dimension = n;
  r.set_classes = infer(a, n, opts);
  r.complement_classes = infer(SetExpr::complement(a), n, opts);
  const DescClass& A = r.set_classes;
  const DescClass& C = r.complement_classes;
  ReportBuilder b(r);

  const Input co_countable{"co_countable(A)", &A, ClassFlag::CoCountable};
  const Input equals_all{"equals_all(A)", &A, ClassFlag::EqualsAll};
  const Input equals_empty{"equals_empty(A)", &A, ClassFlag::EqualsEmpty};
  const Input g_delta{"g_delta(A)", &A, ClassFlag::GDelta};
  const Input f_sigma{"f_sigma(A)", &A, ClassFlag::FSigma};
  const Input ccu_complement{"contains_closed_uncountable(L_n \\ A)", &C,
                             ClassFlag::ContainsClosedUncountable};

  b.property("separable", Verdict::True, "R7", join(cite::kSeparable, cite::kFirstCountable), {});
  b.property("first_countable", Verdict::True, "R7", std::string(cite::kFirstCountable), {});
  b.property("tychonoff", Verdict::True, "R7", std::string(cite::kTychonoff), {});
  b.property("completely_hausdorff", Verdict::True, "R7", std::string(cite::kCompletelyHausdorff), {});

  const Verdict metrizable = A.co_countable();
  for (const char* name : {"metrizable", "second_countable", "hereditarily_lindelof"}) {
    b.property(name, metrizable, "R1", std::string(cite::kSecondCountable), {co_countable});
  }

  b.property("locally_compact", A.equals_all(), "R2", std::string(cite::kLocallyCompact), {equals_all});
  b.property("perfect", A.g_delta(), "R3", std::string(cite::kPerfect), {g_delta});

  const Verdict lindelof = !C.contains_closed_uncountable();
  const std::string r4 = join(cite::kParacompact, cite::kNoClosedUncountable);
  for (const char* name : {"lindelof", "normal", "paracompact", "countably_paracompact"}) {
    b.property(name, lindelof, "R4", r4, {ccu_complement});
  }

  const Verdict sigma_compact = A.f_sigma() && A.co_countable();
  b.property("sigma_compact", sigma_compact, "R5", join(cite::kSigmaCompact, cite::kSigmaCompactSecondCountable),
             {f_sigma, co_countable});

  for (const char* name : {"L_n_z_embedded", "L_n_Cstar_embedded"}) {
    b.property(name, lindelof, "R6", join(cite::kCStarEmbedded, cite::kParacompact), {ccu_complement});
  }

  // Only the Niemytzki case A = ∅ is settled.
  b.property("weakly_paracompact", A.equals_empty() == Verdict::True ? Verdict::False : Verdict::Unknown,
             "weakly-paracompact:niemytzki-only", std::string(cite::kNiemytzkiNotWeaklyParacompact),
             {equals_empty});

  r.dim_x = lindelof == Verdict::True ? std::optional<long>(static_cast<long>(n)) : std::nullopt;
  r.trace.push_back({"dim_X", "R8", std::string(cite::kDimension), {"normal=" + std::string(to_string(lindelof))},
                     dim_string(r.dim_x)});

  b.property("hered_collectionwise_normal", Verdict::True, "boundary:collectionwise-normal",
             std::string(cite::kCollectionwiseNormal), {}, true);
  b.property("perfect", A.g_delta(), "boundary:R3", join(cite::kBoundaryReduction, cite::kPerfect),
             {g_delta}, true);
  b.property("lindelof", lindelof, "boundary:R4", join(cite::kBoundaryReduction, cite::kNoClosedUncountable),
             {ccu_complement}, true);
  b.property("sigma_compact", sigma_compact, "boundary:R5", join(cite::kBoundaryReduction, cite::kSigmaCompact),
             {f_sigma, co_countable}, true);

  r.boundary_dim = boundary_dimension(a, n);
  r.trace.push_back({"boundary.dim", "boundary:dimension", std::string(cite::kBoundaryDimension),
                     {"primitive=" + std::string(a.is_primitive() ? "yes" : "no")}, dim_string(r.boundary_dim)});

  if (const std::string violation = check_report_invariants(r); !violation.empty()) {
    throw std::logic_error("inconsistent report for " + r.space + ": " + violation);
  }
  return r;
}

std::vector<TraceStep> explain(const PropertyReport& report, std::string_view property) {
  const auto& names = property_names();
  const bool known = std::find(names.begin(), names.end(), property) != names.end() ||
                     property == "dim_X" || property == "boundary.dim";
  if (!known) throw std::invalid_argument("unknown property '" + std::string(property) + "'");
  std::vector<TraceStep> out;
  for (const auto& step : report.trace) {
    if (step.property == property) out.push_back(step);
  }
  return out;
}

std::string check_report_invariants(const PropertyReport& r) {
  auto same = [&](std::initializer_list<const char*> group) -> std::string {
    const Verdict first = r.get(*group.begin());
    for (const char* name : group) {
      if (r.get(name) != first) return std::string("verdicts differ within the group of ") + *group.begin();
    }
    return "";
  };
  for (auto group : {std::initializer_list<const char*>{"lindelof", "normal", "paracompact", "countably_paracompact"},
                     std::initializer_list<const char*>{"metrizable", "second_countable", "hereditarily_lindelof"},
                     std::initializer_list<const char*>{"L_n_z_embedded", "L_n_Cstar_embedded", "normal"}}) {
    if (auto v = same(group); !v.empty()) return v;
  }
  auto implies = [&](const char* lhs, const char* rhs) -> std::string {
    if (r.get(lhs) == Verdict::True && r.get(rhs) == Verdict::False) {
      return std::string(lhs) + " holds but " + rhs + " fails";
    }
    return "";
  };
  for (auto [lhs, rhs] : {std::pair{"sigma_compact", "second_countable"}, std::pair{"second_countable", "lindelof"},
                          std::pair{"locally_compact", "metrizable"}, std::pair{"sigma_compact", "perfect"},
                          std::pair{"sigma_compact", "lindelof"}}) {
    if (auto v = implies(lhs, rhs); !v.empty()) return v;
  }
  for (const auto& p : r.properties) {
    if (p.value == Verdict::Unknown) continue;
    const bool traced = std::any_of(r.trace.begin(), r.trace.end(), [&](const TraceStep& s) {
      return s.property == p.name && s.verdict == to_string(p.value);
    });
    if (!traced) return "no trace step for " + p.name;
  }
  return "";
}

}  // namespace niemytzki
