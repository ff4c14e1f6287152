#include "niemytzki/desc_classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "niemytzki/citations.hpp"
#include "niemytzki/errors.hpp"
#include "niemytzki/sampling.hpp"

namespace niemytzki {

std::string_view flag_name(ClassFlag f) {
  switch (f) {
    case ClassFlag::Countable: return "countable";
    case ClassFlag::CoCountable: return "co_countable";
    case ClassFlag::Closed: return "closed";
    case ClassFlag::Open: return "open";
    case ClassFlag::GDelta: return "g_delta";
    case ClassFlag::FSigma: return "f_sigma";
    case ClassFlag::Compact: return "compact";
    case ClassFlag::Bounded: return "bounded";
    case ClassFlag::ContainsClosedUncountable: return "contains_closed_uncountable";
    case ClassFlag::EqualsAll: return "equals_all";
    case ClassFlag::EqualsEmpty: return "equals_empty";
  }
  return "?";
}

bool DescClass::set(ClassFlag f, Verdict v, Justification j) {
  if (v == Verdict::Unknown) return false;
  Verdict& slot = values_[index(f)];
  if (slot == v) return false;
  if (slot != Verdict::Unknown) {
    throw std::logic_error("contradictory class flag '" + std::string(flag_name(f)) + "': rule " +
                           j.rule + " disagrees with " + why_[index(f)].rule);
  }
  slot = v;
  why_[index(f)] = std::move(j);
  return true;
}

namespace {

using F = ClassFlag;
constexpr Verdict T = Verdict::True;
constexpr Verdict X = Verdict::False;
constexpr Verdict U = Verdict::Unknown;

Justification std_rule(std::string rule) { return {std::move(rule), ""}; }
Justification cited(std::string rule, std::string_view citation) {
  return {std::move(rule), std::string(citation)};
}

// Row order: countable, co_countable, closed, open, g_delta, f_sigma,
// bounded, contains_closed_uncountable, equals_all, equals_empty.
// compact follows from closed ∧ bounded during closure.
struct AxiomRow {
  Verdict countable, co_countable, closed, open, g_delta, f_sigma, bounded, ccu, all, empty;
};

void apply_row(DescClass& d, const AxiomRow& row, const Justification& j) {
  d.set(F::Countable, row.countable, j);
  d.set(F::CoCountable, row.co_countable, j);
  d.set(F::Closed, row.closed, j);
  d.set(F::Open, row.open, j);
  d.set(F::GDelta, row.g_delta, j);
  d.set(F::FSigma, row.f_sigma, j);
  d.set(F::Bounded, row.bounded, j);
  d.set(F::ContainsClosedUncountable, row.ccu, j);
  d.set(F::EqualsAll, row.all, j);
  d.set(F::EqualsEmpty, row.empty, j);
}

DescClass primitive_axioms(const SetExpr& e) {
  DescClass d;
  switch (e.kind()) {
    case SetKind::Empty:
      apply_row(d, {T, X, T, T, T, T, T, X, X, T}, std_rule("axiom:empty"));
      break;
    case SetKind::All:
      apply_row(d, {X, T, T, T, T, T, X, T, T, X}, std_rule("axiom:all"));
      break;
    case SetKind::Rationals:
      apply_row(d, {T, X, X, X, U, T, X, X, X, X}, cited("axiom:rationals", cite::kCountableDense));
      // A countable dense set is not a G_δ (Baire category theorem).
      d.set(F::GDelta, X, cited("axiom:rationals-baire", cite::kCountableDense));
      break;
    case SetKind::Lattice:
      apply_row(d, {T, X, T, X, T, T, X, X, X, X}, std_rule("axiom:lattice"));
      break;
    case SetKind::Point:
    case SetKind::Finite:
      apply_row(d, {T, X, T, X, T, T, T, X, X, X}, std_rule("axiom:finite"));
      break;
    case SetKind::CBall:
      apply_row(d, {X, X, T, X, T, T, T, T, X, X}, std_rule("axiom:closed-ball"));
      break;
    case SetKind::OBall:
      apply_row(d, {X, X, X, T, T, T, T, T, X, X}, std_rule("axiom:open-ball"));
      break;
    case SetKind::Cantor:
      apply_row(d, {X, X, T, X, T, T, T, T, X, X}, cited("axiom:cantor", cite::kCantor));
      break;
    case SetKind::Bernstein:
      d.set(F::GDelta, X, cited("axiom:bernstein", cite::kBernsteinNotBorel));
      d.set(F::FSigma, X, cited("axiom:bernstein", cite::kBernsteinNotBorel));
      d.set(F::ContainsClosedUncountable, X, cited("axiom:bernstein", cite::kBernsteinNoCompacta));
      d.set(F::Countable, X, cited("axiom:bernstein", cite::kBernsteinContinuum));
      d.set(F::CoCountable, X, cited("axiom:bernstein", cite::kBernsteinContinuum));
      // It meets every closed ball and so is unbounded.
      d.set(F::Bounded, X, cited("axiom:bernstein", cite::kBernsteinMeetsCompacta));
      break;
    default:
      throw std::logic_error("primitive_axioms called on a combinator");
  }
  return d;
}

// Standard implications between the flags, applied until nothing changes.
// Only Unknown slots are ever filled.
void close_rules(DescClass& d) {
  bool changed = true;
  auto set = [&](F f, Verdict v, const char* rule) { changed |= d.set(f, v, std_rule(rule)); };
  while (changed) {
    changed = false;
    if (d.closed() == T) {
      set(F::GDelta, T, "closure:closed-is-g-delta");
      set(F::FSigma, T, "closure:closed-is-f-sigma");
    }
    if (d.open() == T) {
      set(F::GDelta, T, "closure:open-is-g-delta");
      set(F::FSigma, T, "closure:open-is-f-sigma");
    }
    if (d.countable() == T) {
      set(F::FSigma, T, "closure:countable-is-f-sigma");
      set(F::CoCountable, X, "closure:countable-not-co-countable");
      set(F::ContainsClosedUncountable, X, "closure:countable-no-uncountable-subset");
      set(F::EqualsAll, X, "closure:countable-not-all");
    }
    if (d.co_countable() == T) {
      set(F::Countable, X, "closure:co-countable-uncountable");
      set(F::EqualsEmpty, X, "closure:co-countable-nonempty");
      set(F::Bounded, X, "closure:co-countable-unbounded");
      set(F::GDelta, T, "closure:co-countable-is-g-delta");
    }
    if (d.equals_all() == T) {
      set(F::CoCountable, T, "closure:all");
      set(F::Closed, T, "closure:all");
      set(F::Open, T, "closure:all");
      set(F::Bounded, X, "closure:all");
      set(F::ContainsClosedUncountable, T, "closure:all");
      set(F::EqualsEmpty, X, "closure:all");
    }
    if (d.equals_empty() == T) {
      set(F::Countable, T, "closure:empty");
      set(F::Closed, T, "closure:empty");
      set(F::Open, T, "closure:empty");
      set(F::Bounded, T, "closure:empty");
      set(F::EqualsAll, X, "closure:empty");
    }
    if (d.contains_closed_uncountable() == T) {
      set(F::Countable, X, "closure:has-uncountable-subset");
      set(F::EqualsEmpty, X, "closure:has-uncountable-subset");
    }
    if (d.g_delta() == T && d.countable() == X) {
      // Perfect set property: an uncountable G_δ contains a Cantor set.
      changed |= d.set(F::ContainsClosedUncountable, T,
                       cited("closure:perfect-set-property", cite::kCantor));
    }
    if (d.g_delta() == X) {
      set(F::Closed, X, "closure:not-g-delta");
      set(F::Open, X, "closure:not-g-delta");
      set(F::CoCountable, X, "closure:not-g-delta");
    }
    if (d.f_sigma() == X) {
      set(F::Closed, X, "closure:not-f-sigma");
      set(F::Open, X, "closure:not-f-sigma");
      set(F::Countable, X, "closure:not-f-sigma");
    }
    if (d.co_countable() == X) set(F::EqualsAll, X, "closure:not-co-countable");
    if (d.countable() == X) set(F::EqualsEmpty, X, "closure:uncountable-nonempty");
    if (d.bounded() == T) {
      set(F::CoCountable, X, "closure:bounded-not-co-countable");
      set(F::EqualsAll, X, "closure:bounded-not-all");
    }
    // Heine-Borel.
    if (is_known(d.closed() && d.bounded())) set(F::Compact, d.closed() && d.bounded(), "closure:heine-borel");
    if (d.compact() == T) {
      set(F::Closed, T, "closure:heine-borel");
      set(F::Bounded, T, "closure:heine-borel");
    }
    if (d.compact() == X && d.closed() == T) set(F::Bounded, X, "closure:heine-borel");
    if (d.compact() == X && d.bounded() == T) set(F::Closed, X, "closure:heine-borel");
    // R^{n-1} is connected: clopen sets are trivial.
    if (d.closed() == T && d.open() == T) {
      if (d.equals_empty() == X) set(F::EqualsAll, T, "closure:connected");
      if (d.equals_all() == X) set(F::EqualsEmpty, T, "closure:connected");
    }
  }
}

DescClass complement_rules(const SetExpr& child, const DescClass& c) {
  DescClass d;
  auto swap = [&](F to, F from) {
    d.set(to, c.get(from), std_rule("complement-swap"));
  };
  swap(F::Countable, F::CoCountable);
  swap(F::CoCountable, F::Countable);
  swap(F::Closed, F::Open);
  swap(F::Open, F::Closed);
  swap(F::GDelta, F::FSigma);
  swap(F::FSigma, F::GDelta);
  swap(F::EqualsAll, F::EqualsEmpty);
  swap(F::EqualsEmpty, F::EqualsAll);
  if (c.bounded() == T) d.set(F::Bounded, X, std_rule("complement-of-bounded"));
  if (child.kind() == SetKind::Bernstein) {
    const std::string why = std::string(cite::kBernsteinComplement) + "; " + std::string(cite::kBernsteinNoCompacta);
    d.set(F::ContainsClosedUncountable, X, cited("axiom:bernstein-complement", why));
    d.set(F::Bounded, X, cited("axiom:bernstein-complement", cite::kBernsteinComplement));
  }
  return d;
}

template <typename Pred>
bool all_of(const std::vector<DescClass>& cs, Pred p) {
  return std::all_of(cs.begin(), cs.end(), p);
}

template <typename Pred>
bool any_of(const std::vector<DescClass>& cs, Pred p) {
  return std::any_of(cs.begin(), cs.end(), p);
}

DescClass union_rules(const std::vector<DescClass>& cs) {
  DescClass d;
  auto all_true = [&](F f) { return all_of(cs, [f](const DescClass& c) { return c.get(f) == T; }); };
  auto any_true = [&](F f) { return any_of(cs, [f](const DescClass& c) { return c.get(f) == T; }); };
  auto any_false = [&](F f) { return any_of(cs, [f](const DescClass& c) { return c.get(f) == X; }); };

  // Exact: union is countable / empty / bounded iff every part is.
  for (F f : {F::Countable, F::EqualsEmpty, F::Bounded}) {
    if (all_true(f)) d.set(f, T, std_rule("union:all-parts"));
    else if (any_false(f)) d.set(f, X, std_rule("union:some-part"));
  }
  for (F f : {F::Closed, F::Open, F::GDelta, F::FSigma}) {
    if (all_true(f)) d.set(f, T, std_rule("union:finite-union-preserves"));
  }
  for (F f : {F::CoCountable, F::EqualsAll, F::ContainsClosedUncountable}) {
    if (any_true(f)) d.set(f, T, std_rule("union:superset"));
  }
  // S ∪ N with N countable: a closed uncountable C inside it would leave the
  // uncountable G_δ-in-C set C \ N, hence a Cantor set, inside S.
  std::size_t uncountable_parts = 0;
  bool uncountable_part_clean = true;
  for (const auto& c : cs) {
    if (c.countable() != T) {
      ++uncountable_parts;
      uncountable_part_clean = c.contains_closed_uncountable() == X;
    }
  }
  if (uncountable_parts == 1 && uncountable_part_clean) {
    d.set(F::ContainsClosedUncountable, X, cited("union:countable-perturbation", cite::kCantor));
  }
  return d;
}

DescClass inter_rules(const std::vector<DescClass>& cs) {
  DescClass d;
  auto all_true = [&](F f) { return all_of(cs, [f](const DescClass& c) { return c.get(f) == T; }); };
  auto any_true = [&](F f) { return any_of(cs, [f](const DescClass& c) { return c.get(f) == T; }); };
  auto any_false = [&](F f) { return any_of(cs, [f](const DescClass& c) { return c.get(f) == X; }); };

  // Exact: intersection is co-countable / everything iff every part is.
  for (F f : {F::CoCountable, F::EqualsAll}) {
    if (all_true(f)) d.set(f, T, std_rule("inter:all-parts"));
    else if (any_false(f)) d.set(f, X, std_rule("inter:some-part"));
  }
  for (F f : {F::Closed, F::Open, F::GDelta, F::FSigma}) {
    if (all_true(f)) d.set(f, T, std_rule("inter:finite-intersection-preserves"));
  }
  for (F f : {F::Countable, F::EqualsEmpty, F::Bounded}) {
    if (any_true(f)) d.set(f, T, std_rule("inter:subset"));
  }
  if (any_false(F::ContainsClosedUncountable)) {
    d.set(F::ContainsClosedUncountable, X, std_rule("inter:subset"));
  }
  return d;
}

// Some child is the complement of another: S ∪ (L_n \ S) and S ∩ (L_n \ S).
bool has_complementary_pair(const std::vector<SetExpr>& children) {
  for (const auto& c : children) {
    if (c.kind() != SetKind::Complement) continue;
    for (const auto& other : children) {
      if (other == c.children().front()) return true;
    }
  }
  return false;
}

DescClass infer_node(const SetExpr& e, std::size_t n, const InferOptions& opts) {
  DescClass d;
  if (e.is_primitive()) {
    d = primitive_axioms(e);
  } else if (e.kind() == SetKind::Complement) {
    const SetExpr& child = e.children().front();
    d = complement_rules(child, infer_node(child, n, opts));
  } else {
    std::vector<DescClass> cs;
    cs.reserve(e.children().size());
    for (const auto& c : e.children()) cs.push_back(infer_node(c, n, opts));
    d = e.kind() == SetKind::Union ? union_rules(cs) : inter_rules(cs);
    if (has_complementary_pair(e.children())) {
      if (e.kind() == SetKind::Union) d.set(F::EqualsAll, T, std_rule("union:complementary-pair"));
      else d.set(F::EqualsEmpty, T, std_rule("inter:complementary-pair"));
    }
  }
  close_rules(d);
  if (!e.is_primitive() && d.contains_closed_uncountable() == U && opts.ball_budget > 0) {
    if (find_contained_ball(e, n, opts.ball_budget, opts.seed)) {
      d.set(F::ContainsClosedUncountable, T, std_rule("witness:contains-closed-ball"));
      d.set(F::EqualsEmpty, X, std_rule("witness:contains-closed-ball"));
      close_rules(d);
    }
  }
  return d;
}

}  // namespace

DescClass infer(const SetExpr& e, std::size_t n, const InferOptions& opts) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  check_arity(e, n);
  return infer_node(e, n, opts);
}

Verdict contains_closed_uncountable(const SetExpr& e, std::size_t n, const InferOptions& opts) {
  return infer(e, n, opts).contains_closed_uncountable();
}

// ---------------------------------------------------------------------------
// Closed-ball witnesses.

namespace {

// Open middle-third gaps of the Cantor set up to the given depth.
std::vector<std::pair<Rat, Rat>> cantor_gaps(int depth) {
  std::vector<std::pair<Rat, Rat>> gaps;
  std::vector<std::pair<Rat, Rat>> intervals{{Rat(0), Rat(1)}};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::pair<Rat, Rat>> next;
    for (const auto& [lo, hi] : intervals) {
      const Rat third = (hi - lo) / Rat(3);
      gaps.emplace_back(lo + third, hi - third);
      next.emplace_back(lo, lo + third);
      next.emplace_back(hi - third, hi);
    }
    intervals = std::move(next);
  }
  return gaps;
}

const std::vector<std::pair<Rat, Rat>>& cached_gaps() {
  static const auto gaps = cantor_gaps(7);
  return gaps;
}

// The ball meets the line {(t, 0, ..., 0)} in [c0 - w, c0 + w], w^2 = w2.
// Is that interval strictly inside (lo, hi)?
bool chord_inside(const Rat& c0, const Rat& w2, const Rat& lo, const Rat& hi) {
  return c0 > lo && c0 < hi && square(c0 - lo) > w2 && square(hi - c0) > w2;
}

Verdict cantor_disjoint(const ClosedBall& b) {
  Rat h2;
  for (std::size_t i = 1; i < b.center.size(); ++i) h2 += square(b.center[i]);
  const Rat r2 = square(b.radius);
  if (h2 > r2) return T;
  const Rat w2 = r2 - h2;
  const Rat& c0 = b.center.front();
  if (c0.sign() < 0 && square(c0) > w2) return T;
  if (c0 > Rat(1) && square(c0 - Rat(1)) > w2) return T;
  for (const auto& [lo, hi] : cached_gaps()) {
    if (chord_inside(c0, w2, lo, hi)) return T;
  }
  for (const auto& [lo, hi] : cached_gaps()) {
    if (square(lo - c0) <= w2 || square(hi - c0) <= w2) return X;
  }
  if (square(c0) <= w2 || square(Rat(1) - c0) <= w2) return X;
  return U;
}

Verdict lattice_disjoint(const ClosedBall& b) {
  // Enumerate the integer points of the bounding box when it is small.
  std::vector<std::pair<long, long>> ranges;
  double count = 1;
  for (const auto& c : b.center) {
    const mpz_class lo_z = -floor(b.radius - c);  // ceil(c - r)
    const mpz_class hi_z = floor(c + b.radius);
    if (!lo_z.fits_slong_p() || !hi_z.fits_slong_p()) return U;
    ranges.emplace_back(lo_z.get_si(), hi_z.get_si());
    count *= static_cast<double>(hi_z.get_si() - lo_z.get_si() + 1);
    if (count > 4096) return U;
  }
  std::vector<long> idx;
  for (const auto& r : ranges) {
    if (r.first > r.second) return T;
    idx.push_back(r.first);
  }
  const Rat r2 = square(b.radius);
  for (;;) {
    Coords p;
    for (long v : idx) p.emplace_back(v);
    if (sq_dist(p, b.center) <= r2) return X;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] > ranges[k].second) {
      idx[k] = ranges[k].first;
      ++k;
    }
    if (k == idx.size()) return T;
  }
}

}  // namespace

Verdict ball_inside(const SetExpr& e, const ClosedBall& b) {
  switch (e.kind()) {
    case SetKind::Empty: return X;
    case SetKind::All: return T;
    // Countable sets, the nowhere dense Cantor set, and Bernstein sets (no
    // uncountable compacta) contain no ball of positive radius.
    case SetKind::Rationals:
    case SetKind::Lattice:
    case SetKind::Point:
    case SetKind::Finite:
    case SetKind::Cantor:
    case SetKind::Bernstein:
      return X;
    case SetKind::CBall: {
      const Rat& R = e.radius();
      if (b.radius > R) return X;
      return from_bool(sq_dist(b.center, e.points().front()) <= square(R - b.radius));
    }
    case SetKind::OBall: {
      const Rat& R = e.radius();
      if (!(b.radius < R)) return X;
      return from_bool(sq_dist(b.center, e.points().front()) < square(R - b.radius));
    }
    case SetKind::Complement: return ball_disjoint(e.children().front(), b);
    case SetKind::Union:
      for (const auto& c : e.children()) {
        if (ball_inside(c, b) == T) return T;
      }
      return U;
    case SetKind::Inter: {
      Verdict acc = T;
      for (const auto& c : e.children()) acc = acc && ball_inside(c, b);
      return acc;
    }
  }
  return U;
}

Verdict ball_disjoint(const SetExpr& e, const ClosedBall& b) {
  switch (e.kind()) {
    case SetKind::Empty: return T;
    case SetKind::All: return X;
    case SetKind::Rationals: return X;  // dense
    case SetKind::Bernstein: return X;  // meets every uncountable compact set
    case SetKind::Lattice: return lattice_disjoint(b);
    case SetKind::Point:
    case SetKind::Finite: {
      const Rat r2 = square(b.radius);
      for (const auto& p : e.points()) {
        if (sq_dist(p, b.center) <= r2) return X;
      }
      return T;
    }
    case SetKind::CBall:
      return from_bool(sq_dist(b.center, e.points().front()) > square(b.radius + e.radius()));
    case SetKind::OBall:
      return from_bool(sq_dist(b.center, e.points().front()) >= square(b.radius + e.radius()));
    case SetKind::Cantor: return cantor_disjoint(b);
    case SetKind::Complement: return ball_inside(e.children().front(), b);
    case SetKind::Union: {
      Verdict acc = T;
      for (const auto& c : e.children()) acc = acc && ball_disjoint(c, b);
      return acc;
    }
    case SetKind::Inter:
      for (const auto& c : e.children()) {
        if (ball_disjoint(c, b) == T) return T;
      }
      return U;
  }
  return U;
}

namespace {

void collect_radii(const SetExpr& e, std::vector<Rat>& out) {
  if (e.kind() == SetKind::CBall || e.kind() == SetKind::OBall) {
    out.push_back(e.radius() / Rat(2));
    out.push_back(e.radius() / Rat(8));
  }
  for (const auto& c : e.children()) collect_radii(c, out);
}

}  // namespace

std::optional<ClosedBall> find_contained_ball(const SetExpr& e, std::size_t n,
                                              std::size_t budget, std::uint64_t seed) {
  const std::size_t m = n - 1;
  std::vector<Rat> radii;
  collect_radii(e, radii);
  for (const Rat& r : {Rat(1), Rat(1, 4), Rat(1, 16), Rat(1, 64)}) radii.push_back(r);

  std::size_t tried = 0;
  auto attempt = [&](const Coords& c, const Rat& r) -> std::optional<ClosedBall> {
    ++tried;
    ClosedBall b{c, r};
    if (ball_inside(e, b) == T) return b;
    return std::nullopt;
  };
  for (const auto& c : structural_candidates(e, m)) {
    for (const auto& r : radii) {
      if (tried >= budget) return std::nullopt;
      if (auto b = attempt(c, r)) return b;
    }
  }
  RationalSampler sampler(seed, 64);
  while (tried < budget) {
    Coords c(m);
    for (auto& x : c) x = sampler.closed(Rat(-4), Rat(4));
    for (const auto& r : {Rat(1, 4), Rat(1, 64)}) {
      if (auto b = attempt(c, r)) return b;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Inclusion and topology order.

namespace {

bool point_in(const SetExpr& e, const Coords& p) { return member(e, p) == T; }

// [0,1] × {0} is covered by the union of the given balls, shown by a chain of
// dyadic segments each lying in one ball (balls are convex, so a segment is
// inside when both ends are).
bool segment_covered(const std::vector<SetExpr>& balls, std::size_t m) {
  auto at = [m](const Rat& t) {
    Coords c(m);
    c[0] = t;
    return c;
  };
  Rat s(0);
  for (int guard = 0; guard < 4096; ++guard) {
    Rat best = s;
    for (const auto& b : balls) {
      if (!point_in(b, at(s))) continue;
      // Largest dyadic step h = 2^-k (k <= 24) with s + h still in the ball.
      Rat h(1);
      for (int k = 0; k <= 24; ++k, h /= Rat(2)) {
        const Rat t = min(s + h, Rat(1));
        if (point_in(b, at(t))) {
          best = max(best, t);
          break;
        }
      }
    }
    if (best == Rat(1)) return true;
    if (best == s) return false;
    s = best;
  }
  return false;
}

Verdict structural_subset(const SetExpr& a, const SetExpr& b, std::size_t m, std::string& rule) {
  if (a == b) { rule = "subset:identical"; return T; }
  if (a.kind() == SetKind::Empty) { rule = "subset:empty"; return T; }
  if (b.kind() == SetKind::All) { rule = "subset:all"; return T; }
  if (a.kind() == SetKind::Point || a.kind() == SetKind::Finite) {
    const bool inside = std::all_of(a.points().begin(), a.points().end(),
                                    [&](const Coords& p) { return point_in(b, p); });
    if (inside) { rule = "subset:finite-members"; return T; }
  }
  if (b.kind() == SetKind::Rationals &&
      (a.kind() == SetKind::Lattice || a.kind() == SetKind::Rationals)) {
    rule = "subset:rational-points";
    return T;
  }
  if (a.kind() == SetKind::Cantor) {
    std::vector<SetExpr> balls;
    if (b.kind() == SetKind::CBall || b.kind() == SetKind::OBall) balls.push_back(b);
    if (b.kind() == SetKind::Union) {
      for (const auto& c : b.children()) {
        if (c.kind() == SetKind::CBall || c.kind() == SetKind::OBall) balls.push_back(c);
      }
    }
    if (!balls.empty() && segment_covered(balls, m)) { rule = "subset:cantor-interval"; return T; }
  }
  if (a.kind() == SetKind::Complement && b.kind() == SetKind::Complement) {
    if (structural_subset(b.children().front(), a.children().front(), m, rule) == T) {
      rule = "subset:contrapositive(" + rule + ")";
      return T;
    }
  }
  if (a.kind() == SetKind::Union) {
    std::string sub;
    const bool every = std::all_of(a.children().begin(), a.children().end(), [&](const SetExpr& c) {
      return structural_subset(c, b, m, sub) == T;
    });
    if (every) { rule = "subset:union-of-subsets"; return T; }
  }
  if (a.kind() == SetKind::Inter) {
    for (const auto& c : a.children()) {
      if (structural_subset(c, b, m, rule) == T) { rule = "subset:intersection-part(" + rule + ")"; return T; }
    }
  }
  if (b.kind() == SetKind::Union) {
    for (const auto& c : b.children()) {
      if (structural_subset(a, c, m, rule) == T) { rule = "subset:union-part(" + rule + ")"; return T; }
    }
  }
  if (b.kind() == SetKind::Inter) {
    std::string sub;
    const bool every = std::all_of(b.children().begin(), b.children().end(), [&](const SetExpr& c) {
      return structural_subset(a, c, m, sub) == T;
    });
    if (every) { rule = "subset:into-each-part"; return T; }
  }
  return U;
}

}  // namespace

SubsetResult subset(const SetExpr& e1, const SetExpr& e2, std::size_t n, std::size_t budget,
                    std::uint64_t seed) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  check_arity(e1, n);
  check_arity(e2, n);
  SubsetResult out;
  if (structural_subset(e1, e2, n - 1, out.rule) == T) {
    out.verdict = T;
    return out;
  }
  out.rule.clear();
  const SetExpr difference = SetExpr::inter({e1, SetExpr::complement(e2)});
  if (auto w = find_witness(difference, n, budget, seed)) {
    out.verdict = X;
    out.rule = "subset:witness";
    out.witness = std::move(w);
  }
  return out;
}

std::string_view to_string(TopologyOrder o) {
  switch (o) {
    case TopologyOrder::Finer: return "finer";
    case TopologyOrder::Coarser: return "coarser";
    case TopologyOrder::Equal: return "equal";
    case TopologyOrder::Incomparable: return "incomparable";
    default: return "unknown";
  }
}

Comparison compare_topologies(const SetExpr& a, const SetExpr& b, std::size_t n,
                              std::size_t budget, std::uint64_t seed) {
  Comparison c;
  c.a_in_b = subset(a, b, n, budget, seed);
  c.b_in_a = subset(b, a, n, budget, seed);
  const Verdict ab = c.a_in_b.verdict;
  const Verdict ba = c.b_in_a.verdict;
  if (ab == T && ba == T) {
    c.order = TopologyOrder::Equal;
  } else if (ab == T) {
    c.order = TopologyOrder::Finer;
    c.strict = ba == X;
  } else if (ba == T) {
    c.order = TopologyOrder::Coarser;
    c.strict = ab == X;
  } else if (ab == X && ba == X) {
    c.order = TopologyOrder::Incomparable;
  }
  return c;
}

}  // namespace niemytzki
