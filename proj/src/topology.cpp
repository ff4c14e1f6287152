#include "niemytzki/topology.hpp"

#include <cctype>
#include <type_traits>

#include "niemytzki/desc_classes.hpp"
#include "niemytzki/errors.hpp"

namespace niemytzki {

TopologySpec TopologySpec::euclidean(std::size_t n) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  return {n, TopologyKind::Euclidean, std::nullopt};
}

TopologySpec TopologySpec::niemytzki(std::size_t n) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  return {n, TopologyKind::Niemytzki, std::nullopt};
}

TopologySpec TopologySpec::modified(std::size_t n, SetExpr a) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  check_arity(a, n);
  if (a.kind() == SetKind::All) return euclidean(n);
  if (a.kind() == SetKind::Empty) return niemytzki(n);
  const DescClass d = infer(a, n);
  if (d.equals_all() == Verdict::True) return euclidean(n);
  if (d.equals_empty() == Verdict::True) return niemytzki(n);
  return {n, TopologyKind::Modified, std::move(a)};
}

MemberVerdict TopologySpec::euclidean_at(const Point& p) const {
  switch (kind_) {
    case TopologyKind::Euclidean: return Verdict::True;
    case TopologyKind::Niemytzki: return Verdict::False;
    case TopologyKind::Modified: return member(*a_, p.horizontal());
  }
  return Verdict::Unknown;
}

std::string TopologySpec::str() const {
  switch (kind_) {
    case TopologyKind::Euclidean: return "euclidean";
    case TopologyKind::Niemytzki: return "niemytzki";
    case TopologyKind::Modified: return "modified(" + a_->str() + ")";
  }
  return "?";
}

InteriorBall::InteriorBall(Point c, Rat r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.sign() <= 0) throw DomainError("interior ball radius must be positive");
  if (!(radius < center.height())) throw DomainError("interior ball must satisfy radius < centre height");
}

HalfBall::HalfBall(Point c, Rat r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.sign() <= 0) throw DomainError("half-ball radius must be positive");
  if (!center.on_hyperplane()) throw DomainError("half-ball centre must lie on L_n");
}

TangentBall::TangentBall(Point c, Rat r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.sign() <= 0) throw DomainError("tangent-ball radius must be positive");
  if (!center.on_hyperplane()) throw DomainError("tangent-ball centre must lie on L_n");
}

std::string_view kind_name(const BasicOpen& b) {
  switch (b.index()) {
    case 0: return "interior-ball";
    case 1: return "half-ball";
    default: return "tangent-ball";
  }
}

const Point& center_of(const BasicOpen& b) {
  return std::visit([](const auto& v) -> const Point& { return v.center; }, b);
}

const Rat& radius_of(const BasicOpen& b) {
  return std::visit([](const auto& v) -> const Rat& { return v.radius; }, b);
}

BasicOpen local_base_element(const TopologySpec& topo, const Point& p, const Rat& eps) {
  if (p.dimension() != topo.dimension()) throw DimensionError("point dimension does not match topology");
  if (eps.sign() <= 0) throw DomainError("neighbourhood radius must be positive");
  if (p.interior()) return InteriorBall(p, min(eps, p.height() / Rat(2)));
  switch (topo.euclidean_at(p)) {
    case Verdict::True: return HalfBall(p, eps);
    case Verdict::False: return TangentBall(p, eps);
    default:
      throw UndecidableMembership("membership of the boundary point in A is undecidable for " +
                                  topo.str());
  }
}

bool contains(const BasicOpen& b, const Point& x) {
  return std::visit(
      [&x](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, TangentBall>) {
          return in_tangent_ball(x, v.center, v.radius);
        } else {
          return in_ball(x, BallSpec(v.center, v.radius));
        }
      },
      b);
}

namespace {

// Radius δ with B(x, δ) inside the Euclidean ball underlying b; x interior.
Rat interior_margin(const BasicOpen& b, const Point& x) {
  if (const auto* t = std::get_if<TangentBall>(&b)) {
    return inner_ball_radius(x, BallSpec(tangent_center(t->center, t->radius), t->radius));
  }
  return inner_ball_radius(x, BallSpec(center_of(b), radius_of(b)));
}

// Radius δ with B(x, δ) ∩ X_n inside b, for a boundary point x and a
// Euclidean-type b (half-ball centred anywhere on L_n).
Rat boundary_margin(const BasicOpen& b, const Point& x) {
  return inner_ball_radius(x, BallSpec(center_of(b), radius_of(b)));
}

}  // namespace

BasicOpen refine(const BasicOpen& b1, const BasicOpen& b2, const Point& x) {
  if (!contains(b1, x) || !contains(b2, x)) throw DomainError("refine: point is not in both sets");
  if (x.interior()) {
    Rat delta = min(interior_margin(b1, x), interior_margin(b2, x));
    delta = min(delta, x.height() / Rat(2));
    return InteriorBall(x, delta);
  }
  // x ∈ L_n: an interior ball never contains it, and a tangent ball contains
  // exactly one boundary point, its centre.
  const auto* t1 = std::get_if<TangentBall>(&b1);
  const auto* t2 = std::get_if<TangentBall>(&b2);
  if (t1 && t2) {
    if (!(t1->center == x && t2->center == x)) {
      throw std::logic_error("refine: tangent balls at distinct centres share a boundary point");
    }
    return TangentBall(x, min(t1->radius, t2->radius));
  }
  if (t1 || t2) {
    // B̃(x, ε) ⊆ B(x, 2ε), so halving the Euclidean margin fits both.
    const TangentBall& t = t1 ? *t1 : *t2;
    const BasicOpen& other = t1 ? b2 : b1;
    return TangentBall(x, min(t.radius, boundary_margin(other, x) / Rat(2)));
  }
  return HalfBall(x, min(boundary_margin(b1, x), boundary_margin(b2, x)));
}

// ---------------------------------------------------------------------------

Point term(const SequenceFamily& fam, long k) {
  if (k < 1) throw DomainError("sequence indices start at 1");
  return std::visit(
      [k](const auto& f) -> Point {
        using V = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<V, VerticalFamily>) {
          std::vector<Rat> c(f.anchor.coords().begin(), f.anchor.coords().end());
          c.back() = f.step / Rat(k);
          return Point(std::move(c));
        } else if constexpr (std::is_same_v<V, TangentCircleFamily>) {
          const Rat denom = Rat(k) * Rat(k) + Rat(1);
          std::vector<Rat> c(f.anchor.coords().begin(), f.anchor.coords().end());
          c.front() += Rat(2) * f.eps * Rat(k) / denom;
          c.back() = Rat(2) * f.eps / denom;
          return Point(std::move(c));
        } else {
          if (static_cast<std::size_t>(k) > f.terms.size()) throw DomainError("finite list exhausted");
          return f.terms[static_cast<std::size_t>(k - 1)];
        }
      },
      fam);
}

namespace {

const Point& anchor_of(const SequenceFamily& fam) {
  if (const auto* v = std::get_if<VerticalFamily>(&fam)) return v->anchor;
  if (const auto* t = std::get_if<TangentCircleFamily>(&fam)) return t->anchor;
  throw DomainError("finite lists have no anchor");
}

void check_family(const SequenceFamily& fam) {
  if (const auto* v = std::get_if<VerticalFamily>(&fam)) {
    if (!v->anchor.on_hyperplane()) throw DomainError("vertical family anchor must lie on L_n");
    if (v->step.sign() <= 0) throw DomainError("vertical family step must be positive");
  } else if (const auto* t = std::get_if<TangentCircleFamily>(&fam)) {
    if (!t->anchor.on_hyperplane()) throw DomainError("tangent-circle anchor must lie on L_n");
    if (t->eps.sign() <= 0) throw DomainError("tangent-circle radius must be positive");
  }
}

}  // namespace

SequenceFamily parse_family(std::string_view text, std::size_t n) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view body = strip(text);
  std::string_view name;
  for (std::string_view candidate : {"vertical", "tangent-circle"}) {
    if (body.substr(0, candidate.size()) == candidate) name = candidate;
  }
  if (name.empty()) throw ParseError(0, "expected 'vertical(' or 'tangent-circle('");
  std::size_t pos = name.size();
  auto expect = [&](char c) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos >= body.size() || body[pos] != c) throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  };
  expect('(');
  expect('(');
  const std::size_t close = body.find(')', pos);
  if (close == std::string_view::npos) throw ParseError(body.size(), "expected ')'");
  Coords coords;
  try {
    coords = parse_coords(body.substr(pos, close - pos), n - 1);
  } catch (const ParseError& e) {
    throw ParseError(pos + e.offset(), "bad anchor coordinates");
  }
  pos = close + 1;
  expect(';');
  const std::size_t end = body.rfind(')');
  if (end == std::string_view::npos || end < pos) throw ParseError(body.size(), "expected ')'");
  if (end + 1 != body.size()) throw ParseError(end + 1, "unexpected trailing input");
  Rat param;
  try {
    param = Rat::parse(strip(body.substr(pos, end - pos)));
  } catch (const ParseError& e) {
    throw ParseError(pos + e.offset(), "bad family parameter");
  }
  if (param.sign() <= 0) throw ParseError(pos, "family parameter must be positive");
  Point anchor = Point::on_boundary(coords);
  if (name == "vertical") return VerticalFamily{std::move(anchor), std::move(param)};
  return TangentCircleFamily{std::move(anchor), std::move(param)};
}

std::string family_string(const SequenceFamily& fam) {
  auto coords = [](const Point& a) {
    std::string s;
    for (std::size_t i = 0; i + 1 < a.dimension(); ++i) {
      if (i) s += ',';
      s += a[i].str();
    }
    return s;
  };
  if (const auto* v = std::get_if<VerticalFamily>(&fam)) {
    return "vertical((" + coords(v->anchor) + ");" + v->step.str() + ")";
  }
  if (const auto* t = std::get_if<TangentCircleFamily>(&fam)) {
    return "tangent-circle((" + coords(t->anchor) + ");" + t->eps.str() + ")";
  }
  return "finite-list(" + std::to_string(std::get<FiniteListFamily>(fam).terms.size()) + " terms)";
}

bool IndexBound::admits(long k, const Rat& delta) const {
  if (form == Form::Linear) return Rat(k) * delta > coefficient;
  return (Rat(k) * Rat(k) + Rat(1)) * square(delta) > coefficient;
}

std::string IndexBound::description() const {
  if (form == Form::Linear) return "k > " + coefficient.str() + "/eps";
  return "k^2 + 1 > " + coefficient.str() + "/eps^2";
}

namespace {

std::vector<IsolatingBall> isolating_balls(const SequenceFamily& fam, long terms) {
  std::vector<Point> xs;
  xs.reserve(static_cast<std::size_t>(terms));
  for (long k = 1; k <= terms; ++k) xs.push_back(term(fam, k));
  std::vector<IsolatingBall> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::optional<Rat> nearest;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      Rat d = sq_dist(xs[i], xs[j]);
      if (!nearest || d < *nearest) nearest = std::move(d);
    }
    // ρ <= sqrt(nearest)/2 and ρ <= x_n/2, so B(x, ρ) is an interior base
    // element missing every other listed term.
    Rat rho = xs[i].height() / Rat(2);
    if (nearest) rho = min(rho, sqrt_floor(*nearest) / Rat(2));
    out.push_back({xs[i], rho});
  }
  return out;
}

}  // namespace

ConvergenceVerdict decide_convergence(const SequenceFamily& fam, const TopologySpec& topo,
                                      const Point& limit) {
  if (limit.dimension() != topo.dimension()) throw DimensionError("limit dimension does not match topology");
  ConvergenceVerdict v;
  if (const auto* list = std::get_if<FiniteListFamily>(&fam)) {
    // Only a prefix is known; report whether it ends at the limit, without
    // claiming anything about convergence.
    v.conclusive = false;
    v.converges = !list->terms.empty() && list->terms.back() == limit;
    return v;
  }
  check_family(fam);
  const Point& a = anchor_of(fam);
  if (!(a == limit)) throw DomainError("limit must be the family's anchor point");
  if (a.dimension() != topo.dimension()) throw DimensionError("family dimension does not match topology");
  const MemberVerdict euclidean_here = topo.euclidean_at(a);
  if (euclidean_here == Verdict::Unknown) {
    throw UndecidableMembership("cannot choose the local base at the anchor for " + topo.str());
  }
  const bool tangent_base = euclidean_here == Verdict::False;

  if (const auto* vert = std::get_if<VerticalFamily>(&fam)) {
    // x_k ∈ B̃(a, ε) iff (r/k)^2 < 2ε·r/k iff kε > r/2;  |x_k - a| < ε iff kε > r.
    v.converges = true;
    v.bound = IndexBound{IndexBound::Form::Linear, tangent_base ? vert->step / Rat(2) : vert->step};
    return v;
  }
  const auto& circle = std::get<TangentCircleFamily>(fam);
  if (!tangent_base) {
    // |x_k - a|^2 = 4ε^2/(k^2 + 1).
    v.converges = true;
    v.bound = IndexBound{IndexBound::Form::Quadratic, Rat(4) * square(circle.eps)};
    return v;
  }
  v.converges = false;
  v.blocking = TangentBall(a, circle.eps);
  v.isolating = isolating_balls(fam, kCertificateTerms);
  return v;
}

std::string verify_certificate(const SequenceFamily& fam, const TopologySpec& topo,
                               const ConvergenceVerdict& v, long terms) {
  if (!v.conclusive) return "";
  const Point& a = anchor_of(fam);
  std::vector<Point> xs;
  for (long k = 1; k <= terms; ++k) xs.push_back(term(fam, k));

  if (v.bound) {
    for (const Rat& delta : {Rat(2), Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 10), Rat(1, 97)}) {
      const BasicOpen nb = local_base_element(topo, a, delta);
      for (long k = 1; k <= terms; ++k) {
        const bool inside = contains(nb, xs[static_cast<std::size_t>(k - 1)]);
        if (v.bound->admits(k, delta) != inside) {
          return "index bound " + v.bound->description() + " disagrees with membership of term " +
                 std::to_string(k) + " at radius " + delta.str();
        }
      }
    }
  }
  if (v.blocking) {
    if (!contains(*v.blocking, a)) return "blocking neighbourhood does not contain the limit";
    const auto* circle = std::get_if<TangentCircleFamily>(&fam);
    for (long k = 1; k <= terms; ++k) {
      const Point& x = xs[static_cast<std::size_t>(k - 1)];
      if (contains(*v.blocking, x)) return "blocking neighbourhood contains term " + std::to_string(k);
      if (circle) {
        Rat lhs;
        for (std::size_t i = 0; i + 1 < x.dimension(); ++i) lhs += square(x[i] - a[i]);
        lhs += square(x.height());
        if (lhs != Rat(2) * circle->eps * x.height()) {
          return "term " + std::to_string(k) + " is off the boundary sphere";
        }
      }
    }
  }
  for (std::size_t i = 0; i < v.isolating.size(); ++i) {
    const auto& iso = v.isolating[i];
    if (iso.radius.sign() <= 0 || !(iso.radius < iso.point.height())) {
      return "isolating radius of term " + std::to_string(i + 1) + " is not an interior base radius";
    }
    const Rat r2 = square(iso.radius);
    for (std::size_t j = 0; j < v.isolating.size(); ++j) {
      if (i != j && sq_dist(iso.point, v.isolating[j].point) < r2) {
        return "isolating ball of term " + std::to_string(i + 1) + " contains term " +
               std::to_string(j + 1);
      }
    }
  }
  return "";
}

}  // namespace niemytzki
