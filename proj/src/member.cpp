#include <algorithm>
#include <set>

#include "niemytzki/errors.hpp"
#include "niemytzki/sampling.hpp"
#include "niemytzki/set_expr.hpp"

namespace niemytzki {

bool in_cantor_set(const Rat& value) {
  const Rat third(1, 3);
  const Rat two_thirds(2, 3);
  if (value.sign() < 0 || value > Rat(1)) return false;
  // Each step reads one ternary digit. The denominators never grow, so the
  // remainder sequence is eventually periodic and the loop terminates.
  std::set<Rat> seen;
  Rat x = value;
  for (;;) {
    if (x.is_zero() || x == Rat(1) || x == third || x == two_thirds) return true;
    if (!seen.insert(x).second) return true;
    if (x < third) {
      x = Rat(3) * x;
    } else if (x > two_thirds) {
      x = Rat(3) * x - Rat(2);
    } else {
      return false;
    }
  }
}

MemberVerdict member(const SetExpr& e, std::span<const Rat> p) {
  switch (e.kind()) {
    case SetKind::Empty: return Verdict::False;
    case SetKind::All: return Verdict::True;
    // Only rational points are representable.
    case SetKind::Rationals: return Verdict::True;
    case SetKind::Lattice:
      return from_bool(std::all_of(p.begin(), p.end(), [](const Rat& r) { return r.is_integer(); }));
    case SetKind::Point:
    case SetKind::Finite:
      for (const auto& q : e.points()) {
        if (q.size() != p.size()) throw DimensionError("membership query has the wrong arity");
        if (std::equal(q.begin(), q.end(), p.begin())) return Verdict::True;
      }
      return Verdict::False;
    case SetKind::CBall: return from_bool(sq_dist(p, e.points().front()) <= square(e.radius()));
    case SetKind::OBall: return from_bool(sq_dist(p, e.points().front()) < square(e.radius()));
    case SetKind::Cantor:
      if (p.empty()) throw DimensionError("membership query needs coordinates");
      if (!std::all_of(p.begin() + 1, p.end(), [](const Rat& r) { return r.is_zero(); })) {
        return Verdict::False;
      }
      return from_bool(in_cantor_set(p.front()));
    case SetKind::Bernstein: return Verdict::Unknown;
    case SetKind::Complement: return !member(e.children().front(), p);
    case SetKind::Union: {
      Verdict acc = Verdict::False;
      for (const auto& c : e.children()) acc = acc || member(c, p);
      return acc;
    }
    case SetKind::Inter: {
      Verdict acc = Verdict::True;
      for (const auto& c : e.children()) acc = acc && member(c, p);
      return acc;
    }
  }
  return Verdict::Unknown;
}

std::string_view member_string(MemberVerdict v) {
  switch (v) {
    case Verdict::True: return "in";
    case Verdict::False: return "out";
    default: return "unknown";
  }
}

namespace {

Coords axis_point(std::size_t m, const Rat& t) {
  Coords c(m);
  c[0] = t;
  return c;
}

Coords shifted(const Coords& c, const Rat& dx) {
  Coords out = c;
  out[0] += dx;
  return out;
}

void collect(const SetExpr& e, std::size_t m, std::vector<Coords>& out) {
  switch (e.kind()) {
    case SetKind::Point:
    case SetKind::Finite:
      for (const auto& p : e.points()) {
        out.push_back(p);
        out.push_back(shifted(p, Rat(1)));
      }
      break;
    case SetKind::CBall:
    case SetKind::OBall: {
      const Coords& c = e.points().front();
      const Rat& r = e.radius();
      out.push_back(c);
      out.push_back(shifted(c, r / Rat(2)));
      out.push_back(shifted(c, r));
      out.push_back(shifted(c, -r));
      out.push_back(shifted(c, Rat(2) * r));
      out.push_back(shifted(c, Rat(-2) * r));
      break;
    }
    case SetKind::Cantor:
      for (const Rat& t : {Rat(0), Rat(1), Rat(1, 3), Rat(2, 3), Rat(2), Rat(-1), Rat(1, 2),
                           Rat(1, 4), Rat(3, 4)}) {
        out.push_back(axis_point(m, t));
      }
      break;
    case SetKind::Lattice:
      for (const Rat& t : {Rat(1), Rat(-1), Rat(1, 2)}) out.push_back(axis_point(m, t));
      break;
    case SetKind::Rationals:
    case SetKind::Bernstein:
      out.push_back(axis_point(m, Rat(1, 2)));
      break;
    default:
      break;
  }
  for (const auto& c : e.children()) collect(c, m, out);
}

}  // namespace

std::vector<Coords> structural_candidates(const SetExpr& e, std::size_t m) {
  if (m == 0) throw DimensionError("boundary dimension must be at least 1");
  std::vector<Coords> raw{Coords(m)};
  collect(e, m, raw);
  std::vector<Coords> out;
  for (auto& c : raw) {
    if (c.size() != m) throw DimensionError("expression arity does not match the session");
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::optional<Coords> find_witness(const SetExpr& e, std::size_t n, std::size_t budget,
                                   std::uint64_t seed) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  const std::size_t m = n - 1;
  std::size_t tried = 0;
  for (const auto& c : structural_candidates(e, m)) {
    if (tried++ >= budget) return std::nullopt;
    if (member(e, c) == Verdict::True) return c;
  }
  RationalSampler sampler(seed, 64);
  while (tried++ < budget) {
    Coords c(m);
    for (auto& x : c) x = sampler.closed(Rat(-4), Rat(4));
    if (member(e, c) == Verdict::True) return c;
  }
  return std::nullopt;
}

}  // namespace niemytzki
