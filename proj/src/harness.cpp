#include "niemytzki/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "niemytzki/desc_classes.hpp"
#include "niemytzki/errors.hpp"
#include "niemytzki/topology.hpp"

namespace niemytzki {

namespace {

struct SuiteInfo {
  const char* id;
  const char* name;
  std::size_t default_samples;
};

constexpr SuiteInfo kSuites[] = {
    {"S1", "boundary-identity", 10000}, {"S2", "decomposition", 10000},
    {"S3", "level-uniqueness", 10000},  {"S4", "sublevel", 10000},
    {"S5", "discreteness", 20},         {"S6", "refinement", 10000},
    {"S7", "three-valued", 10000},
};

constexpr int kRejectionBudget = 1000;

Point random_anchor(RationalSampler& rng, const SuiteConfig& cfg) {
  Coords c(cfg.dimension - 1);
  for (auto& x : c) x = rng.closed(-cfg.coord_bound, cfg.coord_bound);
  return Point::on_boundary(c);
}

Rat random_eps(RationalSampler& rng, const SuiteConfig& cfg) { return rng.open(Rat(0), cfg.max_radius) ; }

Point offset_point(const Point& a, const Coords& horizontal, const Rat& height) {
  std::vector<Rat> c;
  for (std::size_t i = 0; i + 1 < a.dimension(); ++i) c.push_back(a[i] + horizontal[i]);
  c.push_back(height);
  return Point(std::move(c));
}

// a + (2εu, 2ε)/(|u|^2 + 1) lies on the sphere bounding B(a(ε), ε).
Point sphere_point(RationalSampler& rng, const Point& a, const Rat& eps) {
  Coords u(a.dimension() - 1);
  RationalSampler small(rng.engine()(), 100);
  for (auto& x : u) x = small.closed(Rat(-3), Rat(3));
  Rat norm2;
  for (const auto& x : u) norm2 += square(x);
  const Rat denom = norm2 + Rat(1);
  Coords h;
  for (const auto& x : u) h.push_back(Rat(2) * eps * x / denom);
  return offset_point(a, h, Rat(2) * eps / denom);
}

Point inside_tangent_ball(RationalSampler& rng, const Point& a, const Rat& eps) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Coords h(a.dimension() - 1);
    for (auto& x : h) x = rng.open(-eps, eps);
    const Point x = offset_point(a, h, rng.open(Rat(0), Rat(2) * eps));
    if (in_ball(x, BallSpec(tangent_center(a, eps), eps))) return x;
  }
  throw DomainError("rejection sampling exhausted its budget inside B(a(eps), eps)");
}

Point anywhere_near(RationalSampler& rng, const Point& a, const Rat& eps) {
  const long pick = rng.integer(0, 7);
  if (pick == 0) return a;
  Coords h(a.dimension() - 1);
  for (auto& x : h) x = rng.closed(Rat(-2) * eps, Rat(2) * eps);
  if (pick == 1) return offset_point(a, h, Rat(0));
  return offset_point(a, h, rng.open(Rat(0), Rat(3) * eps));
}

Json sample_json(const Sample& s) {
  return Json{{"anchor", to_json(s.anchor)}, {"eps", to_json(s.eps)}, {"x", to_json(s.x)},
              {"s", to_json(s.s)}, {"s2", to_json(s.s2)}};
}

// Σ_{i<n}(x_i - a_i)^2 + x_n^2, recomputed here so checks do not lean on the
// formula inside t_level.
Rat sphere_form(const Point& x, const Point& a) {
  Rat acc;
  for (std::size_t i = 0; i + 1 < x.dimension(); ++i) acc += square(x[i] - a[i]);
  return acc + square(x.height());
}

// |x - a(tε)|^2 - (tε)^2: zero exactly on the sphere bounding B(a(tε), tε).
Rat level_equation(const Point& x, const Point& a, const Rat& eps, const Rat& t) {
  const Rat r = t * eps;
  return sq_dist(x, tangent_center(a, r)) - square(r);
}

using Check = std::function<std::optional<std::string>(const Sample&, std::size_t&)>;

std::optional<std::string> check_s1(const Sample& s, std::size_t& checks) {
  const Point& a = s.anchor;
  checks += 7;
  if (sphere_form(s.x, a) != Rat(2) * s.eps * s.x.height()) return "sample is off the sphere";
  if (s.x == a) return "sphere sample coincides with the anchor";
  if (in_tangent_ball(s.x, a, s.eps)) return "boundary point lies inside B~(a, eps)";
  if (in_tangent_ball(s.x, a, s.s * s.eps)) return "boundary point lies inside B~(a, s*eps), s <= 1";
  if (!in_tangent_ball(s.x, a, s.s2 * s.eps)) return "boundary point misses B~(a, s*eps), s > 1";
  if (t_level(s.x, a, s.eps) != Rat(1)) return "t_level on the boundary differs from 1";
  if (separating_f(s.x, a, s.eps) != Rat(1)) return "f differs from 1 on the boundary";
  return std::nullopt;
}

std::optional<std::string> check_s2(const Sample& s, std::size_t& checks) {
  const Point& a = s.anchor;
  checks += 5;
  if (!in_tangent_ball(s.x, a, s.eps)) return "sample is not inside B(a(eps), eps)";
  const Rat t = t_level(s.x, a, s.eps);
  if (!(t.sign() > 0 && t < Rat(1))) return "t_level outside (0, 1)";
  const Rat lhs = sphere_form(s.x, a);
  if (lhs != Rat(2) * t * s.eps * s.x.height()) return "sample is not on the level-t sphere";
  if (in_tangent_ball(s.x, a, t * s.eps)) return "sample lies inside its own level ball";
  if (s.s != t && lhs == Rat(2) * s.s * s.eps * s.x.height()) return "sample lies on a second level sphere";
  return std::nullopt;
}

std::optional<std::string> check_s3(const Sample& s, std::size_t& checks) {
  const Point& a = s.anchor;
  checks += 5;
  const Rat t = t_level(s.x, a, s.eps);
  const Rat h = t / Rat(1000);
  if (!level_equation(s.x, a, s.eps, t).is_zero()) return "t_level is not a root of the level equation";
  // The equation is affine in t with slope -2εx_n < 0: one root only.
  if (!(level_equation(s.x, a, s.eps, t - h).sign() > 0)) return "level equation not positive below the root";
  if (!(level_equation(s.x, a, s.eps, t + h).sign() < 0)) return "level equation not negative above the root";
  if (in_tangent_ball(s.x, a, (t - h) * s.eps)) return "sample inside a smaller level ball";
  if (!in_tangent_ball(s.x, a, (t + h) * s.eps)) return "sample outside a larger level ball";
  return std::nullopt;
}

std::optional<std::string> check_s4(const Sample& s, std::size_t& checks) {
  const Point& a = s.anchor;
  const Rat f = separating_f(s.x, a, s.eps);
  checks += 2;
  if (f.sign() < 0 || f > Rat(1)) return "f outside [0, 1]";
  if ((f < s.s) != in_tangent_ball(s.x, a, s.s * s.eps)) return "sublevel set of f differs from B~(a, s*eps)";
  if (s.x.interior()) {
    checks += 2;
    const Rat t = t_level(s.x, a, s.eps);
    if ((t < s.s2) != in_tangent_ball(s.x, a, s.s2 * s.eps)) return "level duality fails at s2";
    if ((t < Rat(1)) != in_tangent_ball(s.x, a, s.eps)) return "level duality fails at s = 1";
  }
  return std::nullopt;
}

std::optional<std::string> check_s5(const TangentCircleFamily& fam, std::size_t n, std::size_t& checks) {
  const SequenceFamily f = fam;
  const TopologySpec niemytzki = TopologySpec::niemytzki(n);
  const ConvergenceVerdict v = decide_convergence(f, niemytzki, fam.anchor);
  checks += 3;
  if (v.converges) return "tangent-circle family converges in the Niemytzki topology";
  if (!v.blocking || v.isolating.size() != static_cast<std::size_t>(kCertificateTerms)) {
    return "missing non-convergence certificate";
  }
  if (auto err = verify_certificate(f, niemytzki, v); !err.empty()) return err;
  // With A = L_n \ {a} the anchor still carries tangent balls.
  const TopologySpec punctured =
      TopologySpec::modified(n, SetExpr::complement(SetExpr::point(fam.anchor.horizontal())));
  const ConvergenceVerdict vp = decide_convergence(f, punctured, fam.anchor);
  checks += 2;
  if (vp.converges) return "tangent-circle family converges when the anchor is outside A";
  if (auto err = verify_certificate(f, punctured, vp); !err.empty()) return err;
  const TopologySpec euclid = TopologySpec::euclidean(n);
  const ConvergenceVerdict ve = decide_convergence(f, euclid, fam.anchor);
  checks += 2;
  if (!ve.converges) return "tangent-circle family fails to converge in the Euclidean topology";
  if (auto err = verify_certificate(f, euclid, ve); !err.empty()) return err;
  return std::nullopt;
}

// A random basic open set containing x.
BasicOpen random_container(RationalSampler& rng, const Point& x) {
  const std::size_t n = x.dimension();
  const long pick = rng.integer(0, 2);
  if (x.interior() && pick == 0) {
    const Rat spread = x.height() / Rat(4 * static_cast<long>(n));
    Coords h(n - 1);
    for (auto& v : h) v = rng.open(-spread, spread);
    const Point c = offset_point(x, h, x.height() + rng.open(-spread, spread));
    return InteriorBall(c, rng.open(x.height() / Rat(3), Rat(2) * x.height() / Rat(3)));
  }
  if (pick == 1 || (!x.interior() && pick == 0)) {
    Coords h(n - 1);
    for (auto& v : h) v = rng.open(Rat(-1), Rat(1));
    const Point c = Point::on_boundary(Point::on_boundary(h).horizontal());
    const Point center = offset_point(x, h, Rat(0));
    (void)c;
    const Rat d2 = sq_dist(x, center);
    // (d^2 + 1)/2 >= d, so adding a positive amount makes the radius exceed d.
    return HalfBall(center, (d2 + Rat(1)) / Rat(2) + rng.open(Rat(0), Rat(1)));
  }
  if (!x.interior()) return TangentBall(x, rng.open(Rat(0), Rat(2)));
  Coords h(n - 1);
  for (auto& v : h) v = rng.open(-x.height(), x.height());
  const Point a = offset_point(x, h, Rat(0));
  // x ∈ B̃(a, ε) iff ε > form / (2 x_n).
  const Rat threshold = sphere_form(x, a) / (Rat(2) * x.height());
  return TangentBall(a, threshold * (Rat(1) + rng.open(Rat(0), Rat(1))));
}

Point random_point_in(RationalSampler& rng, const BasicOpen& b) {
  Point c = center_of(b);
  const Rat& r = radius_of(b);
  if (std::holds_alternative<TangentBall>(b)) c = tangent_center(c, r);
  const Rat spread = r / Rat(static_cast<long>(c.dimension()));
  std::vector<Rat> coords;
  for (std::size_t i = 0; i < c.dimension(); ++i) coords.push_back(c[i] + rng.open(-spread, spread));
  if (coords.back().sign() < 0) coords.back() = -coords.back();
  return Point(std::move(coords));
}

std::optional<std::string> check_s6(RationalSampler& rng, const Point& x, std::size_t& checks, Json& input) {
  const BasicOpen b1 = random_container(rng, x);
  const BasicOpen b2 = random_container(rng, x);
  input = Json{{"x", to_json(x)}, {"b1", to_json(b1)}, {"b2", to_json(b2)}};
  const BasicOpen r = refine(b1, b2, x);
  input["refined"] = to_json(r);
  ++checks;
  if (!contains(r, x)) return "refined set misses the point";
  for (int i = 0; i < 6; ++i) {
    const Point y = random_point_in(rng, r);
    if (!contains(r, y)) continue;
    ++checks;
    if (!contains(b1, y) || !contains(b2, y)) {
      input["y"] = to_json(y);
      return "refined set leaves one of its containers";
    }
  }
  return std::nullopt;
}

Coords random_coords(RationalSampler& rng, std::size_t m) {
  Coords c(m);
  for (auto& x : c) x = rng.coin() ? Rat(rng.integer(-3, 3)) : rng.closed(Rat(-3), Rat(3));
  return c;
}

std::optional<std::string> check_s7(RationalSampler& rng, std::size_t n, std::size_t index,
                                    std::size_t& checks, Json& input) {
  const SetExpr e1 = random_set_expr(rng, n, 3);
  const SetExpr e2 = random_set_expr(rng, n, 3);
  std::vector<Coords> pts = structural_candidates(SetExpr::union_of({e1, e2}), n - 1);
  Coords p = rng.coin() ? pts[static_cast<std::size_t>(rng.integer(0, static_cast<long>(pts.size()) - 1))]
                        : random_coords(rng, n - 1);
  input = Json{{"e1", e1.str()}, {"e2", e2.str()}, {"p", coords_to_json(p)}};
  const Verdict m1 = member(e1, p);
  const Verdict m2 = member(e2, p);
  checks += 5;
  if (member(SetExpr::complement(e1), p) != !m1) return "complement is not the Kleene negation";
  if (member(SetExpr::complement(SetExpr::union_of({e1, e2})), p) !=
      member(SetExpr::inter({SetExpr::complement(e1), SetExpr::complement(e2)}), p)) {
    return "De Morgan law fails";
  }
  if (member(SetExpr::union_of({e1, e2}), p) != (m1 || m2)) return "union is not the Kleene disjunction";
  if (member(SetExpr::inter({e1, e2}), p) != (m1 && m2)) return "intersection is not the Kleene conjunction";
  if (!(parse_set(e1.str(), n) == e1)) return "parse(print(e)) differs from e";
  if (index % 50 == 0) {
    ++checks;
    const DescClass d = infer(e1, n);
    const DescClass c = infer(SetExpr::complement(e1), n);
    if (is_known(d.g_delta()) && is_known(c.f_sigma()) && d.g_delta() != c.f_sigma()) {
      return "g_delta(e) differs from f_sigma(complement)";
    }
    if (is_known(d.f_sigma()) && is_known(c.g_delta()) && d.f_sigma() != c.g_delta()) {
      return "f_sigma(e) differs from g_delta(complement)";
    }
  }
  return std::nullopt;
}

void record(SuiteResult& r, std::size_t index, std::optional<std::string> failure, Json input) {
  if (failure) r.failures.push_back({index, std::move(*failure), std::move(input)});
}

}  // namespace

std::optional<std::string> canonical_suite(std::string_view name) {
  for (const auto& s : kSuites) {
    if (name == s.id || name == s.name) return std::string(s.id);
  }
  return std::nullopt;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.id);
    return out;
  }();
  return names;
}

std::size_t default_samples(std::string_view suite) {
  const auto id = canonical_suite(suite);
  for (const auto& s : kSuites) {
    if (id && *id == s.id) return s.default_samples;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::vector<Sample> generate_samples(const SuiteConfig& cfg) {
  const auto id = canonical_suite(cfg.suite);
  if (!id || *id > "S4") throw std::invalid_argument("no point samples for suite '" + cfg.suite + "'");
  if (cfg.dimension < 2) throw DimensionError("dimension must be at least 2");
  const std::size_t count = cfg.samples.value_or(default_samples(*id));
  RationalSampler rng(cfg.seed, cfg.max_den);
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point a = random_anchor(rng, cfg);
    Rat eps = random_eps(rng, cfg);
    if (*id == "S1") {
      Point x = sphere_point(rng, a, eps);
      Rat s = rng.open(Rat(0), Rat(1));
      if (rng.integer(0, 9) == 0) s = Rat(1);
      out.push_back({i, std::move(a), std::move(eps), std::move(x), std::move(s), rng.open(Rat(1), Rat(4))});
    } else if (*id == "S2" || *id == "S3") {
      Point x = inside_tangent_ball(rng, a, eps);
      Rat s = rng.open(Rat(0), Rat(1));
      out.push_back({i, std::move(a), std::move(eps), std::move(x), std::move(s), Rat(0)});
    } else {
      Point x = anywhere_near(rng, a, eps);
      Rat s = rng.open(Rat(0), Rat(1));
      Rat s2 = rng.open(Rat(0), Rat(1));
      if (rng.integer(0, 9) == 0) s2 = Rat(1);
      out.push_back({i, std::move(a), std::move(eps), std::move(x), std::move(s), std::move(s2)});
    }
  }
  return out;
}

SetExpr random_set_expr(RationalSampler& rng, std::size_t n, int max_depth) {
  const std::size_t m = n - 1;
  const long choice = rng.integer(0, max_depth <= 0 ? 9 : 13);
  auto small_rat = [&] { return rng.coin() ? Rat(rng.integer(-2, 2)) : Rat(rng.integer(-8, 8), rng.integer(1, 4)); };
  auto coords = [&] {
    Coords c(m);
    for (auto& x : c) x = small_rat();
    return c;
  };
  auto radius = [&] { return Rat(rng.integer(1, 8), rng.integer(1, 4)); };
  switch (choice) {
    case 0: return SetExpr::empty();
    case 1: return SetExpr::all();
    case 2: return SetExpr::rationals();
    case 3: return SetExpr::lattice();
    case 4: return SetExpr::cantor();
    case 5: return SetExpr::bernstein();
    case 6: return SetExpr::point(coords());
    case 7: {
      std::vector<Coords> pts;
      const long k = rng.integer(1, 3);
      for (long i = 0; i < k; ++i) pts.push_back(coords());
      return SetExpr::finite(std::move(pts));
    }
    case 8: return SetExpr::cball(coords(), radius());
    case 9: return SetExpr::oball(coords(), radius());
    case 10:
    case 11: return SetExpr::complement(random_set_expr(rng, n, max_depth - 1));
    case 12: {
      std::vector<SetExpr> parts;
      const long k = rng.integer(2, 3);
      for (long i = 0; i < k; ++i) parts.push_back(random_set_expr(rng, n, max_depth - 1));
      return SetExpr::union_of(std::move(parts));
    }
    default: {
      std::vector<SetExpr> parts;
      const long k = rng.integer(2, 3);
      for (long i = 0; i < k; ++i) parts.push_back(random_set_expr(rng, n, max_depth - 1));
      return SetExpr::inter(std::move(parts));
    }
  }
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  const auto id = canonical_suite(cfg.suite);
  if (!id) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  if (cfg.dimension < 2) throw DimensionError("dimension must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.suite = *id;
  r.dimension = cfg.dimension;
  r.seed = cfg.seed;
  r.samples = cfg.samples.value_or(default_samples(*id));

  if (*id <= "S4") {
    static const std::map<std::string, Check> checks = {
        {"S1", check_s1}, {"S2", check_s2}, {"S3", check_s3}, {"S4", check_s4}};
    const Check& check = checks.at(*id);
    for (const Sample& s : generate_samples(cfg)) {
      std::optional<std::string> failure;
      try {
        failure = check(s, r.checks);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      record(r, s.index, std::move(failure), sample_json(s));
    }
  } else {
    RationalSampler rng(cfg.seed, cfg.max_den);
    for (std::size_t i = 0; i < r.samples; ++i) {
      Json input;
      std::optional<std::string> failure;
      try {
        if (*id == "S5") {
          TangentCircleFamily fam{random_anchor(rng, cfg), random_eps(rng, cfg)};
          input = Json{{"family", family_string(fam)}};
          failure = check_s5(fam, cfg.dimension, r.checks);
        } else if (*id == "S6") {
          const Point a = random_anchor(rng, cfg);
          const Point x = anywhere_near(rng, a, random_eps(rng, cfg));
          failure = check_s6(rng, x, r.checks, input);
        } else {
          failure = check_s7(rng, cfg.dimension, i, r.checks, input);
        }
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      record(r, i, std::move(failure), std::move(input));
    }
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

Json to_json(const SuiteResult& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"index", f.index}, {"reason", f.reason}, {"input", f.input}});
  }
  return Json{{"suite", r.suite},       {"dimension", r.dimension}, {"seed", r.seed},
              {"samples", r.samples},   {"checks", r.checks},       {"passed", r.passed()},
              {"failures", std::move(failures)}};
}

}  // namespace niemytzki
