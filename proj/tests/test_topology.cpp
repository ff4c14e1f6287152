#include <gtest/gtest.h>

#include "niemytzki/errors.hpp"
#include "niemytzki/json_io.hpp"
#include "niemytzki/sampling.hpp"
#include "niemytzki/topology.hpp"

using namespace niemytzki;

namespace {

Point P(std::initializer_list<Rat> c) { return Point(std::vector<Rat>(c)); }

TopologySpec modified(const char* text, std::size_t n = 2) { return TopologySpec::modified(n, parse_set(text, n)); }

}  // namespace

TEST(TopologySpec, Normalization) {
  EXPECT_EQ(modified("all"), TopologySpec::euclidean(2));
  EXPECT_EQ(modified("empty"), TopologySpec::niemytzki(2));
  EXPECT_EQ(modified("!empty"), TopologySpec::euclidean(2));
  EXPECT_EQ(modified("cantor & empty"), TopologySpec::niemytzki(2));
  EXPECT_EQ(modified("rationals | !rationals"), TopologySpec::euclidean(2));
  EXPECT_EQ(modified("cantor").kind(), TopologyKind::Modified);
  EXPECT_THROW(TopologySpec::niemytzki(1), DimensionError);
  EXPECT_THROW(TopologySpec::modified(2, parse_set("point(1,2)", 3)), DimensionError);
}

TEST(LocalBase, Examples) {
  const Point a = P({0, 0});
  EXPECT_EQ(local_base_element(TopologySpec::niemytzki(2), a, Rat(1)), BasicOpen(TangentBall(a, Rat(1))));
  EXPECT_EQ(local_base_element(TopologySpec::euclidean(2), a, Rat(1)), BasicOpen(HalfBall(a, Rat(1))));
  const Point h = P({Rat(1, 2), 0});
  EXPECT_EQ(local_base_element(modified("rationals"), h, Rat(1)), BasicOpen(HalfBall(h, Rat(1))));
  EXPECT_EQ(local_base_element(modified("!rationals"), h, Rat(1)), BasicOpen(TangentBall(h, Rat(1))));
  EXPECT_EQ(local_base_element(TopologySpec::niemytzki(2), P({0, 1}), Rat(3)),
            BasicOpen(InteriorBall(P({0, 1}), Rat(1, 2))));
  EXPECT_THROW(local_base_element(modified("bernstein"), a, Rat(1)), UndecidableMembership);
  EXPECT_THROW(local_base_element(TopologySpec::niemytzki(2), a, Rat(0)), DomainError);
}

TEST(LocalBase, InteriorElementIsTheSameInEveryTopology) {
  RationalSampler rng(2);
  for (int i = 0; i < 300; ++i) {
    const Point p = P({rng.closed(Rat(-3), Rat(3)), rng.open(Rat(0), Rat(3))});
    const Rat eps = rng.open(Rat(0), Rat(4));
    const BasicOpen e = local_base_element(TopologySpec::euclidean(2), p, eps);
    EXPECT_EQ(local_base_element(TopologySpec::niemytzki(2), p, eps), e);
    EXPECT_EQ(local_base_element(modified("bernstein"), p, eps), e);
    EXPECT_EQ(radius_of(e), min(eps, p.height() / Rat(2)));
  }
}

TEST(LocalBase, ContainsItsPointAndIsMonotone) {
  RationalSampler rng(3);
  for (const TopologySpec& topo : {TopologySpec::niemytzki(3), TopologySpec::euclidean(3), modified("lattice", 3)}) {
    for (int i = 0; i < 200; ++i) {
      const bool boundary = rng.coin();
      const Rat x1 = boundary && rng.coin() ? Rat(rng.integer(-2, 2)) : rng.closed(Rat(-2), Rat(2));
      const Point p = P({x1, Rat(0), boundary ? Rat(0) : rng.open(Rat(0), Rat(2))});
      const Rat e2 = rng.open(Rat(0), Rat(2));
      const Rat e1 = rng.open(Rat(0), e2);
      const BasicOpen small = local_base_element(topo, p, e1);
      const BasicOpen big = local_base_element(topo, p, e2);
      EXPECT_TRUE(contains(small, p));
      for (int j = 0; j < 10; ++j) {
        const Point y = P({p[0] + rng.open(-e1, e1), p[1] + rng.open(-e1, e1), p[2] + rng.closed(Rat(0), e1 * Rat(2))});
        if (contains(small, y)) EXPECT_TRUE(contains(big, y));
      }
    }
  }
}

TEST(Contains, Examples) {
  const Point a = P({0, 0});
  EXPECT_TRUE(contains(TangentBall(a, Rat(1)), a));
  EXPECT_TRUE(contains(HalfBall(a, Rat(1)), a));
  EXPECT_FALSE(contains(TangentBall(a, Rat(1)), P({1, 1})));
  EXPECT_FALSE(contains(TangentBall(a, Rat(1)), P({Rat(1, 2), 0})));
  EXPECT_TRUE(contains(HalfBall(a, Rat(1)), P({Rat(1, 2), 0})));
  EXPECT_THROW(InteriorBall(P({0, 1}), Rat(1)), DomainError);
  EXPECT_THROW(TangentBall(P({0, 1}), Rat(1)), DomainError);
}

TEST(Refine, Examples) {
  const Point a = P({0, 0});
  const TangentBall t1(a, Rat(1)), t2(a, Rat(1, 2));
  EXPECT_EQ(refine(t1, t1, a), BasicOpen(t1));
  EXPECT_EQ(refine(t1, t2, a), BasicOpen(t2));
  // Half-ball margins (r^2 - d^2)/(2r): 4/4 = 1 and (9/4 - 1)/3 = 5/12.
  EXPECT_EQ(refine(HalfBall(a, Rat(2)), HalfBall(P({1, 0}), Rat(3, 2)), a), BasicOpen(HalfBall(a, Rat(5, 12))));
  // The point (0, 1/2) lies on the sphere of the interior ball, so the
  // precondition fails; (0, 3/4) is strictly inside both sets.
  const InteriorBall ib(P({0, 1}), Rat(1, 2));
  EXPECT_THROW(refine(t1, ib, P({0, Rat(1, 2)})), DomainError);
  // Margins: tangent ball (1 - 1/16)/2 = 15/32, interior ball (1/4 - 1/16)/1 = 3/16,
  // height 3/8; the smallest is 3/16.
  EXPECT_EQ(refine(t1, ib, P({0, Rat(3, 4)})), BasicOpen(InteriorBall(P({0, Rat(3, 4)}), Rat(3, 16))));
}

TEST(RefineProperty, ResultLiesInBothContainers) {
  RationalSampler rng(13);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Point a = P({rng.closed(Rat(-1), Rat(1)), 0});
    const Rat eps = rng.open(Rat(0), Rat(2));
    const BasicOpen b1 = rng.coin() ? BasicOpen(TangentBall(a, eps)) : BasicOpen(HalfBall(a, eps));
    const Point x = P({a[0] + rng.open(-eps, eps), rng.open(Rat(0), Rat(2) * eps)});
    if (!contains(b1, x)) continue;
    const BasicOpen b2 = InteriorBall(x, x.height() / Rat(2));
    const BasicOpen r = refine(b1, b2, x);
    EXPECT_TRUE(contains(r, x));
    const Rat rad = radius_of(r);
    for (int j = 0; j < 20; ++j) {
      const Point y = P({x[0] + rng.open(-rad, rad), x[1] + rng.open(-rad, rad)});
      if (!contains(r, y)) continue;
      ++checked;
      EXPECT_TRUE(contains(b1, y));
      EXPECT_TRUE(contains(b2, y));
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Family, TermsAndParsing) {
  const SequenceFamily circle = parse_family("tangent-circle((0);1)", 2);
  EXPECT_EQ(term(circle, 1), P({1, 1}));
  EXPECT_EQ(term(circle, 2), P({Rat(4, 5), Rat(2, 5)}));
  const SequenceFamily vertical = parse_family("vertical((1,2);3)", 3);
  EXPECT_EQ(term(vertical, 3), P({1, 2, 1}));
  EXPECT_EQ(family_string(circle), "tangent-circle((0);1)");
  EXPECT_EQ(parse_family(family_string(vertical), 3).index(), vertical.index());
  EXPECT_THROW(parse_family("spiral((0);1)", 2), ParseError);
  EXPECT_THROW(parse_family("vertical((0,0);1)", 2), ParseError);
  EXPECT_THROW(parse_family("vertical((0);0)", 2), ParseError);
}

TEST(Family, CircleTermsSatisfyTheSphereEquation) {
  const TangentCircleFamily f{P({Rat(2, 3), Rat(-1), 0}), Rat(5, 7)};
  for (long k = 1; k <= 1000; ++k) {
    const Point x = term(f, k);
    const Rat form = square(x[0] - f.anchor[0]) + square(x[1] - f.anchor[1]) + square(x.height());
    ASSERT_EQ(form, Rat(2) * f.eps * x.height()) << k;
  }
}

TEST(Family, VerticalLevels) {
  const VerticalFamily f{P({0, 0}), Rat(3)};
  for (long k = 1; k <= 50; ++k) EXPECT_EQ(t_level(term(f, k), f.anchor, Rat(2)), Rat(3) / Rat(4 * k));
}

TEST(Converge, Examples) {
  const Point a = P({0, 0});
  const ConvergenceVerdict v = decide_convergence(VerticalFamily{a, Rat(1)}, TopologySpec::niemytzki(2), a);
  EXPECT_TRUE(v.converges);
  ASSERT_TRUE(v.bound.has_value());
  EXPECT_EQ(v.bound->form, IndexBound::Form::Linear);
  EXPECT_EQ(v.bound->coefficient, Rat(1, 2));
  EXPECT_EQ(verify_certificate(VerticalFamily{a, Rat(1)}, TopologySpec::niemytzki(2), v), "");

  const ConvergenceVerdict ve = decide_convergence(VerticalFamily{a, Rat(1)}, TopologySpec::euclidean(2), a);
  EXPECT_EQ(ve.bound->coefficient, Rat(1));

  const TangentCircleFamily circle{a, Rat(1)};
  const ConvergenceVerdict vn = decide_convergence(circle, TopologySpec::niemytzki(2), a);
  EXPECT_FALSE(vn.converges);
  ASSERT_TRUE(vn.blocking.has_value());
  EXPECT_EQ(*vn.blocking, BasicOpen(TangentBall(a, Rat(1))));
  EXPECT_EQ(vn.isolating.size(), 100u);
  EXPECT_EQ(verify_certificate(circle, TopologySpec::niemytzki(2), vn), "");

  const ConvergenceVerdict vc = decide_convergence(circle, TopologySpec::euclidean(2), a);
  EXPECT_TRUE(vc.converges);
  EXPECT_EQ(vc.bound->form, IndexBound::Form::Quadratic);
  EXPECT_EQ(verify_certificate(circle, TopologySpec::euclidean(2), vc), "");

  EXPECT_TRUE(decide_convergence(circle, modified("point(0)"), a).converges);
  EXPECT_FALSE(decide_convergence(circle, modified("point(1)"), a).converges);
  EXPECT_THROW(decide_convergence(circle, modified("bernstein"), a), UndecidableMembership);
}

TEST(Converge, TamperedCertificatesAreRejected) {
  const Point a = P({0, 0});
  const TangentCircleFamily circle{a, Rat(1)};
  ConvergenceVerdict v = decide_convergence(circle, TopologySpec::niemytzki(2), a);
  v.isolating[5].radius = Rat(10);
  EXPECT_NE(verify_certificate(circle, TopologySpec::niemytzki(2), v), "");
  ConvergenceVerdict w = decide_convergence(circle, TopologySpec::niemytzki(2), a);
  w.blocking = TangentBall(a, Rat(2));
  EXPECT_NE(verify_certificate(circle, TopologySpec::niemytzki(2), w), "");
  ConvergenceVerdict u = decide_convergence(VerticalFamily{a, Rat(1)}, TopologySpec::niemytzki(2), a);
  u.bound->coefficient = Rat(1, 4);
  EXPECT_NE(verify_certificate(VerticalFamily{a, Rat(1)}, TopologySpec::niemytzki(2), u), "");
}

TEST(Converge, FiniteListsAreInconclusive) {
  const FiniteListFamily f{{P({1, 1}), P({0, 0})}};
  const ConvergenceVerdict v = decide_convergence(f, TopologySpec::niemytzki(2), P({0, 0}));
  EXPECT_FALSE(v.conclusive);
}

TEST(BasicOpenJson, RoundTrip) {
  for (const BasicOpen& b : {BasicOpen(TangentBall(P({Rat(1, 3), 0}), Rat(2, 7))),
                             BasicOpen(HalfBall(P({0, 0, 0}), Rat(5))),
                             BasicOpen(InteriorBall(P({-1, Rat(9, 4)}), Rat(1)))}) {
    EXPECT_EQ(basic_open_from_json(Json::parse(to_json(b).dump())), b);
  }
}
