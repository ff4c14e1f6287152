#include <gtest/gtest.h>

#include <fstream>

#include "niemytzki/desc_classes.hpp"
#include "niemytzki/harness.hpp"
#include "niemytzki/json_io.hpp"

using namespace niemytzki;

namespace {

Json load_catalog() {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/catalog.json");
  return Json::parse(in);
}

SetExpr S(const char* text, std::size_t n = 2) { return parse_set(text, n); }

}  // namespace

TEST(Catalog, InferenceIsSound) {
  const Json catalog = load_catalog();
  ASSERT_GE(catalog.size(), 12u);
  for (const auto& row : catalog) {
    const std::size_t n = row["dimension"].get<std::size_t>();
    const std::string expr = row["expr"].get<std::string>();
    const DescClass d = infer(parse_set(expr, n), n);
    for (ClassFlag f : kClassFlags) {
      const Verdict got = d.get(f);
      const Verdict truth = *verdict_from_string(row["truth"][std::string(flag_name(f))].get<std::string>());
      if (is_known(got)) EXPECT_EQ(got, truth) << expr << " " << flag_name(f);
    }
  }
}

TEST(Catalog, PrimitivesAreFullyDecided) {
  const Json catalog = load_catalog();
  for (const auto& row : catalog) {
    const std::size_t n = row["dimension"].get<std::size_t>();
    const SetExpr e = parse_set(row["expr"].get<std::string>(), n);
    const bool primitive = e.is_primitive() ||
                           (e.kind() == SetKind::Complement && e.children()[0].is_primitive());
    if (!primitive) continue;
    const DescClass d = infer(e, n);
    for (ClassFlag f : kClassFlags) EXPECT_TRUE(is_known(d.get(f))) << e.str() << " " << flag_name(f);
  }
}

TEST(Infer, SpecExamples) {
  const DescClass q = infer(S("rationals"), 2);
  EXPECT_EQ(q.countable(), Verdict::True);
  EXPECT_EQ(q.f_sigma(), Verdict::True);
  EXPECT_EQ(q.g_delta(), Verdict::False);
  const DescClass nq = infer(S("!rationals"), 2);
  EXPECT_EQ(nq.g_delta(), Verdict::True);
  EXPECT_EQ(nq.f_sigma(), Verdict::False);
  EXPECT_EQ(nq.co_countable(), Verdict::True);
  const DescClass b = infer(S("bernstein"), 3);
  EXPECT_EQ(b.g_delta(), Verdict::False);
  EXPECT_EQ(b.f_sigma(), Verdict::False);
  const DescClass c = infer(S("cantor"), 2);
  EXPECT_EQ(c.closed(), Verdict::True);
  EXPECT_EQ(c.compact(), Verdict::True);
  EXPECT_EQ(c.countable(), Verdict::False);
  EXPECT_EQ(c.contains_closed_uncountable(), Verdict::True);
}

TEST(Infer, ContainsClosedUncountable) {
  EXPECT_EQ(contains_closed_uncountable(S("all"), 2), Verdict::True);
  EXPECT_EQ(contains_closed_uncountable(S("rationals"), 2), Verdict::False);
  EXPECT_EQ(contains_closed_uncountable(S("bernstein"), 2), Verdict::False);
  EXPECT_EQ(contains_closed_uncountable(S("!bernstein"), 2), Verdict::False);
  // Found by the closed-ball search: [2, 3] avoids the subtracted pieces.
  EXPECT_EQ(contains_closed_uncountable(S("!(cantor | lattice | point(7/2))"), 2), Verdict::True);
  EXPECT_EQ(contains_closed_uncountable(S("cball(0,0;1) & !lattice", 3), 3), Verdict::True);
}

TEST(Infer, CarriesJustifications) {
  const DescClass b = infer(S("bernstein"), 2);
  EXPECT_FALSE(b.why(ClassFlag::GDelta).rule.empty());
  EXPECT_NE(b.why(ClassFlag::GDelta).citation.find("neither a G"), std::string::npos);
}

TEST(InferProperty, FlagImplications) {
  RationalSampler rng(31);
  for (int i = 0; i < 300; ++i) {
    const SetExpr e = random_set_expr(rng, 2, 4);
    const DescClass d = infer(e, 2);
    if (d.closed() == Verdict::True) {
      EXPECT_EQ(d.g_delta(), Verdict::True) << e.str();
      EXPECT_EQ(d.f_sigma(), Verdict::True) << e.str();
    }
    if (d.open() == Verdict::True) EXPECT_EQ(d.g_delta(), Verdict::True) << e.str();
    if (d.countable() == Verdict::True) EXPECT_EQ(d.f_sigma(), Verdict::True) << e.str();
    if (d.co_countable() == Verdict::True) {
      EXPECT_NE(contains_closed_uncountable(SetExpr::complement(e), 2), Verdict::True) << e.str();
    }
    EXPECT_FALSE(d.equals_all() == Verdict::True && d.equals_empty() == Verdict::True) << e.str();
  }
}

TEST(InferProperty, ComplementDuality) {
  RationalSampler rng(37);
  for (int i = 0; i < 300; ++i) {
    const SetExpr e = random_set_expr(rng, 3, 4);
    const DescClass d = infer(e, 3);
    const DescClass c = infer(SetExpr::complement(e), 3);
    if (is_known(d.g_delta()) && is_known(c.f_sigma())) EXPECT_EQ(d.g_delta(), c.f_sigma()) << e.str();
    if (is_known(d.f_sigma()) && is_known(c.g_delta())) EXPECT_EQ(d.f_sigma(), c.g_delta()) << e.str();
    if (is_known(d.closed()) && is_known(c.open())) EXPECT_EQ(d.closed(), c.open()) << e.str();
  }
}

TEST(InferProperty, OrderIndependent) {
  RationalSampler rng(41);
  for (int i = 0; i < 100; ++i) {
    const SetExpr a = random_set_expr(rng, 2, 2), b = random_set_expr(rng, 2, 2);
    EXPECT_EQ(infer(SetExpr::union_of({a, b}), 2), infer(SetExpr::union_of({b, a}), 2));
    EXPECT_EQ(infer(SetExpr::inter({a, b}), 2), infer(SetExpr::inter({b, a}), 2));
  }
}

TEST(Subset, Examples) {
  EXPECT_EQ(subset(S("empty"), S("cantor"), 2).verdict, Verdict::True);
  const SubsetResult r = subset(S("all"), S("cantor"), 3);
  EXPECT_EQ(r.verdict, Verdict::False);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(member(S("cantor", 3), *r.witness), Verdict::False);
  EXPECT_EQ(subset(S("cantor"), S("cball(1/4;1/4) | cball(3/4;1/4)"), 2).verdict, Verdict::True);
  EXPECT_EQ(subset(S("cantor"), S("cball(1/2;1/2)"), 2).verdict, Verdict::True);
  EXPECT_EQ(subset(S("lattice"), S("rationals"), 2).verdict, Verdict::True);
  EXPECT_EQ(subset(S("cantor"), S("cantor | lattice"), 2).verdict, Verdict::True);
  EXPECT_EQ(subset(S("cantor & lattice"), S("lattice"), 2).verdict, Verdict::True);
  EXPECT_EQ(subset(S("bernstein"), S("cantor"), 2).verdict, Verdict::Unknown);
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare_topologies(S("empty"), S("all"), 2).order, TopologyOrder::Finer);
  EXPECT_EQ(compare_topologies(S("all"), S("empty"), 2).order, TopologyOrder::Coarser);
  EXPECT_EQ(compare_topologies(S("cantor"), S("cantor"), 2).order, TopologyOrder::Equal);
  EXPECT_EQ(compare_topologies(S("point(0)"), S("point(1)"), 2).order, TopologyOrder::Incomparable);
  EXPECT_EQ(compare_topologies(S("bernstein"), S("!bernstein"), 2).order, TopologyOrder::Unknown);
}

TEST(CompareProperty, MonotoneWithSubset) {
  RationalSampler rng(43);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const SetExpr a = random_set_expr(rng, 2, 3), b = random_set_expr(rng, 2, 3);
    for (const auto& [x, y] : {std::pair{a, SetExpr::union_of({a, b})}, std::pair{SetExpr::inter({a, b}), b}}) {
      if (subset(x, y, 2).verdict != Verdict::True) continue;
      ++checked;
      const TopologyOrder o = compare_topologies(x, y, 2).order;
      EXPECT_TRUE(o == TopologyOrder::Finer || o == TopologyOrder::Equal) << x.str() << " vs " << y.str();
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(DescClass, ContradictionIsALogicError) {
  DescClass d;
  EXPECT_TRUE(d.set(ClassFlag::Closed, Verdict::True, {"test", ""}));
  EXPECT_FALSE(d.set(ClassFlag::Closed, Verdict::True, {"test", ""}));
  EXPECT_THROW(d.set(ClassFlag::Closed, Verdict::False, {"test", ""}), std::logic_error);
}

TEST(DescClass, JsonRoundTrip) {
  const DescClass d = infer(S("cantor | rationals"), 2);
  EXPECT_EQ(desc_class_from_json(to_json(d)), d);
}
