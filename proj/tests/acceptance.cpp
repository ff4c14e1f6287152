// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "niemytzki/desc_classes.hpp"
#include "niemytzki/harness.hpp"
#include "niemytzki/theorems.hpp"
#include "oracles.hpp"

using namespace niemytzki;

namespace {

// Wall-clock limits in seconds.
constexpr double kCatalogLimit = 1.0;
constexpr double kInvariantLimit = 10.0;
constexpr double kGeometryLimit = 60.0;
constexpr double kDiscretenessLimit = 5.0;

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  std::size_t violations = 0;
  std::size_t checks = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
};

bool report_line(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit <= 0 || secs < limit;
  const bool pass = o.violations == 0 && in_time;
  std::printf("criterion %d %s: %s (%zu checks, %zu violations, %.2f s", id, title, pass ? "PASS" : "FAIL",
              o.checks, o.violations, secs);
  if (limit > 0) std::printf(", limit %.0f s", limit);
  std::printf(")\n");
  if (!o.first.empty()) std::printf("  first violation: %s\n", o.first.c_str());
  if (!in_time) std::printf("  time limit exceeded\n");
  std::fflush(stdout);
  return pass;
}

void catalog(Outcome& o) {
  struct Row {
    const char* expr;
    std::vector<std::pair<const char*, Verdict>> expected;
  };
  const Verdict T = Verdict::True, F = Verdict::False;
  const std::vector<Row> rows = {
      {"empty", {{"perfect", T}, {"lindelof", F}, {"normal", F}, {"countably_paracompact", F}}},
      {"all", {{"metrizable", T}, {"locally_compact", T}}},
      {"rationals", {{"perfect", F}, {"lindelof", F}}},
      {"!rationals", {{"second_countable", T}, {"sigma_compact", F}}},
      {"cantor", {{"perfect", T}, {"lindelof", F}}},
      {"!cantor", {{"perfect", T}, {"lindelof", F}}},
      {"bernstein", {{"lindelof", T}, {"normal", T}, {"perfect", F}}},
  };
  for (std::size_t n : {2u, 3u, 4u}) {
    for (const Row& row : rows) {
      const PropertyReport r = classify(parse_set(row.expr, n), n);
      for (const auto& [name, value] : row.expected) {
        o.expect(r.get(name) == value, std::string(row.expr) + " n=" + std::to_string(n) + " " + name);
      }
    }
  }
}

void invariants(Outcome& o) {
  RationalSampler rng(kSeed);
  for (int i = 0; i < 240; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const SetExpr e = random_set_expr(rng, n, 4);
    const PropertyReport r = classify(e, n);
    const std::string tag = e.str() + " n=" + std::to_string(n);
    auto same = [&](std::vector<const char*> group) {
      for (const char* name : group) o.expect(r.get(name) == r.get(group[0]), tag + " " + name);
    };
    same({"lindelof", "normal", "paracompact", "countably_paracompact"});
    same({"metrizable", "second_countable", "hereditarily_lindelof"});
    same({"L_n_z_embedded", "L_n_Cstar_embedded", "normal"});
    auto implies = [&](const char* lhs, const char* rhs) {
      if (r.get(lhs) == Verdict::True) o.expect(r.get(rhs) == Verdict::True, tag + " " + lhs + " => " + rhs);
    };
    implies("sigma_compact", "second_countable");
    implies("second_countable", "lindelof");
  }
}

void geometry(Outcome& o) {
  for (const char* suite : {"S1", "S2", "S3", "S4"}) {
    for (std::size_t n : {2u, 3u, 4u}) {
      SuiteConfig cfg{suite};
      cfg.samples = 10000;
      cfg.seed = kSeed;
      cfg.dimension = n;
      const SuiteResult r = run_suite(cfg);
      o.checks += r.checks;
      for (const auto& f : r.failures) o.fail(std::string(suite) + " n=" + std::to_string(n) + ": " + f.reason);
    }
  }
}

void discreteness(Outcome& o) {
  for (std::size_t n : {2u, 3u}) {
    // The canonical family at the origin, checked term by term here.
    const TangentCircleFamily fam{Point(std::vector<Rat>(n, Rat(0))), Rat(1)};
    const ConvergenceVerdict v = decide_convergence(fam, TopologySpec::niemytzki(n), fam.anchor);
    o.expect(!v.converges && v.blocking.has_value(), "origin family reported convergent");
    for (long k = 1; k <= kCertificateTerms; ++k) {
      const Point x = term(fam, k);
      Rat form = square(x.height());
      for (std::size_t i = 0; i + 1 < n; ++i) form += square(x[i]);
      o.expect(form == Rat(2) * fam.eps * x.height(), "sphere equality fails at term " + std::to_string(k));
      o.expect(!contains(*v.blocking, x), "blocking neighbourhood contains term " + std::to_string(k));
    }
    o.expect(verify_certificate(fam, TopologySpec::niemytzki(n), v).empty(), "origin certificate rejected");

    SuiteConfig cfg{"S5"};
    cfg.seed = kSeed;
    cfg.dimension = n;
    const SuiteResult r = run_suite(cfg);
    o.checks += r.checks;
    for (const auto& f : r.failures) o.fail("S5 n=" + std::to_string(n) + ": " + f.reason);
  }
}

void cantor_oracle(Outcome& o) {
  for (std::int64_t q = 1; q <= 200; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      o.expect(in_cantor_set(Rat(p, q)) == oracle::cantor_digits(p, q),
               "disagreement at " + std::to_string(p) + "/" + std::to_string(q));
    }
  }
}

void poset(Outcome& o) {
  const Comparison c = compare_topologies(SetExpr::empty(), SetExpr::all(), 2);
  o.expect(c.order == TopologyOrder::Finer, "compare(empty, all) is not finer");
  RationalSampler rng(kSeed);
  std::size_t pairs = 0;
  for (int attempt = 0; pairs < 100 && attempt < 10000; ++attempt) {
    const std::size_t n = 2 + static_cast<std::size_t>(attempt % 2);
    const SetExpr a = random_set_expr(rng, n, 3);
    const SetExpr b = random_set_expr(rng, n, 3);
    const SetExpr lhs = rng.coin() ? a : SetExpr::inter({a, b});
    const SetExpr rhs = lhs == a ? SetExpr::union_of({a, b}) : a;
    if (subset(lhs, rhs, n).verdict != Verdict::True) continue;
    ++pairs;
    const TopologyOrder order = compare_topologies(lhs, rhs, n).order;
    o.expect(order == TopologyOrder::Finer || order == TopologyOrder::Equal,
             lhs.str() + " vs " + rhs.str() + " gave " + std::string(to_string(order)));
  }
  o.expect(pairs == 100, "only " + std::to_string(pairs) + " provable pairs generated");
}

void determinism(Outcome& o) {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", "--dimension", "3", "--set", "bernstein", "--json"},
      {"classify", "--set", "!(cantor | rationals) & cball(0;3)", "--json", "--seed", "7"},
      {"member", "--set", "cantor | lattice", "--point", "7/9", "--json"},
      {"nbhd", "--topology", "modified", "--set", "rationals", "--point", "1/2,0", "--json"},
      {"converge", "--family", "tangent-circle((0);1)", "--topology", "niemytzki", "--json"},
      {"converge", "--dimension", "3", "--family", "vertical((1,2);3)", "--topology", "euclidean", "--json"},
      {"compare", "--set-a", "cantor", "--set-b", "!lattice", "--json", "--seed", "42"},
      {"explain", "--set", "bernstein", "--property", "lindelof", "--json"},
      {"check", "--suite", "S1", "--samples", "500", "--seed", "42", "--json"},
      {"check", "--suite", "S5", "--samples", "2", "--seed", "42", "--json"},
      {"check", "--suite", "S6", "--samples", "500", "--seed", "42", "--json"},
      {"check", "--suite", "S7", "--samples", "500", "--seed", "42", "--json"},
  };
  for (const auto& args : commands) {
    std::string first;
    for (int run = 0; run < 3; ++run) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      o.expect(code == 0, args[0] + " exited with " + std::to_string(code) + ": " + err.str());
      if (run == 0) {
        first = out.str();
      } else {
        o.expect(out.str() == first, args[0] + " output differs between runs");
      }
    }
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report_line(1, "catalog reproduction", kCatalogLimit, catalog);
  ok &= report_line(2, "equivalence-theorem invariants", kInvariantLimit, invariants);
  ok &= report_line(3, "geometry suites S1-S4", kGeometryLimit, geometry);
  ok &= report_line(4, "discreteness certificates", kDiscretenessLimit, discreteness);
  ok &= report_line(5, "cantor oracle equivalence", 0, cantor_oracle);
  ok &= report_line(6, "poset monotonicity", 0, poset);
  ok &= report_line(7, "determinism", 0, determinism);
  return ok ? 0 : 1;
}
