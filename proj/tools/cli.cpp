#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "niemytzki/desc_classes.hpp"
#include "niemytzki/errors.hpp"
#include "niemytzki/harness.hpp"
#include "niemytzki/json_io.hpp"
#include "niemytzki/theorems.hpp"
#include "niemytzki/topology.hpp"

namespace niemytzki::cli {

namespace {

struct Options {
  std::size_t dimension = 2;
  bool json = false;
  std::string set;
  std::string set_a;
  std::string set_b;
  std::string point;
  std::string eps = "1";
  std::string topology = "niemytzki";
  std::string family;
  std::string suite;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
  std::size_t budget = 1000;
  std::string property;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

std::string coords_string(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s + ")";
}

std::string open_string(const BasicOpen& b) {
  return std::string(kind_name(b)) + " center=" + point_string(center_of(b)) + " radius=" + radius_of(b).str();
}

SetExpr require_set(const std::string& text, const char* flag, std::size_t n) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_set(text, n);
}

TopologySpec topology_from(const Options& o) {
  if (o.topology == "euclidean") return TopologySpec::euclidean(o.dimension);
  if (o.topology == "niemytzki") return TopologySpec::niemytzki(o.dimension);
  if (o.topology == "modified") return TopologySpec::modified(o.dimension, require_set(o.set, "--set", o.dimension));
  throw UsageError("--topology must be euclidean, niemytzki or modified");
}

InferOptions infer_options(const Options& o) { return InferOptions{o.budget, o.seed}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_classify(const Options& o, std::ostream& out) {
  const SetExpr a = require_set(o.set, "--set", o.dimension);
  const PropertyReport r = classify(a, o.dimension, infer_options(o));
  if (o.json) {
    emit(out, to_json(r));
    return kOk;
  }
  out << "space: tau(" << r.space << ") on X_" << r.dimension << '\n';
  for (const auto& p : r.properties) out << p.name << ": " << to_string(p.value) << '\n';
  out << "dim_X: " << (r.dim_x ? std::to_string(*r.dim_x) : "unknown") << '\n';
  for (const auto& p : r.boundary) out << "boundary." << p.name << ": " << to_string(p.value) << '\n';
  out << "boundary.dim: " << (r.boundary_dim ? std::to_string(*r.boundary_dim) : "unknown") << '\n';
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const SetExpr a = require_set(o.set, "--set", o.dimension);
  if (o.point.empty()) throw UsageError("--point is required");
  const Coords p = parse_coords(o.point, o.dimension - 1);
  const MemberVerdict v = member(a, p);
  if (o.json) {
    emit(out, Json{{"set", a.str()}, {"point", coords_to_json(p)}, {"member", std::string(member_string(v))}});
  } else {
    out << member_string(v) << '\n';
  }
  return kOk;
}

int cmd_nbhd(const Options& o, std::ostream& out) {
  const TopologySpec topo = topology_from(o);
  if (o.point.empty()) throw UsageError("--point is required");
  const Point p(parse_coords(o.point, o.dimension));
  const BasicOpen b = local_base_element(topo, p, Rat::parse(o.eps));
  if (o.json) {
    emit(out, Json{{"topology", topo.str()}, {"point", to_json(p)}, {"eps", o.eps}, {"neighborhood", to_json(b)}});
  } else {
    out << open_string(b) << '\n';
  }
  return kOk;
}

Point anchor_of(const SequenceFamily& f) {
  if (const auto* v = std::get_if<VerticalFamily>(&f)) return v->anchor;
  return std::get<TangentCircleFamily>(f).anchor;
}

int cmd_converge(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("--family is required");
  const TopologySpec topo = topology_from(o);
  const SequenceFamily fam = parse_family(o.family, o.dimension);
  const ConvergenceVerdict v = decide_convergence(fam, topo, anchor_of(fam));
  const std::string problem = verify_certificate(fam, topo, v);
  if (o.json) {
    Json j{{"family", family_string(fam)}, {"topology", topo.str()}, {"limit", to_json(anchor_of(fam))}};
    j.update(to_json(v));
    j["certificate_verified"] = problem.empty();
    emit(out, j);
  } else {
    out << "converges: " << (v.converges ? "true" : "false") << '\n';
    if (v.bound) out << "index bound: " << v.bound->description() << '\n';
    if (v.blocking) out << "blocking neighborhood: " << open_string(*v.blocking) << '\n';
    if (!v.isolating.empty()) {
      out << "discreteness radii: " << v.isolating.size() << " terms, first " << point_string(v.isolating[0].point)
          << " radius=" << v.isolating[0].radius.str() << '\n';
    }
    out << "certificate: " << (problem.empty() ? "verified" : "FAILED: " + problem) << '\n';
  }
  return problem.empty() ? kOk : kVerificationFailed;
}

std::string subset_line(const SubsetResult& s) {
  std::string line = std::string(to_string(s.verdict)) + " [" + s.rule + "]";
  if (s.witness) line += " witness " + coords_string(*s.witness);
  return line;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const SetExpr a = require_set(o.set_a, "--set-a", o.dimension);
  const SetExpr b = require_set(o.set_b, "--set-b", o.dimension);
  const Comparison c = compare_topologies(a, b, o.dimension, o.budget, o.seed);
  if (o.json) {
    Json j{{"a", a.str()}, {"b", b.str()}};
    j.update(to_json(c));
    emit(out, j);
  } else {
    out << "tau(A) vs tau(B): " << to_string(c.order) << (c.strict ? " (strict)" : "") << '\n';
    out << "A subset of B: " << subset_line(c.a_in_b) << '\n';
    out << "B subset of A: " << subset_line(c.b_in_a) << '\n';
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.suite.empty()) throw UsageError("--suite is required");
  if (!canonical_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteConfig cfg;
  cfg.suite = o.suite;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.dimension = o.dimension;
  const SuiteResult r = run_suite(cfg);
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << r.suite << " n=" << r.dimension << " seed=" << r.seed << " samples=" << r.samples
        << " checks=" << r.checks << " failures=" << r.failures.size() << ' ' << (r.passed() ? "PASS" : "FAIL")
        << '\n';
    for (const auto& f : r.failures) out << "  #" << f.index << ": " << f.reason << ' ' << f.input.dump() << '\n';
  }
  return r.passed() ? kOk : kVerificationFailed;
}

int cmd_explain(const Options& o, std::ostream& out) {
  const SetExpr a = require_set(o.set, "--set", o.dimension);
  if (o.property.empty()) throw UsageError("--property is required");
  const PropertyReport r = classify(a, o.dimension, infer_options(o));
  const std::vector<TraceStep> steps = explain(r, o.property);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : steps) arr.push_back(to_json(s));
    emit(out, Json{{"space", r.space}, {"dimension", r.dimension}, {"property", o.property}, {"trace", arr}});
    return kOk;
  }
  for (const auto& s : steps) {
    out << s.property << " = " << s.verdict << "  [" << s.rule << "]";
    if (!s.inputs.empty()) {
      out << " from";
      for (const auto& in : s.inputs) out << ' ' << in;
    }
    out << '\n';
    if (!s.citation.empty()) out << "    \"" << s.citation << "\"\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact n-dimensional Niemytzki half-space topologies", "niemytzki"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--dimension,-n", o.dimension, "ambient dimension n >= 2")->capture_default_str();
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto inference = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "witness search budget")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for witness search")->capture_default_str();
  };
  auto topology = [&](CLI::App* sub) {
    sub->add_option("--topology", o.topology, "euclidean | niemytzki | modified (with --set)")
        ->capture_default_str();
    sub->add_option("--set", o.set, "boundary set A for --topology modified");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify (X_n, tau(A))");
  common(classify_cmd);
  inference(classify_cmd);
  classify_cmd->add_option("--set", o.set, "boundary set A");

  CLI::App* member_cmd = app.add_subcommand("member", "membership of a point of L_n in A");
  common(member_cmd);
  member_cmd->add_option("--set", o.set, "boundary set A");
  member_cmd->add_option("--point", o.point, "n-1 coordinates, e.g. \"1/4\"");

  CLI::App* nbhd_cmd = app.add_subcommand("nbhd", "local base element at a point");
  common(nbhd_cmd);
  topology(nbhd_cmd);
  nbhd_cmd->add_option("--point", o.point, "n coordinates");
  nbhd_cmd->add_option("--eps", o.eps, "radius parameter")->capture_default_str();

  CLI::App* converge_cmd = app.add_subcommand("converge", "convergence of a closed-form sequence");
  common(converge_cmd);
  topology(converge_cmd);
  converge_cmd->add_option("--family", o.family, "vertical((a);r) or tangent-circle((a);eps)");

  CLI::App* compare_cmd = app.add_subcommand("compare", "compare tau(A) with tau(B)");
  common(compare_cmd);
  inference(compare_cmd);
  compare_cmd->add_option("--set-a", o.set_a, "boundary set A");
  compare_cmd->add_option("--set-b", o.set_b, "boundary set B");

  CLI::App* check_cmd = app.add_subcommand("check", "run a verification suite");
  common(check_cmd);
  check_cmd->add_option("--suite", o.suite, "S1..S7 or a suite name");
  check_cmd->add_option("--samples", o.samples, "sample count");
  check_cmd->add_option("--seed", o.seed, "sample seed")->capture_default_str();

  CLI::App* explain_cmd = app.add_subcommand("explain", "trace a property verdict");
  common(explain_cmd);
  inference(explain_cmd);
  explain_cmd->add_option("--set", o.set, "boundary set A");
  explain_cmd->add_option("--property", o.property, "property name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.dimension < 2) throw UsageError("--dimension must be at least 2");
    if (app.got_subcommand(classify_cmd)) return cmd_classify(o, out);
    if (app.got_subcommand(member_cmd)) return cmd_member(o, out);
    if (app.got_subcommand(nbhd_cmd)) return cmd_nbhd(o, out);
    if (app.got_subcommand(converge_cmd)) return cmd_converge(o, out);
    if (app.got_subcommand(compare_cmd)) return cmd_compare(o, out);
    if (app.got_subcommand(check_cmd)) return cmd_check(o, out);
    return cmd_explain(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const UndecidableMembership& e) {
    err << "undecidable: " << e.what() << '\n';
    return kUndecidable;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace niemytzki::cli
