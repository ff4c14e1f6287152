#include "niemytzki/set_expr.hpp"

#include <string>

#include "niemytzki/errors.hpp"

namespace niemytzki {

struct SetExpr::Node {
  SetKind kind;
  std::vector<Coords> points;
  Rat radius;
  std::vector<SetExpr> children;
};

SetExpr SetExpr::make(SetKind kind) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  return SetExpr(std::move(node));
}

SetExpr SetExpr::empty() { return make(SetKind::Empty); }
SetExpr SetExpr::all() { return make(SetKind::All); }
SetExpr SetExpr::rationals() { return make(SetKind::Rationals); }
SetExpr SetExpr::lattice() { return make(SetKind::Lattice); }
SetExpr SetExpr::cantor() { return make(SetKind::Cantor); }
SetExpr SetExpr::bernstein() { return make(SetKind::Bernstein); }

SetExpr SetExpr::point(Coords p) {
  if (p.empty()) throw DimensionError("point needs at least one coordinate");
  auto node = std::make_shared<Node>();
  node->kind = SetKind::Point;
  node->points.push_back(std::move(p));
  return SetExpr(std::move(node));
}

SetExpr SetExpr::finite(std::vector<Coords> pts) {
  if (pts.empty()) throw DomainError("finite{} needs at least one point");
  for (const auto& p : pts) {
    if (p.size() != pts.front().size()) throw DimensionError("finite{} points disagree on arity");
  }
  auto node = std::make_shared<Node>();
  node->kind = SetKind::Finite;
  node->points = std::move(pts);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::cball(Coords center, Rat radius) {
  if (radius.sign() <= 0) throw DomainError("ball radius must be positive");
  if (center.empty()) throw DimensionError("ball centre needs at least one coordinate");
  auto node = std::make_shared<Node>();
  node->kind = SetKind::CBall;
  node->points.push_back(std::move(center));
  node->radius = std::move(radius);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::oball(Coords center, Rat radius) {
  if (radius.sign() <= 0) throw DomainError("ball radius must be positive");
  if (center.empty()) throw DimensionError("ball centre needs at least one coordinate");
  auto node = std::make_shared<Node>();
  node->kind = SetKind::OBall;
  node->points.push_back(std::move(center));
  node->radius = std::move(radius);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::complement(SetExpr e) {
  if (e.kind() == SetKind::Complement) return e.children().front();
  auto node = std::make_shared<Node>();
  node->kind = SetKind::Complement;
  node->children.push_back(std::move(e));
  return SetExpr(std::move(node));
}

namespace {

std::vector<SetExpr> flatten(SetKind kind, std::vector<SetExpr> es) {
  std::vector<SetExpr> flat;
  for (auto& e : es) {
    if (e.kind() == kind) {
      for (const auto& c : e.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(e));
    }
  }
  return flat;
}

}  // namespace

SetExpr SetExpr::union_of(std::vector<SetExpr> es) {
  if (es.empty()) throw DomainError("union of an empty list");
  auto flat = flatten(SetKind::Union, std::move(es));
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = SetKind::Union;
  node->children = std::move(flat);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::inter(std::vector<SetExpr> es) {
  if (es.empty()) throw DomainError("intersection of an empty list");
  auto flat = flatten(SetKind::Inter, std::move(es));
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<Node>();
  node->kind = SetKind::Inter;
  node->children = std::move(flat);
  return SetExpr(std::move(node));
}

SetKind SetExpr::kind() const { return node_->kind; }

bool SetExpr::is_primitive() const {
  const auto k = kind();
  return k != SetKind::Complement && k != SetKind::Union && k != SetKind::Inter;
}

const std::vector<Coords>& SetExpr::points() const { return node_->points; }
const Rat& SetExpr::radius() const { return node_->radius; }
const std::vector<SetExpr>& SetExpr::children() const { return node_->children; }

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.points() == b.points() && a.radius() == b.radius() &&
         a.children() == b.children();
}

namespace {

void print_coords(std::string& out, const Coords& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += c[i].str();
  }
}

void print(std::string& out, const SetExpr& e);

void print_child(std::string& out, const SetExpr& child, bool parenthesize) {
  if (parenthesize) out += '(';
  print(out, child);
  if (parenthesize) out += ')';
}

void print(std::string& out, const SetExpr& e) {
  switch (e.kind()) {
    case SetKind::Empty: out += "empty"; return;
    case SetKind::All: out += "all"; return;
    case SetKind::Rationals: out += "rationals"; return;
    case SetKind::Lattice: out += "lattice"; return;
    case SetKind::Cantor: out += "cantor"; return;
    case SetKind::Bernstein: out += "bernstein"; return;
    case SetKind::Point:
      out += "point(";
      print_coords(out, e.points().front());
      out += ')';
      return;
    case SetKind::Finite:
      out += "finite{";
      for (std::size_t i = 0; i < e.points().size(); ++i) {
        if (i) out += ';';
        print_coords(out, e.points()[i]);
      }
      out += '}';
      return;
    case SetKind::CBall:
    case SetKind::OBall:
      out += e.kind() == SetKind::CBall ? "cball(" : "oball(";
      print_coords(out, e.points().front());
      out += ';';
      out += e.radius().str();
      out += ')';
      return;
    case SetKind::Complement: {
      const auto& c = e.children().front();
      out += '!';
      print_child(out, c, c.kind() == SetKind::Union || c.kind() == SetKind::Inter);
      return;
    }
    case SetKind::Union:
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += " | ";
        print_child(out, e.children()[i], false);
      }
      return;
    case SetKind::Inter:
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += " & ";
        print_child(out, e.children()[i], e.children()[i].kind() == SetKind::Union);
      }
      return;
  }
}

}  // namespace

std::string SetExpr::str() const {
  std::string out;
  print(out, *this);
  return out;
}

void check_arity(const SetExpr& e, std::size_t n) {
  for (const auto& p : e.points()) {
    if (p.size() + 1 != n) {
      throw DimensionError("coordinate arity " + std::to_string(p.size()) + " in '" + e.str() +
                           "' does not match dimension " + std::to_string(n));
    }
  }
  for (const auto& c : e.children()) check_arity(c, n);
}

}  // namespace niemytzki
