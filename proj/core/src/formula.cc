#include "mdl/formula.h"

#include <algorithm>
#include <cassert>
#include <utility>

namespace mdl {

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void CollectSubformulas(const Formula& f, FormulaSet* out) {
  if (!out->insert(f).second) return;
  for (std::size_t i = 0; i < f.arity(); ++i) CollectSubformulas(f.child(i), out);
}

void CollectAtoms(const Formula& f, std::set<std::string>* out) {
  if (f.is(Kind::kAtom)) {
    out->insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) CollectAtoms(f.child(i), out);
}

}  // namespace

Formula Formula::Make(Kind kind, std::string name, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->children = std::move(children);
  std::size_t h = std::hash<int>{}(static_cast<int>(kind));
  h = Mix(h, std::hash<std::string>{}(node->name));
  int depth = 0;
  for (const Formula& c : node->children) {
    node->size += c.size();
    depth = std::max(depth, c.modal_depth());
    h = Mix(h, c.hash());
  }
  if (kind == Kind::kBox || kind == Kind::kObl) ++depth;
  node->modal_depth = depth;
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::Atom(std::string name) { return Make(Kind::kAtom, std::move(name), {}); }

Formula Formula::Bottom() {
  static const Formula bottom = Make(Kind::kBottom, "", {});
  return bottom;
}

Formula Formula::Top() { return Neg(Bottom()); }

Formula Formula::Neg(Formula f) { return Make(Kind::kNeg, "", {std::move(f)}); }

Formula Formula::And(Formula l, Formula r) {
  return Make(Kind::kAnd, "", {std::move(l), std::move(r)});
}

Formula Formula::Or(Formula l, Formula r) {
  return Make(Kind::kOr, "", {std::move(l), std::move(r)});
}

Formula Formula::Imp(Formula l, Formula r) {
  return Make(Kind::kImp, "", {std::move(l), std::move(r)});
}

Formula Formula::Box(Formula f) { return Make(Kind::kBox, "", {std::move(f)}); }

Formula Formula::Obl(Formula body, Formula cond) {
  return Make(Kind::kObl, "", {std::move(body), std::move(cond)});
}

bool Formula::IsTop() const { return is(Kind::kNeg) && sub().is(Kind::kBottom); }

std::size_t Formula::arity() const { return node_->children.size(); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  if (a.name() != b.name()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.child(i) <=> b.child(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

FormulaSet Subformulas(const Formula& f) {
  FormulaSet out;
  CollectSubformulas(f, &out);
  return out;
}

std::set<std::string> Atoms(const Formula& f) {
  std::set<std::string> out;
  CollectAtoms(f, &out);
  return out;
}

FormulaSet BoxedPart(const FormulaSet& g) {
  FormulaSet out;
  for (const Formula& f : g) {
    if (f.is(Kind::kBox)) out.insert(out.end(), f);
  }
  return out;
}

std::vector<Formula> BoxedPart(const std::vector<Formula>& g) {
  std::vector<Formula> out;
  std::copy_if(g.begin(), g.end(), std::back_inserter(out),
               [](const Formula& f) { return f.is(Kind::kBox); });
  return out;
}

}  // namespace mdl
