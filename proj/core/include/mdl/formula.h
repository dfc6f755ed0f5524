// Formula language: propositional connectives, the S4 box and the dyadic
// obligation O(body / cond). Formulas are immutable shared trees with
// structural equality and a structural total order.
#ifndef MDL_FORMULA_H_
#define MDL_FORMULA_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mdl {

enum class Kind : std::uint8_t {
  kAtom,
  kBottom,
  kNeg,
  kAnd,
  kOr,
  kImp,
  kBox,
  kObl,
};

class Formula {
 public:
  static Formula Atom(std::string name);
  static Formula Bottom();
  // Sugar: true is Neg(Bottom).
  static Formula Top();
  static Formula Neg(Formula f);
  static Formula And(Formula l, Formula r);
  static Formula Or(Formula l, Formula r);
  static Formula Imp(Formula l, Formula r);
  static Formula Box(Formula f);
  static Formula Obl(Formula body, Formula cond);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool IsTop() const;

  const std::string& name() const { return node_->name; }
  std::size_t arity() const;
  // Operand of Neg/Box, or left/right component of a binary node. For Obl,
  // child(0) is the body and child(1) the condition.
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  const Formula& sub() const { return child(0); }
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }
  const Formula& body() const { return child(0); }
  const Formula& cond() const { return child(1); }

  // Node count.
  std::size_t size() const { return node_->size; }
  int modal_depth() const { return node_->modal_depth; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
    std::size_t size = 1;
    int modal_depth = 0;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Kind kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

// f together with all of its proper subformulas.
FormulaSet Subformulas(const Formula& f);

// Atom names occurring in f.
std::set<std::string> Atoms(const Formula& f);

// Keeps the formulas of the form []phi, box included.
FormulaSet BoxedPart(const FormulaSet& g);
std::vector<Formula> BoxedPart(const std::vector<Formula>& g);

}  // namespace mdl

template <>
struct std::hash<mdl::Formula> {
  std::size_t operator()(const mdl::Formula& f) const noexcept { return f.hash(); }
};

#endif  // MDL_FORMULA_H_
