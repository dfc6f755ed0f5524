// The rules of the cut-free calculus and their backward applications.
//
// Static rules are the G3 propositional rules with the principal formula
// copied into the premisses, plus T. The transitional rules 4, Mon, D1 and D2
// keep only the boxed part of the antecedent as context:
//
//   4    G |- []a, D          from  G^[] |- a
//   T    G, []a |- D          from  G, []a, a |- D
//   Mon  G, O(a/b) |- O(c/d), D   from  G^[], a |- c;  G^[], b |- d;  G^[], d |- b
//   D1   G, O(a/b) |- D       from  G^[], a |-
//   D2   G, O(a/b), O(c/d) |- D   from  G^[], a, c |-;  G^[], b |- d;  G^[], d |- b
//
// Cut, weakening, contraction and Assumption leaves are only used by the
// derivation checker and are never enumerated here.
#ifndef MDL_CALCULUS_H_
#define MDL_CALCULUS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mdl/formula.h"
#include "mdl/sequent.h"

namespace mdl {

enum class Rule : std::uint8_t {
  kInit,
  kBottomL,
  kNegL,
  kNegR,
  kAndL,
  kAndR,
  kOrL,
  kOrR,
  kImpL,
  kImpR,
  kT,
  kFour,
  kMon,
  kD1,
  kD2,
  kCut,
  kWeakL,
  kWeakR,
  kConL,
  kConR,
  kAssumption,
};

enum class RuleClass : std::uint8_t {
  kZeroPremiss,
  kStaticOne,
  kStaticTwo,
  kTransitional,
  kStructural,
};

std::string_view RuleName(Rule r);
std::optional<Rule> RuleFromName(std::string_view name);
RuleClass ClassOf(Rule r);
// Number of premisses of the schema.
int PremissCount(Rule r);

struct CalculusOptions {
  // Restrict Init to shared atoms instead of any shared formula.
  bool atomic_init = false;
};

struct RuleApplication {
  Rule rule;
  // One formula, except Mon (antecedent obligation, succedent obligation)
  // and D2 (the two antecedent obligations).
  std::vector<Formula> principal;
  std::vector<SetSequent> premisses;
};

bool IsInitial(const SetSequent& s, const CalculusOptions& opts = {});

// Every productive backward application to s: one-premiss static, then
// two-premiss static, then transitional (D1, D2, Mon, 4).
std::vector<RuleApplication> Applications(const SetSequent& s, const CalculusOptions& opts = {});

// ---------------------------------------------------------------------------
// Indexed layer used by proof search: formulas are numbered within the
// subformula closure of the input, sequents are pairs of bitsets.

using Bits = boost::dynamic_bitset<std::uint64_t>;
using FormulaId = std::uint32_t;

class Universe {
 public:
  explicit Universe(const std::vector<Formula>& roots);

  std::size_t size() const { return formulas_.size(); }
  const Formula& formula(FormulaId id) const { return formulas_[id]; }
  Kind kind(FormulaId id) const { return kinds_[id]; }
  FormulaId child(FormulaId id, int i) const { return children_[id][i]; }
  std::optional<FormulaId> Find(const Formula& f) const;
  FormulaId Id(const Formula& f) const;

  Bits Empty() const { return Bits(size()); }
  const Bits& boxes() const { return boxes_; }
  const Bits& atoms() const { return atoms_; }
  std::optional<FormulaId> bottom() const { return bottom_; }

  Bits ToBits(const FormulaSet& fs) const;
  FormulaSet ToSet(const Bits& bits) const;

 private:
  std::vector<Formula> formulas_;
  std::map<Formula, FormulaId> index_;
  std::vector<Kind> kinds_;
  std::vector<std::array<FormulaId, 2>> children_;
  Bits boxes_;
  Bits atoms_;
  std::optional<FormulaId> bottom_;
};

struct IndexedSequent {
  Bits ante;
  Bits succ;

  friend bool operator==(const IndexedSequent&, const IndexedSequent&) = default;
  bool SubsumedBy(const IndexedSequent& other) const {
    return ante.is_subset_of(other.ante) && succ.is_subset_of(other.succ);
  }
};

struct IndexedApplication {
  Rule rule;
  std::array<FormulaId, 2> principal{};
  std::uint8_t principal_count = 1;
  std::vector<IndexedSequent> premisses;
};

class IndexedCalculus {
 public:
  IndexedCalculus(const Universe& u, CalculusOptions opts) : u_(u), opts_(opts) {}

  IndexedSequent Convert(const SetSequent& s) const;
  SetSequent Convert(const IndexedSequent& s) const;
  RuleApplication Convert(const IndexedApplication& a) const;

  // Rule (Init or BottomL) and principal formula closing s, if any.
  std::optional<std::pair<Rule, FormulaId>> InitialWitness(const IndexedSequent& s) const;

  std::vector<IndexedApplication> OnePremissStatic(const IndexedSequent& s) const;
  std::vector<IndexedApplication> TwoPremissStatic(const IndexedSequent& s) const;
  std::vector<IndexedApplication> Transitional(const IndexedSequent& s) const;

  const Universe& universe() const { return u_; }
  const CalculusOptions& options() const { return opts_; }

 private:
  const Universe& u_;
  CalculusOptions opts_;
};

}  // namespace mdl

#endif  // MDL_CALCULUS_H_
