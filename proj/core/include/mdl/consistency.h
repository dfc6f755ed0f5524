// Derivability from a set of assumed formulas, reduced to plain derivability
// by boxing the assumptions: A derives G |- D iff []A, G |- D is derivable.
#ifndef MDL_CONSISTENCY_H_
#define MDL_CONSISTENCY_H_

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdl/countermodel.h"
#include "mdl/derivation.h"
#include "mdl/formula.h"
#include "mdl/search.h"

namespace mdl {

struct DerivesResult {
  Verdict verdict;
  // []A, G |- D.
  Sequent reduced;
  // Derivation of the reduced sequent, when accepted.
  std::optional<Derivation> derivation;
  // Certified countermodel of the reduced sequent, when rejected. Its root
  // makes every assumption true throughout R[root].
  std::optional<CounterModel> countermodel;
  std::size_t visited = 0;
};

// Boxed assumptions come first, in set order.
Sequent BoxAssumptions(const FormulaSet& assumptions, const Sequent& goal);
// Throws BudgetExhausted.
DerivesResult Derives(const FormulaSet& assumptions, const Sequent& goal,
                      const SearchOptions& opts = {});

struct ConsistencyResult {
  bool consistent;
  DerivesResult detail;
};

// Consistent iff []A |- is not derivable.
ConsistencyResult OuterConsistent(const FormulaSet& assumptions, const SearchOptions& opts = {});

// Turns a derivation of []a1, ..., []an, G |- D (as produced by Derives)
// into a derivation of G |- D whose leaves may be the assumption sequents
// |- ai (boxed = false: each closed by Four) or |- []ai (boxed = true), cut
// against the boxed formulas one at a time.
Derivation FromAssumptions(const Derivation& reduced, const FormulaSet& assumptions,
                           bool boxed = false);
// The assumption sequents FromAssumptions uses.
std::vector<Sequent> AssumptionSequents(const FormulaSet& assumptions, bool boxed = false);

// {verdict, witness}: derivable/underivable or consistent/inconsistent,
// with the derivation or the countermodel as witness.
nlohmann::json DerivesToJson(const DerivesResult& r);
nlohmann::json ConsistencyToJson(const ConsistencyResult& r);

}  // namespace mdl

#endif  // MDL_CONSISTENCY_H_
