#ifndef MDL_SEQUENT_H_
#define MDL_SEQUENT_H_

#include <vector>

#include "mdl/formula.h"

namespace mdl {

// Two-sided sequent over multisets; element order is irrelevant.
struct Sequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;
};

// Set-based sequent, the unit of proof search.
struct SetSequent {
  FormulaSet ante;
  FormulaSet succ;

  friend bool operator==(const SetSequent&, const SetSequent&) = default;
  friend auto operator<=>(const SetSequent&, const SetSequent&) = default;
};

SetSequent ToSetSequent(const Sequent& s);
Sequent ToSequent(const SetSequent& s);

// Multiset equality of the two sides.
bool SameMultiset(std::vector<Formula> a, std::vector<Formula> b);
bool SameSequent(const Sequent& a, const Sequent& b);

}  // namespace mdl

#endif  // MDL_SEQUENT_H_
