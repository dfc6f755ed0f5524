#include "mdl/sequent.h"

#include <algorithm>

namespace mdl {

SetSequent ToSetSequent(const Sequent& s) {
  return SetSequent{FormulaSet(s.ante.begin(), s.ante.end()),
                    FormulaSet(s.succ.begin(), s.succ.end())};
}

Sequent ToSequent(const SetSequent& s) {
  return Sequent{std::vector<Formula>(s.ante.begin(), s.ante.end()),
                 std::vector<Formula>(s.succ.begin(), s.succ.end())};
}

bool SameMultiset(std::vector<Formula> a, std::vector<Formula> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool SameSequent(const Sequent& a, const Sequent& b) {
  return SameMultiset(a.ante, b.ante) && SameMultiset(a.succ, b.succ);
}

}  // namespace mdl
