// Derivation trees and the checker that validates them rule by rule.
//
// The checker works on multiset sequents and knows every rule of the
// calculus together with the structural rules (weakening, contraction, cut)
// and Assumption leaves, so it also validates derivations from a set of
// assumed sequents.
#ifndef MDL_DERIVATION_H_
#define MDL_DERIVATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdl/calculus.h"
#include "mdl/formula.h"
#include "mdl/parser.h"
#include "mdl/sequent.h"

namespace mdl {

struct Derivation {
  Sequent conclusion;
  Rule rule = Rule::kInit;
  // Cut: the cut formula. WeakL/WeakR: the added formulas. D2 and Mon: two
  // obligations. Otherwise the single principal formula.
  std::vector<Formula> principal;
  std::vector<Derivation> children;
  // Set on Assumption leaves.
  std::optional<std::string> assumption_tag;
};

struct CheckResult {
  bool ok = true;
  // Child indices from the root to the offending node.
  std::vector<std::size_t> path;
  std::string message;

  explicit operator bool() const { return ok; }
};

struct KernelOptions {
  bool atomic_init = false;
};

CheckResult CheckDerivation(const Derivation& d, const std::vector<Sequent>& assumptions = {},
                            const KernelOptions& opts = {});

// /\ante -> \/succ, both sides right-nested; true and false for empty sides.
Formula Interpretation(const Sequent& s);

std::map<Rule, int> RuleCounts(const Derivation& d);
std::size_t NodeCount(const Derivation& d);

// node = {rule, principal: [formula], conclusion: sequent, children: [node]}
nlohmann::json DerivationToJson(const Derivation& d);
// Throws ParseError for malformed formulas and std::invalid_argument for
// malformed structure.
Derivation DerivationFromJson(const nlohmann::json& j);

// Indented rule tree, conclusion first.
std::string RenderDerivation(const Derivation& d, PrintOptions opts = {});

}  // namespace mdl

#endif  // MDL_DERIVATION_H_
