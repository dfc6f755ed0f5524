#include "mdl/consistency.h"

#include <algorithm>

#include "mdl/parser.h"

namespace mdl {

Sequent BoxAssumptions(const FormulaSet& assumptions, const Sequent& goal) {
  Sequent s;
  for (const Formula& a : assumptions) s.ante.push_back(Formula::Box(a));
  s.ante.insert(s.ante.end(), goal.ante.begin(), goal.ante.end());
  s.succ = goal.succ;
  return s;
}

DerivesResult Derives(const FormulaSet& assumptions, const Sequent& goal,
                      const SearchOptions& opts) {
  DerivesResult out;
  out.reduced = BoxAssumptions(assumptions, goal);
  ProofResult r = Prove(out.reduced, opts);
  out.verdict = r.verdict;
  out.visited = r.visited();
  if (r.verdict == Verdict::kAccepted) {
    out.derivation = std::move(r.derivation);
  } else {
    out.countermodel = BuildCountermodel(r);
  }
  return out;
}

ConsistencyResult OuterConsistent(const FormulaSet& assumptions, const SearchOptions& opts) {
  DerivesResult d = Derives(assumptions, Sequent{}, opts);
  const bool consistent = d.verdict == Verdict::kRejected;
  return {consistent, std::move(d)};
}

std::vector<Sequent> AssumptionSequents(const FormulaSet& assumptions, bool boxed) {
  std::vector<Sequent> out;
  for (const Formula& a : assumptions) out.push_back(Sequent{{}, {boxed ? Formula::Box(a) : a}});
  return out;
}

Derivation FromAssumptions(const Derivation& reduced, const FormulaSet& assumptions, bool boxed) {
  Derivation d = reduced;
  int k = 0;
  for (const Formula& a : assumptions) {
    const Formula box = Formula::Box(a);
    ++k;
    // |- []a, either assumed or by Four from |- a.
    Derivation leaf;
    leaf.rule = Rule::kAssumption;
    leaf.assumption_tag = "a" + std::to_string(k);
    Derivation left;
    if (boxed) {
      leaf.conclusion = Sequent{{}, {box}};
      left = std::move(leaf);
    } else {
      leaf.conclusion = Sequent{{}, {a}};
      left = Derivation{Sequent{{}, {box}}, Rule::kFour, {box}, {std::move(leaf)}, std::nullopt};
    }
    Sequent rest = d.conclusion;
    auto it = std::find(rest.ante.begin(), rest.ante.end(), box);
    if (it == rest.ante.end()) {
      throw std::invalid_argument("boxed assumption " + PrintFormula(box) +
                                  " missing from the derivation's antecedent");
    }
    rest.ante.erase(it);
    std::vector<Derivation> kids;
    kids.push_back(std::move(left));
    kids.push_back(std::move(d));
    d = Derivation{std::move(rest), Rule::kCut, {box}, std::move(kids), std::nullopt};
  }
  return d;
}

nlohmann::json DerivesToJson(const DerivesResult& r) {
  nlohmann::json j;
  j["reduced"] = PrintSequent(r.reduced);
  j["visited"] = r.visited;
  if (r.verdict == Verdict::kAccepted) {
    j["verdict"] = "derivable";
    j["witness"] = DerivationToJson(*r.derivation);
  } else {
    j["verdict"] = "underivable";
    j["witness"] = CounterModelToJson(*r.countermodel);
  }
  return j;
}

nlohmann::json ConsistencyToJson(const ConsistencyResult& r) {
  nlohmann::json j = DerivesToJson(r.detail);
  j["verdict"] = r.consistent ? "consistent" : "inconsistent";
  return j;
}

}  // namespace mdl
