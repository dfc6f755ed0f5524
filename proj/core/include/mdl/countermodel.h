// Countermodels read off a rejecting search run.
//
// The run is repeated with decide_conditions set unless it already was, so
// every history puts each obligation condition on one side. Worlds are the
// rejected histories at which nothing branches any more; a history that
// branches is represented by the world reached along its failing premiss.
// R is generated by the prefix order, the failing premisses of transitional
// rules and the detected loops, then closed. Each obligation O(a/b) in a
// world's antecedent yields the generator (worlds with a in the antecedent,
// worlds with b in the antecedent), both cut to R[w].
#ifndef MDL_COUNTERMODEL_H_
#define MDL_COUNTERMODEL_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdl/search.h"
#include "mdl/semantics.h"
#include "mdl/sequent.h"

namespace mdl {

// Raised when a construction fails its own certificate. Indicates a bug.
class CountermodelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct AuditReport {
  bool ok = true;
  std::string world;
  std::string formula;
  // "ante": should hold but does not; "succ": should fail but holds.
  std::string side;
};

struct CounterModel {
  MModel model;
  std::string root;
  Sequent goal;
  // World index to trace node.
  std::vector<int> nodes;
  // World id to its history, oldest sequent first.
  std::map<std::string, std::vector<std::string>> histories;
  FrameReport frame;
  AuditReport audit;
  bool goal_falsified = false;

  bool certified() const { return frame.ok() && audit.ok && goal_falsified; }
};

struct CountermodelOptions {
  // Every visited history of the given run is a world, with no deciding
  // rerun and no representatives. Kept for comparison; such models do not
  // certify in general.
  bool literal = false;
  // Throw CountermodelError unless the result certifies.
  bool strict = true;
};

CounterModel BuildCountermodel(const SearchTree& trace, const Sequent& goal,
                               const CountermodelOptions& opts = {});
CounterModel BuildCountermodel(const ProofResult& rejected, const CountermodelOptions& opts = {});

// Every antecedent formula of a world's last sequent holds there and every
// succedent formula fails.
AuditReport TruthLemmaAudit(const CounterModel& cm, const SearchTree& trace);

// Model JSON plus root, goal, certified and the history sidecar.
nlohmann::json CounterModelToJson(const CounterModel& cm);

}  // namespace mdl

#endif  // MDL_COUNTERMODEL_H_
