// Backward proof search with history-based loop checking.
//
// A history is the list of (saturated) set sequents on the current branch.
// Each visited history is saturated under the one-premiss static rules and
// accepted if initial; otherwise every two-premiss static application is
// tried, then every transitional one. A transitional premiss that is
// subsumed (on both sides) by the last sequent of some prefix of the current
// history is rejected without recursion. The full run is recorded as a
// SearchTree so that a rejected run can be turned into a countermodel.
#ifndef MDL_SEARCH_H_
#define MDL_SEARCH_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mdl/calculus.h"
#include "mdl/derivation.h"
#include "mdl/sequent.h"

namespace mdl {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct SearchOptions {
  CalculusOptions calculus;
  // Maximum number of visited histories.
  std::size_t budget = kDefaultBudget;
  // Also loop-check premisses of two-premiss static rules.
  bool static_loop_check = false;
  // Before the two-premiss static rules, branch on every obligation
  // condition the sequent leaves undecided (an analytic cut). Rejected runs
  // then decide all conditions in every history, which the countermodel
  // construction relies on; accepted runs may contain Cut.
  bool decide_conditions = false;
};

// Thrown when the budget is exhausted; the question stays open.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::size_t visited);
  std::size_t visited() const { return visited_; }

 private:
  std::size_t visited_;
};

enum class Verdict { kAccepted, kRejected };

struct PremissOutcome {
  enum class Status {
    kExplored,  // node is the child history
    kLoop,      // node is the subsuming prefix of the history
    kSkipped,   // not visited: an earlier premiss of the application failed
  };
  Status status = Status::kSkipped;
  int node = -1;
  bool accepted = false;
};

struct TriedApplication {
  IndexedApplication app;
  std::vector<PremissOutcome> premisses;
  bool accepted = false;
};

struct SearchNode {
  int parent = -1;
  // Sequent appended to the parent history, before saturation.
  IndexedSequent input;
  // last(H) after saturation.
  IndexedSequent sequent;
  Verdict verdict = Verdict::kRejected;
  // Prefix entries of an input history are recorded but not searched.
  bool searched = true;
  std::optional<std::pair<Rule, FormulaId>> initial;
  std::vector<TriedApplication> tried;
  int accepted_application = -1;
};

class SearchTree {
 public:
  SearchTree(std::shared_ptr<const Universe> universe, SearchOptions options)
      : universe_(std::move(universe)), options_(options) {}

  const Universe& universe() const { return *universe_; }
  std::shared_ptr<const Universe> shared_universe() const { return universe_; }
  IndexedCalculus calculus() const { return IndexedCalculus(*universe_, options_.calculus); }
  const SearchOptions& options() const { return options_; }

  const std::vector<SearchNode>& nodes() const { return nodes_; }
  const SearchNode& node(int i) const { return nodes_[i]; }
  int root() const { return root_; }
  Verdict verdict() const { return nodes_[root_].verdict; }

  // The history ending at node i, oldest entry first.
  std::vector<int> Path(int i) const;
  std::vector<SetSequent> History(int i) const;
  // True iff the history of a is a prefix of the history of b.
  bool IsPrefix(int a, int b) const;

 private:
  friend class Searcher;
  friend SearchTree Search(const std::vector<SetSequent>& history, const SearchOptions& opts);

  std::shared_ptr<const Universe> universe_;
  SearchOptions options_;
  std::vector<SearchNode> nodes_;
  int root_ = 0;
};

struct SaturationStep {
  Rule rule;
  FormulaId principal;
};

// Least superset of s closed under backward NegL, NegR, AndL, OrR, ImpR and
// T. When steps is given, the applied rules are appended in order.
IndexedSequent Saturate(const IndexedCalculus& calc, IndexedSequent s,
                        std::vector<SaturationStep>* steps = nullptr);
SetSequent Saturate(const SetSequent& s);

// Searches the last entry of a nonempty history.
SearchTree Search(const std::vector<SetSequent>& history, const SearchOptions& opts = {});

struct ProofResult {
  Verdict verdict;
  // Set when accepted; its conclusion is the input sequent as given.
  std::optional<Derivation> derivation;
  std::shared_ptr<const SearchTree> trace;
  Sequent goal;

  std::size_t visited() const { return trace->nodes().size(); }
};

ProofResult Prove(const Sequent& s, const SearchOptions& opts = {});

// Derivation of the (multiset) sequent `goal` read off an accepted trace.
Derivation AssembleDerivation(const SearchTree& tree, const Sequent& goal);

}  // namespace mdl

#endif  // MDL_SEARCH_H_
