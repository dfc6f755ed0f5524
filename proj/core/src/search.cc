#include "mdl/search.h"

#include <algorithm>
#include <string>

namespace mdl {

BudgetExhausted::BudgetExhausted(std::size_t visited)
    : std::runtime_error("search budget exhausted after " + std::to_string(visited) +
                         " histories"),
      visited_(visited) {}

// --- SearchTree -------------------------------------------------------------

std::vector<int> SearchTree::Path(int i) const {
  std::vector<int> path;
  for (; i >= 0; i = nodes_[i].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<SetSequent> SearchTree::History(int i) const {
  IndexedCalculus calc = calculus();
  std::vector<SetSequent> out;
  for (int n : Path(i)) out.push_back(calc.Convert(nodes_[n].sequent));
  return out;
}

bool SearchTree::IsPrefix(int a, int b) const {
  for (; b >= 0; b = nodes_[b].parent) {
    if (b == a) return true;
  }
  return false;
}

// --- Saturation -----------------------------------------------------------------

IndexedSequent Saturate(const IndexedCalculus& calc, IndexedSequent s,
                        std::vector<SaturationStep>* steps) {
  for (;;) {
    std::vector<IndexedApplication> apps = calc.OnePremissStatic(s);
    if (apps.empty()) return s;
    if (steps) steps->push_back(SaturationStep{apps.front().rule, apps.front().principal[0]});
    s = std::move(apps.front().premisses.front());
  }
}

SetSequent Saturate(const SetSequent& s) {
  std::vector<Formula> roots(s.ante.begin(), s.ante.end());
  roots.insert(roots.end(), s.succ.begin(), s.succ.end());
  Universe u(roots);
  IndexedCalculus calc(u, {});
  return calc.Convert(Saturate(calc, calc.Convert(s)));
}

// --- Search ----------------------------------------------------------------------

class Searcher {
 public:
  Searcher(SearchTree* tree, const SearchOptions& opts)
      : tree_(tree), calc_(tree->calculus()), opts_(opts), conditions_(tree->universe().Empty()) {
    const Universe& u = tree->universe();
    for (FormulaId f = 0; f < u.size(); ++f) {
      if (u.kind(f) == Kind::kObl) conditions_.set(u.child(f, 1));
    }
  }

  int AddPrefix(int parent, const IndexedSequent& s) {
    SearchNode n;
    n.parent = parent;
    n.input = s;
    n.sequent = s;
    n.searched = false;
    tree_->nodes_.push_back(std::move(n));
    return static_cast<int>(tree_->nodes_.size()) - 1;
  }

  int Visit(int parent, const IndexedSequent& input) {
    std::vector<SearchNode>& nodes = tree_->nodes_;
    if (nodes.size() >= opts_.budget) throw BudgetExhausted(nodes.size());
    const int id = static_cast<int>(nodes.size());
    {
      SearchNode n;
      n.parent = parent;
      n.input = input;
      n.sequent = Saturate(calc_, input);
      n.initial = calc_.InitialWitness(n.sequent);
      if (n.initial) n.verdict = Verdict::kAccepted;
      nodes.push_back(std::move(n));
    }
    if (nodes[id].initial) return id;

    // Copies: recursion below may reallocate the node vector.
    const IndexedSequent current = nodes[id].sequent;
    if (opts_.decide_conditions) {
      // Either premiss of a cut is a weakening of the conclusion, so the
      // first cut settles the node.
      const Bits open = conditions_ - (current.ante | current.succ);
      if (auto f = open.find_first(); f != Bits::npos) {
        const auto psi = static_cast<FormulaId>(f);
        IndexedSequent left = current;
        IndexedSequent right = current;
        left.succ.set(psi);
        right.ante.set(psi);
        IndexedApplication cut{Rule::kCut, {psi, 0}, 1, {std::move(left), std::move(right)}};
        Try(id, std::move(cut), opts_.static_loop_check);
        return id;
      }
    }
    for (IndexedApplication& app : calc_.TwoPremissStatic(current)) {
      if (Try(id, std::move(app), opts_.static_loop_check)) return id;
    }
    for (IndexedApplication& app : calc_.Transitional(current)) {
      if (Try(id, std::move(app), true)) return id;
    }
    return id;
  }

 private:
  // The prefix of the history at `node` (possibly the whole history) whose
  // last sequent subsumes `premiss`.
  std::optional<int> FindSubsumer(int node, const IndexedSequent& premiss) const {
    for (int n = node; n >= 0; n = tree_->nodes_[n].parent) {
      if (premiss.SubsumedBy(tree_->nodes_[n].sequent)) return n;
    }
    return std::nullopt;
  }

  bool Try(int id, IndexedApplication app, bool loop_check) {
    TriedApplication tried;
    tried.premisses.resize(app.premisses.size());
    bool ok = true;
    for (std::size_t k = 0; k < app.premisses.size(); ++k) {
      PremissOutcome& out = tried.premisses[k];
      if (loop_check) {
        if (auto witness = FindSubsumer(id, app.premisses[k])) {
          out = PremissOutcome{PremissOutcome::Status::kLoop, *witness, false};
          ok = false;
          break;
        }
      }
      const int child = Visit(id, app.premisses[k]);
      const bool accepted = tree_->nodes_[child].verdict == Verdict::kAccepted;
      out = PremissOutcome{PremissOutcome::Status::kExplored, child, accepted};
      if (!accepted) {
        ok = false;
        break;
      }
    }
    tried.app = std::move(app);
    tried.accepted = ok;
    SearchNode& n = tree_->nodes_[id];
    n.tried.push_back(std::move(tried));
    if (ok) {
      n.accepted_application = static_cast<int>(n.tried.size()) - 1;
      n.verdict = Verdict::kAccepted;
    }
    return ok;
  }

  SearchTree* tree_;
  IndexedCalculus calc_;
  const SearchOptions& opts_;
  Bits conditions_;
};

SearchTree Search(const std::vector<SetSequent>& history, const SearchOptions& opts) {
  if (history.empty()) throw std::invalid_argument("history must not be empty");
  std::vector<Formula> roots;
  for (const SetSequent& s : history) {
    roots.insert(roots.end(), s.ante.begin(), s.ante.end());
    roots.insert(roots.end(), s.succ.begin(), s.succ.end());
  }
  SearchTree tree(std::make_shared<const Universe>(roots), opts);
  Searcher searcher(&tree, opts);
  IndexedCalculus calc = tree.calculus();
  int parent = -1;
  for (std::size_t i = 0; i + 1 < history.size(); ++i) {
    parent = searcher.AddPrefix(parent, calc.Convert(history[i]));
  }
  tree.root_ = searcher.Visit(parent, calc.Convert(history.back()));
  return tree;
}

// --- Derivation assembly ---------------------------------------------------------

namespace {

Sequent Multi(const IndexedCalculus& calc, const IndexedSequent& s) {
  return ToSequent(calc.Convert(s));
}

// Premisses of the rule schema instantiated at the (duplicate-free)
// conclusion; may contain duplicates.
std::vector<Sequent> SchemaPremisses(Rule rule, const Sequent& c,
                                     const std::vector<Formula>& principal) {
  auto plus = [](std::vector<Formula> m, std::initializer_list<Formula> extra) {
    m.insert(m.end(), extra.begin(), extra.end());
    return m;
  };
  const Formula& p = principal.front();
  std::vector<Formula> boxed = BoxedPart(c.ante);
  switch (rule) {
    case Rule::kNegL: return {{c.ante, plus(c.succ, {p.sub()})}};
    case Rule::kNegR: return {{plus(c.ante, {p.sub()}), c.succ}};
    case Rule::kAndL: return {{plus(c.ante, {p.left(), p.right()}), c.succ}};
    case Rule::kOrR: return {{c.ante, plus(c.succ, {p.left(), p.right()})}};
    case Rule::kImpR: return {{plus(c.ante, {p.left()}), plus(c.succ, {p.right()})}};
    case Rule::kT: return {{plus(c.ante, {p.sub()}), c.succ}};
    case Rule::kAndR:
      return {{c.ante, plus(c.succ, {p.left()})}, {c.ante, plus(c.succ, {p.right()})}};
    case Rule::kOrL:
      return {{plus(c.ante, {p.left()}), c.succ}, {plus(c.ante, {p.right()}), c.succ}};
    case Rule::kImpL:
      return {{c.ante, plus(c.succ, {p.left()})}, {plus(c.ante, {p.right()}), c.succ}};
    case Rule::kFour: return {{boxed, {p.sub()}}};
    case Rule::kD1: return {{plus(boxed, {p.body()}), {}}};
    case Rule::kD2: {
      const Formula& q = principal[1];
      return {{plus(boxed, {p.body(), q.body()}), {}},
              {plus(boxed, {p.cond()}), {q.cond()}},
              {plus(boxed, {q.cond()}), {p.cond()}}};
    }
    case Rule::kMon: {
      const Formula& q = principal[1];
      return {{plus(boxed, {p.body()}), {q.body()}},
              {plus(boxed, {p.cond()}), {q.cond()}},
              {plus(boxed, {q.cond()}), {p.cond()}}};
    }
    default:
      throw std::logic_error("no schema premisses for " + std::string(RuleName(rule)));
  }
}

std::vector<Formula> MultisetMinus(std::vector<Formula> big, const std::vector<Formula>& small) {
  for (const Formula& f : small) {
    auto it = std::find(big.begin(), big.end(), f);
    if (it != big.end()) big.erase(it);
  }
  return big;
}

// Weakens d (whose conclusion is the duplicate-free version of target) up to
// target.
Derivation WeakenTo(Derivation d, const Sequent& target) {
  std::vector<Formula> extra_left = MultisetMinus(target.ante, d.conclusion.ante);
  std::vector<Formula> extra_right = MultisetMinus(target.succ, d.conclusion.succ);
  if (!extra_left.empty()) {
    Derivation w;
    w.conclusion = Sequent{target.ante, d.conclusion.succ};
    w.rule = Rule::kWeakL;
    w.principal = std::move(extra_left);
    w.children.push_back(std::move(d));
    d = std::move(w);
  }
  if (!extra_right.empty()) {
    Derivation w;
    w.conclusion = target;
    w.rule = Rule::kWeakR;
    w.principal = std::move(extra_right);
    w.children.push_back(std::move(d));
    d = std::move(w);
  }
  d.conclusion = target;
  return d;
}

class Assembler {
 public:
  explicit Assembler(const SearchTree& tree) : tree_(tree), calc_(tree.calculus()) {}

  // Derivation of the node's input sequent.
  Derivation FromNode(int id) const {
    const SearchNode& n = tree_.node(id);
    std::vector<SaturationStep> steps;
    std::vector<IndexedSequent> chain{n.input};
    for (;;) {
      std::vector<IndexedApplication> apps = calc_.OnePremissStatic(chain.back());
      if (apps.empty()) break;
      steps.push_back(SaturationStep{apps.front().rule, apps.front().principal[0]});
      chain.push_back(std::move(apps.front().premisses.front()));
    }
    Derivation d = Closing(n);
    for (std::size_t j = steps.size(); j-- > 0;) {
      Derivation step;
      step.conclusion = Multi(calc_, chain[j]);
      step.rule = steps[j].rule;
      step.principal = {calc_.universe().formula(steps[j].principal)};
      Sequent schema = SchemaPremisses(step.rule, step.conclusion, step.principal).front();
      step.children.push_back(WeakenTo(std::move(d), schema));
      d = std::move(step);
    }
    return d;
  }

 private:
  Derivation Closing(const SearchNode& n) const {
    Derivation d;
    d.conclusion = Multi(calc_, n.sequent);
    if (n.initial) {
      d.rule = n.initial->first;
      d.principal = {calc_.universe().formula(n.initial->second)};
      return d;
    }
    if (n.accepted_application < 0) throw std::logic_error("node is not accepted");
    const TriedApplication& t = n.tried[n.accepted_application];
    d.rule = t.app.rule;
    for (int i = 0; i < t.app.principal_count; ++i) {
      d.principal.push_back(calc_.universe().formula(t.app.principal[i]));
    }
    if (d.rule == Rule::kCut) return CutClosing(std::move(d), t);
    std::vector<Sequent> schema = SchemaPremisses(d.rule, d.conclusion, d.principal);
    for (std::size_t k = 0; k < t.premisses.size(); ++k) {
      d.children.push_back(WeakenTo(FromNode(t.premisses[k].node), schema[k]));
    }
    return d;
  }

  // Gamma |- Delta, A and A, Gamma |- Delta cut to Gamma, Gamma |- Delta, Delta,
  // then contracted back.
  Derivation CutClosing(Derivation target, const TriedApplication& t) const {
    const Sequent c = target.conclusion;
    const Formula& a = target.principal.front();
    auto plus = [](std::vector<Formula> m, const std::vector<Formula>& extra) {
      m.insert(m.end(), extra.begin(), extra.end());
      return m;
    };
    Derivation d;
    d.conclusion = Sequent{plus(c.ante, c.ante), plus(c.succ, c.succ)};
    d.rule = Rule::kCut;
    d.principal = {a};
    d.children.push_back(WeakenTo(FromNode(t.premisses[0].node), {c.ante, plus(c.succ, {a})}));
    d.children.push_back(WeakenTo(FromNode(t.premisses[1].node), {plus(c.ante, {a}), c.succ}));
    Sequent at = d.conclusion;
    for (const Formula& f : c.ante) {
      at.ante.erase(std::find(at.ante.begin(), at.ante.end(), f));
      d = Derivation{at, Rule::kConL, {f}, {std::move(d)}, std::nullopt};
    }
    for (const Formula& f : c.succ) {
      at.succ.erase(std::find(at.succ.begin(), at.succ.end(), f));
      d = Derivation{at, Rule::kConR, {f}, {std::move(d)}, std::nullopt};
    }
    return d;
  }

  const SearchTree& tree_;
  IndexedCalculus calc_;
};

}  // namespace

Derivation AssembleDerivation(const SearchTree& tree, const Sequent& goal) {
  if (tree.verdict() != Verdict::kAccepted) throw std::logic_error("search did not accept");
  return WeakenTo(Assembler(tree).FromNode(tree.root()), goal);
}

ProofResult Prove(const Sequent& s, const SearchOptions& opts) {
  auto tree = std::make_shared<const SearchTree>(Search({ToSetSequent(s)}, opts));
  ProofResult out{tree->verdict(), std::nullopt, tree, s};
  if (out.verdict == Verdict::kAccepted) out.derivation = AssembleDerivation(*tree, s);
  return out;
}

}  // namespace mdl
