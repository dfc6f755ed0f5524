#include "mdl/countermodel.h"

#include <cstdint>
#include <cstdio>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "mdl/parser.h"

namespace mdl {

namespace {

std::uint64_t Fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Hex(std::uint64_t v, int digits) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf + 16 - digits);
}

// The premiss that made a rejected application fail.
const PremissOutcome& Failing(const TriedApplication& t) {
  for (const PremissOutcome& p : t.premisses) {
    if (p.status == PremissOutcome::Status::kLoop) return p;
    if (p.status == PremissOutcome::Status::kExplored && !p.accepted) return p;
  }
  throw CountermodelError("rejected application without a failing premiss");
}

// Two-premiss static rules and condition cuts: the node is not a world.
bool IsBranching(const TriedApplication& t) {
  return ClassOf(t.app.rule) == RuleClass::kStaticTwo || t.app.rule == Rule::kCut;
}

class Builder {
 public:
  Builder(const SearchTree& t, const Sequent& goal, const CountermodelOptions& opts)
      : t_(t), goal_(goal), opts_(opts) {}

  CounterModel Run() {
    if (t_.verdict() != Verdict::kRejected) {
      throw std::invalid_argument("countermodel needs a rejecting search run");
    }
    std::vector<std::pair<int, int>> edges;
    int root = opts_.literal ? CollectLiteral(edges) : CollectStates(edges);

    CounterModel cm;
    cm.goal = goal_;
    cm.nodes = order_;
    cm.model = MModel(Names(cm.histories));
    for (auto [a, b] : edges) cm.model.AddEdge(world_.at(a), world_.at(b));
    cm.model.CloseReflexiveTransitive();
    cm.root = cm.model.name(world_.at(root));

    const Universe& u = t_.universe();
    for (std::size_t w = 0; w < order_.size(); ++w) {
      const Bits& ante = t_.node(order_[w]).sequent.ante;
      for (auto i = ante.find_first(); i != Bits::npos; i = ante.find_next(i)) {
        if (u.kind(i) == Kind::kAtom) cm.model.SetTrue(w, u.formula(i).name());
      }
    }
    AddGenerators(cm.model);

    cm.frame = ValidateFrame(cm.model);
    cm.audit = TruthLemmaAudit(cm, t_);
    cm.goal_falsified = !CheckSequentAt(cm.model, cm.root, goal_);
    if (opts_.strict && !cm.certified()) {
      std::string why = !cm.frame.ok()  ? "frame condition " + std::to_string(cm.frame.condition)
                        : !cm.audit.ok ? "truth lemma at " + cm.audit.world + " for " +
                                             cm.audit.formula + " (" + cm.audit.side + ")"
                                       : "goal not falsified at root";
      throw CountermodelError("countermodel does not certify: " + why);
    }
    return cm;
  }

 private:
  // World representing a rejected node: follow the failing premiss of the
  // first branching application until none applies. Sequents grow
  // strictly along the way, so this ends.
  int Rep(int n) {
    for (;;) {
      const SearchNode& node = t_.node(n);
      if (!node.searched || node.verdict != Verdict::kRejected) {
        throw CountermodelError("representative of a node that is not a rejected search node");
      }
      const TriedApplication* first = nullptr;
      for (const TriedApplication& tried : node.tried) {
        if (IsBranching(tried)) {
          first = &tried;
          break;
        }
      }
      if (!first) return n;
      n = Failing(*first).node;
    }
  }

  void AddWorld(int n, std::deque<int>& queue) {
    if (world_.emplace(n, order_.size()).second) {
      order_.push_back(n);
      queue.push_back(n);
    }
  }

  int CollectStates(std::vector<std::pair<int, int>>& edges) {
    std::deque<int> queue;
    const int root = Rep(t_.root());
    AddWorld(root, queue);
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      for (const TriedApplication& tried : t_.node(s).tried) {
        if (ClassOf(tried.app.rule) != RuleClass::kTransitional) continue;
        const int target = Rep(Failing(tried).node);
        AddWorld(target, queue);
        edges.emplace_back(s, target);
      }
    }
    // Prefix order among the worlds.
    for (int s : order_) {
      for (int a = t_.node(s).parent; a >= 0; a = t_.node(a).parent) {
        if (world_.count(a)) edges.emplace_back(a, s);
      }
    }
    return root;
  }

  int CollectLiteral(std::vector<std::pair<int, int>>& edges) {
    std::deque<int> unused;
    for (int n = 0; n < static_cast<int>(t_.nodes().size()); ++n) {
      AddWorld(n, unused);
      const SearchNode& node = t_.node(n);
      if (node.parent >= 0) edges.emplace_back(node.parent, n);
      for (const TriedApplication& tried : node.tried) {
        if (ClassOf(tried.app.rule) != RuleClass::kTransitional) continue;
        for (const PremissOutcome& p : tried.premisses) {
          if (p.status == PremissOutcome::Status::kLoop) edges.emplace_back(n, p.node);
        }
      }
    }
    return t_.root();
  }

  std::vector<std::string> Names(std::map<std::string, std::vector<std::string>>& histories) {
    IndexedCalculus calc = t_.calculus();
    std::vector<std::string> names;
    std::unordered_set<std::string> used;
    for (int n : order_) {
      std::vector<std::string> history;
      std::string key;
      for (int p : t_.Path(n)) {
        history.push_back(PrintSequent(calc.Convert(t_.node(p).sequent)));
        key += history.back();
        key += '\n';
      }
      const std::uint64_t h = Fnv1a(key);
      std::string name = "h" + Hex(h, 8);
      if (used.count(name)) name = "h" + Hex(h, 16);
      for (int k = 2; used.count(name); ++k) name = "h" + Hex(h, 16) + "-" + std::to_string(k);
      used.insert(name);
      histories.emplace(name, std::move(history));
      names.push_back(std::move(name));
    }
    return names;
  }

  WorldSet Having(const MModel& m, FormulaId f) const {
    WorldSet s = m.Empty();
    for (std::size_t w = 0; w < order_.size(); ++w) {
      if (t_.node(order_[w]).sequent.ante.test(f)) s.set(w);
    }
    return s;
  }

  void AddGenerators(MModel& m) {
    const Universe& u = t_.universe();
    std::unordered_map<FormulaId, WorldSet> having;
    auto syntactic = [&](FormulaId f) -> const WorldSet& {
      auto it = having.find(f);
      if (it == having.end()) it = having.emplace(f, Having(m, f)).first;
      return it->second;
    };
    for (std::size_t w = 0; w < order_.size(); ++w) {
      const Bits& ante = t_.node(order_[w]).sequent.ante;
      const WorldSet& rw = m.Successors(w);
      for (auto o = ante.find_first(); o != Bits::npos; o = ante.find_next(o)) {
        if (u.kind(o) != Kind::kObl) continue;
        const FormulaId body = u.child(o, 0);
        const FormulaId cond = u.child(o, 1);
        m.MutableGenerators(w).push_back(Generator{syntactic(body) & rw, syntactic(cond) & rw});
      }
    }
    // Every world decides every condition, so the syntactic condition set
    // is the truth set.
    for (std::size_t w = 0; w < m.size(); ++w) {
      std::vector<Generator> gens = std::move(m.MutableGenerators(w));
      m.MutableGenerators(w).clear();
      for (Generator& g : gens) m.AddGenerator(w, std::move(g));
    }
  }

  const SearchTree& t_;
  const Sequent& goal_;
  CountermodelOptions opts_;
  std::vector<int> order_;
  std::unordered_map<int, std::size_t> world_;
};

}  // namespace

CounterModel BuildCountermodel(const SearchTree& trace, const Sequent& goal,
                               const CountermodelOptions& opts) {
  if (opts.literal || trace.options().decide_conditions) return Builder(trace, goal, opts).Run();
  if (trace.verdict() != Verdict::kRejected) {
    throw std::invalid_argument("countermodel needs a rejecting search run");
  }
  SearchOptions deciding = trace.options();
  deciding.decide_conditions = true;
  const SearchTree rerun = Search(trace.History(trace.root()), deciding);
  if (rerun.verdict() != Verdict::kRejected) {
    throw CountermodelError("deciding the conditions made the sequent derivable");
  }
  return Builder(rerun, goal, opts).Run();
}

CounterModel BuildCountermodel(const ProofResult& rejected, const CountermodelOptions& opts) {
  return BuildCountermodel(*rejected.trace, rejected.goal, opts);
}

AuditReport TruthLemmaAudit(const CounterModel& cm, const SearchTree& trace) {
  const Universe& u = trace.universe();
  Evaluator ev(cm.model);
  for (std::size_t w = 0; w < cm.nodes.size(); ++w) {
    const IndexedSequent& s = trace.node(cm.nodes[w]).sequent;
    for (auto i = s.ante.find_first(); i != Bits::npos; i = s.ante.find_next(i)) {
      if (!ev.Holds(w, u.formula(i))) {
        return {false, cm.model.name(w), PrintFormula(u.formula(i)), "ante"};
      }
    }
    for (auto i = s.succ.find_first(); i != Bits::npos; i = s.succ.find_next(i)) {
      if (ev.Holds(w, u.formula(i))) {
        return {false, cm.model.name(w), PrintFormula(u.formula(i)), "succ"};
      }
    }
  }
  return {};
}

nlohmann::json CounterModelToJson(const CounterModel& cm) {
  nlohmann::json j = ModelToJson(cm.model);
  j["root"] = cm.root;
  j["goal"] = PrintSequent(cm.goal);
  j["certified"] = cm.certified();
  j["histories"] = cm.histories;
  return j;
}

}  // namespace mdl
