#include "mdl/semantics.h"

#include <algorithm>
#include <sstream>

#include "mdl/derivation.h"

namespace mdl {

// --- MModel -----------------------------------------------------------------

MModel::MModel(std::vector<std::string> world_names) : names_(std::move(world_names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw ModelError("duplicate world id '" + names_[i] + "'");
    }
  }
  acc_.assign(names_.size(), WorldSet(names_.size()));
  eta_.resize(names_.size());
  val_.resize(names_.size());
}

std::optional<std::size_t> MModel::Find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MModel::Index(const std::string& name) const {
  auto w = Find(name);
  if (!w) throw ModelError("unknown world '" + name + "'");
  return *w;
}

void MModel::CloseReflexiveTransitive() {
  const std::size_t n = size();
  for (std::size_t w = 0; w < n; ++w) acc_[w].set(w);
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (acc_[i].test(k)) acc_[i] |= acc_[k];
    }
  }
}

void MModel::AddGenerator(std::size_t w, Generator g) {
  auto& gens = eta_[w];
  if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
}

std::set<std::string> MModel::AtomNames() const {
  std::set<std::string> out;
  for (const auto& v : val_) out.insert(v.begin(), v.end());
  return out;
}

WorldSet MModel::ToSet(const std::vector<std::string>& names) const {
  WorldSet s = Empty();
  for (const std::string& n : names) s.set(Index(n));
  return s;
}

std::vector<std::string> MModel::Names(const WorldSet& s) const {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != WorldSet::npos; i = s.find_next(i)) out.push_back(names_[i]);
  return out;
}

// --- Frame conditions ---------------------------------------------------------

FrameReport ValidateFrame(const MModel& m) {
  const std::size_t n = m.size();
  auto single = [&](std::size_t w) { return std::vector<std::string>{m.name(w)}; };

  for (std::size_t w = 0; w < n; ++w) {
    if (!m.Edge(w, w)) {
      return {1, m.name(w), single(w), single(w), "R is not reflexive at " + m.name(w)};
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    const WorldSet& ru = m.Successors(u);
    for (auto v = ru.find_first(); v != WorldSet::npos; v = ru.find_next(v)) {
      WorldSet missing = m.Successors(v) - ru;
      if (auto w = missing.find_first(); w != WorldSet::npos) {
        return {1, m.name(u), single(v), single(w),
                "R is not transitive: " + m.name(u) + " R " + m.name(v) + " R " + m.name(w)};
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    const WorldSet& rw = m.Successors(w);
    for (const Generator& g : m.Generators(w)) {
      if (!g.base.is_subset_of(rw) || !g.cond.is_subset_of(rw)) {
        return {2, m.name(w), m.Names(g.base), m.Names(g.cond),
                "neighbourhood pair at " + m.name(w) + " leaves R[" + m.name(w) + "]"};
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (const Generator& g : m.Generators(w)) {
      if (g.base.none()) {
        return {4, m.name(w), {}, m.Names(g.cond),
                "pair with empty first coordinate at " + m.name(w)};
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    const auto& gens = m.Generators(w);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (gens[i].cond != gens[j].cond || gens[i].base.intersects(gens[j].base)) continue;
        // X = R[w] \ base_j contains base_i, and R[w] \ X = base_j.
        WorldSet x = m.Successors(w) - gens[j].base;
        return {5, m.name(w), m.Names(x), m.Names(gens[i].cond),
                "complementary pairs with the same condition at " + m.name(w)};
      }
    }
  }
  return {};
}

// --- Evaluation ---------------------------------------------------------------

Evaluator::Evaluator(const MModel& m) : m_(m), known_atoms_(m.AtomNames()) {}

const WorldSet& Evaluator::TruthSet(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  WorldSet s = Compute(f);
  return memo_.emplace(f, std::move(s)).first->second;
}

WorldSet Evaluator::Compute(const Formula& f) {
  const std::size_t n = m_.size();
  WorldSet out = m_.Empty();
  switch (f.kind()) {
    case Kind::kAtom:
      if (!known_atoms_.count(f.name())) warnings_.insert("atom '" + f.name() + "' is false everywhere");
      for (std::size_t w = 0; w < n; ++w) {
        if (m_.Valuation(w).count(f.name())) out.set(w);
      }
      return out;
    case Kind::kBottom:
      return out;
    case Kind::kNeg:
      return ~TruthSet(f.sub());
    case Kind::kAnd: {
      WorldSet l = TruthSet(f.left());
      return l & TruthSet(f.right());
    }
    case Kind::kOr: {
      WorldSet l = TruthSet(f.left());
      return l | TruthSet(f.right());
    }
    case Kind::kImp: {
      WorldSet l = ~TruthSet(f.left());
      return l | TruthSet(f.right());
    }
    case Kind::kBox: {
      const WorldSet sub = TruthSet(f.sub());
      for (std::size_t w = 0; w < n; ++w) {
        if (m_.Successors(w).is_subset_of(sub)) out.set(w);
      }
      return out;
    }
    case Kind::kObl: {
      const WorldSet body = TruthSet(f.body());
      const WorldSet cond = TruthSet(f.cond());
      for (std::size_t w = 0; w < n; ++w) {
        const WorldSet& rw = m_.Successors(w);
        const WorldSet x = body & rw;
        const WorldSet y = cond & rw;
        for (const Generator& g : m_.Generators(w)) {
          if (g.cond == y && g.base.is_subset_of(x)) {
            out.set(w);
            break;
          }
        }
      }
      return out;
    }
  }
  return out;
}

WorldSet TruthSet(const MModel& m, const Formula& f, std::set<std::string>* warnings) {
  Evaluator e(m);
  WorldSet s = e.TruthSet(f);
  if (warnings) warnings->insert(e.warnings().begin(), e.warnings().end());
  return s;
}

bool Holds(const MModel& m, const std::string& world, const Formula& f) {
  std::size_t w = m.Index(world);
  return TruthSet(m, f).test(w);
}

bool CheckSequentAt(const MModel& m, const std::string& world, const Sequent& s) {
  return Holds(m, world, Interpretation(s));
}

std::vector<Generator> GeneratorsFromPairs(const std::vector<Generator>& pairs) {
  std::vector<Generator> out;
  for (const Generator& p : pairs) {
    bool minimal = std::none_of(pairs.begin(), pairs.end(), [&](const Generator& q) {
      return q.cond == p.cond && q.base.is_proper_subset_of(p.base);
    });
    if (minimal && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// --- JSON ---------------------------------------------------------------------------

namespace {

std::vector<std::string> Strings(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ModelError(what + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const nlohmann::json& Member(const nlohmann::json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ModelError(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

MModel ModelFromJson(const nlohmann::json& j, const ModelReadOptions& opts) {
  if (!j.is_object()) throw ModelError("model must be a JSON object");
  MModel m(Strings(Member(j, "worlds", "model"), "worlds"));

  if (auto acc = j.find("acc"); acc != j.end()) {
    if (!acc->is_array()) throw ModelError("acc must be an array of pairs");
    for (const auto& e : *acc) {
      std::vector<std::string> pair = Strings(e, "acc entry");
      if (pair.size() != 2) throw ModelError("acc entries must be [w, v] pairs");
      m.AddEdge(m.Index(pair[0]), m.Index(pair[1]));
    }
  }
  if (opts.close_rt) m.CloseReflexiveTransitive();

  if (auto eta = j.find("eta"); eta != j.end()) {
    if (!eta->is_object()) throw ModelError("eta must be an object keyed by world");
    for (const auto& [w, gens] : eta->items()) {
      std::size_t wi = m.Index(w);
      if (!gens.is_array()) throw ModelError("eta." + w + " must be an array");
      for (const auto& g : gens) {
        const std::string where = "eta." + w;
        m.AddGenerator(wi, Generator{m.ToSet(Strings(Member(g, "base", where), where + ".base")),
                                     m.ToSet(Strings(Member(g, "cond", where), where + ".cond"))});
      }
    }
  }
  if (auto pairs = j.find("eta_pairs"); pairs != j.end()) {
    if (!pairs->is_object()) throw ModelError("eta_pairs must be an object keyed by world");
    for (const auto& [w, list] : pairs->items()) {
      std::size_t wi = m.Index(w);
      if (!list.is_array()) throw ModelError("eta_pairs." + w + " must be an array");
      std::vector<Generator> explicit_pairs;
      for (const auto& p : list) {
        const std::string where = "eta_pairs." + w;
        explicit_pairs.push_back(Generator{m.ToSet(Strings(Member(p, "x", where), where + ".x")),
                                           m.ToSet(Strings(Member(p, "y", where), where + ".y"))});
      }
      for (Generator& g : GeneratorsFromPairs(explicit_pairs)) m.AddGenerator(wi, std::move(g));
    }
  }

  if (auto val = j.find("val"); val != j.end()) {
    if (!val->is_object()) throw ModelError("val must be an object keyed by world");
    for (const auto& [w, atoms] : val->items()) {
      std::size_t wi = m.Index(w);
      for (const std::string& a : Strings(atoms, "val." + w)) m.SetTrue(wi, a);
    }
  }
  return m;
}

nlohmann::json ModelToJson(const MModel& m) {
  nlohmann::json acc = nlohmann::json::array();
  nlohmann::json eta = nlohmann::json::object();
  nlohmann::json val = nlohmann::json::object();
  for (std::size_t w = 0; w < m.size(); ++w) {
    for (const std::string& v : m.Names(m.Successors(w))) acc.push_back({m.name(w), v});
    nlohmann::json gens = nlohmann::json::array();
    for (const Generator& g : m.Generators(w)) {
      gens.push_back({{"base", m.Names(g.base)}, {"cond", m.Names(g.cond)}});
    }
    if (!gens.empty()) eta[m.name(w)] = std::move(gens);
    const auto& atoms = m.Valuation(w);
    val[m.name(w)] = std::vector<std::string>(atoms.begin(), atoms.end());
  }
  return {{"worlds", m.names()}, {"acc", std::move(acc)}, {"eta", std::move(eta)},
          {"val", std::move(val)}};
}

nlohmann::json FrameReportToJson(const FrameReport& r) {
  if (r.ok()) return {{"ok", true}};
  return {{"ok", false}, {"condition", r.condition}, {"world", r.world},
          {"x", r.x},    {"y", r.y},                 {"message", r.message}};
}

std::string RenderModel(const MModel& m) {
  auto set = [&](const WorldSet& s) {
    std::string out = "{";
    bool first = true;
    for (const std::string& n : m.Names(s)) {
      if (!first) out += ", ";
      out += n;
      first = false;
    }
    return out + "}";
  };
  std::ostringstream os;
  for (std::size_t w = 0; w < m.size(); ++w) {
    os << m.name(w) << "  val " << "{";
    bool first = true;
    for (const std::string& a : m.Valuation(w)) {
      os << (first ? "" : ", ") << a;
      first = false;
    }
    os << "}\n    R " << set(m.Successors(w)) << "\n";
    for (const Generator& g : m.Generators(w)) {
      os << "    eta base " << set(g.base) << " cond " << set(g.cond) << "\n";
    }
  }
  return os.str();
}

}  // namespace mdl
