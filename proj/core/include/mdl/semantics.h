// Finite m-models and model checking.
//
// A model has worlds, a relation R, a valuation and, per world, a list of
// neighbourhood generators (base, cond). A generator stands for every pair
// (X, cond) with base <= X <= R[w], so the neighbourhood function is upward
// closed in its first coordinate without ever being enumerated.
#ifndef MDL_SEMANTICS_H_
#define MDL_SEMANTICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "mdl/formula.h"
#include "mdl/sequent.h"

namespace mdl {

using WorldSet = boost::dynamic_bitset<std::uint64_t>;

struct Generator {
  WorldSet base;
  WorldSet cond;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MModel {
 public:
  MModel() = default;
  explicit MModel(std::vector<std::string> world_names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t w) const { return names_[w]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> Find(const std::string& name) const;
  // Throws ModelError for an unknown world id.
  std::size_t Index(const std::string& name) const;

  WorldSet Empty() const { return WorldSet(size()); }
  WorldSet All() const { return WorldSet(size()).set(); }

  void AddEdge(std::size_t from, std::size_t to) { acc_[from].set(to); }
  bool Edge(std::size_t from, std::size_t to) const { return acc_[from].test(to); }
  // R[w].
  const WorldSet& Successors(std::size_t w) const { return acc_[w]; }
  void CloseReflexiveTransitive();

  // Duplicates are dropped.
  void AddGenerator(std::size_t w, Generator g);
  const std::vector<Generator>& Generators(std::size_t w) const { return eta_[w]; }
  std::vector<Generator>& MutableGenerators(std::size_t w) { return eta_[w]; }

  void SetTrue(std::size_t w, const std::string& atom) { val_[w].insert(atom); }
  const std::set<std::string>& Valuation(std::size_t w) const { return val_[w]; }
  std::set<std::string> AtomNames() const;

  WorldSet ToSet(const std::vector<std::string>& names) const;
  std::vector<std::string> Names(const WorldSet& s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<WorldSet> acc_;
  std::vector<std::vector<Generator>> eta_;
  std::vector<std::set<std::string>> val_;
};

// First violated frame condition, with witnesses. condition is 0 when the
// frame is valid.
//   1: R reflexive and transitive       (x = {w}, y = {v} or the offending pair)
//   2: base and cond inside R[w]
//   3: upward closure (holds by representation; never reported)
//   4: no pair with empty first coordinate
//   5: no (X, Y) together with (R[w] \ X, Y)
struct FrameReport {
  int condition = 0;
  std::string world;
  std::vector<std::string> x;
  std::vector<std::string> y;
  std::string message;

  bool ok() const { return condition == 0; }
};

FrameReport ValidateFrame(const MModel& m);

// Memoised truth sets for one model. Atoms the valuation never mentions are
// false everywhere and recorded as warnings.
class Evaluator {
 public:
  explicit Evaluator(const MModel& m);

  const WorldSet& TruthSet(const Formula& f);
  bool Holds(std::size_t w, const Formula& f) { return TruthSet(f).test(w); }
  const std::set<std::string>& warnings() const { return warnings_; }

 private:
  WorldSet Compute(const Formula& f);

  const MModel& m_;
  std::set<std::string> known_atoms_;
  std::unordered_map<Formula, WorldSet> memo_;
  std::set<std::string> warnings_;
};

WorldSet TruthSet(const MModel& m, const Formula& f,
                  std::set<std::string>* warnings = nullptr);
// Throws ModelError for an unknown world id.
bool Holds(const MModel& m, const std::string& world, const Formula& f);
bool CheckSequentAt(const MModel& m, const std::string& world, const Sequent& s);

// Minimal bases of an explicit list of (X, Y) pairs, grouped by Y; assumes
// the list describes an upward-closed neighbourhood.
std::vector<Generator> GeneratorsFromPairs(const std::vector<Generator>& pairs);

struct ModelReadOptions {
  // Close R reflexively and transitively on import instead of letting the
  // validator report the gap.
  bool close_rt = false;
};

// {worlds: [id], acc: [[w, v]], eta: {w: [{base: [id], cond: [id]}]},
//  val: {w: [atom]}}. An optional "eta_pairs": {w: [{x: [id], y: [id]}]}
// lists neighbourhood pairs extensionally; they are reduced to generators.
MModel ModelFromJson(const nlohmann::json& j, const ModelReadOptions& opts = {});
nlohmann::json ModelToJson(const MModel& m);
nlohmann::json FrameReportToJson(const FrameReport& r);

// Adjacency list and generator table.
std::string RenderModel(const MModel& m);

}  // namespace mdl

#endif  // MDL_SEMANTICS_H_
