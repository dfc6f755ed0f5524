// Test-only oracles. Everything here works on small models by brute force,
// expanding each neighbourhood extensionally, and shares no code with the
// evaluator or the frame validator under test.
#ifndef MDL_TESTS_SUPPORT_H_
#define MDL_TESTS_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mdl/formula.h"
#include "mdl/semantics.h"

namespace mdl::testing {

using Mask = std::uint32_t;
using Pair = std::pair<Mask, Mask>;

inline std::filesystem::path CorpusDir() { return MDL_CORPUS_DIR; }

inline Mask ToMask(const WorldSet& s) {
  Mask m = 0;
  for (std::size_t i = s.find_first(); i != WorldSet::npos; i = s.find_next(i)) m |= Mask{1} << i;
  return m;
}

inline Mask Successors(const MModel& m, std::size_t w) { return ToMask(m.Successors(w)); }

// Every (X, Y) in eta(w): X ranges over all subsets of R[w] above some base.
inline std::set<Pair> ExplicitEta(const MModel& m, std::size_t w) {
  std::set<Pair> out;
  const Mask r = Successors(m, w);
  for (const Generator& g : m.Generators(w)) {
    const Mask base = ToMask(g.base);
    const Mask cond = ToMask(g.cond);
    // Enumerate the subsets of r.
    for (Mask x = r;; x = (x - 1) & r) {
      if ((x & base) == base) out.insert({x, cond});
      if (x == 0) break;
    }
  }
  return out;
}

class NaiveModel {
 public:
  explicit NaiveModel(const MModel& m) : m_(m) {
    for (std::size_t w = 0; w < m.size(); ++w) eta_.push_back(ExplicitEta(m, w));
  }

  Mask Truth(const Formula& f) const {
    const Mask all = m_.size() == 32 ? ~Mask{0} : (Mask{1} << m_.size()) - 1;
    switch (f.kind()) {
      case Kind::kAtom: {
        Mask out = 0;
        for (std::size_t w = 0; w < m_.size(); ++w) {
          if (m_.Valuation(w).count(f.name())) out |= Mask{1} << w;
        }
        return out;
      }
      case Kind::kBottom: return 0;
      case Kind::kNeg: return all & ~Truth(f.sub());
      case Kind::kAnd: return Truth(f.left()) & Truth(f.right());
      case Kind::kOr: return Truth(f.left()) | Truth(f.right());
      case Kind::kImp: return (all & ~Truth(f.left())) | Truth(f.right());
      case Kind::kBox: {
        const Mask a = Truth(f.sub());
        Mask out = 0;
        for (std::size_t w = 0; w < m_.size(); ++w) {
          if ((Successors(m_, w) & ~a) == 0) out |= Mask{1} << w;
        }
        return out;
      }
      case Kind::kObl: {
        const Mask a = Truth(f.body());
        const Mask b = Truth(f.cond());
        Mask out = 0;
        for (std::size_t w = 0; w < m_.size(); ++w) {
          const Mask r = Successors(m_, w);
          if (eta_[w].count({a & r, b & r})) out |= Mask{1} << w;
        }
        return out;
      }
    }
    return 0;
  }

  // Every violated frame condition; empty when the frame is valid.
  std::set<int> Violations() const {
    std::set<int> out;
    const std::size_t n = m_.size();
    for (std::size_t w = 0; w < n; ++w) {
      if (!m_.Edge(w, w)) out.insert(1);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
          if (m_.Edge(w, v) && m_.Edge(v, u) && !m_.Edge(w, u)) out.insert(1);
        }
      }
      const Mask r = Successors(m_, w);
      for (const Generator& g : m_.Generators(w)) {
        if ((ToMask(g.base) & ~r) || (ToMask(g.cond) & ~r)) out.insert(2);
      }
      for (const auto& [x, y] : eta_[w]) {
        if (x == 0) out.insert(4);
        if (eta_[w].count({r & ~x, y})) out.insert(5);
      }
    }
    return out;
  }

  const std::set<Pair>& eta(std::size_t w) const { return eta_[w]; }

 private:
  const MModel& m_;
  std::vector<std::set<Pair>> eta_;
};

}  // namespace mdl::testing

#endif  // MDL_TESTS_SUPPORT_H_
