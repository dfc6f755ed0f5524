#include "mdl/generator.h"

#include <algorithm>

namespace mdl {

FormulaGenerator::FormulaGenerator(std::uint64_t seed, GeneratorOptions opts)
    : rng_(seed), opts_(opts) {
  for (int i = 0; i < opts_.atoms; ++i) atoms_.push_back(Formula::Atom("p" + std::to_string(i)));
}

std::size_t FormulaGenerator::Uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Formula FormulaGenerator::Next(std::size_t size) {
  return Build(std::max<std::size_t>(size, 1), opts_.max_modal_depth);
}

Formula FormulaGenerator::Build(std::size_t size, int modal_budget) {
  if (size == 1) {
    // Mostly atoms, sometimes falsum.
    if (Uniform(0, 7) == 0) return Formula::Bottom();
    return atoms_[Uniform(0, atoms_.size() - 1)];
  }
  const bool modal = modal_budget > 0;
  if (size == 2) {
    if (modal && Uniform(0, 1)) return Formula::Box(Build(1, modal_budget - 1));
    return Formula::Neg(Build(1, modal_budget));
  }
  // 0 Neg, 1 Box, 2 And, 3 Or, 4 Imp, 5 Obl
  std::size_t op = Uniform(0, 5);
  if (!modal && (op == 1 || op == 5)) op = Uniform(2, 4);
  switch (op) {
    case 0:
      return Formula::Neg(Build(size - 1, modal_budget));
    case 1:
      return Formula::Box(Build(size - 1, modal_budget - 1));
    default: {
      const int budget = op == 5 ? modal_budget - 1 : modal_budget;
      const std::size_t left = Uniform(1, size - 2);
      Formula l = Build(left, budget);
      Formula r = Build(size - 1 - left, budget);
      switch (op) {
        case 2: return Formula::And(l, r);
        case 3: return Formula::Or(l, r);
        case 4: return Formula::Imp(l, r);
        default: return Formula::Obl(l, r);
      }
    }
  }
}

Sequent FormulaGenerator::NextSequent() { return NextSequent(Uniform(1, opts_.max_size)); }

Sequent FormulaGenerator::NextSequent(std::size_t total_size) {
  total_size = std::max<std::size_t>(total_size, 1);
  const std::size_t count = Uniform(1, std::min(opts_.max_formulas, total_size));
  // Random composition of total_size into `count` positive parts.
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < total_size; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng_);
  cuts.resize(count - 1);
  cuts.push_back(0);
  cuts.push_back(total_size);
  std::sort(cuts.begin(), cuts.end());
  Sequent s;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Formula f = Next(cuts[i + 1] - cuts[i]);
    (Uniform(0, 1) ? s.ante : s.succ).push_back(std::move(f));
  }
  return s;
}

MModel RandomModel(std::mt19937_64& rng, const ModelGeneratorOptions& opts) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = uniform(1, std::max<std::size_t>(opts.max_worlds, 1));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i + 1));
  MModel m(names);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (uniform(0, 2) == 0) m.AddEdge(a, b);
    }
  }
  m.CloseReflexiveTransitive();

  auto subset_of = [&](const WorldSet& r) {
    WorldSet s = m.Empty();
    for (auto i = r.find_first(); i != WorldSet::npos; i = r.find_next(i)) {
      if (uniform(0, 1)) s.set(i);
    }
    return s;
  };
  for (std::size_t w = 0; w < n; ++w) {
    const WorldSet& rw = m.Successors(w);
    const std::size_t count = uniform(0, opts.max_generators);
    for (std::size_t k = 0; k < count; ++k) {
      Generator g{subset_of(rw), subset_of(rw)};
      if (g.base.none()) continue;
      const auto& gens = m.Generators(w);
      bool clash = std::any_of(gens.begin(), gens.end(), [&](const Generator& h) {
        return h.cond == g.cond && !h.base.intersects(g.base);
      });
      if (!clash) m.AddGenerator(w, std::move(g));
    }
    for (const std::string& a : opts.atoms) {
      if (uniform(0, 1)) m.SetTrue(w, a);
    }
  }
  return m;
}

}  // namespace mdl
