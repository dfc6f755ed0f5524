// Seeded random formulas, sequents and small models. The streams depend only
// on the seed and the options.
#ifndef MDL_GENERATOR_H_
#define MDL_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdl/formula.h"
#include "mdl/semantics.h"
#include "mdl/sequent.h"

namespace mdl {

struct GeneratorOptions {
  int atoms = 4;
  int max_modal_depth = 3;
  // Node count of a whole sequent.
  std::size_t max_size = 20;
  std::size_t max_formulas = 4;
};

class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed, GeneratorOptions opts = {});

  // A formula with exactly `size` nodes (size >= 1).
  Formula Next(std::size_t size);
  // Total size drawn uniformly from [1, max_size].
  Sequent NextSequent();
  Sequent NextSequent(std::size_t total_size);

  std::mt19937_64& rng() { return rng_; }
  const std::vector<Formula>& atoms() const { return atoms_; }

 private:
  Formula Build(std::size_t size, int modal_budget);
  std::size_t Uniform(std::size_t lo, std::size_t hi);

  std::mt19937_64 rng_;
  GeneratorOptions opts_;
  std::vector<Formula> atoms_;
};

struct ModelGeneratorOptions {
  std::size_t max_worlds = 4;
  std::size_t max_generators = 3;
  std::vector<std::string> atoms = {"p0", "p1", "p2", "p3"};
};

// A random model satisfying all frame conditions.
MModel RandomModel(std::mt19937_64& rng, const ModelGeneratorOptions& opts = {});

}  // namespace mdl

#endif  // MDL_GENERATOR_H_
