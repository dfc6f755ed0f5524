#include <random>

#include <gtest/gtest.h>

#include "mdl/corpus.h"
#include "mdl/generator.h"
#include "mdl/parser.h"
#include "mdl/search.h"
#include "mdl/semantics.h"
#include "support.h"

namespace mdl {
namespace {

using testing::Mask;
using testing::NaiveModel;
using testing::ToMask;

Formula F(std::string_view s) { return ParseFormula(s); }

MModel M0() { return ModelFromJson(nlohmann::json::parse(ReadFile(testing::CorpusDir() / "m0.json"))); }

const char* kFormula1 = "[](he -> hrm) & [](sy -> he) & []O(~hrm / true) & []O(sy / dhe)";

TEST(M0, FrameIsValid) {
  const MModel m = M0();
  EXPECT_EQ(m.size(), 8u);
  EXPECT_TRUE(ValidateFrame(m).ok()) << ValidateFrame(m).message;
  EXPECT_TRUE(NaiveModel(m).Violations().empty());
}

TEST(M0, TruthSets) {
  const MModel m = M0();
  const NaiveModel naive(m);
  EXPECT_EQ(TruthSet(m, F("O(~hrm / true)")).count(), 8u);
  EXPECT_EQ(naive.Truth(F("O(~hrm / true)")), 0xFFu);
  EXPECT_TRUE(Holds(m, "w1", F("[]O(sy / dhe)")));
  EXPECT_TRUE(Holds(m, "w1", F(kFormula1)));
  EXPECT_TRUE(naive.Truth(F(kFormula1)) & 1u);
  EXPECT_TRUE(Holds(m, "w2", F("hrm")));
  EXPECT_FALSE(Holds(m, "w1", F("hrm")));
  EXPECT_TRUE(m.Valuation(m.Index("w1")).empty());
  EXPECT_TRUE(TruthSet(m, F("false")).none());
  EXPECT_THROW(Holds(m, "w9", F("p")), ModelError);
}

// O(false / true) fails everywhere: no pair of eta0 has an empty first
// coordinate, checked on the enumerated neighbourhoods.
TEST(M0, NoObligationToTheImpossible) {
  const MModel m = M0();
  const NaiveModel naive(m);
  for (std::size_t w = 0; w < m.size(); ++w) {
    EXPECT_FALSE(naive.eta(w).empty());
    for (const auto& [x, y] : naive.eta(w)) EXPECT_NE(x, 0u);
  }
  EXPECT_EQ(naive.Truth(F("O(false / true)")), 0u);
  EXPECT_TRUE(TruthSet(m, F("O(false / true)")).none());
}

TEST(M0, SyenaSequentFailsAtW1) {
  const MModel m = M0();
  const Sequent s =
      ParseSequent("[](he -> hrm), [](sy -> he), []O(~hrm / true), []O(sy / dhe) |- false");
  EXPECT_FALSE(CheckSequentAt(m, "w1", s));
  EXPECT_TRUE(CheckSequentAt(m, "w1", ParseSequent("|- true")));
  EXPECT_TRUE(CheckSequentAt(m, "w3", ParseSequent("p |- p")));
}

MModel OneWorld() {
  MModel m({"w"});
  m.AddEdge(0, 0);
  return m;
}

TEST(ValidateFrame, Condition4) {
  MModel m = OneWorld();
  m.AddGenerator(0, {m.Empty(), m.All()});
  const FrameReport r = ValidateFrame(m);
  EXPECT_EQ(r.condition, 4);
  EXPECT_EQ(r.world, "w");
  EXPECT_TRUE(r.x.empty());
  EXPECT_EQ(NaiveModel(m).Violations(), (std::set<int>{4, 5}));
}

TEST(ValidateFrame, Condition5WithWitness) {
  MModel m({"a", "b", "c"});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m.AddEdge(i, j);
  }
  const WorldSet cond = m.ToSet({"a", "b"});
  m.AddGenerator(0, {m.ToSet({"a"}), cond});
  m.AddGenerator(0, {m.ToSet({"b"}), cond});
  const FrameReport r = ValidateFrame(m);
  ASSERT_EQ(r.condition, 5);
  EXPECT_EQ(r.world, "a");
  // The witness pair and its complement are both in the enumerated eta(a).
  const NaiveModel naive(m);
  const Mask x = ToMask(m.ToSet(r.x));
  const Mask y = ToMask(m.ToSet(r.y));
  const Mask all = testing::Successors(m, 0);
  EXPECT_TRUE(naive.eta(0).count({x, y}));
  EXPECT_TRUE(naive.eta(0).count({all & ~x, y}));
  EXPECT_EQ(x, ToMask(m.ToSet({"a", "c"})));
  // Different conditions do not clash.
  MModel ok({"a", "b"});
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) ok.AddEdge(i, j);
  }
  ok.AddGenerator(0, {ok.ToSet({"a"}), ok.ToSet({"a"})});
  ok.AddGenerator(0, {ok.ToSet({"b"}), ok.All()});
  EXPECT_TRUE(ValidateFrame(ok).ok());
}

TEST(ValidateFrame, Conditions1And2) {
  MModel m({"a", "b"});
  m.AddEdge(0, 1);
  EXPECT_EQ(ValidateFrame(m).condition, 1);
  m.CloseReflexiveTransitive();
  EXPECT_TRUE(ValidateFrame(m).ok());
  m.AddGenerator(1, {m.ToSet({"a"}), m.ToSet({"b"})});
  EXPECT_EQ(ValidateFrame(m).condition, 2);
}

TEST(ValidateFrame, AgreesWithEnumerationOnPerturbedModels) {
  std::mt19937_64 rng(41);
  int invalid = 0;
  for (int i = 0; i < 1500; ++i) {
    MModel m = RandomModel(rng);
    const std::size_t n = m.size();
    std::uniform_int_distribution<std::uint32_t> subset(0, (1u << n) - 1);
    std::uniform_int_distribution<std::size_t> world(0, n - 1);
    // A few random generators, possibly clashing or empty.
    for (int k = rng() % 3; k > 0; --k) {
      const std::size_t w = world(rng);
      const Mask r = testing::Successors(m, w);
      WorldSet base = m.Empty(), cond = m.Empty();
      const Mask b = subset(rng) & (rng() % 8 ? r : ~Mask{0});
      const Mask c = subset(rng) & r;
      for (std::size_t v = 0; v < n; ++v) {
        if (b >> v & 1) base.set(v);
        if (c >> v & 1) cond.set(v);
      }
      m.AddGenerator(w, {base, cond});
    }
    if (rng() % 10 == 0) {
      MModel broken(m.names());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (m.Edge(a, b) && rng() % 6) broken.AddEdge(a, b);
        }
      }
      m = broken;
    }
    const FrameReport r = ValidateFrame(m);
    const std::set<int> expected = NaiveModel(m).Violations();
    EXPECT_EQ(r.ok(), expected.empty()) << ModelToJson(m).dump();
    if (!r.ok()) {
      ++invalid;
      EXPECT_TRUE(expected.count(r.condition)) << r.condition << " " << ModelToJson(m).dump();
    }
  }
  EXPECT_GT(invalid, 100);
}

TEST(RandomModel, SatisfiesEveryCondition) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const MModel m = RandomModel(rng);
    EXPECT_TRUE(ValidateFrame(m).ok());
    EXPECT_TRUE(NaiveModel(m).Violations().empty());
  }
}

TEST(Evaluator, AgreesWithEnumeration) {
  std::mt19937_64 rng(43);
  FormulaGenerator gen(43);
  for (int i = 0; i < 400; ++i) {
    const MModel m = RandomModel(rng);
    const NaiveModel naive(m);
    Evaluator ev(m);
    for (int k = 0; k < 10; ++k) {
      const Formula f = gen.Next(1 + (i + k) % 14);
      EXPECT_EQ(ToMask(ev.TruthSet(f)), naive.Truth(f)) << PrintFormula(f);
    }
  }
}

TEST(Evaluator, ClosedWorldAtomsWarn) {
  const MModel m = M0();
  std::set<std::string> warnings;
  EXPECT_TRUE(TruthSet(m, F("zz | hrm & yy"), &warnings).none());
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_NE(warnings.begin()->find("'yy'"), std::string::npos);
  EXPECT_NE(warnings.rbegin()->find("'zz'"), std::string::npos);
  Evaluator ev(m);
  EXPECT_EQ(ev.TruthSet(F("~qq")).count(), 8u);
  ASSERT_EQ(ev.warnings().size(), 1u);
  EXPECT_NE(ev.warnings().begin()->find("'qq'"), std::string::npos);
}

// Upward closure: a true O(a/b) stays true for any a' with a larger
// truth set below R[w].
TEST(Semantics, MonotoneInTheBody) {
  std::mt19937_64 rng(44);
  FormulaGenerator gen(44);
  int fired = 0;
  for (int i = 0; i < 400; ++i) {
    const MModel m = RandomModel(rng);
    Evaluator ev(m);
    for (int k = 0; k < 10; ++k) {
      const Formula a = gen.Next(1 + k % 4);
      const Formula a2 = gen.Next(1 + k % 5);
      const Formula b = gen.Next(1 + k % 3);
      const WorldSet ta = ev.TruthSet(a), ta2 = ev.TruthSet(a2);
      const WorldSet held = ev.TruthSet(Formula::Obl(a, b));
      for (std::size_t w = 0; w < m.size(); ++w) {
        const WorldSet& r = m.Successors(w);
        if (!held.test(w) || !(ta & r).is_subset_of(ta2 & r)) continue;
        ++fired;
        EXPECT_TRUE(ev.Holds(w, Formula::Obl(a2, b)));
      }
    }
  }
  EXPECT_GT(fired, 50);
}

// No two obligations with the same condition and jointly unsatisfiable
// bodies below R[w].
TEST(Semantics, NoConflict) {
  std::mt19937_64 rng(45);
  FormulaGenerator gen(45);
  for (int i = 0; i < 400; ++i) {
    const MModel m = RandomModel(rng);
    const NaiveModel naive(m);
    for (int k = 0; k < 10; ++k) {
      const Formula a = gen.Next(1 + k % 4), b = gen.Next(1 + k % 5), c = gen.Next(1 + k % 3);
      const Mask both = naive.Truth(Formula::Obl(a, c)) & naive.Truth(Formula::Obl(b, c));
      const Mask meet = naive.Truth(a) & naive.Truth(b);
      for (std::size_t w = 0; w < m.size(); ++w) {
        if (both >> w & 1) {
          EXPECT_NE(meet & testing::Successors(m, w), 0u);
        }
      }
    }
  }
}

// Every derivable sequent holds at every world of every valid model.
TEST(Semantics, SoundnessSpotCheck) {
  std::mt19937_64 rng(46);
  std::vector<MModel> models = {M0()};
  for (int i = 0; i < 40; ++i) models.push_back(RandomModel(rng));
  std::vector<Sequent> derivable;
  for (const char* s : {"|- [](p -> q) & O(p / r) -> O(q / r)",
                        "|- [](q -> ~p) -> ~(O(p / r) & O(q / r))",
                        "|- []((p -> q) & (q -> p)) -> (O(r / p) -> O(r / q))",
                        "|- [](p -> q) -> ([]p -> []q)", "|- []p -> p", "|- []p -> [][]p",
                        "|- ~O(false / q)"}) {
    derivable.push_back(ParseSequent(s));
  }
  FormulaGenerator gen(46);
  for (int i = 0; i < 600; ++i) {
    Sequent s = gen.NextSequent();
    if (Prove(s).verdict == Verdict::kAccepted) derivable.push_back(std::move(s));
  }
  for (const Sequent& s : derivable) ASSERT_EQ(Prove(s).verdict, Verdict::kAccepted) << PrintSequent(s);
  for (const MModel& m : models) {
    Evaluator ev(m);
    for (const Sequent& s : derivable) {
      EXPECT_EQ(ev.TruthSet(Interpretation(s)).count(), m.size()) << PrintSequent(s);
    }
  }
}

TEST(ModelJson, RoundTrip) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const MModel m = RandomModel(rng);
    const nlohmann::json j = ModelToJson(m);
    const MModel back = ModelFromJson(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(ModelToJson(back), j);
  }
  const MModel m0 = M0();
  EXPECT_EQ(ModelToJson(ModelFromJson(ModelToJson(m0))), ModelToJson(m0));
}

TEST(ModelJson, ClosureOnlyOnRequest) {
  const auto j = nlohmann::json::parse(R"({"worlds":["a","b","c"],"acc":[["a","b"],["b","c"]]})");
  EXPECT_EQ(ValidateFrame(ModelFromJson(j)).condition, 1);
  const MModel closed = ModelFromJson(j, {true});
  EXPECT_TRUE(ValidateFrame(closed).ok());
  EXPECT_TRUE(closed.Edge(0, 2));
  EXPECT_FALSE(closed.Edge(2, 0));
}

TEST(ModelJson, Errors) {
  EXPECT_THROW(ModelFromJson(nlohmann::json::parse(R"({"worlds":["a"],"acc":[["a","z"]]})")),
               ModelError);
  EXPECT_THROW(ModelFromJson(nlohmann::json::parse(R"({"worlds":["a","a"]})")), ModelError);
  EXPECT_THROW(ModelFromJson(nlohmann::json::parse(R"({"acc":[]})")), ModelError);
  EXPECT_THROW(ModelFromJson(nlohmann::json::parse(R"({"worlds":["a"],"val":{"a":"p"}})")),
               ModelError);
}

// Extensional pairs reduce to the same neighbourhoods as the generators.
TEST(ModelJson, ExtensionalImport) {
  const auto j = nlohmann::json::parse(R"({
    "worlds": ["a", "b", "c"],
    "acc": [["a","a"],["a","b"],["a","c"],["b","b"],["c","c"]],
    "eta_pairs": {"a": [{"x": ["a"], "y": ["a","b"]},
                        {"x": ["a","b"], "y": ["a","b"]},
                        {"x": ["a","c"], "y": ["a","b"]},
                        {"x": ["a","b","c"], "y": ["a","b"]},
                        {"x": ["b","c"], "y": ["c"]},
                        {"x": ["a","b","c"], "y": ["c"]}]},
    "val": {"a": ["p"], "b": ["q"]}
  })");
  const MModel m = ModelFromJson(j);
  ASSERT_EQ(m.Generators(0).size(), 2u);
  EXPECT_TRUE(ValidateFrame(m).ok());
  std::set<testing::Pair> listed;
  for (const auto& p : j["eta_pairs"]["a"]) {
    listed.insert({ToMask(m.ToSet(p["x"].get<std::vector<std::string>>())),
                   ToMask(m.ToSet(p["y"].get<std::vector<std::string>>()))});
  }
  EXPECT_EQ(NaiveModel(m).eta(0), listed);
  EXPECT_TRUE(Holds(m, "a", F("O(p / p | q)")));
  EXPECT_FALSE(Holds(m, "a", F("O(q / p | q)")));
}

TEST(GeneratorsFromPairs, MinimalBases) {
  MModel m({"a", "b", "c"});
  const auto set = [&](std::vector<std::string> names) { return m.ToSet(names); };
  const std::vector<Generator> gens = GeneratorsFromPairs(
      {{set({"a", "b"}), set({"c"})}, {set({"a"}), set({"c"})}, {set({"b", "c"}), set({"c"})},
       {set({"c"}), set({"a"})}});
  ASSERT_EQ(gens.size(), 3u);
  int with_c = 0;
  for (const Generator& g : gens) with_c += g.cond == set({"c"});
  EXPECT_EQ(with_c, 2);
}

TEST(RenderModel, MentionsWorldsAndGenerators) {
  const std::string text = RenderModel(M0());
  EXPECT_NE(text.find("w1"), std::string::npos);
  EXPECT_NE(text.find("w8"), std::string::npos);
}

}  // namespace
}  // namespace mdl
