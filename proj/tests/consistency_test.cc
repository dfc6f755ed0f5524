#include <gtest/gtest.h>

#include "mdl/consistency.h"
#include "mdl/corpus.h"
#include "mdl/generator.h"
#include "mdl/parser.h"
#include "support.h"

namespace mdl {
namespace {

FormulaSet Set(std::initializer_list<std::string_view> xs) {
  FormulaSet out;
  for (auto x : xs) out.insert(ParseFormula(x));
  return out;
}

Derivation N(std::string_view conclusion, Rule rule, std::vector<std::string_view> principal,
             std::vector<Derivation> children = {}) {
  Derivation d;
  d.conclusion = ParseSequent(conclusion);
  d.rule = rule;
  for (auto p : principal) d.principal.push_back(ParseFormula(p));
  d.children = std::move(children);
  return d;
}

TEST(BoxAssumptions, BoxesFirst) {
  const Sequent s = BoxAssumptions(Set({"p", "q -> r"}), ParseSequent("s |- t"));
  EXPECT_TRUE(SameSequent(s, ParseSequent("[]p, [](q -> r), s |- t")));
  EXPECT_EQ(s.ante[0], ParseFormula("[]p"));
}

TEST(Consistency, Syena) {
  const ProblemFile p = ParseProblem(ReadFile(testing::CorpusDir() / "syena.mdl"));
  const ConsistencyResult r = OuterConsistent(p.assumptions);
  ASSERT_TRUE(r.consistent);
  const CounterModel& cm = *r.detail.countermodel;
  EXPECT_TRUE(cm.certified());
  EXPECT_TRUE(Holds(cm.model, cm.root,
                    ParseFormula("[](he -> hrm) & [](sy -> he) & []O(~hrm / true) & []O(sy / dhe)")));
  // Every assumption holds at every world the root sees.
  const testing::NaiveModel naive(cm.model);
  const testing::Mask seen = testing::Successors(cm.model, cm.model.Index(cm.root));
  for (const Formula& a : p.assumptions) EXPECT_EQ(naive.Truth(a) & seen, seen) << PrintFormula(a);
  EXPECT_EQ(ConsistencyToJson(r).at("verdict"), "consistent");
}

TEST(Derives, BoxedGoalFromAssumption) {
  const DerivesResult r = Derives(Set({"p"}), ParseSequent("|- []p"));
  ASSERT_EQ(r.verdict, Verdict::kAccepted);
  EXPECT_TRUE(CheckDerivation(*r.derivation));
  // By hand: []p |- []p is an instance of Init, then cut against []p.
  const Derivation hand = N("[]p |- []p", Rule::kInit, {"[]p"});
  const Derivation from = FromAssumptions(hand, Set({"p"}));
  EXPECT_TRUE(SameSequent(from.conclusion, ParseSequent("|- []p")));
  EXPECT_TRUE(CheckDerivation(from, AssumptionSequents(Set({"p"}))));
  EXPECT_TRUE(CheckDerivation(FromAssumptions(*r.derivation, Set({"p"})),
                              AssumptionSequents(Set({"p"}))));
  EXPECT_EQ(DerivesToJson(r).at("verdict"), "derivable");
}

TEST(Derives, InnerConsistency) {
  const DerivesResult r = Derives({}, ParseSequent("|- false"));
  EXPECT_EQ(r.verdict, Verdict::kRejected);
  ASSERT_TRUE(r.countermodel);
  EXPECT_TRUE(r.countermodel->certified());
  EXPECT_EQ(DerivesToJson(r).at("verdict"), "underivable");
}

TEST(Consistency, Clash) {
  const ConsistencyResult r = OuterConsistent(Set({"p", "~p"}));
  ASSERT_FALSE(r.consistent);
  EXPECT_TRUE(CheckDerivation(*r.detail.derivation));
  // By hand: T twice, then NegL and Init.
  const Derivation hand =
      N("[]p, []~p |-", Rule::kT, {"[]p"},
        {N("[]p, []~p, p |-", Rule::kT, {"[]~p"},
           {N("[]p, []~p, p, ~p |-", Rule::kNegL, {"~p"},
              {N("[]p, []~p, p, ~p |- p", Rule::kInit, {"p"})})})});
  EXPECT_TRUE(CheckDerivation(hand));
  const Derivation from = FromAssumptions(hand, Set({"p", "~p"}));
  EXPECT_TRUE(from.conclusion.ante.empty() && from.conclusion.succ.empty());
  EXPECT_TRUE(CheckDerivation(from, AssumptionSequents(Set({"p", "~p"}))));
  EXPECT_EQ(ConsistencyToJson(r).at("verdict"), "inconsistent");
}

TEST(Consistency, ConflictingObligations) {
  const ConsistencyResult r = OuterConsistent(Set({"O(p / true)", "O(~p / true)"}));
  ASSERT_FALSE(r.consistent);
  EXPECT_TRUE(CheckDerivation(*r.detail.derivation));
  EXPECT_EQ(RuleCounts(*r.detail.derivation).count(Rule::kD2), 1u);
  // Different conditions do not conflict.
  EXPECT_TRUE(OuterConsistent(Set({"O(p / q)", "O(~p / r)"})).consistent);
  EXPECT_TRUE(OuterConsistent({}).consistent);
}

TEST(FromAssumptions, BoxedLeaves) {
  const FormulaSet a = Set({"p -> q", "p"});
  const DerivesResult r = Derives(a, ParseSequent("|- q"));
  ASSERT_EQ(r.verdict, Verdict::kAccepted);
  const Derivation boxed = FromAssumptions(*r.derivation, a, true);
  EXPECT_TRUE(CheckDerivation(boxed, AssumptionSequents(a, true)));
  EXPECT_FALSE(CheckDerivation(boxed, AssumptionSequents(a, false)));
  EXPECT_TRUE(CheckDerivation(FromAssumptions(*r.derivation, a), AssumptionSequents(a)));
  EXPECT_THROW(FromAssumptions(*r.derivation, Set({"r"})), std::invalid_argument);
}

TEST(Derives, MonotoneInTheAssumptions) {
  FormulaGenerator gen(61, {3, 2, 8, 3});
  int accepted = 0;
  for (int i = 0; i < 200; ++i) {
    FormulaSet a;
    for (int k = i % 3; k >= 0; --k) a.insert(gen.Next(1 + gen.rng()() % 5));
    const Sequent goal = gen.NextSequent();
    if (Derives(a, goal).verdict != Verdict::kAccepted) continue;
    ++accepted;
    FormulaSet more = a;
    more.insert(gen.Next(1 + i % 6));
    EXPECT_EQ(Derives(more, goal).verdict, Verdict::kAccepted);
  }
  EXPECT_GT(accepted, 30);
}

// Accepted reductions turn into kernel-checked derivations from the
// assumption sequents; rejected ones come with a root where every
// assumption holds throughout R[root] and the goal fails.
TEST(Derives, DeductionTheoremCoherence) {
  FormulaGenerator gen(62, {3, 2, 8, 3});
  for (int i = 0; i < 150; ++i) {
    FormulaSet a;
    for (int k = i % 3; k >= 0; --k) a.insert(gen.Next(1 + gen.rng()() % 5));
    const Sequent goal = gen.NextSequent();
    const DerivesResult r = Derives(a, goal);
    if (r.verdict == Verdict::kAccepted) {
      const CheckResult k = CheckDerivation(FromAssumptions(*r.derivation, a), AssumptionSequents(a));
      EXPECT_TRUE(k) << k.message;
    } else {
      const CounterModel& cm = *r.countermodel;
      ASSERT_TRUE(cm.certified());
      const std::size_t root = cm.model.Index(cm.root);
      for (const Formula& f : a) {
        EXPECT_TRUE(cm.model.Successors(root).is_subset_of(TruthSet(cm.model, f)));
      }
      EXPECT_FALSE(CheckSequentAt(cm.model, cm.root, goal));
    }
  }
}

}  // namespace
}  // namespace mdl
