#include <gtest/gtest.h>

#include "mdl/formula.h"
#include "mdl/generator.h"
#include "mdl/parser.h"
#include "mdl/sequent.h"

namespace mdl {
namespace {

Formula F(std::string_view s) { return ParseFormula(s); }

FormulaSet Set(std::initializer_list<std::string_view> xs) {
  FormulaSet out;
  for (auto x : xs) out.insert(F(x));
  return out;
}

TEST(Subformulas, Examples) {
  EXPECT_EQ(Subformulas(F("p")), Set({"p"}));
  EXPECT_EQ(Subformulas(F("O(p / q)")), Set({"O(p / q)", "p", "q"}));
  EXPECT_EQ(Subformulas(F("[](p -> q)")), Set({"[](p -> q)", "p -> q", "p", "q"}));
}

TEST(Subformulas, ClosedAndBoundedBySize) {
  FormulaGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.Next(1 + i % 25);
    const FormulaSet sub = Subformulas(f);
    EXPECT_LE(sub.size(), f.size());
    EXPECT_TRUE(sub.count(f));
    for (const Formula& g : sub) {
      for (const Formula& h : Subformulas(g)) EXPECT_TRUE(sub.count(h)) << PrintFormula(f);
    }
  }
}

TEST(BoxedPart, KeepsTheBox) {
  EXPECT_EQ(BoxedPart(Set({"p", "[]q", "O(r / s)"})), Set({"[]q"}));
  EXPECT_TRUE(BoxedPart(FormulaSet{}).empty());
  EXPECT_EQ(BoxedPart(Set({"[]p", "[][]p"})), Set({"[]p", "[][]p"}));
}

TEST(BoxedPart, MultisetVersionKeepsDuplicates) {
  const std::vector<Formula> g = {F("[]p"), F("q"), F("[]p")};
  EXPECT_EQ(BoxedPart(g), (std::vector<Formula>{F("[]p"), F("[]p")}));
}

TEST(Formula, TopIsSugar) {
  EXPECT_EQ(Formula::Top(), Formula::Neg(Formula::Bottom()));
  EXPECT_TRUE(F("true").IsTop());
  EXPECT_FALSE(F("~p").IsTop());
}

TEST(Formula, StructuralEqualityAndOrder) {
  EXPECT_EQ(F("O(p / q) & []r"), Formula::And(Formula::Obl(F("p"), F("q")), Formula::Box(F("r"))));
  EXPECT_NE(F("O(p / q)"), F("O(q / p)"));
  EXPECT_NE(F("p & q"), F("q & p"));
  EXPECT_EQ(F("p & q").hash(), F("p & q").hash());
  EXPECT_TRUE(F("p") < F("q") || F("q") < F("p"));
}

TEST(Formula, SizeAndDepth) {
  EXPECT_EQ(F("O(p / []q)").size(), 4u);
  EXPECT_EQ(F("O(p / []q)").modal_depth(), 2);
  EXPECT_EQ(F("p -> q").modal_depth(), 0);
  EXPECT_EQ(Atoms(F("O(p / []q) & p")), (std::set<std::string>{"p", "q"}));
}

TEST(ToSetSequent, Deduplicates) {
  const SetSequent a = ToSetSequent(ParseSequent("p, p |- q"));
  EXPECT_EQ(a.ante, Set({"p"}));
  EXPECT_EQ(a.succ, Set({"q"}));
  const SetSequent b = ToSetSequent(ParseSequent("|-"));
  EXPECT_TRUE(b.ante.empty() && b.succ.empty());
  const SetSequent c = ToSetSequent(ParseSequent("p, []p |- p"));
  EXPECT_EQ(c.ante, Set({"p", "[]p"}));
  EXPECT_EQ(c.succ, Set({"p"}));
}

TEST(Sequent, MultisetEquality) {
  EXPECT_TRUE(SameSequent(ParseSequent("p, q |- r"), ParseSequent("q, p |- r")));
  EXPECT_FALSE(SameSequent(ParseSequent("p, p |- r"), ParseSequent("p |- r")));
  EXPECT_FALSE(SameSequent(ParseSequent("p |- r"), ParseSequent("r |- p")));
}

}  // namespace
}  // namespace mdl
