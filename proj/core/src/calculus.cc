#include "mdl/calculus.h"

#include <array>
#include <stdexcept>
#include <string>

namespace mdl {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  RuleClass cls;
  int premisses;
};

constexpr std::array<RuleInfo, 21> kRules = {{
    {Rule::kInit, "Init", RuleClass::kZeroPremiss, 0},
    {Rule::kBottomL, "BottomL", RuleClass::kZeroPremiss, 0},
    {Rule::kNegL, "NegL", RuleClass::kStaticOne, 1},
    {Rule::kNegR, "NegR", RuleClass::kStaticOne, 1},
    {Rule::kAndL, "AndL", RuleClass::kStaticOne, 1},
    {Rule::kAndR, "AndR", RuleClass::kStaticTwo, 2},
    {Rule::kOrL, "OrL", RuleClass::kStaticTwo, 2},
    {Rule::kOrR, "OrR", RuleClass::kStaticOne, 1},
    {Rule::kImpL, "ImpL", RuleClass::kStaticTwo, 2},
    {Rule::kImpR, "ImpR", RuleClass::kStaticOne, 1},
    {Rule::kT, "T", RuleClass::kStaticOne, 1},
    {Rule::kFour, "Four", RuleClass::kTransitional, 1},
    {Rule::kMon, "Mon", RuleClass::kTransitional, 3},
    {Rule::kD1, "D1", RuleClass::kTransitional, 1},
    {Rule::kD2, "D2", RuleClass::kTransitional, 3},
    {Rule::kCut, "Cut", RuleClass::kStructural, 2},
    {Rule::kWeakL, "WeakL", RuleClass::kStructural, 1},
    {Rule::kWeakR, "WeakR", RuleClass::kStructural, 1},
    {Rule::kConL, "ConL", RuleClass::kStructural, 1},
    {Rule::kConR, "ConR", RuleClass::kStructural, 1},
    {Rule::kAssumption, "Assumption", RuleClass::kZeroPremiss, 0},
}};

const RuleInfo& Info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

template <typename F>
void ForEach(const Bits& bits, F&& f) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    f(static_cast<FormulaId>(i));
  }
}

IndexedSequent WithAnte(IndexedSequent s, FormulaId a) {
  s.ante.set(a);
  return s;
}

IndexedSequent WithSucc(IndexedSequent s, FormulaId a) {
  s.succ.set(a);
  return s;
}

}  // namespace

std::string_view RuleName(Rule r) { return Info(r).name; }

std::optional<Rule> RuleFromName(std::string_view name) {
  for (const RuleInfo& info : kRules) {
    if (info.name == name) return info.rule;
  }
  return std::nullopt;
}

RuleClass ClassOf(Rule r) { return Info(r).cls; }

int PremissCount(Rule r) { return Info(r).premisses; }

// --- Universe ---------------------------------------------------------------

Universe::Universe(const std::vector<Formula>& roots) {
  FormulaSet all;
  for (const Formula& r : roots) {
    FormulaSet sub = Subformulas(r);
    all.insert(sub.begin(), sub.end());
  }
  formulas_.assign(all.begin(), all.end());
  for (FormulaId i = 0; i < formulas_.size(); ++i) index_.emplace(formulas_[i], i);
  kinds_.resize(formulas_.size());
  children_.resize(formulas_.size());
  boxes_.resize(formulas_.size());
  atoms_.resize(formulas_.size());
  for (FormulaId i = 0; i < formulas_.size(); ++i) {
    const Formula& f = formulas_[i];
    kinds_[i] = f.kind();
    for (std::size_t c = 0; c < f.arity(); ++c) children_[i][c] = index_.at(f.child(c));
    if (f.is(Kind::kBox)) boxes_.set(i);
    if (f.is(Kind::kAtom)) atoms_.set(i);
    if (f.is(Kind::kBottom)) bottom_ = i;
  }
}

std::optional<FormulaId> Universe::Find(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FormulaId Universe::Id(const Formula& f) const {
  auto id = Find(f);
  if (!id) throw std::out_of_range("formula outside the subformula universe");
  return *id;
}

Bits Universe::ToBits(const FormulaSet& fs) const {
  Bits bits = Empty();
  for (const Formula& f : fs) bits.set(Id(f));
  return bits;
}

FormulaSet Universe::ToSet(const Bits& bits) const {
  FormulaSet out;
  ForEach(bits, [&](FormulaId i) { out.insert(out.end(), formulas_[i]); });
  return out;
}

// --- IndexedCalculus ----------------------------------------------------------

IndexedSequent IndexedCalculus::Convert(const SetSequent& s) const {
  return IndexedSequent{u_.ToBits(s.ante), u_.ToBits(s.succ)};
}

SetSequent IndexedCalculus::Convert(const IndexedSequent& s) const {
  return SetSequent{u_.ToSet(s.ante), u_.ToSet(s.succ)};
}

RuleApplication IndexedCalculus::Convert(const IndexedApplication& a) const {
  RuleApplication out{a.rule, {}, {}};
  for (int i = 0; i < a.principal_count; ++i) out.principal.push_back(u_.formula(a.principal[i]));
  for (const IndexedSequent& p : a.premisses) out.premisses.push_back(Convert(p));
  return out;
}

std::optional<std::pair<Rule, FormulaId>> IndexedCalculus::InitialWitness(
    const IndexedSequent& s) const {
  if (auto bottom = u_.bottom(); bottom && s.ante.test(*bottom)) {
    return std::pair{Rule::kBottomL, *bottom};
  }
  Bits shared = s.ante & s.succ;
  if (opts_.atomic_init) shared &= u_.atoms();
  auto first = shared.find_first();
  if (first == Bits::npos) return std::nullopt;
  return std::pair{Rule::kInit, static_cast<FormulaId>(first)};
}

std::vector<IndexedApplication> IndexedCalculus::OnePremissStatic(const IndexedSequent& s) const {
  std::vector<IndexedApplication> out;
  auto add = [&](Rule rule, FormulaId principal, IndexedSequent premiss) {
    if (premiss == s) return;
    out.push_back(IndexedApplication{rule, {principal, 0}, 1, {std::move(premiss)}});
  };
  ForEach(s.ante, [&](FormulaId f) {
    switch (u_.kind(f)) {
      case Kind::kNeg:
        add(Rule::kNegL, f, WithSucc(s, u_.child(f, 0)));
        break;
      case Kind::kAnd:
        add(Rule::kAndL, f, WithAnte(WithAnte(s, u_.child(f, 0)), u_.child(f, 1)));
        break;
      case Kind::kBox:
        add(Rule::kT, f, WithAnte(s, u_.child(f, 0)));
        break;
      default:
        break;
    }
  });
  ForEach(s.succ, [&](FormulaId f) {
    switch (u_.kind(f)) {
      case Kind::kNeg:
        add(Rule::kNegR, f, WithAnte(s, u_.child(f, 0)));
        break;
      case Kind::kOr:
        add(Rule::kOrR, f, WithSucc(WithSucc(s, u_.child(f, 0)), u_.child(f, 1)));
        break;
      case Kind::kImp:
        add(Rule::kImpR, f, WithSucc(WithAnte(s, u_.child(f, 0)), u_.child(f, 1)));
        break;
      default:
        break;
    }
  });
  return out;
}

std::vector<IndexedApplication> IndexedCalculus::TwoPremissStatic(const IndexedSequent& s) const {
  std::vector<IndexedApplication> out;
  // Enumerated only when no premiss coincides with the conclusion.
  auto add = [&](Rule rule, FormulaId principal, IndexedSequent p1, IndexedSequent p2) {
    if (p1 == s || p2 == s) return;
    out.push_back(IndexedApplication{rule, {principal, 0}, 1, {std::move(p1), std::move(p2)}});
  };
  ForEach(s.succ, [&](FormulaId f) {
    if (u_.kind(f) == Kind::kAnd) {
      add(Rule::kAndR, f, WithSucc(s, u_.child(f, 0)), WithSucc(s, u_.child(f, 1)));
    }
  });
  ForEach(s.ante, [&](FormulaId f) {
    if (u_.kind(f) == Kind::kOr) {
      add(Rule::kOrL, f, WithAnte(s, u_.child(f, 0)), WithAnte(s, u_.child(f, 1)));
    }
  });
  ForEach(s.ante, [&](FormulaId f) {
    if (u_.kind(f) == Kind::kImp) {
      add(Rule::kImpL, f, WithSucc(s, u_.child(f, 0)), WithAnte(s, u_.child(f, 1)));
    }
  });
  return out;
}

std::vector<IndexedApplication> IndexedCalculus::Transitional(const IndexedSequent& s) const {
  std::vector<IndexedApplication> out;
  const IndexedSequent boxed{s.ante & u_.boxes(), u_.Empty()};
  std::vector<FormulaId> obligations;
  ForEach(s.ante, [&](FormulaId f) {
    if (u_.kind(f) == Kind::kObl) obligations.push_back(f);
  });

  for (FormulaId o : obligations) {
    out.push_back(IndexedApplication{Rule::kD1, {o, 0}, 1, {WithAnte(boxed, u_.child(o, 0))}});
  }
  for (std::size_t i = 0; i < obligations.size(); ++i) {
    for (std::size_t j = i + 1; j < obligations.size(); ++j) {
      FormulaId a = obligations[i];
      FormulaId b = obligations[j];
      out.push_back(IndexedApplication{
          Rule::kD2,
          {a, b},
          2,
          {WithAnte(WithAnte(boxed, u_.child(a, 0)), u_.child(b, 0)),
           WithSucc(WithAnte(boxed, u_.child(a, 1)), u_.child(b, 1)),
           WithSucc(WithAnte(boxed, u_.child(b, 1)), u_.child(a, 1))}});
    }
  }
  for (FormulaId a : obligations) {
    ForEach(s.succ, [&](FormulaId c) {
      if (u_.kind(c) != Kind::kObl) return;
      out.push_back(IndexedApplication{
          Rule::kMon,
          {a, c},
          2,
          {WithSucc(WithAnte(boxed, u_.child(a, 0)), u_.child(c, 0)),
           WithSucc(WithAnte(boxed, u_.child(a, 1)), u_.child(c, 1)),
           WithSucc(WithAnte(boxed, u_.child(c, 1)), u_.child(a, 1))}});
    });
  }
  ForEach(s.succ, [&](FormulaId f) {
    if (u_.kind(f) != Kind::kBox) return;
    out.push_back(IndexedApplication{Rule::kFour, {f, 0}, 1, {WithSucc(boxed, u_.child(f, 0))}});
  });
  return out;
}

// --- Set-level API --------------------------------------------------------------

namespace {

std::vector<Formula> Roots(const SetSequent& s) {
  std::vector<Formula> roots(s.ante.begin(), s.ante.end());
  roots.insert(roots.end(), s.succ.begin(), s.succ.end());
  return roots;
}

}  // namespace

bool IsInitial(const SetSequent& s, const CalculusOptions& opts) {
  Universe u(Roots(s));
  IndexedCalculus calc(u, opts);
  return calc.InitialWitness(calc.Convert(s)).has_value();
}

std::vector<RuleApplication> Applications(const SetSequent& s, const CalculusOptions& opts) {
  Universe u(Roots(s));
  IndexedCalculus calc(u, opts);
  IndexedSequent is = calc.Convert(s);
  std::vector<RuleApplication> out;
  using Group = std::vector<IndexedApplication> (IndexedCalculus::*)(const IndexedSequent&) const;
  for (Group group : {&IndexedCalculus::OnePremissStatic, &IndexedCalculus::TwoPremissStatic,
                      &IndexedCalculus::Transitional}) {
    for (const IndexedApplication& a : (calc.*group)(is)) out.push_back(calc.Convert(a));
  }
  return out;
}

}  // namespace mdl
