#include "mdl/derivation.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mdl/parser.h"

namespace mdl {

namespace {

using Multiset = std::vector<Formula>;

Multiset Plus(Multiset m, std::initializer_list<Formula> extra) {
  m.insert(m.end(), extra.begin(), extra.end());
  return m;
}

Multiset Plus(Multiset m, const Multiset& extra) {
  m.insert(m.end(), extra.begin(), extra.end());
  return m;
}

bool Contains(const Multiset& m, const Formula& f) {
  return std::find(m.begin(), m.end(), f) != m.end();
}

std::optional<Multiset> Minus(Multiset m, const Formula& f) {
  auto it = std::find(m.begin(), m.end(), f);
  if (it == m.end()) return std::nullopt;
  m.erase(it);
  return m;
}

class Checker {
 public:
  Checker(const std::vector<Sequent>& assumptions, const KernelOptions& opts)
      : assumptions_(assumptions), opts_(opts) {}

  CheckResult Run(const Derivation& d) {
    std::vector<std::size_t> path;
    Visit(d, &path);
    return result_;
  }

 private:
  void Visit(const Derivation& d, std::vector<std::size_t>* path) {
    if (!result_.ok) return;
    if (std::string err = CheckNode(d); !err.empty()) {
      result_.ok = false;
      result_.path = *path;
      result_.message = std::string(RuleName(d.rule)) + " at '" + PrintSequent(d.conclusion) +
                        "': " + err;
      return;
    }
    for (std::size_t i = 0; i < d.children.size() && result_.ok; ++i) {
      path->push_back(i);
      Visit(d.children[i], path);
      path->pop_back();
    }
  }

  // Empty string when d is a correct instance of its rule.
  std::string CheckNode(const Derivation& d) const {
    const Multiset& ante = d.conclusion.ante;
    const Multiset& succ = d.conclusion.succ;
    const std::vector<Derivation>& kids = d.children;
    const int arity = PremissCount(d.rule);
    if (static_cast<int>(kids.size()) != arity) {
      return "expected " + std::to_string(arity) + " premiss(es), found " +
             std::to_string(kids.size());
    }
    if (d.rule == Rule::kWeakL || d.rule == Rule::kWeakR) {
      if (d.principal.empty()) return "weakening must name the added formulas";
    } else {
      std::size_t want = (d.rule == Rule::kMon || d.rule == Rule::kD2) ? 2 : 1;
      if (d.rule == Rule::kAssumption) want = 0;
      if (d.principal.size() != want) {
        return "expected " + std::to_string(want) + " principal formula(s)";
      }
    }
    auto premiss = [&](std::size_t i) -> const Sequent& { return kids[i].conclusion; };
    auto expect = [&](std::size_t i, const Multiset& a, const Multiset& s) -> std::string {
      if (!SameMultiset(premiss(i).ante, a) || !SameMultiset(premiss(i).succ, s)) {
        return "premiss " + std::to_string(i + 1) + " must be '" + PrintSequent(Sequent{a, s}) +
               "' but is '" + PrintSequent(premiss(i)) + "'";
      }
      return {};
    };
    auto need = [](bool cond, const char* what) -> std::string { return cond ? "" : what; };
    auto first_error = [](std::initializer_list<std::string> errs) -> std::string {
      for (const std::string& e : errs) {
        if (!e.empty()) return e;
      }
      return {};
    };

    const Formula* p = d.principal.empty() ? nullptr : &d.principal[0];
    switch (d.rule) {
      case Rule::kInit:
        if (opts_.atomic_init && !p->is(Kind::kAtom)) return "Init restricted to atoms";
        return need(Contains(ante, *p) && Contains(succ, *p),
                    "principal formula must occur on both sides");
      case Rule::kBottomL:
        return need(p->is(Kind::kBottom) && Contains(ante, *p), "false must occur on the left");
      case Rule::kNegL:
        if (!p->is(Kind::kNeg) || !Contains(ante, *p)) return "principal ~a must be on the left";
        return expect(0, ante, Plus(succ, {p->sub()}));
      case Rule::kNegR:
        if (!p->is(Kind::kNeg) || !Contains(succ, *p)) return "principal ~a must be on the right";
        return expect(0, Plus(ante, {p->sub()}), succ);
      case Rule::kAndL:
        if (!p->is(Kind::kAnd) || !Contains(ante, *p)) return "principal a & b must be on the left";
        return expect(0, Plus(ante, {p->left(), p->right()}), succ);
      case Rule::kAndR:
        if (!p->is(Kind::kAnd) || !Contains(succ, *p)) {
          return "principal a & b must be on the right";
        }
        return first_error({expect(0, ante, Plus(succ, {p->left()})),
                            expect(1, ante, Plus(succ, {p->right()}))});
      case Rule::kOrL:
        if (!p->is(Kind::kOr) || !Contains(ante, *p)) return "principal a | b must be on the left";
        return first_error({expect(0, Plus(ante, {p->left()}), succ),
                            expect(1, Plus(ante, {p->right()}), succ)});
      case Rule::kOrR:
        if (!p->is(Kind::kOr) || !Contains(succ, *p)) return "principal a | b must be on the right";
        return expect(0, ante, Plus(succ, {p->left(), p->right()}));
      case Rule::kImpL:
        if (!p->is(Kind::kImp) || !Contains(ante, *p)) return "principal a -> b must be on the left";
        return first_error({expect(0, ante, Plus(succ, {p->left()})),
                            expect(1, Plus(ante, {p->right()}), succ)});
      case Rule::kImpR:
        if (!p->is(Kind::kImp) || !Contains(succ, *p)) {
          return "principal a -> b must be on the right";
        }
        return expect(0, Plus(ante, {p->left()}), Plus(succ, {p->right()}));
      case Rule::kT:
        if (!p->is(Kind::kBox) || !Contains(ante, *p)) return "principal []a must be on the left";
        return expect(0, Plus(ante, {p->sub()}), succ);
      case Rule::kFour:
        if (!p->is(Kind::kBox) || !Contains(succ, *p)) return "principal []a must be on the right";
        return expect(0, BoxedPart(ante), {p->sub()});
      case Rule::kD1: {
        if (!p->is(Kind::kObl) || !Contains(ante, *p)) return "principal O(a/b) must be on the left";
        return expect(0, Plus(BoxedPart(ante), {p->body()}), {});
      }
      case Rule::kD2: {
        const Formula& a = d.principal[0];
        const Formula& b = d.principal[1];
        if (!a.is(Kind::kObl) || !b.is(Kind::kObl)) return "principals must be obligations";
        auto rest = Minus(ante, a);
        if (!rest || !Contains(*rest, b)) {
          return "both principal obligations must occur on the left as distinct occurrences";
        }
        Multiset boxed = BoxedPart(ante);
        return first_error({expect(0, Plus(boxed, {a.body(), b.body()}), {}),
                            expect(1, Plus(boxed, {a.cond()}), {b.cond()}),
                            expect(2, Plus(boxed, {b.cond()}), {a.cond()})});
      }
      case Rule::kMon: {
        const Formula& a = d.principal[0];
        const Formula& c = d.principal[1];
        if (!a.is(Kind::kObl) || !Contains(ante, a)) return "first principal must be O(a/b) on the left";
        if (!c.is(Kind::kObl) || !Contains(succ, c)) {
          return "second principal must be O(c/d) on the right";
        }
        Multiset boxed = BoxedPart(ante);
        return first_error({expect(0, Plus(boxed, {a.body()}), {c.body()}),
                            expect(1, Plus(boxed, {a.cond()}), {c.cond()}),
                            expect(2, Plus(boxed, {c.cond()}), {a.cond()})});
      }
      case Rule::kWeakL:
      case Rule::kWeakR: {
        const bool left = d.rule == Rule::kWeakL;
        Multiset rest = left ? ante : succ;
        for (const Formula& f : d.principal) {
          auto r = Minus(rest, f);
          if (!r) return "weakened formula " + PrintFormula(f) + " does not occur in the conclusion";
          rest = std::move(*r);
        }
        return left ? expect(0, rest, succ) : expect(0, ante, rest);
      }
      case Rule::kConL:
        if (!Contains(ante, *p)) return "contracted formula must occur on the left";
        return expect(0, Plus(ante, {*p}), succ);
      case Rule::kConR:
        if (!Contains(succ, *p)) return "contracted formula must occur on the right";
        return expect(0, ante, Plus(succ, {*p}));
      case Rule::kCut: {
        auto left_rest = Minus(premiss(0).succ, *p);
        auto right_rest = Minus(premiss(1).ante, *p);
        if (!left_rest) return "cut formula missing on the right of premiss 1";
        if (!right_rest) return "cut formula missing on the left of premiss 2";
        if (!SameMultiset(ante, Plus(premiss(0).ante, *right_rest)) ||
            !SameMultiset(succ, Plus(*left_rest, premiss(1).succ))) {
          return "conclusion is not the union of the premiss contexts";
        }
        return {};
      }
      case Rule::kAssumption:
        for (const Sequent& s : assumptions_) {
          if (SameSequent(s, d.conclusion)) return {};
        }
        return "sequent is not among the assumptions";
    }
    return "unknown rule";
  }

  const std::vector<Sequent>& assumptions_;
  KernelOptions opts_;
  CheckResult result_;
};

Formula Nest(const Multiset& fs, Formula (*join)(Formula, Formula), Formula empty) {
  if (fs.empty()) return empty;
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = join(*it, acc);
  return acc;
}

void Count(const Derivation& d, std::map<Rule, int>* out) {
  ++(*out)[d.rule];
  for (const Derivation& c : d.children) Count(c, out);
}

void Render(const Derivation& d, int depth, PrintOptions opts, std::ostringstream* out) {
  *out << std::string(2 * depth, ' ') << PrintSequent(d.conclusion, opts) << "   ["
       << RuleName(d.rule);
  if (!d.principal.empty()) *out << ": " << PrintFormulas(d.principal, opts);
  *out << "]\n";
  for (const Derivation& c : d.children) Render(c, depth + 1, opts, out);
}

}  // namespace

CheckResult CheckDerivation(const Derivation& d, const std::vector<Sequent>& assumptions,
                            const KernelOptions& opts) {
  return Checker(assumptions, opts).Run(d);
}

Formula Interpretation(const Sequent& s) {
  return Formula::Imp(Nest(s.ante, &Formula::And, Formula::Top()),
                      Nest(s.succ, &Formula::Or, Formula::Bottom()));
}

std::map<Rule, int> RuleCounts(const Derivation& d) {
  std::map<Rule, int> out;
  Count(d, &out);
  return out;
}

std::size_t NodeCount(const Derivation& d) {
  std::size_t n = 1;
  for (const Derivation& c : d.children) n += NodeCount(c);
  return n;
}

nlohmann::json DerivationToJson(const Derivation& d) {
  nlohmann::json j;
  j["rule"] = std::string(RuleName(d.rule));
  j["principal"] = nlohmann::json::array();
  for (const Formula& f : d.principal) j["principal"].push_back(PrintFormula(f));
  j["conclusion"] = PrintSequent(d.conclusion);
  j["children"] = nlohmann::json::array();
  for (const Derivation& c : d.children) j["children"].push_back(DerivationToJson(c));
  if (d.assumption_tag) j["assumption"] = *d.assumption_tag;
  return j;
}

namespace {

Derivation FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("derivation node must be an object");
  Derivation d;
  const std::string rule = j.at("rule").get<std::string>();
  auto r = RuleFromName(rule);
  if (!r) throw std::invalid_argument("unknown rule '" + rule + "'");
  d.rule = *r;
  d.conclusion = ParseSequent(j.at("conclusion").get<std::string>());
  if (j.contains("principal")) {
    for (const auto& p : j.at("principal")) d.principal.push_back(ParseFormula(p.get<std::string>()));
  }
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) d.children.push_back(FromJson(c));
  }
  if (j.contains("assumption")) d.assumption_tag = j.at("assumption").get<std::string>();
  return d;
}

}  // namespace

Derivation DerivationFromJson(const nlohmann::json& j) {
  try {
    return FromJson(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed derivation: ") + e.what());
  }
}

std::string RenderDerivation(const Derivation& d, PrintOptions opts) {
  std::ostringstream out;
  Render(d, 0, opts, &out);
  return out.str();
}

}  // namespace mdl
