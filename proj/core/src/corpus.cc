#include "mdl/corpus.h"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mdl/consistency.h"
#include "mdl/countermodel.h"
#include "mdl/derivation.h"
#include "mdl/parser.h"
#include "mdl/semantics.h"

namespace mdl {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t CorpusReport::failures() const {
  std::size_t n = 0;
  for (const EntryOutcome& e : entries) n += !e.ok;
  return n;
}

std::vector<CorpusEntry> LoadManifest(const std::filesystem::path& dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(dir / "manifest.json"));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("manifest.json: " + std::string(e.what()));
  }
  std::vector<CorpusEntry> out;
  for (const auto& e : j.at("entries")) {
    CorpusEntry c;
    c.id = e.at("id").get<std::string>();
    c.kind = e.at("kind").get<std::string>();
    c.file = e.at("file").get<std::string>();
    c.expected = e.at("expected").get<std::string>();
    c.origin = e.value("origin", "");
    for (const auto& h : e.value("holds", nlohmann::json::array())) {
      c.holds.push_back(HoldsAt{h.at("world").get<std::string>(),
                                h.at("formula").get<std::string>(), h.value("value", true)});
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string CheckSequent(const Sequent& s, const std::string& expected, const SearchOptions& opts) {
  ProofResult r = Prove(s, opts);
  if (r.verdict == Verdict::kAccepted) {
    CheckResult k = CheckDerivation(*r.derivation, {}, {opts.calculus.atomic_init});
    if (!k) return "derivation fails the kernel: " + k.message;
    return expected == "derivable" ? "" : "derivable, expected " + expected;
  }
  CounterModel cm = BuildCountermodel(r);
  if (!cm.certified()) return "countermodel does not certify";
  return expected == "underivable" ? "" : "underivable, expected " + expected;
}

std::string CheckAssumptions(const ProblemFile& p, const std::string& expected,
                             const SearchOptions& opts) {
  if (expected == "consistent" || expected == "inconsistent") {
    ConsistencyResult r = OuterConsistent(p.assumptions, opts);
    if (r.consistent && !r.detail.countermodel->certified()) return "countermodel does not certify";
    const std::string got = r.consistent ? "consistent" : "inconsistent";
    return got == expected ? "" : got + ", expected " + expected;
  }
  if (!p.goal) return "no goal for expected " + expected;
  DerivesResult r = Derives(p.assumptions, *p.goal, opts);
  const std::string got = r.verdict == Verdict::kAccepted ? "derivable" : "underivable";
  return got == expected ? "" : got + ", expected " + expected;
}

std::string CheckModel(const nlohmann::json& j, const CorpusEntry& e) {
  MModel m = ModelFromJson(j);
  FrameReport f = ValidateFrame(m);
  const bool valid = f.ok();
  if (valid != (e.expected == "valid-frame")) {
    return valid ? "frame is valid, expected a violation" : "frame condition violated: " + f.message;
  }
  std::string failures;
  for (const HoldsAt& h : e.holds) {
    const bool got = Holds(m, h.world, ParseFormula(h.formula));
    if (got != h.value) {
      failures += (failures.empty() ? "" : "; ") + h.formula + " at " + h.world + " is " +
                  (got ? "true" : "false");
    }
  }
  return failures;
}

std::string CheckProof(const nlohmann::json& j, const std::string& expected,
                       const SearchOptions& opts) {
  std::vector<Sequent> assumptions;
  for (const auto& s : j.value("assumptions", nlohmann::json::array())) {
    assumptions.push_back(ParseSequent(s.get<std::string>()));
  }
  Derivation d = DerivationFromJson(j.at("derivation"));
  CheckResult k = CheckDerivation(d, assumptions, {opts.calculus.atomic_init});
  if (expected == "invalid-derivation") return k ? "kernel accepts the derivation" : "";
  if (!k) return "kernel: " + k.message;
  // A derivation without assumptions has a cut-free counterpart.
  if (assumptions.empty() && RuleCounts(d).count(Rule::kCut)) {
    if (Prove(d.conclusion, opts).verdict != Verdict::kAccepted) {
      return "conclusion has a derivation with Cut but search rejects it";
    }
  }
  return "";
}

}  // namespace

EntryOutcome RunEntry(const std::filesystem::path& dir, const CorpusEntry& e,
                      const SearchOptions& opts) {
  EntryOutcome out;
  out.id = e.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string text = ReadFile(dir / e.file);
    if (e.kind == "sequent") {
      out.detail = CheckSequent(ParseSequentFile(text), e.expected, opts);
    } else if (e.kind == "assumption-set") {
      out.detail = CheckAssumptions(ParseProblem(text), e.expected, opts);
    } else if (e.kind == "model") {
      out.detail = CheckModel(nlohmann::json::parse(text), e);
    } else if (e.kind == "derivation") {
      out.detail = CheckProof(nlohmann::json::parse(text), e.expected, opts);
    } else {
      out.detail = "unknown kind '" + e.kind + "'";
    }
  } catch (const std::exception& ex) {
    out.detail = ex.what();
  }
  out.ok = out.detail.empty();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

CorpusReport RunCorpus(const std::filesystem::path& dir, const SearchOptions& opts) {
  CorpusReport r;
  for (const CorpusEntry& e : LoadManifest(dir)) r.entries.push_back(RunEntry(dir, e, opts));
  return r;
}

nlohmann::json CorpusReportToJson(const CorpusReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const EntryOutcome& e : r.entries) {
    entries.push_back({{"id", e.id}, {"ok", e.ok}, {"detail", e.detail}, {"seconds", e.seconds}});
  }
  return {{"entries", std::move(entries)}, {"failures", r.failures()}};
}

}  // namespace mdl
