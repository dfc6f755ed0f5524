// mdl: command-line front end.
//
// Exit codes: 0 affirmative verdict, 1 negative verdict (a witness is
// printed), 2 usage or input error, 3 search budget exhausted, 4 internal
// error (a countermodel failed its own certificate).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mdl/consistency.h"
#include "mdl/corpus.h"
#include "mdl/countermodel.h"
#include "mdl/derivation.h"
#include "mdl/generator.h"
#include "mdl/parser.h"
#include "mdl/search.h"
#include "mdl/semantics.h"

namespace {

using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

struct Flags {
  std::size_t budget = mdl::kDefaultBudget;
  bool atomic_init = false;
  bool static_loopcheck = false;
  bool close_rt = false;
  bool pretty = false;
  bool unicode = false;
  std::uint64_t seed = 1;

  mdl::SearchOptions search() const {
    mdl::SearchOptions o;
    o.budget = budget;
    o.calculus.atomic_init = atomic_init;
    o.static_loop_check = static_loopcheck;
    return o;
  }
  mdl::PrintOptions print() const { return {unicode}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either the contents of an existing file or the argument itself.
struct Input {
  std::string text;
  std::optional<std::filesystem::path> path;

  bool HasExtension(const char* ext) const { return path && path->extension() == ext; }
};

Input ReadInput(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return {mdl::ReadFile(arg), arg};
  return {arg, std::nullopt};
}

void Emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void EmitModel(const mdl::CounterModel& cm, const Flags& f) {
  if (!f.pretty) {
    Emit(mdl::CounterModelToJson(cm));
    return;
  }
  std::cout << "countermodel for " << mdl::PrintSequent(cm.goal, f.print()) << "\n"
            << "root " << cm.root << (cm.certified() ? ", certified" : ", NOT certified") << "\n"
            << mdl::RenderModel(cm.model);
}

void EmitDerivation(const mdl::Derivation& d, const Flags& f) {
  if (f.pretty) {
    std::cout << mdl::RenderDerivation(d, f.print());
  } else {
    Emit(mdl::DerivationToJson(d));
  }
}

// A sequent, a .seq file or a problem file with assumptions and a goal.
mdl::DerivesResult Decide(const std::string& arg, const Flags& f) {
  Input in = ReadInput(arg);
  if (in.HasExtension(".mdl")) {
    mdl::ProblemFile p = mdl::ParseProblem(in.text);
    if (!p.goal) throw UsageError(arg + ": problem file has no goal");
    return mdl::Derives(p.assumptions, *p.goal, f.search());
  }
  mdl::Sequent s = in.path ? mdl::ParseSequentFile(in.text) : mdl::ParseSequent(in.text);
  return mdl::Derives({}, s, f.search());
}

int Prove(const std::string& arg, const Flags& f) {
  mdl::DerivesResult r = Decide(arg, f);
  const bool yes = r.verdict == mdl::Verdict::kAccepted;
  if (f.pretty) {
    std::cout << (yes ? "derivable: " : "underivable: ") << mdl::PrintSequent(r.reduced, f.print())
              << "  (" << r.visited << " histories)\n";
    if (yes) {
      EmitDerivation(*r.derivation, f);
    } else {
      EmitModel(*r.countermodel, f);
    }
  } else {
    Emit(mdl::DerivesToJson(r));
  }
  return yes ? kYes : kNo;
}

int Countermodel(const std::string& arg, const Flags& f) {
  mdl::DerivesResult r = Decide(arg, f);
  if (r.verdict == mdl::Verdict::kAccepted) {
    if (f.pretty) {
      std::cout << "derivable, no countermodel\n";
      EmitDerivation(*r.derivation, f);
    } else {
      Emit(mdl::DerivesToJson(r));
    }
    return kNo;
  }
  EmitModel(*r.countermodel, f);
  return kYes;
}

mdl::FormulaSet ParseAssumptions(const std::string& arg) {
  Input in = ReadInput(arg);
  if (in.path) return mdl::ParseProblem(in.text).assumptions;
  // Inline: formulas separated by ';'.
  mdl::FormulaSet out;
  std::stringstream ss(in.text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.insert(mdl::ParseFormula(item));
  }
  return out;
}

int Consistent(const std::string& arg, const Flags& f) {
  mdl::ConsistencyResult r = mdl::OuterConsistent(ParseAssumptions(arg), f.search());
  if (f.pretty) {
    std::cout << (r.consistent ? "consistent" : "inconsistent") << "  ("
              << r.detail.visited << " histories)\n";
    if (r.consistent) {
      EmitModel(*r.detail.countermodel, f);
    } else {
      EmitDerivation(*r.detail.derivation, f);
    }
  } else {
    Emit(mdl::ConsistencyToJson(r));
  }
  return r.consistent ? kYes : kNo;
}

int CheckModel(const std::string& path, const std::vector<std::string>& holds, const Flags& f) {
  mdl::ModelReadOptions ro;
  ro.close_rt = f.close_rt;
  mdl::MModel m = mdl::ModelFromJson(json::parse(mdl::ReadFile(path)), ro);
  mdl::FrameReport frame = mdl::ValidateFrame(m);
  bool ok = frame.ok();
  json results = json::array();
  std::set<std::string> warnings;
  for (const std::string& h : holds) {
    const auto sep = h.find("::");
    if (sep == std::string::npos) throw UsageError("--holds expects WORLD::FORMULA, got '" + h + "'");
    const std::string world = h.substr(0, sep);
    const mdl::Formula formula = mdl::ParseFormula(h.substr(sep + 2));
    const bool value = mdl::TruthSet(m, formula, &warnings).test(m.Index(world));
    ok = ok && value;
    results.push_back({{"world", world}, {"formula", mdl::PrintFormula(formula)}, {"holds", value}});
  }
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  if (f.pretty) {
    std::cout << (frame.ok() ? "frame: ok\n" : "frame: condition " + std::to_string(frame.condition) +
                                                   " violated: " + frame.message + "\n");
    for (const auto& r : results) {
      std::cout << r["world"].get<std::string>() << " " << (r["holds"].get<bool>() ? "|= " : "|/= ")
                << r["formula"].get<std::string>() << "\n";
    }
  } else {
    Emit({{"frame", mdl::FrameReportToJson(frame)}, {"holds", results}});
  }
  return ok ? kYes : kNo;
}

int CheckProof(const std::string& path, const std::vector<std::string>& assume, const Flags& f) {
  json j = json::parse(mdl::ReadFile(path));
  std::vector<mdl::Sequent> assumptions;
  if (j.contains("derivation")) {
    for (const auto& s : j.value("assumptions", json::array())) {
      assumptions.push_back(mdl::ParseSequent(s.get<std::string>()));
    }
    j = j.at("derivation");
  }
  for (const std::string& s : assume) assumptions.push_back(mdl::ParseSequent(s));
  mdl::Derivation d = mdl::DerivationFromJson(j);
  mdl::CheckResult r = mdl::CheckDerivation(d, assumptions, {f.atomic_init});
  if (f.pretty) {
    if (r) {
      std::cout << "ok: " << mdl::PrintSequent(d.conclusion, f.print()) << " (" << mdl::NodeCount(d)
                << " nodes)\n";
    } else {
      std::cout << "rejected at /";
      for (std::size_t i : r.path) std::cout << i << "/";
      std::cout << ": " << r.message << "\n";
    }
  } else {
    Emit({{"ok", r.ok}, {"path", r.path}, {"message", r.message},
          {"conclusion", mdl::PrintSequent(d.conclusion)}});
  }
  return r ? kYes : kNo;
}

int Corpus(const std::string& dir, const Flags& f) {
  mdl::CorpusReport r = mdl::RunCorpus(dir, f.search());
  if (f.pretty) {
    for (const auto& e : r.entries) {
      std::cout << (e.ok ? "ok    " : "FAIL  ") << e.id;
      if (!e.ok) std::cout << ": " << e.detail;
      std::cout << "\n";
    }
    std::cout << r.entries.size() - r.failures() << "/" << r.entries.size() << " passed\n";
  } else {
    Emit(mdl::CorpusReportToJson(r));
  }
  return r.ok() ? kYes : kNo;
}

int Bench(const std::vector<std::size_t>& sizes, std::size_t samples, const Flags& f) {
  mdl::FormulaGenerator gen(f.seed);
  json rows = json::array();
  for (std::size_t size : sizes) {
    std::vector<std::size_t> visited;
    std::vector<double> ms;
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      mdl::Sequent s = gen.NextSequent(size);
      const auto t0 = std::chrono::steady_clock::now();
      mdl::ProofResult r = mdl::Prove(s, f.search());
      ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count());
      visited.push_back(r.visited());
      accepted += r.verdict == mdl::Verdict::kAccepted;
    }
    auto median = [](auto v) {
      if (v.empty()) return 0.0;
      std::sort(v.begin(), v.end());
      return static_cast<double>(v[v.size() / 2]);
    };
    json row = {{"size", size},
                {"samples", samples},
                {"accepted", accepted},
                {"median_visited", median(visited)},
                {"max_visited", visited.empty() ? 0 : *std::max_element(visited.begin(), visited.end())},
                {"median_ms", median(ms)}};
    if (f.pretty) {
      std::cout << "size " << size << ": " << samples << " samples, " << accepted
                << " accepted, median visited " << row["median_visited"] << ", max visited "
                << row["max_visited"] << ", median " << row["median_ms"] << " ms\n";
    }
    rows.push_back(std::move(row));
  }
  if (!f.pretty) Emit({{"seed", f.seed}, {"rows", rows}});
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover, model checker and countermodel builder for basic Mimamsa deontic logic"};
  app.require_subcommand(1, 1);

  Flags f;
  if (const char* env = std::getenv("MDL_BUDGET")) {
    try {
      f.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "mdl: MDL_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_option("--budget", f.budget, "Maximum number of visited histories")
      ->check(CLI::PositiveNumber);
  app.add_flag("--atomic-init", f.atomic_init, "Close sequents only on shared atoms");
  app.add_flag("--static-loopcheck", f.static_loopcheck,
               "Loop-check premisses of two-premiss static rules too");
  app.add_flag("--close-rt", f.close_rt, "Close R reflexively and transitively on model import");
  app.add_flag("--pretty", f.pretty, "Human-readable output instead of JSON");
  app.add_flag("--json", [&](std::int64_t) { f.pretty = false; }, "JSON output (default)");
  app.add_flag("--unicode", f.unicode, "Unicode connectives in pretty output");
  app.add_option("--seed", f.seed, "Seed for generated formulas");

  std::string input;
  std::vector<std::string> holds;
  std::vector<std::string> assume;
  std::string corpus_dir = "corpus";
  std::vector<std::string> size_args = {"5", "10", "15", "20"};
  std::size_t samples = 100;

  auto* prove = app.add_subcommand("prove", "Decide a sequent; print a derivation or a countermodel");
  prove->add_option("input", input, "Sequent, .seq file or .mdl problem with a goal")->required();
  auto* cm = app.add_subcommand("countermodel", "Build a certified countermodel for a sequent");
  cm->add_option("input", input, "Sequent, .seq file or .mdl problem with a goal")->required();
  auto* cons = app.add_subcommand("consistent", "Decide whether assumptions are consistent");
  cons->add_option("input", input, ".mdl file or formulas separated by ';'")->required();
  auto* model = app.add_subcommand("check-model", "Validate a model and evaluate formulas");
  model->add_option("model", input, "Model JSON file")->required()->check(CLI::ExistingFile);
  model->add_option("--holds", holds, "WORLD::FORMULA that must hold (repeatable)");
  auto* proof = app.add_subcommand("check-proof", "Check a derivation JSON file");
  proof->add_option("derivation", input, "Derivation JSON file")->required()->check(CLI::ExistingFile);
  proof->add_option("--assume", assume, "Assumed sequent (repeatable)");
  auto* corpus = app.add_subcommand("corpus", "Run the bundled corpus");
  corpus->add_option("dir", corpus_dir, "Corpus directory")->check(CLI::ExistingDirectory);
  auto* bench = app.add_subcommand("bench", "Time search on generated sequents");
  bench->add_option("--sizes", size_args, "Sequent sizes, one bucket each (space or comma separated)")
      ->expected(0, -1)
      ->allow_extra_args();
  bench->add_option("--samples", samples, "Sequents per bucket");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*prove) return Prove(input, f);
    if (*cm) return Countermodel(input, f);
    if (*cons) return Consistent(input, f);
    if (*model) return CheckModel(input, holds, f);
    if (*proof) return CheckProof(input, assume, f);
    if (*corpus) return Corpus(corpus_dir, f);
    if (*bench) {
      std::vector<std::size_t> sizes;
      for (const std::string& arg : size_args) {
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (item.empty()) continue;
          std::size_t used = 0;
          unsigned long v = 0;
          try {
            v = std::stoul(item, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != item.size() || v == 0) throw UsageError("bad size '" + item + "'");
          sizes.push_back(v);
        }
      }
      return Bench(sizes, samples, f);
    }
  } catch (const mdl::BudgetExhausted& e) {
    std::cerr << "mdl: " << e.what() << "\n";
    return kBudget;
  } catch (const mdl::CountermodelError& e) {
    std::cerr << "mdl: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "mdl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
