// The bundled corpus: a manifest.json listing sequents, assumption sets,
// models and derivations together with the verdict each must produce.
//
// manifest = {version, entries: [{id, kind, file, expected, origin,
//                                 holds?: [{world, formula, value}]}]}
//   kind      sequent | assumption-set | model | derivation
//   expected  derivable | underivable | consistent | inconsistent |
//             valid-frame | invalid-derivation
#ifndef MDL_CORPUS_H_
#define MDL_CORPUS_H_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdl/search.h"

namespace mdl {

struct HoldsAt {
  std::string world;
  std::string formula;
  bool value = true;
};

struct CorpusEntry {
  std::string id;
  std::string kind;
  std::string file;
  std::string expected;
  // Where the expected value comes from.
  std::string origin;
  std::vector<HoldsAt> holds;
};

struct EntryOutcome {
  std::string id;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct CorpusReport {
  std::vector<EntryOutcome> entries;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Throws std::runtime_error when the manifest cannot be read.
std::vector<CorpusEntry> LoadManifest(const std::filesystem::path& dir);

// Never throws; errors become failed outcomes.
EntryOutcome RunEntry(const std::filesystem::path& dir, const CorpusEntry& e,
                      const SearchOptions& opts = {});
CorpusReport RunCorpus(const std::filesystem::path& dir, const SearchOptions& opts = {});

nlohmann::json CorpusReportToJson(const CorpusReport& r);

// Whole file as text; throws std::runtime_error.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace mdl

#endif  // MDL_CORPUS_H_
