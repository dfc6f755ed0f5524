// Text syntax for formulas, sequents and problem files.
//
//   formula := imp
//   imp     := or ( "->" imp )?            right-associative
//   or      := and ( "|" and )*            left-associative
//   and     := unary ( "&" unary )*        left-associative
//   unary   := "~" unary | "[]" unary | primary
//   primary := atom | "true" | "false" | "O(" formula "/" formula ")"
//            | "(" formula ")"
//   atom    := [a-z][a-zA-Z0-9_]*
//
// "top" and "bot" are accepted as aliases of "true" and "false".
#ifndef MDL_PARSER_H_
#define MDL_PARSER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/formula.h"
#include "mdl/sequent.h"

namespace mdl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

Formula ParseFormula(std::string_view text);
Sequent ParseSequent(std::string_view text);
// Exactly one sequent on a non-blank line; '#' starts a comment.
Sequent ParseSequentFile(std::string_view text);

struct PrintOptions {
  bool unicode = false;
};

std::string PrintFormula(const Formula& f, PrintOptions opts = {});
std::string PrintFormulas(const std::vector<Formula>& fs, PrintOptions opts = {});
std::string PrintSequent(const Sequent& s, PrintOptions opts = {});
std::string PrintSequent(const SetSequent& s, PrintOptions opts = {});

enum class Mode { kProve, kConsistency, kCountermodel };

std::string_view ModeName(Mode m);

struct ProblemFile {
  FormulaSet assumptions;
  std::optional<Sequent> goal;
  Mode mode = Mode::kConsistency;
};

// Line-oriented: "assume <formula>", "goal <sequent>", "mode <name>", '#'
// comments. Without a mode line the mode is prove when a goal is present
// and consistency otherwise.
ProblemFile ParseProblem(std::string_view text);

}  // namespace mdl

#endif  // MDL_PARSER_H_
