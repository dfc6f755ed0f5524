#include "mdl/parser.h"

#include <cctype>
#include <sstream>
#include <utility>

namespace mdl {

namespace {

enum class Tok {
  kIdent,
  kTrue,
  kFalse,
  kObl,  // "O" immediately followed by "("
  kLParen,
  kRParen,
  kSlash,
  kTilde,
  kBox,
  kAnd,
  kOr,
  kArrow,
  kTurnstile,
  kComma,
  kEnd,
};

const char* Describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "atom";
    case Tok::kTrue: return "'true'";
    case Tok::kFalse: return "'false'";
    case Tok::kObl: return "'O('";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kSlash: return "'/'";
    case Tok::kTilde: return "'~'";
    case Tok::kBox: return "'[]'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kTurnstile: return "'|-'";
    case Tok::kComma: return "','";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view text, int first_line) : text_(text), line_(first_line) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipSpace();
      Token t{Tok::kEnd, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          Advance();
        }
        t.text = std::string(text_.substr(start, pos_ - start));
        if (t.text == "true" || t.text == "top") {
          t.kind = Tok::kTrue;
        } else if (t.text == "false" || t.text == "bot") {
          t.kind = Tok::kFalse;
        } else {
          t.kind = Tok::kIdent;
        }
      } else if (c == 'O' && Peek(1) == '(') {
        Advance(2);
        t.kind = Tok::kObl;
      } else if (c == '(') {
        Advance();
        t.kind = Tok::kLParen;
      } else if (c == ')') {
        Advance();
        t.kind = Tok::kRParen;
      } else if (c == '/') {
        Advance();
        t.kind = Tok::kSlash;
      } else if (c == '~') {
        Advance();
        t.kind = Tok::kTilde;
      } else if (c == '[' && Peek(1) == ']') {
        Advance(2);
        t.kind = Tok::kBox;
      } else if (c == '&') {
        Advance();
        t.kind = Tok::kAnd;
      } else if (c == '|' && Peek(1) == '-') {
        Advance(2);
        t.kind = Tok::kTurnstile;
      } else if (c == '|') {
        Advance();
        t.kind = Tok::kOr;
      } else if (c == '-' && Peek(1) == '>') {
        Advance(2);
        t.kind = Tok::kArrow;
      } else if (c == ',') {
        Advance();
        t.kind = Tok::kComma;
      } else {
        std::ostringstream msg;
        msg << line_ << ":" << column_ << ": unexpected character '" << c << "'";
        throw ParseError(line_, column_, {}, msg.str());
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char Peek(std::size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      Advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula ParseImp() {
    Formula l = ParseOr();
    if (Accept(Tok::kArrow)) return Formula::Imp(std::move(l), ParseImp());
    return l;
  }

  std::vector<Formula> ParseList(Tok terminator) {
    std::vector<Formula> out;
    if (At(terminator)) return out;
    out.push_back(ParseImp());
    while (Accept(Tok::kComma)) out.push_back(ParseImp());
    if (!At(terminator)) Fail({Tok::kComma, Tok::kArrow, Tok::kOr, Tok::kAnd, terminator});
    return out;
  }

  void Expect(Tok t, std::vector<Tok> alternatives = {}) {
    if (Accept(t)) return;
    alternatives.insert(alternatives.begin(), t);
    Fail(alternatives);
  }

  bool At(Tok t) const { return tokens_[pos_].kind == t; }

  bool Accept(Tok t) {
    if (!At(t)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void Fail(const std::vector<Tok>& expected) const {
    const Token& t = tokens_[pos_];
    std::vector<std::string> names;
    std::ostringstream msg;
    msg << t.line << ":" << t.column << ": unexpected " << Describe(t.kind);
    if (!t.text.empty()) msg << " '" << t.text << "'";
    msg << ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      names.emplace_back(Describe(expected[i]));
      msg << (i ? " or " : "") << names.back();
    }
    throw ParseError(t.line, t.column, std::move(names), msg.str());
  }

 private:
  Formula ParseOr() {
    Formula l = ParseAnd();
    while (Accept(Tok::kOr)) l = Formula::Or(std::move(l), ParseAnd());
    return l;
  }

  Formula ParseAnd() {
    Formula l = ParseUnary();
    while (Accept(Tok::kAnd)) l = Formula::And(std::move(l), ParseUnary());
    return l;
  }

  Formula ParseUnary() {
    if (Accept(Tok::kTilde)) return Formula::Neg(ParseUnary());
    if (Accept(Tok::kBox)) return Formula::Box(ParseUnary());
    return ParsePrimary();
  }

  Formula ParsePrimary() {
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case Tok::kIdent:
        ++pos_;
        return Formula::Atom(t.text);
      case Tok::kTrue:
        ++pos_;
        return Formula::Top();
      case Tok::kFalse:
        ++pos_;
        return Formula::Bottom();
      case Tok::kObl: {
        ++pos_;
        Formula body = ParseImp();
        Expect(Tok::kSlash, {Tok::kArrow, Tok::kOr, Tok::kAnd});
        Formula cond = ParseImp();
        Expect(Tok::kRParen, {Tok::kArrow, Tok::kOr, Tok::kAnd});
        return Formula::Obl(std::move(body), std::move(cond));
      }
      case Tok::kLParen: {
        ++pos_;
        Formula f = ParseImp();
        Expect(Tok::kRParen, {Tok::kArrow, Tok::kOr, Tok::kAnd});
        return f;
      }
      default:
        Fail({Tok::kIdent, Tok::kTrue, Tok::kFalse, Tok::kObl, Tok::kLParen, Tok::kTilde,
              Tok::kBox});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Formula ParseFormulaAt(std::string_view text, int line) {
  Parser p(Lexer(text, line).Run());
  Formula f = p.ParseImp();
  if (!p.At(Tok::kEnd)) p.Fail({Tok::kArrow, Tok::kOr, Tok::kAnd, Tok::kEnd});
  return f;
}

Sequent ParseSequentAt(std::string_view text, int line) {
  Parser p(Lexer(text, line).Run());
  Sequent s;
  s.ante = p.ParseList(Tok::kTurnstile);
  p.Expect(Tok::kTurnstile);
  s.succ = p.ParseList(Tok::kEnd);
  return s;
}

enum Prec { kImpPrec = 1, kOrPrec = 2, kAndPrec = 3, kUnaryPrec = 4, kAtomPrec = 5 };

int PrecedenceOf(const Formula& f) {
  switch (f.kind()) {
    case Kind::kImp: return kImpPrec;
    case Kind::kOr: return kOrPrec;
    case Kind::kAnd: return kAndPrec;
    case Kind::kNeg: return f.IsTop() ? kAtomPrec : kUnaryPrec;
    case Kind::kBox: return kUnaryPrec;
    default: return kAtomPrec;
  }
}

void Print(const Formula& f, int context, const PrintOptions& o, std::string* out) {
  const bool parens = PrecedenceOf(f) < context;
  if (parens) out->push_back('(');
  switch (f.kind()) {
    case Kind::kAtom:
      out->append(f.name());
      break;
    case Kind::kBottom:
      out->append(o.unicode ? "⊥" : "false");
      break;
    case Kind::kNeg:
      if (f.IsTop()) {
        out->append(o.unicode ? "⊤" : "true");
      } else {
        out->append(o.unicode ? "¬" : "~");
        Print(f.sub(), kUnaryPrec, o, out);
      }
      break;
    case Kind::kBox:
      out->append(o.unicode ? "□" : "[]");
      Print(f.sub(), kUnaryPrec, o, out);
      break;
    case Kind::kAnd:
      Print(f.left(), kAndPrec, o, out);
      out->append(o.unicode ? " ∧ " : " & ");
      Print(f.right(), kUnaryPrec, o, out);
      break;
    case Kind::kOr:
      Print(f.left(), kOrPrec, o, out);
      out->append(o.unicode ? " ∨ " : " | ");
      Print(f.right(), kAndPrec, o, out);
      break;
    case Kind::kImp:
      Print(f.left(), kOrPrec, o, out);
      out->append(o.unicode ? " → " : " -> ");
      Print(f.right(), kImpPrec, o, out);
      break;
    case Kind::kObl:
      out->append("O(");
      Print(f.body(), kImpPrec, o, out);
      out->append(" / ");
      Print(f.cond(), kImpPrec, o, out);
      out->push_back(')');
      break;
  }
  if (parens) out->push_back(')');
}

template <typename Range>
std::string PrintSides(const Range& ante, const Range& succ, const PrintOptions& o) {
  std::string out;
  bool first = true;
  for (const Formula& f : ante) {
    if (!first) out.append(", ");
    first = false;
    Print(f, kImpPrec, o, &out);
  }
  out.append(ante.empty() ? "" : " ");
  out.append(o.unicode ? "⊢" : "|-");
  for (auto it = succ.begin(); it != succ.end(); ++it) {
    out.append(it == succ.begin() ? " " : ", ");
    Print(*it, kImpPrec, o, &out);
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected,
                       const std::string& what)
    : std::runtime_error(what), line_(line), column_(column), expected_(std::move(expected)) {}

Formula ParseFormula(std::string_view text) { return ParseFormulaAt(text, 1); }

Sequent ParseSequent(std::string_view text) { return ParseSequentAt(text, 1); }

Sequent ParseSequentFile(std::string_view text) {
  std::optional<Sequent> out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (out) {
      throw ParseError(line_no, 1, {}, std::to_string(line_no) + ":1: more than one sequent");
    }
    out = ParseSequentAt(line, line_no);
  }
  if (!out) throw ParseError(line_no, 1, {"sequent"}, "no sequent found");
  return *out;
}

std::string PrintFormula(const Formula& f, PrintOptions opts) {
  std::string out;
  Print(f, kImpPrec, opts, &out);
  return out;
}

std::string PrintFormulas(const std::vector<Formula>& fs, PrintOptions opts) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out.append(", ");
    Print(fs[i], kImpPrec, opts, &out);
  }
  return out;
}

std::string PrintSequent(const Sequent& s, PrintOptions opts) {
  return PrintSides(s.ante, s.succ, opts);
}

std::string PrintSequent(const SetSequent& s, PrintOptions opts) {
  return PrintSides(s.ante, s.succ, opts);
}

std::string_view ModeName(Mode m) {
  switch (m) {
    case Mode::kProve: return "prove";
    case Mode::kConsistency: return "consistency";
    case Mode::kCountermodel: return "countermodel";
  }
  return "?";
}

ProblemFile ParseProblem(std::string_view text) {
  ProblemFile problem;
  bool mode_given = false;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);  // also drops the CR of CRLF endings
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? "" : Trim(line.substr(sp));
    if (keyword == "assume") {
      problem.assumptions.insert(ParseFormulaAt(rest, line_no));
    } else if (keyword == "goal") {
      if (problem.goal) {
        throw ParseError(line_no, 1, {}, std::to_string(line_no) + ":1: duplicate goal");
      }
      problem.goal = ParseSequentAt(rest, line_no);
    } else if (keyword == "mode") {
      if (rest == "prove") {
        problem.mode = Mode::kProve;
      } else if (rest == "consistency") {
        problem.mode = Mode::kConsistency;
      } else if (rest == "countermodel") {
        problem.mode = Mode::kCountermodel;
      } else {
        throw ParseError(line_no, static_cast<int>(sp) + 2,
                         {"prove", "consistency", "countermodel"},
                         std::to_string(line_no) + ": unknown mode '" + std::string(rest) + "'");
      }
      mode_given = true;
    } else {
      throw ParseError(line_no, 1, {"assume", "goal", "mode"},
                       std::to_string(line_no) + ":1: unknown directive '" +
                           std::string(keyword) + "'");
    }
  }
  if (!mode_given) problem.mode = problem.goal ? Mode::kProve : Mode::kConsistency;
  return problem;
}

}  // namespace mdl
