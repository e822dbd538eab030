#include "sigtl/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "sigtl/error.hpp"

namespace sigtl {

namespace {

enum class Tok {
  End, Ident, Number,
  LParen, RParen, LBracket, RBracket, Colon, Comma,
  Plus, Minus, Star, Slash,
  Lt, Le, Gt, Ge, EqEq, Ne, Assign,
  AndSym, OrSym, NotSym, ImpliesSym,
};

struct Token {
  Tok kind;
  std::string text;
  double number = 0;
  int line = 1, col = 1;
};

[[noreturn]] void syntax_error(const Token& t, const std::string& msg) {
  throw Error(Errc::syntax, msg + " at line " + std::to_string(t.line) + ", column " +
                                std::to_string(t.col),
              t.line, t.col);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string s) {
    out.push_back({k, std::move(s), 0, line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (c == '#') {  // line comment
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; ++col; continue; }
    int start_col = col;
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), 0, line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          j = k;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
      }
      Token t{Tok::Number, text.substr(i, j - i), 0, line, start_col};
      t.number = std::strtod(t.text.c_str(), nullptr);
      out.push_back(t);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (two('&', '&')) { push(Tok::AndSym, "&&"); i += 2; col += 2; continue; }
    if (two('|', '|')) { push(Tok::OrSym, "||"); i += 2; col += 2; continue; }
    if (two('-', '>')) { push(Tok::ImpliesSym, "->"); i += 2; col += 2; continue; }
    if (two('<', '=')) { push(Tok::Le, "<="); i += 2; col += 2; continue; }
    if (two('>', '=')) { push(Tok::Ge, ">="); i += 2; col += 2; continue; }
    if (two('=', '=')) { push(Tok::EqEq, "=="); i += 2; col += 2; continue; }
    if (two('!', '=')) { push(Tok::Ne, "!="); i += 2; col += 2; continue; }
    switch (c) {
      case '(': push(Tok::LParen, "("); break;
      case ')': push(Tok::RParen, ")"); break;
      case '[': push(Tok::LBracket, "["); break;
      case ']': push(Tok::RBracket, "]"); break;
      case ':': push(Tok::Colon, ":"); break;
      case ',': push(Tok::Comma, ","); break;
      case '+': push(Tok::Plus, "+"); break;
      case '-': push(Tok::Minus, "-"); break;
      case '*': push(Tok::Star, "*"); break;
      case '/': push(Tok::Slash, "/"); break;
      case '<': push(Tok::Lt, "<"); break;
      case '>': push(Tok::Gt, ">"); break;
      case '!': push(Tok::NotSym, "!"); break;
      case '=': push(Tok::Assign, "="); break;
      default: {
        Token t{Tok::End, std::string(1, c), 0, line, start_col};
        syntax_error(t, "unexpected character '" + std::string(1, c) + "'");
      }
    }
    ++i; ++col;
  }
  out.push_back({Tok::End, "", 0, line, col});
  return out;
}

enum class Kw {
  None, Always, Eventually, Historically, Once, Until, Since, Next, Prev,
  Rise, Fall, Precedes, And, Or, Not, Implies, True, False, Abs, Inf,
};

Kw keyword(const std::string& s) {
  static const std::unordered_map<std::string, Kw> table = {
      {"always", Kw::Always}, {"G", Kw::Always},
      {"eventually", Kw::Eventually}, {"F", Kw::Eventually},
      {"historically", Kw::Historically}, {"H", Kw::Historically},
      {"once", Kw::Once}, {"O", Kw::Once},
      {"until", Kw::Until}, {"U", Kw::Until},
      {"since", Kw::Since}, {"S", Kw::Since},
      {"next", Kw::Next}, {"X", Kw::Next},
      {"prev", Kw::Prev}, {"Y", Kw::Prev},
      {"rise", Kw::Rise}, {"fall", Kw::Fall},
      {"precedes", Kw::Precedes}, {"P", Kw::Precedes},
      {"and", Kw::And}, {"or", Kw::Or}, {"not", Kw::Not}, {"implies", Kw::Implies},
      {"true", Kw::True}, {"false", Kw::False}, {"abs", Kw::Abs}, {"inf", Kw::Inf},
  };
  auto it = table.find(s);
  return it == table.end() ? Kw::None : it->second;
}

bool reserved_word(const std::string& s) { return keyword(s) != Kw::None; }

struct Parser {
  const std::vector<Token>& toks;
  const std::set<std::string>& declared;
  size_t pos = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t p = pos + ahead;
    return p < toks.size() ? toks[p] : toks.back();
  }
  const Token& next() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
  bool accept(Tok k) {
    if (peek().kind == k) { ++pos; return true; }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) syntax_error(peek(), std::string("expected ") + what);
  }
  Kw peek_kw() const {
    return peek().kind == Tok::Ident ? keyword(peek().text) : Kw::None;
  }

  // ---- terms -------------------------------------------------------------

  Rational rational_literal() {
    bool neg = accept(Tok::Minus);
    if (peek().kind != Tok::Number) syntax_error(peek(), "expected a rational literal");
    Token t = next();
    if (t.text.find('e') != std::string::npos || t.text.find('E') != std::string::npos)
      syntax_error(t, "exponents are not allowed in interval bounds");
    Rational r = parse_rational(t.text);
    if (peek().kind == Tok::Slash && peek(1).kind == Tok::Number) {
      next();
      Token d = next();
      Rational den = parse_rational(d.text);
      if (den == Rational(0)) syntax_error(d, "zero denominator");
      r /= den;
    }
    return neg ? -r : r;
  }

  TermPtr factor() {
    if (accept(Tok::Minus)) {
      TermPtr inner = factor();
      if (inner->kind == TermKind::Const) return Term::constant(-inner->value);
      return Term::neg(inner);
    }
    if (peek().kind == Tok::Number) return Term::constant(next().number);
    if (peek().kind == Tok::Ident) {
      Kw kw = keyword(peek().text);
      if (kw == Kw::Abs) {
        next();
        expect(Tok::LParen, "'(' after abs");
        TermPtr inner = sum();
        expect(Tok::RParen, "')'");
        return Term::abs(inner);
      }
      if (kw != Kw::None) syntax_error(peek(), "unexpected keyword '" + peek().text + "'");
      Token t = next();
      if (!declared.count(t.text))
        throw Error(Errc::undeclared_variable,
                    "undeclared variable '" + t.text + "' at line " + std::to_string(t.line) +
                        ", column " + std::to_string(t.col),
                    t.line, t.col);
      return Term::variable(t.text);
    }
    if (accept(Tok::LParen)) {
      TermPtr inner = sum();
      expect(Tok::RParen, "')'");
      return inner;
    }
    syntax_error(peek(), "expected a term");
  }

  TermPtr product() {
    TermPtr t = factor();
    for (;;) {
      if (accept(Tok::Star)) t = Term::mul(t, factor());
      else if (accept(Tok::Slash)) t = Term::div(t, factor());
      else return t;
    }
  }

  TermPtr sum() {
    TermPtr t = product();
    for (;;) {
      if (accept(Tok::Plus)) t = Term::add(t, product());
      else if (accept(Tok::Minus)) t = Term::sub(t, product());
      else return t;
    }
  }

  // ---- formulas ----------------------------------------------------------

  bool cmp_op(CmpOp& op) {
    switch (peek().kind) {
      case Tok::Gt: op = CmpOp::Gt; break;
      case Tok::Ge: op = CmpOp::Ge; break;
      case Tok::Lt: op = CmpOp::Lt; break;
      case Tok::Le: op = CmpOp::Le; break;
      case Tok::EqEq: op = CmpOp::Eq; break;
      case Tok::Ne: op = CmpOp::Ne; break;
      default: return false;
    }
    ++pos;
    return true;
  }

  // term [cmpop term]; a bare term f stands for f > 0 (robustness = f).
  FormulaPtr comparison() {
    TermPtr lhs = sum();
    CmpOp op;
    if (!cmp_op(op)) return Formula::predicate(lhs, CmpOp::Gt, 0.0);
    TermPtr rhs = sum();
    double c;
    if (fold_constant(*rhs, c)) return Formula::predicate(lhs, op, c);
    // comparisons between two variable terms: move everything to the left
    return Formula::predicate(Term::sub(lhs, rhs), op, 0.0);
  }

  Interval interval_or_default(bool* had_interval = nullptr) {
    if (had_interval) *had_interval = false;
    if (!accept(Tok::LBracket)) return Interval::unbounded();
    if (had_interval) *had_interval = true;
    const Token& at = peek();
    Rational lo = rational_literal();
    expect(Tok::Colon, "':' in interval");
    std::optional<Rational> hi;
    if (peek_kw() == Kw::Inf) next();
    else hi = rational_literal();
    expect(Tok::RBracket, "']'");
    if (lo < Rational(0) || (hi && *hi < lo))
      throw Error(Errc::malformed_interval,
                  "malformed interval at line " + std::to_string(at.line) + ", column " +
                      std::to_string(at.col),
                  at.line, at.col);
    return hi ? Interval::bounded(lo, *hi) : Interval::unbounded(lo);
  }

  FormulaPtr temporal_unary(Kw kw) {
    next();  // operator keyword
    bool had = false;
    Interval iv = interval_or_default(&had);
    if ((kw == Kw::Next || kw == Kw::Prev || kw == Kw::Rise || kw == Kw::Fall) && had)
      syntax_error(peek(), "this operator does not take an interval");
    expect(Tok::LParen, "'(' after temporal operator");
    FormulaPtr body = formula();
    expect(Tok::RParen, "')'");
    switch (kw) {
      case Kw::Always: return Formula::always(iv, body);
      case Kw::Eventually: return Formula::eventually(iv, body);
      case Kw::Historically: return Formula::historically(iv, body);
      case Kw::Once: return Formula::once(iv, body);
      case Kw::Next: return Formula::next(body);
      case Kw::Prev: return Formula::previous(body);
      case Kw::Rise: return Formula::rise(body);
      case Kw::Fall: return Formula::fall(body);
      default: syntax_error(peek(), "internal: not a unary temporal operator");
    }
  }

  FormulaPtr atom() {
    Kw kw = peek_kw();
    if (kw == Kw::True) { next(); return Formula::boolean(true); }
    if (kw == Kw::False) { next(); return Formula::boolean(false); }
    if (peek().kind == Tok::LParen) {
      // '(' opens either a parenthesised formula or a term; try the term
      // route first and fall back on failure.
      size_t save = pos;
      try {
        return comparison();
      } catch (const Error&) {
        pos = save;
      }
      expect(Tok::LParen, "'('");
      FormulaPtr inner = formula();
      expect(Tok::RParen, "')'");
      return inner;
    }
    return comparison();
  }

  FormulaPtr unary() {
    Kw kw = peek_kw();
    if (kw == Kw::Not || peek().kind == Tok::NotSym) {
      next();
      return Formula::negation(unary());
    }
    switch (kw) {
      case Kw::Always: case Kw::Eventually: case Kw::Historically: case Kw::Once:
      case Kw::Next: case Kw::Prev: case Kw::Rise: case Kw::Fall:
        return temporal_unary(kw);
      default: break;
    }
    return atom();
  }

  FormulaPtr temporal_binary() {
    FormulaPtr lhs = unary();
    Kw kw = peek_kw();
    if (kw != Kw::Until && kw != Kw::Since && kw != Kw::Precedes) return lhs;
    const Token& at = peek();
    next();
    Interval iv = interval_or_default();
    FormulaPtr rhs = temporal_binary();  // right-associative
    switch (kw) {
      case Kw::Until: return Formula::until(iv, lhs, rhs);
      case Kw::Since: return Formula::since(iv, lhs, rhs);
      default:
        if (!iv.is_bounded())
          throw Error(Errc::malformed_interval,
                      "precedes requires a bounded interval at line " +
                          std::to_string(at.line),
                      at.line, at.col);
        return Formula::precedes(iv, lhs, rhs);
    }
  }

  FormulaPtr conjunction() {
    FormulaPtr f = temporal_binary();
    while (peek_kw() == Kw::And || peek().kind == Tok::AndSym) {
      next();
      f = Formula::conjunction(f, temporal_binary());
    }
    return f;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (peek_kw() == Kw::Or || peek().kind == Tok::OrSym) {
      next();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  FormulaPtr formula() {
    FormulaPtr f = disjunction();
    if (peek_kw() == Kw::Implies || peek().kind == Tok::ImpliesSym) {
      next();
      return Formula::implication(f, formula());  // right-associative
    }
    return f;
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const std::set<std::string>& declared) {
  auto toks = lex(text);
  Parser p{toks, declared};
  FormulaPtr f = p.formula();
  if (p.peek().kind != Tok::End)
    syntax_error(p.peek(), "unexpected trailing input '" + p.peek().text + "'");
  return f;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Position of the assignment '=' in '<ident> = <formula>', or npos. Skips
// '==' and the tail of '<=', '>=', '!='.
size_t find_assignment_eq(const std::string& line) {
  for (size_t k = 0; k < line.size(); ++k) {
    if (line[k] != '=') continue;
    if (k + 1 < line.size() && line[k + 1] == '=') { ++k; continue; }
    if (k > 0 && (line[k - 1] == '<' || line[k - 1] == '>' || line[k - 1] == '!' ||
                  line[k - 1] == '='))
      continue;
    return is_identifier(trim(line.substr(0, k))) ? k : std::string::npos;
  }
  return std::string::npos;
}

}  // namespace

Specification parse_specification(const std::string& text) {
  Specification spec;
  std::string assignment;
  int assignment_line = 0;
  bool have_period = false;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto words = split_ws(line);
    if (words.empty()) continue;

    const std::string& head = words[0];
    if (head == "name") {
      auto at = line.find("name");
      std::string rest = line.substr(at + 4);
      size_t b = rest.find_first_not_of(" \t");
      size_t e = rest.find_last_not_of(" \t\r");
      spec.name = b == std::string::npos ? "" : rest.substr(b, e - b + 1);
      continue;
    }
    if (head == "input" || head == "output" || head == "internal") {
      if (words.size() != 3)
        throw Error(Errc::bad_declaration,
                    "expected '<role> <type> <variable>' at line " + std::to_string(lineno),
                    lineno, 1);
      if (words[1] != "float")
        throw Error(Errc::bad_declaration,
                    "only 'float' variables are supported (line " + std::to_string(lineno) + ")",
                    lineno, 1);
      const std::string& var = words[2];
      if (!is_identifier(var) || reserved_word(var))
        throw Error(Errc::bad_declaration,
                    "'" + var + "' is not a valid variable name (line " +
                        std::to_string(lineno) + ")",
                    lineno, 1);
      if (spec.declared(var))
        throw Error(Errc::duplicate_declaration,
                    "variable '" + var + "' declared twice (line " + std::to_string(lineno) + ")",
                    lineno, 1);
      Role role = head == "input" ? Role::Input
                  : head == "output" ? Role::Output
                                     : Role::Internal;
      spec.declarations.push_back({var, role});
      continue;
    }
    if (head == "period") {
      if (have_period)
        throw Error(Errc::duplicate_declaration,
                    "duplicate period line (line " + std::to_string(lineno) + ")", lineno, 1);
      if (words.size() != 3)
        throw Error(Errc::syntax, "expected 'period <n> <unit>' (line " +
                                      std::to_string(lineno) + ")", lineno, 1);
      spec.period = parse_rational(words[1]);
      if (spec.period <= Rational(0))
        throw Error(Errc::syntax, "period must be positive (line " + std::to_string(lineno) + ")",
                    lineno, 1);
      if (words[2] == "s") spec.unit = TimeUnit::s;
      else if (words[2] == "ms") spec.unit = TimeUnit::ms;
      else if (words[2] == "us") spec.unit = TimeUnit::us;
      else if (words[2] == "ns") spec.unit = TimeUnit::ns;
      else
        throw Error(Errc::unknown_unit,
                    "unknown unit '" + words[2] + "' (line " + std::to_string(lineno) + ")",
                    lineno, 1);
      have_period = true;
      continue;
    }
    // anything of the shape '<ident> = ...' is the assignment
    if (auto eq = find_assignment_eq(line); eq != std::string::npos) {
      if (!assignment.empty())
        throw Error(Errc::syntax,
                    "multiple assignment lines (line " + std::to_string(lineno) + ")", lineno, 1);
      assignment = line;
      assignment_line = lineno;
      continue;
    }
    throw Error(Errc::syntax,
                "unrecognized specification line '" + head + "' (line " +
                    std::to_string(lineno) + ")",
                lineno, 1);
  }

  if (assignment.empty())
    fail(Errc::missing_assignment, "specification has no '<output> = <formula>' line");

  auto eq = find_assignment_eq(assignment);
  std::string target = trim(assignment.substr(0, eq));
  spec.target = target;
  if (!spec.declared(target))
    throw Error(Errc::undeclared_variable,
                "assignment target '" + target + "' is not declared", assignment_line, 1);
  if (spec.role(target) != Role::Output)
    throw Error(Errc::bad_declaration,
                "assignment target '" + target + "' must be an output variable",
                assignment_line, 1);

  std::set<std::string> usable;
  for (const auto& d : spec.declarations)
    if (d.name != target) usable.insert(d.name);
  spec.formula = parse_formula(assignment.substr(eq + 1), usable);
  return spec;
}

Specification load_specification_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot read specification file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_specification(ss.str());
}

}  // namespace sigtl
