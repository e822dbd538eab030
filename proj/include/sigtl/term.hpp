#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>

namespace sigtl {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Const, Var, Add, Sub, Mul, Div, Neg, Abs };

// Arithmetic expression over declared variables. Immutable; subtrees are
// shared freely by the rewrite passes.
struct Term {
  TermKind kind;
  double value = 0;   // Const
  std::string var;    // Var
  TermPtr a, b;       // operands

  static TermPtr constant(double v);
  static TermPtr variable(std::string name);
  static TermPtr add(TermPtr a, TermPtr b);
  static TermPtr sub(TermPtr a, TermPtr b);
  static TermPtr mul(TermPtr a, TermPtr b);
  static TermPtr div(TermPtr a, TermPtr b);  // b must fold to a nonzero constant
  static TermPtr neg(TermPtr a);
  static TermPtr abs(TermPtr a);
};

double eval_term(const Term& t, const std::function<double(const std::string&)>& lookup);

void collect_vars(const Term& t, std::set<std::string>& out);

// nullopt-style: returns true and sets out when the term contains no variables.
bool fold_constant(const Term& t, double& out);

bool equal(const Term& x, const Term& y);

std::string format_term(const Term& t);

}  // namespace sigtl
