#include "sigtl/term.hpp"

#include <charconv>
#include <cmath>

#include "sigtl/error.hpp"

namespace sigtl {

namespace {

TermPtr node(TermKind k, TermPtr a = nullptr, TermPtr b = nullptr) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

}  // namespace

TermPtr Term::constant(double v) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->value = v;
  return t;
}

TermPtr Term::variable(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr Term::add(TermPtr a, TermPtr b) { return node(TermKind::Add, std::move(a), std::move(b)); }
TermPtr Term::sub(TermPtr a, TermPtr b) { return node(TermKind::Sub, std::move(a), std::move(b)); }
TermPtr Term::mul(TermPtr a, TermPtr b) { return node(TermKind::Mul, std::move(a), std::move(b)); }

TermPtr Term::div(TermPtr a, TermPtr b) {
  double d;
  if (!fold_constant(*b, d))
    fail(Errc::syntax, "division is only defined by constant terms");
  if (d == 0) fail(Errc::syntax, "division by zero");
  return node(TermKind::Div, std::move(a), std::move(b));
}

TermPtr Term::neg(TermPtr a) { return node(TermKind::Neg, std::move(a)); }
TermPtr Term::abs(TermPtr a) { return node(TermKind::Abs, std::move(a)); }

double eval_term(const Term& t, const std::function<double(const std::string&)>& lookup) {
  switch (t.kind) {
    case TermKind::Const: return t.value;
    case TermKind::Var: return lookup(t.var);
    case TermKind::Add: return eval_term(*t.a, lookup) + eval_term(*t.b, lookup);
    case TermKind::Sub: return eval_term(*t.a, lookup) - eval_term(*t.b, lookup);
    case TermKind::Mul: return eval_term(*t.a, lookup) * eval_term(*t.b, lookup);
    case TermKind::Div: return eval_term(*t.a, lookup) / eval_term(*t.b, lookup);
    case TermKind::Neg: return -eval_term(*t.a, lookup);
    case TermKind::Abs: return std::fabs(eval_term(*t.a, lookup));
  }
  return 0;  // unreachable
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Var) out.insert(t.var);
  if (t.a) collect_vars(*t.a, out);
  if (t.b) collect_vars(*t.b, out);
}

bool fold_constant(const Term& t, double& out) {
  switch (t.kind) {
    case TermKind::Const: out = t.value; return true;
    case TermKind::Var: return false;
    default: break;
  }
  double x = 0, y = 0;
  if (!fold_constant(*t.a, x)) return false;
  if (t.b && !fold_constant(*t.b, y)) return false;
  switch (t.kind) {
    case TermKind::Add: out = x + y; break;
    case TermKind::Sub: out = x - y; break;
    case TermKind::Mul: out = x * y; break;
    case TermKind::Div: out = x / y; break;
    case TermKind::Neg: out = -x; break;
    case TermKind::Abs: out = std::fabs(x); break;
    default: return false;
  }
  return true;
}

bool equal(const Term& x, const Term& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case TermKind::Const: return x.value == y.value;
    case TermKind::Var: return x.var == y.var;
    default: break;
  }
  if (static_cast<bool>(x.a) != static_cast<bool>(y.a)) return false;
  if (static_cast<bool>(x.b) != static_cast<bool>(y.b)) return false;
  if (x.a && !equal(*x.a, *y.a)) return false;
  if (x.b && !equal(*x.b, *y.b)) return false;
  return true;
}

namespace {

// Shortest round-trip representation of a double.
std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int precedence(TermKind k) {
  switch (k) {
    case TermKind::Add:
    case TermKind::Sub: return 1;
    case TermKind::Mul:
    case TermKind::Div: return 2;
    default: return 3;
  }
}

std::string fmt(const Term& t, int parent_prec, bool rhs) {
  std::string s;
  int prec = precedence(t.kind);
  switch (t.kind) {
    case TermKind::Const: s = format_double(t.value); break;
    case TermKind::Var: s = t.var; break;
    case TermKind::Add: s = fmt(*t.a, prec, false) + " + " + fmt(*t.b, prec, true); break;
    case TermKind::Sub: s = fmt(*t.a, prec, false) + " - " + fmt(*t.b, prec, true); break;
    case TermKind::Mul: s = fmt(*t.a, prec, false) + " * " + fmt(*t.b, prec, true); break;
    case TermKind::Div: s = fmt(*t.a, prec, false) + " / " + fmt(*t.b, prec, true); break;
    case TermKind::Neg: s = "-" + fmt(*t.a, prec, true); break;
    case TermKind::Abs: return "abs(" + fmt(*t.a, 0, false) + ")";
  }
  // - and / are left-associative, so the right operand needs parentheses at
  // equal precedence; a negative constant under an operator always does.
  bool need = prec < parent_prec || (rhs && prec == parent_prec) ||
              (parent_prec >= 1 && parent_prec < 3 &&
               ((t.kind == TermKind::Const && t.value < 0) || t.kind == TermKind::Neg) && rhs);
  if (t.kind == TermKind::Const && t.value < 0 && parent_prec > 0) need = true;
  if (t.kind == TermKind::Neg && parent_prec > 0) need = true;
  return need ? "(" + s + ")" : s;
}

}  // namespace

std::string format_term(const Term& t) { return fmt(t, 0, false); }

}  // namespace sigtl
