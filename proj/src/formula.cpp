#include "sigtl/formula.hpp"

#include <charconv>

#include "sigtl/error.hpp"

namespace sigtl {

namespace {

std::shared_ptr<Formula> node(FormulaKind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

FormulaPtr unary(FormulaKind k, FormulaPtr a, std::optional<Interval> iv = std::nullopt) {
  auto f = node(k);
  f->left = std::move(a);
  f->interval = std::move(iv);
  return f;
}

FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b,
                  std::optional<Interval> iv = std::nullopt) {
  auto f = node(k);
  f->left = std::move(a);
  f->right = std::move(b);
  f->interval = std::move(iv);
  return f;
}

}  // namespace

FormulaPtr Formula::boolean(bool v) {
  auto f = node(FormulaKind::BoolConst);
  f->bvalue = v;
  return f;
}

FormulaPtr Formula::predicate(TermPtr term, CmpOp op, double c) {
  auto f = node(FormulaKind::Predicate);
  f->term = std::move(term);
  f->cmp = op;
  f->constant = c;
  return f;
}

FormulaPtr Formula::negation(FormulaPtr a) { return unary(FormulaKind::Not, std::move(a)); }
FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::And, std::move(a), std::move(b));
}
FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Or, std::move(a), std::move(b));
}
FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Implies, std::move(a), std::move(b));
}
FormulaPtr Formula::until(Interval iv, FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Until, std::move(a), std::move(b), iv);
}
FormulaPtr Formula::since(Interval iv, FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Since, std::move(a), std::move(b), iv);
}
FormulaPtr Formula::precedes(Interval iv, FormulaPtr a, FormulaPtr b) {
  if (!iv.is_bounded())
    fail(Errc::malformed_interval, "precedes requires a bounded interval");
  return binary(FormulaKind::Precedes, std::move(a), std::move(b), iv);
}
FormulaPtr Formula::eventually(Interval iv, FormulaPtr a) {
  return unary(FormulaKind::Eventually, std::move(a), iv);
}
FormulaPtr Formula::always(Interval iv, FormulaPtr a) {
  return unary(FormulaKind::Always, std::move(a), iv);
}
FormulaPtr Formula::once(Interval iv, FormulaPtr a) {
  return unary(FormulaKind::Once, std::move(a), iv);
}
FormulaPtr Formula::historically(Interval iv, FormulaPtr a) {
  return unary(FormulaKind::Historically, std::move(a), iv);
}
FormulaPtr Formula::next(FormulaPtr a) { return unary(FormulaKind::Next, std::move(a)); }
FormulaPtr Formula::previous(FormulaPtr a) { return unary(FormulaKind::Previous, std::move(a)); }
FormulaPtr Formula::rise(FormulaPtr a) { return unary(FormulaKind::Rise, std::move(a)); }
FormulaPtr Formula::fall(FormulaPtr a) { return unary(FormulaKind::Fall, std::move(a)); }

bool equal(const Formula& x, const Formula& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case FormulaKind::BoolConst: return x.bvalue == y.bvalue;
    case FormulaKind::Predicate:
      return x.cmp == y.cmp && x.constant == y.constant && equal(*x.term, *y.term);
    default: break;
  }
  if (x.interval != y.interval) return false;
  if (static_cast<bool>(x.left) != static_cast<bool>(y.left)) return false;
  if (static_cast<bool>(x.right) != static_cast<bool>(y.right)) return false;
  if (x.left && !equal(*x.left, *y.left)) return false;
  if (x.right && !equal(*x.right, *y.right)) return false;
  return true;
}

std::set<std::string> formula_vars(const Formula& f) {
  std::set<std::string> out;
  auto walk = [&out](const Formula& g, auto&& self) -> void {
    if (g.kind == FormulaKind::Predicate) collect_vars(*g.term, out);
    if (g.left) self(*g.left, self);
    if (g.right) self(*g.right, self);
  };
  walk(f, walk);
  return out;
}

bool is_temporal(FormulaKind k) {
  switch (k) {
    case FormulaKind::Until:
    case FormulaKind::Since:
    case FormulaKind::Precedes:
    case FormulaKind::Eventually:
    case FormulaKind::Always:
    case FormulaKind::Once:
    case FormulaKind::Historically:
    case FormulaKind::Next:
    case FormulaKind::Previous:
    case FormulaKind::Rise:
    case FormulaKind::Fall: return true;
    default: return false;
  }
}

bool is_future_operator(FormulaKind k) {
  return k == FormulaKind::Until || k == FormulaKind::Eventually ||
         k == FormulaKind::Always || k == FormulaKind::Next;
}

bool is_past_operator(FormulaKind k) {
  switch (k) {
    case FormulaKind::Since:
    case FormulaKind::Precedes:
    case FormulaKind::Once:
    case FormulaKind::Historically:
    case FormulaKind::Previous:
    case FormulaKind::Rise:
    case FormulaKind::Fall: return true;
    default: return false;
  }
}

namespace {

bool contains(const Formula& f, bool (*pred)(FormulaKind)) {
  if (pred(f.kind)) return true;
  if (f.left && contains(*f.left, pred)) return true;
  if (f.right && contains(*f.right, pred)) return true;
  return false;
}

}  // namespace

bool contains_future_operator(const Formula& f) { return contains(f, is_future_operator); }
bool contains_past_operator(const Formula& f) { return contains(f, is_past_operator); }

bool contains_shift_operator(const Formula& f) {
  return contains(f, +[](FormulaKind k) {
    return k == FormulaKind::Next || k == FormulaKind::Previous ||
           k == FormulaKind::Rise || k == FormulaKind::Fall;
  });
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
  }
  return "?";
}

// An unbounded [0, inf) interval is the parser default and stays implicit.
std::string interval_text(const std::optional<Interval>& iv) {
  if (!iv || (!iv->is_bounded() && iv->lo == Rational(0))) return "";
  return format_interval(*iv);
}

// Precedence levels: implies 1 < or 2 < and 3 < until/since/precedes 4;
// unary operators and atoms never need wrapping.
std::string fmt(const Formula& f, int parent);

std::string fmt_child(const Formula& f, int parent) { return fmt(f, parent); }

std::string fmt(const Formula& f, int parent) {
  std::string s;
  int prec = 5;
  switch (f.kind) {
    case FormulaKind::BoolConst: s = f.bvalue ? "true" : "false"; break;
    case FormulaKind::Predicate:
      s = format_term(*f.term) + " " + cmp_text(f.cmp) + " " + format_double(f.constant);
      prec = 4;  // a comparison inside `until` etc. keeps its parentheses
      break;
    case FormulaKind::Not: s = "not (" + fmt_child(*f.left, 0) + ")"; break;
    case FormulaKind::And:
      prec = 3;
      s = fmt_child(*f.left, prec) + " and " + fmt_child(*f.right, prec + 1);
      break;
    case FormulaKind::Or:
      prec = 2;
      s = fmt_child(*f.left, prec) + " or " + fmt_child(*f.right, prec + 1);
      break;
    case FormulaKind::Implies:
      prec = 1;
      // right-associative: the right child may be another implication
      s = fmt_child(*f.left, prec + 1) + " implies " + fmt_child(*f.right, prec);
      break;
    case FormulaKind::Until:
    case FormulaKind::Since:
    case FormulaKind::Precedes: {
      prec = 4;
      const char* opname = f.kind == FormulaKind::Until    ? "until"
                           : f.kind == FormulaKind::Since  ? "since"
                                                           : "precedes";
      s = fmt_child(*f.left, prec + 1) + " " + opname + interval_text(f.interval) + " " +
          fmt_child(*f.right, prec + 1);
      break;
    }
    case FormulaKind::Eventually: s = "eventually" + interval_text(f.interval); break;
    case FormulaKind::Always: s = "always" + interval_text(f.interval); break;
    case FormulaKind::Once: s = "once" + interval_text(f.interval); break;
    case FormulaKind::Historically: s = "historically" + interval_text(f.interval); break;
    case FormulaKind::Next: s = "next"; break;
    case FormulaKind::Previous: s = "prev"; break;
    case FormulaKind::Rise: s = "rise"; break;
    case FormulaKind::Fall: s = "fall"; break;
  }
  // unary temporal operators take a mandatory parenthesised argument
  switch (f.kind) {
    case FormulaKind::Eventually:
    case FormulaKind::Always:
    case FormulaKind::Once:
    case FormulaKind::Historically:
    case FormulaKind::Next:
    case FormulaKind::Previous:
    case FormulaKind::Rise:
    case FormulaKind::Fall:
      return s + "(" + fmt_child(*f.left, 0) + ")";
    default: break;
  }
  return prec < parent ? "(" + s + ")" : s;
}

}  // namespace

std::string format_formula(const Formula& f) { return fmt(f, 0); }

}  // namespace sigtl
