#include "sigtl/rewrite.hpp"

#include "sigtl/error.hpp"

namespace sigtl {

FormulaPtr normalize(FormulaPtr f) {
  switch (f->kind) {
    case FormulaKind::BoolConst: return f;
    case FormulaKind::Predicate: {
      TermPtr t = f->term;
      double c = f->constant;
      auto minus_c = [&] { return c == 0.0 ? t : Term::sub(t, Term::constant(c)); };
      auto c_minus = [&] { return Term::sub(Term::constant(c), t); };
      switch (f->cmp) {
        case CmpOp::Gt:
        case CmpOp::Ge:
          if (c == 0.0 && f->cmp == CmpOp::Gt) return f;  // already canonical
          return Formula::predicate(minus_c(), CmpOp::Gt, 0.0);
        case CmpOp::Lt:
        case CmpOp::Le:
          return Formula::predicate(c_minus(), CmpOp::Gt, 0.0);
        case CmpOp::Eq:
          return Formula::predicate(Term::neg(Term::abs(minus_c())), CmpOp::Gt, 0.0);
        case CmpOp::Ne:
          return Formula::predicate(Term::abs(minus_c()), CmpOp::Gt, 0.0);
      }
      return f;
    }
    case FormulaKind::Implies:
      return Formula::disjunction(Formula::negation(normalize(f->left)), normalize(f->right));
    case FormulaKind::Not: return Formula::negation(normalize(f->left));
    case FormulaKind::And:
      return Formula::conjunction(normalize(f->left), normalize(f->right));
    case FormulaKind::Or:
      return Formula::disjunction(normalize(f->left), normalize(f->right));
    case FormulaKind::Until:
      return Formula::until(*f->interval, normalize(f->left), normalize(f->right));
    case FormulaKind::Since:
      return Formula::since(*f->interval, normalize(f->left), normalize(f->right));
    case FormulaKind::Precedes:
      return Formula::precedes(*f->interval, normalize(f->left), normalize(f->right));
    case FormulaKind::Eventually: return Formula::eventually(*f->interval, normalize(f->left));
    case FormulaKind::Always: return Formula::always(*f->interval, normalize(f->left));
    case FormulaKind::Once: return Formula::once(*f->interval, normalize(f->left));
    case FormulaKind::Historically:
      return Formula::historically(*f->interval, normalize(f->left));
    case FormulaKind::Next: return Formula::next(normalize(f->left));
    case FormulaKind::Previous: return Formula::previous(normalize(f->left));
    case FormulaKind::Rise: return Formula::rise(normalize(f->left));
    case FormulaKind::Fall: return Formula::fall(normalize(f->left));
  }
  return f;
}

FormulaPtr desugar(FormulaPtr f) {
  switch (f->kind) {
    case FormulaKind::BoolConst:
    case FormulaKind::Predicate: return f;
    case FormulaKind::Not: return Formula::negation(desugar(f->left));
    case FormulaKind::And: return Formula::conjunction(desugar(f->left), desugar(f->right));
    case FormulaKind::Or: return Formula::disjunction(desugar(f->left), desugar(f->right));
    case FormulaKind::Implies:
      return Formula::disjunction(Formula::negation(desugar(f->left)), desugar(f->right));
    case FormulaKind::Until:
      return Formula::until(*f->interval, desugar(f->left), desugar(f->right));
    case FormulaKind::Since:
      return Formula::since(*f->interval, desugar(f->left), desugar(f->right));
    case FormulaKind::Precedes:
      return Formula::precedes(*f->interval, desugar(f->left), desugar(f->right));
    case FormulaKind::Eventually:
      return Formula::until(*f->interval, Formula::boolean(true), desugar(f->left));
    case FormulaKind::Always:
      return Formula::negation(Formula::until(*f->interval, Formula::boolean(true),
                                              Formula::negation(desugar(f->left))));
    case FormulaKind::Once:
      return Formula::since(*f->interval, Formula::boolean(true), desugar(f->left));
    case FormulaKind::Historically:
      return Formula::negation(Formula::since(*f->interval, Formula::boolean(true),
                                              Formula::negation(desugar(f->left))));
    case FormulaKind::Next: return Formula::next(desugar(f->left));
    case FormulaKind::Previous: return Formula::previous(desugar(f->left));
    case FormulaKind::Rise: {
      FormulaPtr p = desugar(f->left);
      return Formula::conjunction(Formula::previous(Formula::negation(p)), p);
    }
    case FormulaKind::Fall: {
      FormulaPtr p = desugar(f->left);
      return Formula::conjunction(Formula::previous(p), Formula::negation(p));
    }
  }
  return f;
}

namespace {

using Depth = std::optional<Rational>;  // nullopt = +inf

Depth dmax(const Depth& a, const Depth& b) {
  if (!a || !b) return std::nullopt;
  return *a < *b ? *b : *a;
}

Depth dadd(const Depth& a, const Rational& c) {
  if (!a) return std::nullopt;
  return *a + c;
}

}  // namespace

std::optional<Rational> temporal_depth(const Formula& f, const Rational& period) {
  switch (f.kind) {
    case FormulaKind::BoolConst:
    case FormulaKind::Predicate: return Rational(0);
    case FormulaKind::Not: return temporal_depth(*f.left, period);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return dmax(temporal_depth(*f.left, period), temporal_depth(*f.right, period));
    case FormulaKind::Next: return dadd(temporal_depth(*f.left, period), period);
    case FormulaKind::Until:
    case FormulaKind::Eventually:
    case FormulaKind::Always: {
      if (!f.interval->is_bounded()) return std::nullopt;
      Depth inner = f.right ? dmax(temporal_depth(*f.left, period),
                                   temporal_depth(*f.right, period))
                            : temporal_depth(*f.left, period);
      return dadd(inner, *f.interval->hi);
    }
    // past operators add no future depth of their own
    case FormulaKind::Since:
    case FormulaKind::Precedes:
      return dmax(temporal_depth(*f.left, period), temporal_depth(*f.right, period));
    case FormulaKind::Once:
    case FormulaKind::Historically:
    case FormulaKind::Previous:
    case FormulaKind::Rise:
    case FormulaKind::Fall: return temporal_depth(*f.left, period);
  }
  return Rational(0);
}

std::optional<Rational> past_depth(const Formula& f, const Rational& period) {
  switch (f.kind) {
    case FormulaKind::BoolConst:
    case FormulaKind::Predicate: return Rational(0);
    case FormulaKind::Not: return past_depth(*f.left, period);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Until:
      return dmax(past_depth(*f.left, period), past_depth(*f.right, period));
    case FormulaKind::Eventually:
    case FormulaKind::Always:
    case FormulaKind::Next: return past_depth(*f.left, period);
    case FormulaKind::Since:
    case FormulaKind::Precedes: {
      if (!f.interval->is_bounded()) return std::nullopt;
      Depth inner = dmax(past_depth(*f.left, period), past_depth(*f.right, period));
      return dadd(inner, *f.interval->hi);
    }
    case FormulaKind::Once:
    case FormulaKind::Historically: {
      if (!f.interval->is_bounded()) return std::nullopt;
      return dadd(past_depth(*f.left, period), *f.interval->hi);
    }
    case FormulaKind::Previous:
    case FormulaKind::Rise:
    case FormulaKind::Fall: return dadd(past_depth(*f.left, period), period);
  }
  return Rational(0);
}

namespace {

// O_[d,d] with the zero-shift collapse.
FormulaPtr once_exact(const Rational& d, FormulaPtr f) {
  if (d == Rational(0)) return f;
  return Formula::once(Interval::bounded(d, d), std::move(f));
}

FormulaPtr pastify_rec(const FormulaPtr& f, const Rational& d, const Rational& period) {
  switch (f->kind) {
    case FormulaKind::BoolConst: return f;  // time-invariant, no shift needed
    case FormulaKind::Predicate: return once_exact(d, f);
    case FormulaKind::Not: return Formula::negation(pastify_rec(f->left, d, period));
    case FormulaKind::And:
      return Formula::conjunction(pastify_rec(f->left, d, period),
                                  pastify_rec(f->right, d, period));
    case FormulaKind::Or:
      return Formula::disjunction(pastify_rec(f->left, d, period),
                                  pastify_rec(f->right, d, period));
    case FormulaKind::Next: return pastify_rec(f->left, d - period, period);
    case FormulaKind::Eventually: {
      const Interval& iv = *f->interval;
      FormulaPtr body = pastify_rec(f->left, d - *iv.hi, period);
      if (iv.width() == Rational(0)) return body;  // O_[0,0] collapses
      return Formula::once(Interval::bounded(Rational(0), iv.width()), body);
    }
    case FormulaKind::Always: {
      // G_[a,b] p == not F_[a,b] not p, so the pastified form is H_[0,b-a].
      const Interval& iv = *f->interval;
      FormulaPtr body = pastify_rec(f->left, d - *iv.hi, period);
      if (iv.width() == Rational(0)) return body;
      return Formula::historically(Interval::bounded(Rational(0), iv.width()), body);
    }
    case FormulaKind::Until: {
      const Interval& iv = *f->interval;
      return Formula::precedes(iv, pastify_rec(f->left, d - *iv.hi, period),
                               pastify_rec(f->right, d - *iv.hi, period));
    }
    default:
      fail(Errc::past_inside_future, "pastification does not support past operators");
  }
}

}  // namespace

FormulaPtr pastify(FormulaPtr f, const Rational& period) {
  f = normalize(std::move(f));
  if (contains_past_operator(*f))
    fail(Errc::past_inside_future,
         "pastification requires a pure bounded-future formula; past operators present");
  auto h = temporal_depth(*f, period);
  if (!h)
    fail(Errc::unbounded_horizon,
         "pastification requires a bounded future horizon; an unbounded interval occurs");
  return pastify_rec(f, *h, period);
}

}  // namespace sigtl
