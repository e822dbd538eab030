#pragma once

#include <optional>

#include "sigtl/formula.hpp"
#include "sigtl/rational.hpp"

namespace sigtl {

// Robustness-canonical form. Comparisons are rewritten so every predicate
// reads 'term > 0' with the constant folded into the term:
//   t >= c, t > c   ->  t - c > 0
//   t <= c, t < c   ->  c - t > 0
//   t == c          ->  -abs(t - c) > 0     (robustness -|t - c|)
//   t != c          ->   abs(t - c) > 0     (robustness +|t - c|)
//   a implies b     ->  (not a) or b
// Strict and non-strict comparisons collapse: Definition of the quantitative
// semantics assigns both the same value, and the sign at 0 cannot recover the
// distinction. Idempotent.
FormulaPtr normalize(FormulaPtr f);

// Expands derived temporal operators:
//   F_I p  -> true U_I p          G_I p -> not (true U_I (not p))
//   O_I p  -> true S_I p          H_I p -> not (true S_I (not p))
//   rise p -> (Y not p) and p     fall p -> (Y p) and (not p)
//   a implies b -> (not a) or b
// X and Y stay primitive: they are index shifts, and encoding them as
// false U / false S collapses under the half-open inner infimum of the
// quantitative semantics (false U_I p evaluates to p). Idempotent.
FormulaPtr desugar(FormulaPtr f);

// Syntactic bound on how far into the future evaluation at t may look, in
// time units. X counts one period. Past operators contribute nothing of
// their own. nullopt encodes +inf (an unbounded future interval occurs).
std::optional<Rational> temporal_depth(const Formula& f, const Rational& period = Rational(1));

// Maximal lookback, in time units; nullopt = unbounded past window.
std::optional<Rational> past_depth(const Formula& f, const Rational& period = Rational(1));

// Pastification: rewrites a bounded-future formula into a past-only formula
// whose value at t + H(f) equals the original's value at t. Requires a
// finite horizon and no past operators anywhere in the input; the formula is
// normalized first. O_[0,0] collapses to the identity.
FormulaPtr pastify(FormulaPtr f, const Rational& period = Rational(1));

}  // namespace sigtl
