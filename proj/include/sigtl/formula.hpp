#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>

#include "sigtl/interval.hpp"
#include "sigtl/term.hpp"

namespace sigtl {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind {
  BoolConst,     // true / false  (robustness +inf / -inf)
  Predicate,     // term cmp constant
  Not,
  And,
  Or,
  Implies,
  Until,         // future, interval
  Since,         // past, interval
  Precedes,      // past, bounded interval (pastified bounded until)
  Eventually,    // F
  Always,        // G
  Once,          // O
  Historically,  // H
  Next,          // X (discrete only)
  Previous,      // Y (discrete only)
  Rise,          // discrete only
  Fall,          // discrete only
};

enum class CmpOp { Gt, Ge, Lt, Le, Eq, Ne };

// Immutable formula tree. Temporal nodes always carry an interval; an
// omitted interval in the source means [0, inf) and is stored that way.
struct Formula {
  FormulaKind kind;
  bool bvalue = false;              // BoolConst
  TermPtr term;                     // Predicate
  CmpOp cmp = CmpOp::Gt;            // Predicate
  double constant = 0;              // Predicate
  FormulaPtr left, right;           // children (unary ops use left)
  std::optional<Interval> interval; // Until/Since/Precedes/F/G/O/H

  static FormulaPtr boolean(bool v);
  static FormulaPtr predicate(TermPtr term, CmpOp op, double c);
  static FormulaPtr negation(FormulaPtr a);
  static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
  static FormulaPtr until(Interval iv, FormulaPtr a, FormulaPtr b);
  static FormulaPtr since(Interval iv, FormulaPtr a, FormulaPtr b);
  static FormulaPtr precedes(Interval iv, FormulaPtr a, FormulaPtr b);  // bounded
  static FormulaPtr eventually(Interval iv, FormulaPtr a);
  static FormulaPtr always(Interval iv, FormulaPtr a);
  static FormulaPtr once(Interval iv, FormulaPtr a);
  static FormulaPtr historically(Interval iv, FormulaPtr a);
  static FormulaPtr next(FormulaPtr a);
  static FormulaPtr previous(FormulaPtr a);
  static FormulaPtr rise(FormulaPtr a);
  static FormulaPtr fall(FormulaPtr a);
};

bool equal(const Formula& x, const Formula& y);
inline bool equal(const FormulaPtr& x, const FormulaPtr& y) { return equal(*x, *y); }

std::set<std::string> formula_vars(const Formula& f);

bool is_temporal(FormulaKind k);
bool is_future_operator(FormulaKind k);   // U, F, G, X
bool is_past_operator(FormulaKind k);     // S, O, H, Y, P, rise, fall
bool contains_future_operator(const Formula& f);
bool contains_past_operator(const Formula& f);
// X/Y/rise/fall make sense only under the discrete interpretation.
bool contains_shift_operator(const Formula& f);

// Canonical text; parse_formula(format_formula(f)) is structurally equal to f.
std::string format_formula(const Formula& f);
inline std::string format_formula(const FormulaPtr& f) { return format_formula(*f); }

}  // namespace sigtl
