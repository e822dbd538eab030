#pragma once

#include <set>
#include <string>

#include "sigtl/error.hpp"
#include "sigtl/robustness.hpp"

namespace sigtl {

// How a numeric predicate over variable set Y turns its raw margin
// f(w_Y(t)) - c into a robustness value. This is the only place the
// interface-aware semantics differ from the classical one, so both engines
// take it as a strategy.
enum class AtomMode {
  Classical,    // raw margin
  Zero,         // Y not a subset of U ∪ V: uncontrollable, robustness 0
  Qualitative,  // Y a subset of V: fixed signals, sign(margin) * inf
};

struct PredicateSemantics {
  bool relative = false;
  std::set<std::string> measured;  // U
  std::set<std::string> fixed;     // V

  static PredicateSemantics classical() { return {}; }

  static PredicateSemantics relative_to(std::set<std::string> u, std::set<std::string> v) {
    for (const auto& x : u)
      if (v.count(x))
        fail(Errc::overlapping_sets, "U and V overlap on variable '" + x + "'");
    return {true, std::move(u), std::move(v)};
  }

  // Decided per predicate at compile time; trace-independent.
  AtomMode mode(const std::set<std::string>& predicate_vars) const {
    if (!relative) return AtomMode::Classical;
    bool in_union = true, in_v = true;
    for (const auto& x : predicate_vars) {
      bool u = measured.count(x) != 0, v = fixed.count(x) != 0;
      if (!u && !v) in_union = false;
      if (!v) in_v = false;
    }
    if (!in_union) return AtomMode::Zero;
    if (in_v) return AtomMode::Qualitative;
    return AtomMode::Classical;
  }
};

inline ExtendedReal apply_atom_mode(AtomMode m, double margin) {
  switch (m) {
    case AtomMode::Classical: return margin;
    case AtomMode::Zero: return 0.0;
    case AtomMode::Qualitative: return qualitative(margin);
  }
  return margin;
}

}  // namespace sigtl
