#pragma once

#include <optional>
#include <string>

#include "sigtl/error.hpp"
#include "sigtl/rational.hpp"

namespace sigtl {

// Temporal operator scope [lo, hi]; hi absent means unbounded ([lo, inf)).
struct Interval {
  Rational lo{0};
  std::optional<Rational> hi;  // nullopt = +inf

  static Interval bounded(Rational lo, Rational hi) {
    check(lo, hi);
    return Interval{lo, hi};
  }
  static Interval unbounded(Rational lo = Rational(0)) {
    check(lo, std::nullopt);
    return Interval{lo, std::nullopt};
  }

  bool is_bounded() const { return hi.has_value(); }
  Rational width() const { return *hi - lo; }

  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }

  static void check(const Rational& lo, const std::optional<Rational>& hi) {
    if (lo < Rational(0))
      fail(Errc::malformed_interval, "interval bound must be non-negative");
    if (hi && *hi < lo)
      fail(Errc::malformed_interval, "interval lower bound exceeds upper bound");
  }
};

inline std::string format_interval(const Interval& iv) {
  return "[" + format_rational(iv.lo) + ":" + (iv.hi ? format_rational(*iv.hi) : "inf") + "]";
}

}  // namespace sigtl
