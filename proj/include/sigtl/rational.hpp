#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace sigtl {

// Exact time arithmetic. Timestamps, interval bounds and periods are
// rationals so that window boundaries never suffer floating rounding;
// robustness values stay double.
using Rational = boost::rational<std::int64_t>;

// "3", "-2", "0.125", "1.1", "3/10". Throws Error{syntax} on anything else.
Rational parse_rational(const std::string& text);

// Shortest exact form: integer, terminating decimal (denominator 2^a*5^b),
// or "p/q" otherwise. parse_rational round-trips all three.
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

using TimeStamp = Rational;

}  // namespace sigtl
