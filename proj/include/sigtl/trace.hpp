#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigtl/rational.hpp"
#include "sigtl/robustness.hpp"

namespace sigtl {

struct Sample {
  TimeStamp time;
  double value;  // finite; NaN/inf rejected at ingestion
};

// Finite multi-variable signal: per variable a strictly time-increasing
// sample sequence. Immutable once built; copies are cheap enough and safe to
// hand to other threads.
class Trace {
 public:
  Trace() = default;

  // Validates monotone timestamps and finite values, throws Error otherwise.
  void set(const std::string& var, std::vector<Sample> samples);
  void append(const std::string& var, Sample s);  // online ingestion

  bool has(const std::string& var) const { return vars_.count(var) != 0; }
  const std::vector<Sample>& samples(const std::string& var) const;
  const std::map<std::string, std::vector<Sample>>& variables() const { return vars_; }
  bool empty() const { return vars_.empty(); }

 private:
  std::map<std::string, std::vector<Sample>> vars_;
};

// Monitor output: strictly increasing timestamps, extended-real values.
using RobustnessSeries = std::vector<std::pair<TimeStamp, ExtendedReal>>;

}  // namespace sigtl
