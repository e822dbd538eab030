#include "sigtl/trace.hpp"

#include <cmath>

#include "sigtl/error.hpp"

namespace sigtl {

namespace {

void check_value(const std::string& var, double v) {
  if (std::isnan(v)) fail(Errc::trace_value, "NaN sample for variable '" + var + "'");
  if (std::isinf(v)) fail(Errc::trace_value, "infinite sample for variable '" + var + "'");
}

}  // namespace

void Trace::set(const std::string& var, std::vector<Sample> samples) {
  for (size_t i = 0; i < samples.size(); ++i) {
    check_value(var, samples[i].value);
    if (samples[i].time < Rational(0))
      fail(Errc::non_monotone_time, "negative timestamp for variable '" + var + "'");
    if (i > 0 && !(samples[i - 1].time < samples[i].time))
      fail(Errc::non_monotone_time,
           "timestamps of variable '" + var + "' must strictly increase");
  }
  vars_[var] = std::move(samples);
}

void Trace::append(const std::string& var, Sample s) {
  check_value(var, s.value);
  if (s.time < Rational(0))
    fail(Errc::non_monotone_time, "negative timestamp for variable '" + var + "'");
  auto& seq = vars_[var];
  if (!seq.empty() && !(seq.back().time < s.time))
    fail(Errc::non_monotone_time,
         "timestamps of variable '" + var + "' must strictly increase");
  seq.push_back(s);
}

const std::vector<Sample>& Trace::samples(const std::string& var) const {
  auto it = vars_.find(var);
  if (it == vars_.end())
    fail(Errc::unknown_variable, "no samples for variable '" + var + "'");
  return it->second;
}

}  // namespace sigtl
