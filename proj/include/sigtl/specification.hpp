#pragma once

#include <set>
#include <string>
#include <vector>

#include "sigtl/formula.hpp"
#include "sigtl/rational.hpp"

namespace sigtl {

enum class Role { Input, Output, Internal };

enum class TimeUnit { s, ms, us, ns };

const char* unit_name(TimeUnit u);

struct Declaration {
  std::string name;
  Role role;
};

// A named IA-STL specification: variable declarations with interface roles,
// a sampling period (discrete interpretation), the property, and the output
// variable that receives the robustness. All timestamps and interval bounds
// are expressed in the declared unit; the unit itself is metadata.
struct Specification {
  std::string name;
  std::vector<Declaration> declarations;
  Rational period{1};
  TimeUnit unit = TimeUnit::s;
  FormulaPtr formula;
  std::string target;  // declared output variable receiving the robustness

  bool declared(const std::string& var) const;
  Role role(const std::string& var) const;

  // Interface sets exclude the assignment target: it is the monitor's own
  // output, never a plant signal.
  std::set<std::string> inputs() const;           // X_U
  std::set<std::string> outputs() const;          // X_V
  std::set<std::string> interface_vars() const;   // X
};

}  // namespace sigtl
