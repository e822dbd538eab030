#include "sigtl/specification.hpp"

#include "sigtl/error.hpp"

namespace sigtl {

const char* unit_name(TimeUnit u) {
  switch (u) {
    case TimeUnit::s: return "s";
    case TimeUnit::ms: return "ms";
    case TimeUnit::us: return "us";
    case TimeUnit::ns: return "ns";
  }
  return "?";
}

bool Specification::declared(const std::string& var) const {
  for (const auto& d : declarations)
    if (d.name == var) return true;
  return false;
}

Role Specification::role(const std::string& var) const {
  for (const auto& d : declarations)
    if (d.name == var) return d.role;
  fail(Errc::unknown_variable, "variable '" + var + "' is not declared");
}

std::set<std::string> Specification::inputs() const {
  std::set<std::string> out;
  for (const auto& d : declarations)
    if (d.role == Role::Input && d.name != target) out.insert(d.name);
  return out;
}

std::set<std::string> Specification::outputs() const {
  std::set<std::string> out;
  for (const auto& d : declarations)
    if (d.role == Role::Output && d.name != target) out.insert(d.name);
  return out;
}

std::set<std::string> Specification::interface_vars() const {
  std::set<std::string> out;
  for (const auto& d : declarations)
    if (d.name != target) out.insert(d.name);
  return out;
}

}  // namespace sigtl
