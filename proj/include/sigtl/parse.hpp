#pragma once

#include <set>
#include <string>

#include "sigtl/formula.hpp"
#include "sigtl/specification.hpp"

namespace sigtl {

// Parses a formula over the given variable names. Keyword and symbol forms
// are interchangeable (always/G, and/&&, not/!, implies/->, ...). Reports
// syntax errors, undeclared variables and malformed intervals with 1-based
// line/column positions.
FormulaPtr parse_formula(const std::string& text, const std::set<std::string>& declared);

// Specification file: '#' comments, a 'name' header, 'input|output|internal
// float <var>' declarations, an optional 'period <n> <unit>' line and one
// final '<outvar> = <formula>' assignment.
Specification parse_specification(const std::string& text);

Specification load_specification_file(const std::string& path);

}  // namespace sigtl
