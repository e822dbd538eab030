#pragma once

#include <cmath>
#include <limits>

namespace sigtl {

// Robustness values live in R ∪ {-inf, +inf}. IEEE doubles carry the lattice
// directly as long as NaN never enters: negation swaps the infinities and
// min/max are total. Trace ingestion rejects NaN, so none of these helpers
// defend against it.
using ExtendedReal = double;

inline constexpr ExtendedReal kTop = std::numeric_limits<double>::infinity();
inline constexpr ExtendedReal kBottom = -std::numeric_limits<double>::infinity();

inline ExtendedReal ext_min(ExtendedReal a, ExtendedReal b) { return b < a ? b : a; }
inline ExtendedReal ext_max(ExtendedReal a, ExtendedReal b) { return a < b ? b : a; }
inline ExtendedReal ext_neg(ExtendedReal a) { return -a; }

// sign(a) * inf with sign(0) mapping to bottom.
inline ExtendedReal qualitative(ExtendedReal a) { return a > 0 ? kTop : kBottom; }

}  // namespace sigtl
