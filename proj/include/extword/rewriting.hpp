#pragma once

#include "extword/base_group.hpp"
#include "extword/word.hpp"

namespace extword {

enum class Tri { yes, no, unknown };

inline const char* tri_str(Tri t) {
  return t == Tri::yes ? "yes" : (t == Tri::no ? "no" : "unknown");
}

// Replace the finite factor inside `window` by its base-group normal form
// and re-canonicalize.
Word apply_S0(const Word& w, const Interval& window, const BaseGroup& g);

// Exact (yes/no) over free oracles via structural free-reducedness. Over
// other oracles: "no" when the bounded scan or the ray pumping probe finds
// a trivializable pattern, otherwise "unknown". A guard, not a gate.
Tri is_g_reduced(const Word& w, const BaseGroup& g, int window = 64);

// Exact over free oracles; window scan over geodesic lengths otherwise.
Tri is_local_geodesic(const Word& w, const BaseGroup& g, int window = 64);

// Finite factors sampled around block seams and unrolled ray periods,
// bounded by `window` letters each. Shared by the reducedness and geodesic
// scanners; exposed for tests.
std::vector<std::vector<LetterId>> sample_finite_factors(const Word& w, int window);

}  // namespace extword
