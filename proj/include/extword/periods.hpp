#pragma once

#include <utility>

#include "extword/lattice.hpp"
#include "extword/word.hpp"

namespace extword {

// w(beta) = w(beta + pi) wherever both sides are in the domain.
bool is_period(const Word& w, const Exponent& pi);

// HNF basis of the subgroup of proper periods {pi : deg(pi) < deg(w)}.
// Exact for single atoms (intersection of the ray stabilizers); multi-block
// words refine a structural candidate lattice by exact is_period tests with
// a bounded multiple search (kPeriodMultCap).
PeriodLattice proper_period_lattice(const Word& w);

// Period lattice of the bi-infinite anchored p-power: all pi with
// rotate(p, pi) == p, as a subgroup of A^{deg <= deg|p|}.
PeriodLattice stab_lattice(const Word& p);

// (r, s) = (prefix, suffix) of length beta; r * g = g * s holds and is
// verified. beta must be a nonnegative proper period of g.
std::pair<Word, Word> boundary_words(const Word& g, const Exponent& beta);

inline constexpr int kPeriodMultCap = 64;
inline constexpr int kPeriodComboCap = 8;
inline constexpr int kStabTopSearchBound = 6;

}  // namespace extword
