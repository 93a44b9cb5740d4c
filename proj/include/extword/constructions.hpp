#pragma once

#include <optional>

#include "extword/base_group.hpp"
#include "extword/word.hpp"

namespace extword {

// [uuu...)(...vvv] of length t^{e+1} where e = deg(|u|).
Word ray_pair(const Word& u, const Word& v);

// The involution-fixed words [ppp...)(...~p~p~p] of length t + m built on a
// reduced ray seed; order 2 in the extension, pairwise distinct over m.
Word w_m_word(long m, const Word& seed);

// The abelian tower of Prop-style restrictions: x_d of length t^{e+d} with
// |x| a proper period, built as nested symmetric atoms.
Word x_d(const Word& x, int d);

// The involution-fixed power envelope [xxx...)(...~x~x~x] of length
// t^{deg(x)+1}; x * x_inf = x_inf * involute(x).
Word x_infty(const Word& x);

// s = [UUU...)(...WW...)(...VVV] of length 2 t^{d}; u s = s v for the
// underlying u, v. W must be primitive.
Word hnn_stable_letter(const Word& U, const Word& V, const Word& W);

// w does not occur inside ww except as its prefix/suffix, and neither does
// its involute.
bool is_primitive_word(const Word& w);

// Cyclically reduced decompositions x = c u ~c (free base).
struct CdrElement {
  Word word;  // freely reduced
  Word c;
  Word core;  // cyclically reduced
};
std::optional<CdrElement> cdr_decompose(const Word& x);
// x * y defined iff x = pq, y = ~q r with pr freely reduced.
std::optional<CdrElement> cdr_product(const CdrElement& x, const CdrElement& y);

// A G-reduced word of length alpha over free / abelian / cyclic oracles,
// built from a periodic G-reduced bi-pattern.
Word arbitrary_reduced_word(const BaseGroupPtr& group, int dims, const Exponent& alpha);

// Uniform helper: the length-alpha restriction of the anchored q-power.
Word uniform_power_word(const Word& q, const Exponent& alpha);

}  // namespace extword
