#include "extword/constructions.hpp"

namespace extword {

Word hnn_stable_letter(const Word& U, const Word& V, const Word& W) {
  if (U.length() != V.length() || U.length() != W.length())
    throw invalid_input_error("hnn_stable_letter requires |U| = |V| = |W|");
  if (!is_primitive_word(W)) throw invalid_input_error("hnn_stable_letter requires W primitive");
  return concat(ray_pair(U, W), ray_pair(W, V));
}

}  // namespace extword
