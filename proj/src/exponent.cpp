#include "extword/exponent.hpp"

#include <sstream>

namespace extword {

std::string Exponent::str() const {
  int d = degree();
  std::ostringstream os;
  os << '[';
  int top = d == kBottomDegree ? 0 : d;
  for (int i = 0; i <= top; ++i) {
    if (i) os << ',';
    os << coeffs_[static_cast<size_t>(i)].get_str();
  }
  os << ']';
  return os.str();
}

Exponent Exponent::parse(const std::string& text, int dims) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw invalid_input_error("exponent literal must start with '['");
  ++i;
  std::vector<Int> cs;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      size_t k = j;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == j) throw invalid_input_error("bad integer in exponent literal: " + text);
      cs.emplace_back(text.substr(i, k - i));
      i = k;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw invalid_input_error("expected ',' or ']' in exponent literal: " + text);
    }
  }
  skip_ws();
  if (i != text.size()) throw invalid_input_error("trailing characters after exponent literal: " + text);
  if (static_cast<int>(cs.size()) > dims)
    throw invalid_input_error("exponent literal has degree " + std::to_string(cs.size() - 1) +
                              " but session d_max admits only " + std::to_string(dims) + " coefficients");
  cs.resize(static_cast<size_t>(dims), Int(0));
  return from_coeffs(std::move(cs));
}

FloorDiv floor_div(const Exponent& beta, const Exponent& mu) {
  if (!mu.positive()) throw invalid_input_error("floor_div requires mu > 0");
  if (beta.degree() > mu.degree())
    throw invalid_input_error("floor_div: deg(beta) > deg(mu), quotient is not an integer");
  Int q;
  if (beta.degree() < mu.degree()) {
    // |k| bounded by 1: beta sits below one copy of mu in absolute scale.
    q = beta.positive() || beta.is_zero() ? 0 : -1;
  } else {
    int d = mu.degree();
    mpz_fdiv_q(q.get_mpz_t(), beta.coeff(d).get_mpz_t(), mu.coeff(d).get_mpz_t());
  }
  // Correct the estimate by lex comparisons; at most a couple of steps.
  Exponent r = beta - q * mu;
  while (r.positive() && r >= mu) {
    q += 1;
    r -= mu;
  }
  while (!(r.is_zero() || r.positive())) {
    q -= 1;
    r += mu;
  }
  return FloorDiv{std::move(q), std::move(r)};
}

Exponent interval_length(const Interval& iv) {
  if (iv.is_empty()) return Exponent(iv.lo().dims());
  return iv.hi() - iv.lo() + Exponent::unit(iv.lo().dims());
}

}  // namespace extword
