#include "extword/constructions.hpp"

#include "extword/periods.hpp"
#include "extword/rewriting.hpp"

namespace extword {

Word ray_pair(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw invalid_input_error("ray_pair needs nonempty rays");
  if (u.degree() != v.degree()) throw invalid_input_error("ray_pair rays must have equal degree");
  return canonical(make_atom(u.degree() + 1, u, v, Exponent(u.dims())));
}

Word w_m_word(long m, const Word& seed) {
  if (seed.empty() || seed.degree() != 0) throw invalid_input_error("w_m needs a finite ray seed");
  return canonical(
      make_atom(1, seed, involute(seed), Exponent::monomial(seed.dims(), 0, m)));
}

Word x_d(const Word& x, int d) {
  if (d < 1) throw invalid_input_error("x_d needs d >= 1");
  Word cx = canonical(x);
  if (cx.empty()) throw invalid_input_error("x_d of empty word");
  if (!is_cyclically_reduced(cx)) throw invalid_input_error("x_d needs a cyclically reduced word");
  int e = cx.degree();
  if (e + d >= cx.dims()) throw invalid_input_error("x_d exceeds session d_max");
  Word level = cx;
  for (int i = 1; i <= d; ++i) level = canonical(make_atom(e + i, level, level, Exponent(cx.dims())));
  return level;
}

Word x_infty(const Word& x) {
  Word cx = canonical(x);
  if (cx.empty()) throw invalid_input_error("x_infty of empty word");
  if (!is_cyclically_reduced(cx)) throw invalid_input_error("x_infty needs a cyclically reduced word");
  if (cx.degree() + 1 >= cx.dims()) throw invalid_input_error("x_infty exceeds session d_max");
  return canonical(make_atom(cx.degree() + 1, cx, involute(cx), Exponent(cx.dims())));
}

bool is_primitive_word(const Word& w) {
  if (w.empty()) return false;
  Word cw = canonical(w);
  Word ww = canonical(raw_concat(cw, cw));
  if (equal(cw, involute(cw))) return false;
  if (cw.degree() == 0) {
    auto ls = finite_letters(cw);
    long n = static_cast<long>(ls.size());
    for (long s = 1; s < n; ++s) {
      bool occ = true;
      for (long t = 0; t < n && occ; ++t)
        occ = ls[static_cast<size_t>((s + t) % n)] == ls[static_cast<size_t>(t)];
      if (occ) return false;
    }
    auto wwl = finite_letters(ww);
    auto inv = involute(cw);
    auto il = finite_letters(inv);
    for (long s = 0; s + n <= 2 * n; ++s) {
      bool occ = true;
      for (long t = 0; t < n && occ; ++t) occ = wwl[static_cast<size_t>(s + t)] == il[static_cast<size_t>(t)];
      if (occ) return false;
    }
    return true;
  }
  // infinite: any nontrivial proper period of ww gives an interior occurrence
  if (!proper_period_lattice(ww).is_trivial()) return false;
  // bounded search for same-degree occurrences of w or its involute in ww
  int d = cw.degree();
  Word iw = involute(cw);
  for (long lead = 0; lead < cw.length().coeff(d).get_si() + 1; ++lead) {
    for (long low = -kStabTopSearchBound; low <= kStabTopSearchBound; ++low) {
      Exponent sigma = Exponent::monomial(cw.dims(), d, lead) + Exponent::monomial(cw.dims(), 0, low);
      if (!sigma.positive() && !sigma.is_zero()) continue;
      if (sigma + cw.length() > ww.length()) continue;
      Word f = factor(ww, sigma + 1, sigma + cw.length());
      if (!sigma.is_zero() && sigma != cw.length() && equal(f, cw)) return false;
      if (equal(f, iw)) return false;
    }
  }
  return true;
}

std::optional<CdrElement> cdr_decompose(const Word& x) {
  Word cx = canonical(x);
  if (!is_freely_reduced(cx)) return std::nullopt;
  if (cx.empty()) return CdrElement{cx, Word(cx.alphabet(), cx.dims()), cx};
  AgreementResult ag = agree_prefix_words(cx, involute(cx));
  if (ag.free) return std::nullopt;  // the symmetric shell regresses through a periodic zone
  Exponent delta = ag.len;
  if (delta + delta >= cx.length()) return std::nullopt;  // shells meet: no cyclically reduced core
  Exponent one = Exponent::unit(cx.dims());
  Word c = canonical(factor(cx, one, delta));
  Word core = canonical(factor(cx, delta + 1, cx.length() - delta));
  if (!is_cyclically_reduced(core)) return std::nullopt;
  return CdrElement{cx, std::move(c), std::move(core)};
}

std::optional<CdrElement> cdr_product(const CdrElement& x, const CdrElement& y) {
  const Word& X = x.word;
  const Word& Y = y.word;
  if (X.empty()) return cdr_decompose(Y);
  if (Y.empty()) return cdr_decompose(X);
  AgreementResult ag = agree_suffix_words(X, involute(Y));
  if (ag.free) return std::nullopt;  // cancellation regresses through a periodic zone
  Exponent q = ag.len;
  Exponent one = Exponent::unit(X.dims());
  Word p = factor(X, one, X.length() - q);
  Word r = factor(Y, q + 1, Y.length());
  Word pr = canonical(raw_concat(p, r));
  if (!is_freely_reduced(pr)) return std::nullopt;
  return cdr_decompose(pr);
}

Word uniform_power_word(const Word& q, const Exponent& alpha) {
  if (alpha.is_zero()) return Word(q.alphabet(), q.dims());
  if (!alpha.positive()) throw invalid_input_error("uniform_power_word needs alpha >= 0");
  if (q.empty() || q.degree() != 0) throw invalid_input_error("pattern must be a finite word");
  int e = alpha.degree();
  if (e >= q.dims()) throw invalid_input_error("alpha exceeds session d_max");
  Word level = q;
  for (int i = 1; i <= e; ++i) level = make_atom(i, level, level, Exponent(q.dims()));
  if (e == 0) return canonical(power_factor(q, Exponent::unit(q.dims()), alpha));
  long lead = alpha.coeff(e).get_si();
  Word big(q.alphabet(), q.dims());
  for (long i = 0; i <= lead; ++i) big = raw_concat(big, level);
  return canonical(factor(big, Exponent::unit(q.dims()), alpha));
}

Word arbitrary_reduced_word(const BaseGroupPtr& group, int dims, const Exponent& alpha) {
  if (group->is_finite_group())
    throw invalid_input_error("finite base groups admit no infinite G-reduced words");
  const auto& ab = group->alphabet();
  if (!alpha.positive() && !alpha.is_zero())
    throw invalid_input_error("arbitrary_reduced_word needs alpha >= 0");
  std::vector<LetterId> pattern;
  if (group->is_free() && ab->base_letters().size() >= 2) {
    pattern = {ab->base_letters()[0], ab->base_letters()[1]};
  } else {
    pattern = {ab->base_letters()[0]};
  }
  Word w = uniform_power_word(make_finite(ab, dims, pattern), alpha);
  if (is_g_reduced(w, *group) == Tri::no)
    throw invalid_input_error("constructed pattern failed the reducedness validator");
  return w;
}

}  // namespace extword
