#include "extword/rewriting.hpp"

#include "extword/periods.hpp"

namespace extword {

Word apply_S0(const Word& w, const Interval& window, const BaseGroup& g) {
  if (window.is_empty()) return canonical(w);
  const Exponent &lo = window.lo(), &hi = window.hi();
  Exponent one = Exponent::unit(w.dims());
  if (lo < one || hi > w.length()) throw invalid_input_error("window outside the word");
  if ((hi - lo).degree() > 0) throw invalid_input_error("apply_S0 window must be finite");
  Word mid = factor(w, lo, hi);
  auto nf = g.normal_form(finite_letters(mid));
  Word left = factor(w, one, lo - 1);
  Word right = factor(w, hi + 1, w.length());
  return canonical(raw_concat(raw_concat(left, make_finite(w.alphabet(), w.dims(), nf)), right));
}

namespace {

// First `k` letters of the anchored p-power.
std::vector<LetterId> ray_letters_forward(const Word& p, int k) {
  Word f = power_factor(p, Exponent::unit(p.dims()), Exponent::monomial(p.dims(), 0, k));
  return finite_letters(f);
}
// Last `k` letters of the p-power anchored at its end.
std::vector<LetterId> ray_letters_backward(const Word& p, int k) {
  Word f = power_factor_from_end(p, Exponent(p.dims()), Exponent::monomial(p.dims(), 0, k));
  return finite_letters(f);
}

std::vector<LetterId> primitive_root(const std::vector<LetterId>& ls) {
  long n = static_cast<long>(ls.size());
  for (long d = 1; d <= n / 2; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (long i = 0; i + d < n && ok; ++i) ok = ls[static_cast<size_t>(i)] == ls[static_cast<size_t>(i + d)];
    if (ok) return {ls.begin(), ls.begin() + d};
  }
  return ls;
}

void collect_window(const Word& w, const Exponent& around, int window,
                    std::vector<std::vector<LetterId>>& out) {
  Exponent one = Exponent::unit(w.dims());
  Exponent lo = around - window / 2;
  Exponent hi = around + window / 2;
  if (lo < one) lo = one;
  if (hi > w.length()) hi = w.length();
  if (lo > hi) return;
  if ((hi - lo).degree() > 0) return;
  Word f = factor(w, lo, hi);
  if (f.degree() > 0) return;
  out.push_back(finite_letters(f));
}

}  // namespace

std::vector<std::vector<LetterId>> sample_finite_factors(const Word& w, int window) {
  std::vector<std::vector<LetterId>> out;
  if (w.empty()) return out;
  int dims = w.dims();
  Exponent start(dims);
  for (const auto& b : w.blocks()) {
    Exponent blen = block_length(b, dims);
    Exponent end = start + blen;
    collect_window(w, start + 1, window, out);  // block start
    collect_window(w, end, window, out);        // block end
    if (const auto* a = std::get_if<AtomBlock>(&b)) {
      // unrolled ray periods (several copies each, bounded by the window)
      int k = std::min<long>(window, 1 << 12);
      out.push_back(ray_letters_forward(*a->rho, k));
      out.push_back(ray_letters_backward(*a->lambda, k));
    }
    start = std::move(end);
  }
  return out;
}

namespace {

bool scan_has_trivial_factor(const BaseGroup& g, const std::vector<std::vector<LetterId>>& samples,
                             int window) {
  for (const auto& s : samples) {
    long n = static_cast<long>(s.size());
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j <= std::min(n, i + window); ++j) {
        std::vector<LetterId> f(s.begin() + i, s.begin() + j);
        if (g.is_trivial(f)) return true;
      }
  }
  return false;
}

// Pumping probe: opposing ray periods that can annihilate through G.
bool pumping_probe(const Word& w, const BaseGroup& g, int window) {
  int k = std::min(window, 24);
  for (const auto& b : w.blocks()) {
    const auto* a = std::get_if<AtomBlock>(&b);
    if (!a) continue;
    auto pr = primitive_root(ray_letters_forward(*a->rho, k));
    auto pl = primitive_root(ray_letters_backward(*a->lambda, k));
    std::vector<LetterId> acc_r;
    for (int i = 1; i <= 4; ++i) {
      acc_r.insert(acc_r.end(), pr.begin(), pr.end());
      std::vector<LetterId> acc = acc_r;
      for (int j = 1; j <= 4; ++j) {
        acc.insert(acc.end(), pl.begin(), pl.end());
        if (g.is_trivial(acc)) return true;
      }
    }
    // a positive power of one ray period cancels the other
    auto m1 = g.cyclic_member(g.involute_letters(pl), pr);
    auto m2 = g.cyclic_member(g.involute_letters(pr), pl);
    if ((m1 && *m1 >= 1) || (m2 && *m2 >= 1)) return true;
  }
  return false;
}

}  // namespace

Tri is_g_reduced(const Word& w, const BaseGroup& g, int window) {
  if (w.empty()) return Tri::yes;
  if (g.is_free()) return is_freely_reduced(w) ? Tri::yes : Tri::no;
  Word cw = canonical(w);
  if (cw.degree() == 0) {
    auto ls = finite_letters(cw);
    long n = static_cast<long>(ls.size());
    if (n <= window) {  // exhaustive over all factors
      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j <= n; ++j)
          if (g.is_trivial({ls.begin() + i, ls.begin() + j})) return Tri::no;
      return Tri::yes;
    }
  }
  if (scan_has_trivial_factor(g, sample_finite_factors(cw, window), window)) return Tri::no;
  if (pumping_probe(cw, g, window)) return Tri::no;
  return Tri::unknown;
}

Tri is_local_geodesic(const Word& w, const BaseGroup& g, int window) {
  if (w.empty()) return Tri::yes;
  if (g.is_free()) return is_freely_reduced(w) ? Tri::yes : Tri::no;
  Word cw = canonical(w);
  for (const auto& s : sample_finite_factors(cw, window)) {
    long n = static_cast<long>(s.size());
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j <= std::min(n, i + window); ++j) {
        std::vector<LetterId> f(s.begin() + i, s.begin() + j);
        auto gl = g.geodesic_length(f);
        if (gl && *gl < j - i) return Tri::no;
      }
  }
  if (cw.degree() == 0) return Tri::yes;
  return Tri::unknown;
}

}  // namespace extword
