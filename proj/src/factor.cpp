#include "extword/word.hpp"

namespace extword {

namespace {

// Slice positions [b, g] (1-based, inclusive) out of a single block.
Word slice_block(const std::shared_ptr<const Alphabet>& ab, int dims, const Block& blk,
                 const Exponent& b, const Exponent& g) {
  Exponent blen = block_length(blk, dims);
  if (const auto* f = std::get_if<FiniteBlock>(&blk)) {
    long lb = *b.as_long(), lg = *g.as_long();
    std::vector<LetterId> ls(f->letters.begin() + (lb - 1), f->letters.begin() + lg);
    return make_finite(ab, dims, std::move(ls));
  }
  if (const auto* p = std::get_if<PowerBlock>(&blk)) {
    const Word& base = *p->base;
    FloorDiv f0 = floor_div(b - 1, base.length());
    FloorDiv f1 = floor_div(g - 1, base.length());
    Exponent o0 = f0.rem + 1, o1 = f1.rem + 1;
    if (f0.quot == f1.quot) return factor(base, o0, o1);
    Word head = factor(base, o0, base.length());
    Word tail = factor(base, Exponent::unit(dims), o1);
    Int mid = f1.quot - f0.quot - 1;
    Word middle = mid == 0 ? Word(ab, dims) : (mid == 1 ? base : make_power(base, mid));
    return raw_concat(raw_concat(head, middle), tail);
  }
  const auto& a = std::get<AtomBlock>(blk);
  if (g.degree() < a.level) return power_factor(*a.rho, b, g);  // inside the right ray
  if (b.degree() == a.level) {                                  // inside the left ray
    return power_factor_from_end(*a.lambda, blen - g, g - b + 1);
  }
  // spans both rays: a rotated atom
  Word rho2 = rotate(*a.rho, b - 1);
  Word lam2 = rotate(*a.lambda, g - blen);
  Exponent off = (g - b + 1) - Exponent::monomial(b.dims(), a.level);
  return make_atom(a.level, rho2, lam2, std::move(off));
}

}  // namespace

Word factor(const Word& w, const Exponent& from, const Exponent& to) {
  int dims = w.dims();
  Exponent one = Exponent::unit(dims);
  if (to + one == from) return Word(w.alphabet(), dims);  // empty factor
  if (!(from >= one && from <= to && to <= w.length()))
    throw invalid_input_error("factor bounds violation");
  Word out(w.alphabet(), dims);
  Exponent start(dims);
  for (const auto& blk : w.blocks()) {
    Exponent blen = block_length(blk, dims);
    Exponent end = start + blen;
    Exponent lo = from > start + one ? from : start + one;
    Exponent hi = to < end ? to : end;
    if (lo <= hi) out = raw_concat(out, slice_block(w.alphabet(), dims, blk, lo - start, hi - start));
    start = std::move(end);
    if (start >= to) break;
  }
  return out;
}

Word prefix(const Word& w, const Exponent& len) {
  return factor(w, Exponent::unit(w.dims()), len);
}

Word suffix(const Word& w, const Exponent& len) {
  return factor(w, w.length() - len + 1, w.length());
}

Word power_factor(const Word& p, const Exponent& from, const Exponent& to) {
  int dims = p.dims();
  if (p.empty()) throw invalid_input_error("power_factor of empty period");
  if (to + 1 == from) return Word(p.alphabet(), dims);
  if (to < from) throw invalid_input_error("power_factor bounds violation");
  FloorDiv fd = floor_div(from - 1, p.length());
  Exponent b = fd.rem + 1;
  Exponent g = to - fd.quot * p.length();
  // 1 <= b <= |p|, b <= g; cover with m copies of p
  FloorDiv fg = floor_div(g - 1, p.length());
  Int m = fg.quot + 1;
  if (m == 1) return factor(p, b, g);
  std::vector<Block> bs;
  bs.push_back(PowerBlock{std::make_shared<Word>(p), m});
  Word covering = Word::make(p.alphabet(), dims, std::move(bs));
  return factor(covering, b, g);
}

Word power_factor_from_end(const Word& p, const Exponent& dist, const Exponent& len) {
  int dims = p.dims();
  if (len.is_zero()) return Word(p.alphabet(), dims);
  // Work in a frame where some copy of p ends at position 0: positions
  // [-dist-len+1, -dist]; shift right by m|p| to make them positive.
  Exponent span = dist + len;
  FloorDiv fd = floor_div(span - 1, p.length());
  Int m = fd.quot + 1;
  Exponent shift = m * p.length();
  return power_factor(p, shift - span + 1, shift - dist);
}

Word rotate(const Word& w, const Exponent& delta) {
  if (w.empty()) {
    if (!delta.is_zero()) throw invalid_input_error("rotate of empty word");
    return w;
  }
  if (delta.degree() > w.degree()) throw invalid_input_error("rotate degree violation");
  FloorDiv fd = floor_div(delta, w.length());
  if (fd.rem.is_zero()) return w;
  return power_factor(w, fd.rem + 1, fd.rem + w.length());
}

}  // namespace extword
