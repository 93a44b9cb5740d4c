#include "extword/periods.hpp"
#include "extword/word.hpp"

namespace extword {

namespace {

// Result of a suffix/prefix agreement search between two words.
// !free: the longest common suffix has length exactly `len`.
// free:  the common-suffix lengths are `len` plus every exponent of degree
//        < scale (the comparison ran into two coinciding periodic zones);
//        no common suffix of larger degree exists.
struct Agreement {
  bool free = false;
  int scale = 0;
  Exponent len;
};

Agreement agree_suffix(const Word& u, const Word& v);

Word block_word(const std::shared_ptr<const Alphabet>& ab, int dims, const Block& b) {
  return Word::make(ab, dims, {b});
}

Word drop_suffix(const Word& w, const Exponent& l) {
  return factor(w, Exponent::unit(w.dims()), w.length() - l);
}

// Longest common suffix of two unequal atoms occupying the same positions
// (same level, same length). Compares the lambda bi-words on a Fine-Wilf
// window; if they coincide the rho bi-words must differ, so the agreement
// is exactly "everything below the atoms' level".
Agreement agree_atoms_same_len(const AtomBlock& x, const AtomBlock& y) {
  int p = x.level;
  Exponent w = x.lambda->length() + y.lambda->length();
  Word sx = power_factor_from_end(*x.lambda, Exponent(x.offset.dims()), w);
  Word sy = power_factor_from_end(*y.lambda, Exponent(y.offset.dims()), w);
  Agreement r = agree_suffix(sx, sy);
  if (!r.free && r.len < w) return r;
  Agreement out;
  out.free = true;
  out.scale = p;
  out.len = Exponent(x.offset.dims());
  return out;
}

Agreement agree_suffix(const Word& u, const Word& v) {
  int dims = u.dims();
  Exponent acc(dims);
  Exponent L = u.length() < v.length() ? u.length() : v.length();
  if (L.is_zero()) return Agreement{false, 0, acc};
  Word a = suffix(u, L);
  Word b = suffix(v, L);
  for (;;) {
    if (a.empty()) return Agreement{false, 0, acc};
    if (equal(a, b)) return Agreement{false, 0, acc + a.length()};
    const Block& A = a.blocks().back();
    const Block& B = b.blocks().back();
    Exponent la = block_length(A, dims), lb = block_length(B, dims);
    Exponent l = la < lb ? la : lb;
    Word wa = block_word(a.alphabet(), dims, A);
    Word wb = block_word(b.alphabet(), dims, B);
    Word sa = suffix(wa, l);
    Word sb = suffix(wb, l);
    if (equal(sa, sb)) {
      acc += l;
      a = drop_suffix(a, l);
      b = drop_suffix(b, l);
      continue;
    }
    if (l.degree() == 0) {
      auto xs = finite_letters(sa);
      auto ys = finite_letters(sb);
      long m = 0;
      while (m < static_cast<long>(xs.size()) &&
             xs[xs.size() - 1 - static_cast<size_t>(m)] == ys[ys.size() - 1 - static_cast<size_t>(m)])
        ++m;
      return Agreement{false, 0, acc + Exponent::monomial(dims, 0, Int(m))};
    }
    // Same-length infinite windows that differ. If both are single atoms we
    // drill into the rays; otherwise recurse on the windows (their trailing
    // block structure is finer, so this makes progress).
    Agreement r;
    if (sa.blocks().size() == 1 && sb.blocks().size() == 1 &&
        std::holds_alternative<AtomBlock>(sa.blocks()[0]) &&
        std::holds_alternative<AtomBlock>(sb.blocks()[0])) {
      r = agree_atoms_same_len(std::get<AtomBlock>(sa.blocks()[0]), std::get<AtomBlock>(sb.blocks()[0]));
    } else {
      r = agree_suffix(sa, sb);
    }
    r.len += acc;
    return r;
  }
}

Agreement agree_prefix(const Word& u, const Word& v) { return agree_suffix(involute(u), involute(v)); }

// Zero out the coefficients of degree < scale.
Exponent low_part(const Exponent& e, int scale) {
  std::vector<Int> cs;
  for (int i = 0; i < e.dims(); ++i) cs.push_back(i < scale ? e.coeff(i) : Int(0));
  return Exponent::from_coeffs(std::move(cs));
}

// --- finite-run folding -----------------------------------------------------

// Minimal-period greedy fold of an explicit letter run.
void fold_letters(const std::shared_ptr<const Alphabet>& ab, int dims, std::vector<LetterId> ls,
                  std::vector<Block>& out) {
  while (!ls.empty()) {
    long n = static_cast<long>(ls.size());
    // border array for the minimal period
    std::vector<long> fail(static_cast<size_t>(n) + 1, 0);
    fail[0] = -1;
    long k = -1;
    for (long i = 0; i < n; ++i) {
      while (k >= 0 && ls[static_cast<size_t>(k)] != ls[static_cast<size_t>(i)]) k = fail[static_cast<size_t>(k)];
      ++k;
      fail[static_cast<size_t>(i) + 1] = k;
    }
    long p = n - fail[static_cast<size_t>(n)];
    if (p <= n / 2) {
      long reps = n / p;
      std::vector<LetterId> base(ls.begin(), ls.begin() + p);
      out.push_back(PowerBlock{std::make_shared<Word>(make_finite(ab, dims, std::move(base))), Int(reps)});
      ls.erase(ls.begin(), ls.begin() + reps * p);
      continue;
    }
    out.push_back(FiniteBlock{std::move(ls)});
    break;
  }
}

// Fold a maximal run of finite material (Finite blocks and finite-based
// Power blocks). Below the expansion cap this is the exact minimal-period
// fold; above it, powers are reduced to primitive roots and identical
// neighbors merged (canonical uniqueness is only guaranteed below the cap).
void fold_run(const std::shared_ptr<const Alphabet>& ab, int dims, const std::vector<Block>& run,
              std::vector<Block>& out) {
  if (run.empty()) return;
  Exponent total(dims);
  for (const auto& b : run) total += block_length(b, dims);
  auto n = total.as_long();
  if (n && *n <= kExpandCap) {
    std::vector<LetterId> ls;
    ls.reserve(static_cast<size_t>(*n));
    for (const auto& b : run) {
      Word w = block_word(ab, dims, b);
      auto sub = finite_letters(w, kExpandCap);
      ls.insert(ls.end(), sub.begin(), sub.end());
    }
    fold_letters(ab, dims, std::move(ls), out);
    return;
  }
  std::vector<Block> items;
  for (const auto& b : run) {
    if (const auto* pw = std::get_if<PowerBlock>(&b)) {
      auto base_ls = finite_letters(*pw->base, kExpandCap);
      long p = static_cast<long>(base_ls.size());
      std::vector<Block> folded;
      fold_letters(ab, dims, base_ls, folded);
      if (folded.size() == 1 && std::holds_alternative<PowerBlock>(folded[0])) {
        const auto& inner = std::get<PowerBlock>(folded[0]);
        long q = *inner.base->length().as_long();
        items.push_back(PowerBlock{inner.base, pw->exp * Int(p / q)});
      } else {
        items.push_back(PowerBlock{pw->base, pw->exp});
      }
    } else {
      items.push_back(b);
    }
  }
  for (const auto& it : items) {
    if (!out.empty()) {
      auto* prev = std::get_if<PowerBlock>(&out.back());
      const auto* cur = std::get_if<PowerBlock>(&it);
      if (prev && cur && identical(*prev->base, *cur->base)) {
        prev->exp += cur->exp;
        continue;
      }
    }
    out.push_back(it);
  }
}

// --- atom-internal canonicalization ------------------------------------------

AtomBlock canonicalize_atom(const AtomBlock& a) {
  Word rho = canonical(*a.rho);
  Word lam = canonical(*a.lambda);
  int lvl = a.level;
  PeriodLattice lr = stab_lattice(rho);
  Exponent mu = *lr.row_of_degree(lvl - 1);
  if (mu != rho.length()) rho = canonical(power_factor(rho, Exponent::unit(rho.dims()), mu));
  PeriodLattice ll = stab_lattice(lam);
  Exponent nu = *ll.row_of_degree(lvl - 1);
  if (nu != lam.length())
    lam = canonical(power_factor_from_end(lam, Exponent(lam.dims()), nu));
  return AtomBlock{lvl, std::make_shared<Word>(std::move(rho)), std::make_shared<Word>(std::move(lam)),
                   a.offset};
}

// Length of the periodic description of w's right end at the given scale
// (the lambda of the last atom, descending until its level fits).
Exponent end_period_len(const Word& w, int scale) {
  if (w.empty()) return Exponent::unit(w.dims());
  const Block& b = w.blocks().back();
  if (const auto* a = std::get_if<AtomBlock>(&b)) {
    if (a->level - 1 <= scale) return a->lambda->length();
    return end_period_len(*a->lambda, scale);
  }
  return block_length(b, w.dims());
}

// Mirror: the periodic description of w's left end.
Exponent start_period_len(const Word& w, int scale) {
  if (w.empty()) return Exponent::unit(w.dims());
  const Block& b = w.blocks().front();
  if (const auto* a = std::get_if<AtomBlock>(&b)) {
    if (a->level - 1 <= scale) return a->rho->length();
    return start_period_len(*a->rho, scale);
  }
  return block_length(b, w.dims());
}

// --- the seam engine ----------------------------------------------------------

struct SeamEngine {
  std::shared_ptr<const Alphabet> ab;
  int dims;
  std::vector<Block> out;

  Word backward_ext(const AtomBlock& r, const Exponent& len) const {
    Exponent one = Exponent::unit(dims);
    return power_factor(*r.rho, one - len, Exponent(dims));
  }
  Word forward_ext(const AtomBlock& l, const Exponent& len) const {
    return power_factor(*l.lambda, Exponent::unit(dims), len);
  }

  static Word rotated(const Word& w, const Exponent& d) { return canonical(rotate(w, d)); }

  // Directional agreements at a T|R atom seam. "Free" on one side means
  // the seam can move arbitrarily far (below the scale) in that direction.
  struct SeamInfo {
    bool left_free = false, right_free = false;
    int left_scale = 0, right_scale = 0;
    Exponent left_len, right_len;
  };

  SeamInfo seam_info(const AtomBlock& l, const AtomBlock& r) const {
    SeamInfo s;
    Word lw = block_word(ab, dims, Block(l));
    Word rw = block_word(ab, dims, Block(r));
    // leftward: R's rho-power backward vs L's trailing content
    if (l.level >= r.level) {
      Exponent ep = end_period_len(lw, r.level - 1);
      Exponent wnd = r.rho->length() + r.rho->length() + ep + ep;
      Agreement ag = agree_suffix(backward_ext(r, wnd), suffix(lw, wnd));
      s.left_free = ag.free || ag.len == wnd;
      s.left_scale = ag.free ? ag.scale : r.level;
      s.left_len = ag.len;
    } else {
      Agreement ag = agree_suffix(backward_ext(r, lw.length()), lw);
      s.left_free = ag.free;  // full-length agreement is whole-block absorption
      s.left_scale = ag.scale;
      s.left_len = ag.len;
    }
    // rightward: L's lambda-power forward vs R's leading content
    if (r.level >= l.level) {
      Exponent ep = start_period_len(rw, l.level - 1);
      Exponent wnd = l.lambda->length() + l.lambda->length() + ep + ep;
      Agreement ag = agree_prefix(forward_ext(l, wnd), prefix(rw, wnd));
      s.right_free = ag.free || ag.len == wnd;
      s.right_scale = ag.free ? ag.scale : l.level;
      s.right_len = ag.len;
    } else {
      Agreement ag = agree_prefix(forward_ext(l, rw.length()), rw);
      s.right_free = ag.free;
      s.right_scale = ag.scale;
      s.right_len = ag.len;
    }
    return s;
  }

  // Canonical seam position between trailing atom l and incoming atom r:
  // bounded seams go to the end of their valid interval (leftmost, or
  // rightmost when only the left side is free); two-sided free seams fix
  // the gauge by zeroing the low coefficients of l's offset. Pushes the
  // resulting left-side blocks back, adjusts r, and returns true when r
  // survives (false: r was consumed entirely -- cannot happen here).
  void apply_seam(AtomBlock l, AtomBlock& r) {
    SeamInfo s = seam_info(l, r);
    Exponent delta(dims);
    if (s.left_free && s.right_free) {
      int scale = std::min(s.left_scale, s.right_scale);
      delta = s.left_len + low_part(l.offset - s.left_len, scale);
    } else if (s.left_free) {
      delta = -s.right_len;
    } else {
      delta = s.left_len;
    }
    if (delta.is_zero() || delta.positive()) {
      // seam moves left by delta: r grows (deg(delta) <= r.level-1 always)
      if (!delta.is_zero()) {
        r.offset += delta;
        r.rho = std::make_shared<Word>(rotated(*r.rho, -delta));
      }
      if (delta.degree() < l.level) {
        if (!delta.is_zero()) {
          l.offset -= delta;
          l.lambda = std::make_shared<Word>(rotated(*l.lambda, -delta));
        }
        out.push_back(std::move(l));
      } else {
        // the transfer consumes l's whole lambda zone: re-slice and let the
        // pieces re-enter so their seams renormalize
        Word lw = block_word(ab, dims, Block(l));
        Word keep = prefix(lw, lw.length() - delta);
        for (const auto& kb : keep.blocks()) push(kb);
      }
      return;
    }
    // seam moves right by m: l grows (deg(m) <= l.level-1 always)
    Exponent m = -delta;
    l.offset += m;
    l.lambda = std::make_shared<Word>(rotated(*l.lambda, m));
    out.push_back(std::move(l));
    if (m.degree() < r.level) {
      r.offset -= m;
      r.rho = std::make_shared<Word>(rotated(*r.rho, m));
      return;
    }
    // the transfer consumes r's whole rho zone: re-slice what remains of r
    Word rw = block_word(ab, dims, Block(r));
    Word rest = suffix(rw, rw.length() - m);
    r = AtomBlock{};  // consumed; remainder re-enters through the caller
    rest_after_seam = rest;
  }

  Word rest_after_seam;  // set when apply_seam dissolved the incoming atom

  // Incoming atom eats matching material leftward through `out`. Returns
  // false when r dissolved into a non-atom remainder (rest_after_seam).
  bool absorb_left(AtomBlock& r) {
    while (!out.empty()) {
      const Block& t = out.back();
      if (const auto* la = std::get_if<AtomBlock>(&t)) {
        AtomBlock l = *la;
        if (l.level >= r.level) {
          out.pop_back();
          apply_seam(std::move(l), r);
          return rest_after_seam.empty();
        }
        // lower-level trailing atom: whole-block absorption, else a seam
        Word tw = block_word(ab, dims, t);
        Agreement ag = agree_suffix(backward_ext(r, tw.length()), tw);
        bool full = (!ag.free && ag.len == tw.length()) ||
                    (ag.free && (tw.length() - ag.len).degree() < ag.scale);
        if (full) {
          out.pop_back();
          r.offset += tw.length();
          r.rho = std::make_shared<Word>(rotated(*r.rho, -tw.length()));
          continue;
        }
        out.pop_back();
        apply_seam(std::move(l), r);
        return rest_after_seam.empty();
      }
      // letter material: whole-block absorption or a bounded bite
      Word tw = block_word(ab, dims, t);
      Agreement ag = agree_suffix(backward_ext(r, tw.length()), tw);
      Exponent m = ag.len;  // free cannot arise against letter material
      if (m.is_zero()) return true;
      out.pop_back();
      r.offset += m;
      r.rho = std::make_shared<Word>(rotated(*r.rho, -m));
      if (m < tw.length()) {
        Word keep = prefix(tw, tw.length() - m);
        for (const auto& kb : keep.blocks()) push(kb);
        return true;
      }
    }
    return true;
  }

  // Trailing atom eats matching material from an incoming non-atom block
  // (always finite). Returns the unabsorbed remainder (possibly empty).
  Word absorb_right(Word blk) {
    while (!blk.empty() && !out.empty()) {
      auto* la = std::get_if<AtomBlock>(&out.back());
      if (!la) break;
      Agreement ag = agree_prefix(forward_ext(*la, blk.length()), blk);
      Exponent m = ag.len;
      if (m.is_zero()) break;
      la->offset += m;
      la->lambda = std::make_shared<Word>(rotated(*la->lambda, m));
      blk = m < blk.length() ? suffix(blk, blk.length() - m) : Word(ab, dims);
    }
    return blk;
  }

  void push(const Block& b) {
    if (std::holds_alternative<AtomBlock>(b)) {
      AtomBlock r = std::get<AtomBlock>(b);
      // a higher-level trailing atom swallows the incoming atom whole when
      // its lambda extension matches it exactly
      if (!out.empty()) {
        if (auto* la = std::get_if<AtomBlock>(&out.back()); la && la->level > r.level) {
          Word rw = block_word(ab, dims, Block(r));
          if (equal(forward_ext(*la, rw.length()), rw)) {
            la->offset += rw.length();
            la->lambda = std::make_shared<Word>(rotated(*la->lambda, rw.length()));
            return;
          }
        }
      }
      rest_after_seam = Word(ab, dims);
      if (absorb_left(r)) {
        out.push_back(std::move(r));
      } else {
        // the incoming atom dissolved into lower-level material; its pieces
        // re-enter the engine so their own seams get normalized
        Word rest = rest_after_seam;
        rest_after_seam = Word(ab, dims);
        for (const auto& rb : rest.blocks()) push(rb);
      }
      return;
    }
    Word rest = absorb_right(block_word(ab, dims, b));
    for (const auto& rb : rest.blocks()) out.push_back(rb);
  }
};

}  // namespace

Word canonical(const Word& w) {
  if (w.canonical_flag()) return w;
  int dims = w.dims();
  SeamEngine eng{w.alphabet(), dims, {}, Word(w.alphabet(), dims)};

  // normalize blocks and feed them through the seam engine
  std::vector<Block> todo(w.blocks().begin(), w.blocks().end());
  for (size_t i = 0; i < todo.size(); ++i) {
    const Block& b = todo[i];
    if (const auto* f = std::get_if<FiniteBlock>(&b)) {
      if (!f->letters.empty()) eng.push(b);
    } else if (const auto* p = std::get_if<PowerBlock>(&b)) {
      Word base = canonical(*p->base);
      if (base.empty() || p->exp == 0) continue;
      if (base.degree() == 0) {
        eng.push(PowerBlock{std::make_shared<Word>(std::move(base)), p->exp});
      } else {
        // word-based powers are expanded while canonicalizing
        if (p->exp > kExpandCap) throw cap_exceeded_error("power of an infinite word exceeds expansion cap");
        long reps = p->exp.get_si();
        std::vector<Block> expand;
        for (long j = 0; j < reps; ++j)
          for (const auto& sub : base.blocks()) expand.push_back(sub);
        todo.insert(todo.begin() + static_cast<long>(i) + 1, expand.begin(), expand.end());
      }
    } else {
      eng.push(canonicalize_atom(std::get<AtomBlock>(b)));
    }
  }

  // fold maximal finite runs
  std::vector<Block> folded;
  std::vector<Block> run;
  auto flush = [&] {
    fold_run(eng.ab, dims, run, folded);
    run.clear();
  };
  for (const auto& b : eng.out) {
    if (std::holds_alternative<AtomBlock>(b)) {
      flush();
      folded.push_back(b);
    } else {
      run.push_back(b);
    }
  }
  flush();
  return mark_canonical(Word::make(w.alphabet(), dims, std::move(folded)));
}

AgreementResult agree_suffix_words(const Word& u, const Word& v) {
  Agreement a = agree_suffix(u, v);
  return AgreementResult{a.free, a.scale, a.len};
}

AgreementResult agree_prefix_words(const Word& u, const Word& v) {
  Agreement a = agree_prefix(u, v);
  return AgreementResult{a.free, a.scale, a.len};
}

bool identical(const Word& u, const Word& v) {
  if (u.blocks().size() != v.blocks().size()) return false;
  if (u.length() != v.length()) return false;
  for (size_t i = 0; i < u.blocks().size(); ++i) {
    const Block& a = u.blocks()[i];
    const Block& b = v.blocks()[i];
    if (a.index() != b.index()) return false;
    if (const auto* fa = std::get_if<FiniteBlock>(&a)) {
      if (fa->letters != std::get<FiniteBlock>(b).letters) return false;
    } else if (const auto* pa = std::get_if<PowerBlock>(&a)) {
      const auto& pb = std::get<PowerBlock>(b);
      if (pa->exp != pb.exp || !identical(*pa->base, *pb.base)) return false;
    } else {
      const auto& aa = std::get<AtomBlock>(a);
      const auto& ab2 = std::get<AtomBlock>(b);
      if (aa.level != ab2.level || aa.offset != ab2.offset) return false;
      if (!identical(*aa.rho, *ab2.rho) || !identical(*aa.lambda, *ab2.lambda)) return false;
    }
  }
  return true;
}

bool equal(const Word& u, const Word& v) {
  if (u.dims() != v.dims()) throw invalid_input_error("dimension mismatch in equal");
  if (u.length() != v.length()) return false;
  return identical(canonical(u), canonical(v));
}

Word concat(const Word& u, const Word& v) { return canonical(raw_concat(u, v)); }

}  // namespace extword
