#include "extword/extension.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <cstdlib>
#include <iostream>

#include "extword/json_io.hpp"

namespace extword {

// --- GeneratorTable -----------------------------------------------------------

int GeneratorTable::find(const Word& canon) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (identical(entries[i].word, canon)) return static_cast<int>(i);
  return -1;
}

std::vector<int> GeneratorTable::involute_fact(const std::vector<int>& gens) const {
  std::vector<int> out(gens.rbegin(), gens.rend());
  for (auto& g : out) g = inverse(g);
  return out;
}

Word GeneratorTable::word_of_fact(const std::vector<int>& gens) const {
  Word w(ab, dims);
  for (int g : gens) w = raw_concat(w, word_of(g));
  return canonical(w);
}

std::vector<int> GeneratorTable::letters_to_fact(const std::vector<LetterId>& ls) const {
  std::vector<int> out;
  out.reserve(ls.size());
  for (LetterId l : ls) out.push_back(letter_gen(l));
  return out;
}

namespace {
std::optional<std::vector<int>> factor_over(const std::vector<Word>& ordered,
                                            const std::vector<int>& ids, const Word& rem,
                                            long* budget, int depth = 0);
}

std::optional<std::vector<int>> GeneratorTable::factorize(const Word& w) const {
  std::vector<int> ids(entries.size());
  for (size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<int>(k);
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
    const Word& wx = entries[static_cast<size_t>(x)].word;
    const Word& wy = entries[static_cast<size_t>(y)].word;
    if (wx.degree() != wy.degree()) return wx.degree() > wy.degree();
    return wx.length() > wy.length();
  });
  std::vector<Word> sorted;
  for (int id : ids) sorted.push_back(entries[static_cast<size_t>(id)].word);
  long budget = 4000;
  return factor_over(sorted, ids, canonical(w), &budget);
}

// --- preprocessing -------------------------------------------------------------

namespace {

struct CoreSplit {
  Word x, u, y;  // g = x u y with deg(xy) < deg(u) = deg(g)
};

CoreSplit core_of(const Word& g) {
  int dims = g.dims();
  int d = g.degree();
  const auto& bs = g.blocks();
  size_t first = bs.size(), last = 0;
  for (size_t i = 0; i < bs.size(); ++i)
    if (block_level(bs[i]) == d) {
      if (first == bs.size()) first = i;
      last = i;
    }
  std::vector<Block> xb(bs.begin(), bs.begin() + static_cast<long>(first));
  std::vector<Block> ub(bs.begin() + static_cast<long>(first), bs.begin() + static_cast<long>(last) + 1);
  std::vector<Block> yb(bs.begin() + static_cast<long>(last) + 1, bs.end());
  return CoreSplit{Word::make(g.alphabet(), dims, std::move(xb)),
                   Word::make(g.alphabet(), dims, std::move(ub)),
                   Word::make(g.alphabet(), dims, std::move(yb))};
}

const AtomBlock* first_atom_of_level(const Word& w, int d) {
  for (const auto& b : w.blocks())
    if (const auto* a = std::get_if<AtomBlock>(&b); a && a->level == d) return a;
  return nullptr;
}
const AtomBlock* last_atom_of_level(const Word& w, int d) {
  for (auto it = w.blocks().rbegin(); it != w.blocks().rend(); ++it)
    if (const auto* a = std::get_if<AtomBlock>(&*it); a && a->level == d) return a;
  return nullptr;
}

// Common full-degree factor of g and h (rule 4/5 overlap): candidate trims
// derived from the atom offsets at the core ends. Returns (u, xg, yg, xh, yh)
// with g = xg u yg, h = xh u yh when found.
struct Overlap {
  Word u, xg, yg, xh, yh;
};

std::optional<Overlap> overlap_witness(const Word& g, const Word& h) {
  int d = g.degree();
  if (d < 1 || h.degree() != d) return std::nullopt;
  CoreSplit cg = core_of(g), ch = core_of(h);
  const AtomBlock *fg = first_atom_of_level(cg.u, d), *fh = first_atom_of_level(ch.u, d);
  if (!fg || !fh) return std::nullopt;
  Exponent zero(g.dims());
  Exponent one = Exponent::unit(g.dims());
  auto nonneg = [&](const Exponent& e) { return e.is_zero() || e.positive(); };
  // candidate left trims: align the offset difference structurally, then a
  // small integer phase jitter on either side
  std::vector<std::pair<Exponent, Exponent>> bases = {{zero, zero}};
  Exponent dl = fg->offset - fh->offset;
  if (!dl.is_zero()) {
    if (nonneg(dl))
      bases.push_back({dl, zero});
    else
      bases.push_back({zero, -dl});
  }
  constexpr long kPhaseCap = 24;
  for (const auto& base : bases) {
    for (long j = 0; j <= kPhaseCap; ++j) {
      for (int side = 0; side < (j == 0 ? 1 : 2); ++side) {
        Exponent ag = base.first + (side == 0 ? Exponent::monomial(g.dims(), 0, j) : zero);
        Exponent ah = base.second + (side == 1 ? Exponent::monomial(g.dims(), 0, j) : zero);
        if (ag >= cg.u.length() || ah >= ch.u.length()) continue;
        // the right trims are forced by the lengths
        Exponent diff = (ch.u.length() - ah) - (cg.u.length() - ag);
        Exponent bg = nonneg(diff) ? zero : -diff;
        Exponent bh = nonneg(diff) ? diff : zero;
        if (ag + bg >= cg.u.length() || ah + bh >= ch.u.length()) continue;
        Word ug = factor(cg.u, one + ag, cg.u.length() - bg);
        Word uh = factor(ch.u, one + ah, ch.u.length() - bh);
        if (ug.degree() != d || uh.degree() != d) continue;
        if (!equal(ug, uh)) continue;
        Overlap o;
        o.u = canonical(ug);
        o.xg = canonical(raw_concat(cg.x, factor(cg.u, one, ag)));
        o.yg = canonical(raw_concat(factor(cg.u, cg.u.length() - bg + 1, cg.u.length()), cg.y));
        o.xh = canonical(raw_concat(ch.x, factor(ch.u, one, ah)));
        o.yh = canonical(raw_concat(factor(ch.u, ch.u.length() - bh + 1, ch.u.length()), ch.y));
        return o;
      }
    }
  }
  return std::nullopt;
}

// u = p q with q = involute(q), deg(p) < deg(q) = deg(u)  (rule 5)
std::optional<Exponent> symmetric_split(const Word& u) {
  Exponent one = Exponent::unit(u.dims());
  for (long c = 0; c <= 8; ++c) {
    Exponent alpha = Exponent::monomial(u.dims(), 0, c);
    if (alpha >= u.length()) break;
    Word q = factor(u, alpha + 1, u.length());
    if (q.degree() != u.degree()) break;
    if (equal(q, involute(q))) return alpha;
  }
  (void)one;
  return std::nullopt;
}

struct PreState {
  BaseGroupPtr group;
  std::shared_ptr<const Alphabet> ab;
  int dims;
  std::vector<Word> gens;  // canonical

  int find(const Word& w) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (identical(gens[i], w)) return static_cast<int>(i);
    return -1;
  }
  bool add(const Word& w) {
    Word c = canonical(w);
    if (c.empty()) return false;
    // finite words of length >= 2 are products of letters already present
    if (c.degree() == 0 && c.length() > Exponent::unit(dims)) return false;
    if (find(c) >= 0) return false;
    gens.push_back(std::move(c));
    return true;
  }
  void remove(const Word& w) {
    int i = find(canonical(w));
    if (i >= 0) gens.erase(gens.begin() + i);
  }
};

std::optional<std::vector<int>> factor_over(const std::vector<Word>& ordered,
                                            const std::vector<int>& ids, const Word& rem,
                                            long* budget, int depth) {
  if (rem.empty()) return std::vector<int>{};
  if (--*budget < 0 || depth > 128) return std::nullopt;
  LetterId head = first_letter(rem);
  for (size_t k = 0; k < ordered.size(); ++k) {
    const Word& g = ordered[k];
    if (g.length() > rem.length()) continue;
    if (first_letter(g) != head) continue;
    if (!equal(prefix(rem, g.length()), g)) continue;
    auto rest = factor_over(ordered, ids, factor(rem, g.length() + 1, rem.length()), budget, depth + 1);
    if (rest) {
      rest->insert(rest->begin(), ids[k]);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace

GeneratorTable preprocess(const std::vector<Word>& delta, const BaseGroupPtr& group,
                          const Caps& caps) {
  if (delta.empty()) throw invalid_input_error("preprocess: empty generating set");
  const auto& ab = delta.front().alphabet();
  int dims = delta.front().dims();
  if (ab != group->alphabet()) throw invalid_input_error("generators use a foreign alphabet");

  PreState st{group, ab, dims, {}};
  // rule 1: Delta := (Delta u Gamma) \ {1}
  for (LetterId l = 0; l < ab->size(); ++l) st.add(make_finite(ab, dims, {l}));
  for (const auto& d : delta) {
    if (is_g_reduced(d, *group) == Tri::no)
      throw invalid_input_error("preprocess: generator is not G-reduced: " + word_str(d));
    st.add(d);
  }
  if (group->is_finite_group()) {
    // no infinite G-reduced words exist; Ext(A,G) = G and the table is just
    // the letters
    for (const auto& g : st.gens)
      if (g.degree() > 0)
        throw invalid_input_error("infinite generator over a finite base group");
  }

  const bool dbg = std::getenv("EXTWORD_PREPROCESS_DEBUG") != nullptr;
  for (int round = 0;; ++round) {
    if (dbg) {
      std::cerr << "round " << round << ":";
      for (const auto& w : st.gens) std::cerr << " {" << word_str(w) << "}";
      std::cerr << "\n";
    }
    if (round > caps.preprocess_rounds)
      throw cap_exceeded_error("preprocessing round cap exceeded (rule 6 trigger enumeration is "
                               "atom-aligned; see table docs)");
    bool changed = false;

    // rule 2: involution closure
    for (size_t i = 0; i < st.gens.size(); ++i)
      if (st.add(involute(st.gens[i]))) changed = true;

    // rule 3: split generators whose leading length coefficient is >= 2;
    // finite generators split all the way down to letters
    for (size_t i = 0; i < st.gens.size() && !changed; ++i) {
      Word g = st.gens[i];
      int d = g.degree();
      if (d < 1 || g.length().coeff(d) < 2) continue;
      // split right after the first top-level atom
      Exponent cut(dims);
      for (const auto& b : g.blocks()) {
        cut += block_length(b, dims);
        if (block_level(b) == d) break;
      }
      Word f = factor(g, Exponent::unit(dims), cut);
      Word h = factor(g, cut + 1, g.length());
      st.remove(g);
      st.remove(involute(g));
      st.add(f);
      st.add(h);
      changed = true;
    }
    if (changed) continue;

    // rule 4: merge distinct generators sharing a full-degree core
    for (size_t i = 0; i < st.gens.size() && !changed; ++i)
      for (size_t j = i + 1; j < st.gens.size() && !changed; ++j) {
        Word g = st.gens[i], h = st.gens[j];  // copies: the set mutates below
        if (g.degree() < 1 || g.degree() != h.degree()) continue;
        if (equal(g, h) || equal(g, involute(h))) continue;
        auto o = overlap_witness(g, h);
        if (!o) continue;
        if (dbg)
          std::cerr << "  rule4: g={" << word_str(g) << "} h={" << word_str(h) << "} u={"
                    << word_str(o->u) << "}\n";
        st.remove(g);
        st.remove(involute(g));
        st.remove(h);
        st.remove(involute(h));
        st.add(o->u);
        for (const Word* w : {&o->xg, &o->yg, &o->xh, &o->yh})
          if (!w->empty()) st.add(*w);
        changed = true;
      }
    if (changed) continue;

    // rule 5: extract the symmetric core when g overlaps its involute
    for (size_t i = 0; i < st.gens.size() && !changed; ++i) {
      Word g = st.gens[i];
      if (g.degree() < 1) continue;
      Word gi = involute(g);
      if (equal(g, gi)) continue;
      auto o = overlap_witness(g, gi);
      if (!o) continue;
      auto alpha = symmetric_split(o->u);
      if (!alpha) continue;  // bounded search missed; leave g alone
      Word p = prefix(o->u, *alpha);
      Word q = factor(o->u, *alpha + 1, o->u.length());
      st.remove(g);
      st.remove(gi);
      st.add(q);
      for (const Word* w : {&o->xg, &o->yg, &o->xh, &o->yh, &p})
        if (!w->empty()) st.add(*w);
      changed = true;
    }
    if (changed) continue;

    // rule 6: split off a factor with a proper period that g lacks
    for (size_t i = 0; i < st.gens.size() && !changed; ++i) {
      Word g = st.gens[i];
      int d = g.degree();
      if (d < 1) continue;
      PeriodLattice pg = proper_period_lattice(g);
      CoreSplit cs = core_of(g);
      std::vector<std::pair<Exponent, Exponent>> trims = {{Exponent(dims), Exponent(dims)}};
      if (const AtomBlock* fa = first_atom_of_level(cs.u, d)) {
        Exponent res = stab_lattice(*fa->rho).reduce(fa->offset);
        Exponent delta = fa->offset - res;
        if (delta.positive()) trims.push_back({delta, Exponent(dims)});
      }
      for (const auto& [a, b] : trims) {
        if (a.is_zero() && b.is_zero() && cs.x.empty() && cs.y.empty()) continue;
        Exponent one = Exponent::unit(dims);
        if (a + b >= cs.u.length()) continue;
        Word u = factor(cs.u, one + a, cs.u.length() - b);
        if (u.degree() != d) continue;
        PeriodLattice pu = proper_period_lattice(u);
        bool grows = false;
        for (const auto& row : pu.rows())
          if (!pg.member(row)) grows = true;
        if (!grows) continue;
        Word x = canonical(raw_concat(cs.x, factor(cs.u, one, a)));
        Word y = canonical(raw_concat(factor(cs.u, cs.u.length() - b + 1, cs.u.length()), cs.y));
        st.remove(g);
        st.remove(involute(g));
        st.add(u);
        if (!x.empty()) st.add(x);
        if (!y.empty()) st.add(y);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // rule 7: boundary words must be expressible over the table
    for (size_t i = 0; i < st.gens.size() && !changed; ++i) {
      const Word& g = st.gens[i];
      if (g.degree() < 1) continue;
      PeriodLattice L = proper_period_lattice(g);
      for (const auto& beta : L.rows()) {
        for (const Word& side : {prefix(g, beta), suffix(g, beta)}) {
          Word c = canonical(side);
          if (c.empty()) continue;
          std::vector<int> ids(st.gens.size());
          for (size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<int>(k);
          std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
            const Word& wx = st.gens[static_cast<size_t>(x)];
            const Word& wy = st.gens[static_cast<size_t>(y)];
            if (wx.degree() != wy.degree()) return wx.degree() > wy.degree();
            return wx.length() > wy.length();
          });
          std::vector<Word> sorted;
          for (int id : ids) sorted.push_back(st.gens[static_cast<size_t>(id)]);
          long budget = 2000;
          if (!factor_over(sorted, ids, c, &budget)) {
            if (st.add(c)) changed = true;
          }
        }
      }
    }
    if (changed) continue;
    break;
  }

  // assemble the table with a deterministic generator order
  std::vector<Word> ordered = st.gens;
  std::stable_sort(ordered.begin(), ordered.end(), [](const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.length() != b.length()) return a.length() < b.length();
    return word_str(a) < word_str(b);
  });

  GeneratorTable T;
  T.group = group;
  T.ab = ab;
  T.dims = dims;
  for (const auto& g : ordered) T.entries.push_back(TableEntry{g, -1, {}, {}, {}});
  for (size_t i = 0; i < T.entries.size(); ++i) {
    int inv = T.find(canonical(involute(T.entries[i].word)));
    if (inv < 0) throw invalid_input_error("table is not involution-closed");
    T.entries[i].inverse = inv;
  }
  T.letter_gen_.assign(static_cast<size_t>(ab->size()), -1);
  for (LetterId l = 0; l < ab->size(); ++l) {
    int id = T.find(make_finite(ab, dims, {l}));
    if (id < 0) throw invalid_input_error("letter missing from table");
    T.letter_gen_[static_cast<size_t>(l)] = id;
  }
  // factorization helper over the final table
  std::vector<int> ids(T.entries.size());
  for (size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<int>(k);
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
    const Word& wx = T.entries[static_cast<size_t>(x)].word;
    const Word& wy = T.entries[static_cast<size_t>(y)].word;
    if (wx.degree() != wy.degree()) return wx.degree() > wy.degree();
    return wx.length() > wy.length();
  });
  std::vector<Word> sorted;
  for (int id : ids) sorted.push_back(T.entries[static_cast<size_t>(id)].word);
  for (auto& e : T.entries) {
    if (e.word.degree() < 1) continue;
    PeriodLattice L = proper_period_lattice(e.word);
    for (const auto& beta : L.rows()) {
      e.basis.push_back(beta);
      long budget = 2000;
      auto pf = factor_over(sorted, ids, canonical(prefix(e.word, beta)), &budget);
      budget = 20000;
      auto sf = factor_over(sorted, ids, canonical(suffix(e.word, beta)), &budget);
      if (!pf || !sf)
        throw cap_exceeded_error("boundary word not expressible over the table");
      e.prefix_fact.push_back(*pf);
      e.suffix_fact.push_back(*sf);
    }
  }
  for (const auto& d : delta) {
    auto f = T.factorize(d);
    if (!f) throw cap_exceeded_error("input is not expressible over the preprocessed table");
    T.delta_fact.push_back(*f);
  }
  return T;
}

// --- Part II: reduced degree ---------------------------------------------------

namespace {

struct Ctx {
  const GeneratorTable& T;
  Caps caps;
  long steps = 0;
  void tick() {
    if (++steps > caps.reduction_steps) throw cap_exceeded_error("reduction step cap exceeded");
  }
};

int max_degree(const Ctx& c, const std::vector<int>& gens) {
  int d = kBottomDegree;
  for (int g : gens) d = std::max(d, c.T.degree_of(g));
  return d;
}

std::vector<int> repeat_fact(const std::vector<int>& f, long k) {
  std::vector<int> out;
  for (long i = 0; i < k; ++i) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<int> rdeg_rec(Ctx& ctx, std::vector<int> gens, int depth);

// Attempt the Part II action for the candidate pair (i, j). On success
// returns the replacement for the whole word.
std::optional<std::vector<int>> try_candidate(Ctx& ctx, const std::vector<int>& gens, size_t i,
                                              size_t j, int depth) {
  const GeneratorTable& T = ctx.T;
  std::vector<int> middle(gens.begin() + static_cast<long>(i) + 1, gens.begin() + static_cast<long>(j));
  std::vector<int> h = rdeg_rec(ctx, middle, depth - 1);
  int e = max_degree(ctx, h);
  const TableEntry& E = T.entries[static_cast<size_t>(gens[i])];

  if (e <= 0) {
    auto hl = finite_letters(T.word_of_fact(h));
    if (T.group->is_trivial(hl)) {
      std::vector<int> out(gens.begin(), gens.begin() + static_cast<long>(i));
      out.insert(out.end(), gens.begin() + static_cast<long>(j) + 1, gens.end());
      return out;
    }
    if (E.basis.empty() || E.basis.front().degree() != 0) return std::nullopt;
    auto rl = finite_letters(T.word_of_fact(E.suffix_fact.front()));
    auto m = T.group->cyclic_member(T.group->involute_letters(hl), rl);
    if (!m || *m == 0) return std::nullopt;
    long k = std::abs(m->get_si());
    std::vector<int> P = repeat_fact(E.prefix_fact.front(), k);
    std::vector<int> insert = (*m > 0) ? T.involute_fact(P) : P;
    std::vector<int> out(gens.begin(), gens.begin() + static_cast<long>(i));
    out.insert(out.end(), insert.begin(), insert.end());
    out.insert(out.end(), gens.begin() + static_cast<long>(j) + 1, gens.end());
    return out;
  }

  // infinite middle: transport r^m through g_i and retry at lower degree
  size_t row = E.basis.size();
  for (size_t k = 0; k < E.basis.size(); ++k)
    if (E.basis[k].degree() == e) row = k;
  if (row == E.basis.size()) return std::nullopt;
  Word hw = T.word_of_fact(h);
  long mcap = hw.length().coeff(e).fits_slong_p() ? std::labs(hw.length().coeff(e).get_si()) : 8;
  for (long step = 0; step <= 2 * mcap; ++step) {
    long m = (step + 1) / 2 * ((step % 2) ? 1 : -1);  // 0, 1, -1, 2, -2, ...
    ctx.tick();
    std::vector<int> cand =
        (m >= 0) ? repeat_fact(E.suffix_fact[row], m) : repeat_fact(T.involute_fact(E.suffix_fact[row]), -m);
    cand.insert(cand.end(), h.begin(), h.end());
    std::vector<int> f = rdeg_rec(ctx, cand, depth - 1);
    if (max_degree(ctx, f) < e) {
      std::vector<int> insert =
          (m >= 0) ? repeat_fact(T.involute_fact(E.prefix_fact[row]), m) : repeat_fact(E.prefix_fact[row], -m);
      std::vector<int> out(gens.begin(), gens.begin() + static_cast<long>(i));
      out.insert(out.end(), insert.begin(), insert.end());
      out.push_back(gens[i]);
      out.insert(out.end(), f.begin(), f.end());
      out.insert(out.end(), gens.begin() + static_cast<long>(j), gens.end());
      return out;
    }
  }
  return std::nullopt;
}

std::vector<int> rdeg_rec(Ctx& ctx, std::vector<int> gens, int depth) {
  if (depth < 0) throw cap_exceeded_error("reduction recursion depth exceeded");
  for (;;) {
    ctx.tick();
    int d = max_degree(ctx, gens);
    if (d <= 0) return gens;
    std::vector<size_t> tops;
    for (size_t p = 0; p < gens.size(); ++p)
      if (ctx.T.degree_of(gens[p]) == d) tops.push_back(p);
    bool progressed = false;
    for (size_t k = 0; k + 1 < tops.size() && !progressed; ++k) {
      size_t i = tops[k], j = tops[k + 1];
      if (ctx.T.inverse(gens[i]) != gens[j]) continue;
      auto next = try_candidate(ctx, gens, i, j, depth);
      if (next) {
        gens = std::move(*next);
        progressed = true;
      }
    }
    if (!progressed) return gens;
  }
}

}  // namespace

ReducedDegree reduced_degree(const GeneratorTable& table, const std::vector<int>& gens,
                             const Caps& caps) {
  Ctx ctx{table, caps, 0};
  if (ctx.caps.recursion_depth == 0) ctx.caps.recursion_depth = table.dims + 1;
  std::vector<int> out = rdeg_rec(ctx, gens, ctx.caps.recursion_depth);
  ReducedDegree rd;
  int d = max_degree(ctx, out);
  if (d <= 0) {
    auto nf = table.group->normal_form(finite_letters(table.word_of_fact(out)));
    rd.degree = nf.empty() ? kBottomDegree : 0;
    rd.witness = make_finite(table.ab, table.dims, nf);
    rd.witness_fact = table.letters_to_fact(nf);
  } else {
    rd.degree = d;
    rd.witness = table.word_of_fact(out);
    rd.witness_fact = std::move(out);
  }
  return rd;
}

bool ext_is_trivial(const GeneratorTable& table, const std::vector<int>& gens, const Caps& caps) {
  return reduced_degree(table, gens, caps).degree == kBottomDegree;
}

bool ext_equal(const GeneratorTable& table, const std::vector<int>& x, const std::vector<int>& y,
               const Caps& caps) {
  std::vector<int> prod = x;
  auto iy = table.involute_fact(y);
  prod.insert(prod.end(), iy.begin(), iy.end());
  return ext_is_trivial(table, prod, caps);
}

std::optional<long> order_probe(const GeneratorTable& table, const std::vector<int>& x, long max_n,
                                const Caps& caps) {
  std::vector<int> acc;
  for (long n = 1; n <= max_n; ++n) {
    acc.insert(acc.end(), x.begin(), x.end());
    if (ext_is_trivial(table, acc, caps)) return n;
  }
  return std::nullopt;
}

bool membership_via_commutation(const std::vector<LetterId>& u, const std::vector<LetterId>& v,
                                const BaseGroupPtr& group, const Caps& caps) {
  int dims = 2;
  const auto& ab = group->alphabet();
  auto rv = group->normal_form(v);
  if (rv.empty()) throw invalid_input_error("membership_via_commutation: v is trivial");
  Word vw = make_finite(ab, dims, rv);
  if (group->is_free()) {
    if (!is_cyclically_reduced(vw))
      throw invalid_input_error("membership_via_commutation: v must be cyclically reduced");
    // primitivity: v must not occur properly inside vv, nor its involute
    auto ls = rv;
    long n = static_cast<long>(ls.size());
    for (long s = 1; s < n; ++s) {
      bool occ = true;
      for (long t = 0; t < n && occ; ++t) occ = ls[static_cast<size_t>((s + t) % n)] == ls[static_cast<size_t>(t)];
      if (occ) throw invalid_input_error("membership_via_commutation: v must be primitive");
    }
  }
  Word V = make_atom(1, vw, vw, Exponent(dims));
  GeneratorTable T = preprocess({V}, group, caps);
  int vid = T.find(canonical(V));
  if (vid < 0) {
    // preprocessing may have normalized V's offset; locate the unique
    // degree-1 generator instead
    for (size_t i = 0; i < T.entries.size(); ++i)
      if (T.entries[i].word.degree() == 1) vid = static_cast<int>(i);
  }
  if (vid < 0) throw invalid_input_error("stable ray pair missing from table");
  std::vector<int> uv = T.letters_to_fact(u);
  uv.push_back(vid);
  std::vector<int> vu = {vid};
  auto uf = T.letters_to_fact(u);
  vu.insert(vu.end(), uf.begin(), uf.end());
  return ext_equal(T, uv, vu, caps);
}

std::optional<Word> symmetric_witness(const GeneratorTable& table, const std::vector<int>& x,
                                      int peel_cap, const Caps& caps) {
  ReducedDegree rd = reduced_degree(table, x, caps);
  Word w = rd.witness;
  for (int it = 0; it < peel_cap; ++it) {
    if (w.empty()) return std::nullopt;  // trivial element, not a torsion witness
    if (equal(w, involute(w))) return canonical(w);
    // peel y = ~z y' z one letter at a time
    if (w.length() < Exponent::monomial(w.dims(), 0, 2)) return std::nullopt;
    LetterId a = first_letter(w), b = last_letter(w);
    if (table.ab->inverse(a) != b) return std::nullopt;
    Word inner = factor(w, Exponent::monomial(w.dims(), 0, 2), w.length() - 1);
    w = canonical(inner);
  }
  return std::nullopt;
}

std::optional<Redex> find_big_redex(const GeneratorTable& table, const std::vector<int>& gens,
                                    const Caps& caps) {
  Ctx ctx{table, caps, 0};
  if (ctx.caps.recursion_depth == 0) ctx.caps.recursion_depth = table.dims + 1;
  int d = max_degree(ctx, gens);
  if (d <= 0) return std::nullopt;
  std::vector<size_t> tops;
  for (size_t p = 0; p < gens.size(); ++p)
    if (table.degree_of(gens[p]) == d) tops.push_back(p);
  for (size_t k = 0; k + 1 < tops.size(); ++k) {
    size_t i = tops[k], j = tops[k + 1];
    if (table.inverse(gens[i]) != gens[j]) continue;
    if (!try_candidate(ctx, gens, i, j, ctx.caps.recursion_depth)) continue;
    Redex r;
    r.i = i;
    r.j = j;
    r.u = table.word_of(gens[i]);
    std::vector<int> middle(gens.begin() + static_cast<long>(i) + 1, gens.begin() + static_cast<long>(j));
    r.v = table.word_of_fact(middle);
    r.level = d;
    return r;
  }
  return std::nullopt;
}

TraceResult random_reduction_trace(const GeneratorTable& table, const std::vector<int>& gens_in,
                                   uint64_t seed, const Caps& caps, std::vector<std::string>* log) {
  Ctx ctx{table, caps, 0};
  if (ctx.caps.recursion_depth == 0) ctx.caps.recursion_depth = table.dims + 1;
  std::mt19937_64 rng(seed);
  std::vector<int> gens = gens_in;
  long steps = 0;

  struct Move {
    bool big;
    size_t l, r;
    std::vector<int> replacement;
  };

  for (;;) {
    if (steps > ctx.caps.reduction_steps) throw cap_exceeded_error("trace step cap exceeded");
    std::vector<Move> moves;
    // S0 moves: normalize maximal finite runs that are not already normal
    size_t p = 0;
    while (p < gens.size()) {
      if (table.degree_of(gens[p]) > 0) {
        ++p;
        continue;
      }
      size_t q = p;
      std::vector<LetterId> ls;
      while (q < gens.size() && table.degree_of(gens[q]) <= 0) {
        auto sub = finite_letters(table.word_of(gens[q]));
        ls.insert(ls.end(), sub.begin(), sub.end());
        ++q;
      }
      auto nf = table.group->normal_form(ls);
      if (nf != ls) moves.push_back(Move{false, p, q, table.letters_to_fact(nf)});
      p = q;
    }
    // big moves: verified candidates at the current top degree
    int d = max_degree(ctx, gens);
    if (d > 0) {
      std::vector<size_t> tops;
      for (size_t t = 0; t < gens.size(); ++t)
        if (table.degree_of(gens[t]) == d) tops.push_back(t);
      for (size_t k = 0; k + 1 < tops.size(); ++k) {
        size_t i = tops[k], j = tops[k + 1];
        if (table.inverse(gens[i]) != gens[j]) continue;
        auto next = try_candidate(ctx, gens, i, j, ctx.caps.recursion_depth);
        if (next) moves.push_back(Move{true, i, j, std::move(*next)});
      }
    }
    if (moves.empty()) break;
    const Move& mv = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
    if (mv.big) {
      gens = mv.replacement;
    } else {
      std::vector<int> out(gens.begin(), gens.begin() + static_cast<long>(mv.l));
      out.insert(out.end(), mv.replacement.begin(), mv.replacement.end());
      out.insert(out.end(), gens.begin() + static_cast<long>(mv.r), gens.end());
      gens = std::move(out);
    }
    ++steps;
    if (log) {
      std::ostringstream os;
      os << "{\"step\":" << steps << ",\"rule\":\"" << (mv.big ? "BIG" : "S0") << "\",\"window\":["
         << mv.l << "," << mv.r << "],\"degree\":" << max_degree(ctx, gens) << "}";
      log->push_back(os.str());
    }
  }

  TraceResult res;
  res.steps = steps;
  int d = max_degree(ctx, gens);
  if (d <= 0) {
    auto nf = table.group->normal_form(finite_letters(table.word_of_fact(gens)));
    res.degree = nf.empty() ? kBottomDegree : 0;
    res.word = make_finite(table.ab, table.dims, nf);
  } else {
    res.degree = d;
    res.word = table.word_of_fact(gens);
  }
  return res;
}

// --- table JSON -----------------------------------------------------------------

std::string table_to_json(const GeneratorTable& table) {
  nlohmann::json j;
  j["group"] = table.group->describe();
  j["dims"] = table.dims;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& e : table.entries) {
    nlohmann::json je;
    je["word"] = word_to_json(e.word);
    je["inverse"] = e.inverse;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& b : e.basis) rows.push_back(exponent_to_json(b));
    je["basis"] = rows;
    je["prefix_fact"] = e.prefix_fact;
    je["suffix_fact"] = e.suffix_fact;
    gens.push_back(je);
  }
  j["generators"] = gens;
  return j.dump(2);
}

GeneratorTable table_from_json(const std::string& text, const BaseGroupPtr& group) {
  auto j = nlohmann::json::parse(text);
  if (j.at("group").get<std::string>() != group->describe())
    throw invalid_input_error("table was built for group " + j.at("group").get<std::string>());
  GeneratorTable T;
  T.group = group;
  T.ab = group->alphabet();
  T.dims = j.at("dims").get<int>();
  for (const auto& je : j.at("generators")) {
    TableEntry e{word_from_json(je.at("word"), T.ab, T.dims), je.at("inverse").get<int>(), {}, {}, {}};
    for (const auto& r : je.at("basis")) e.basis.push_back(exponent_from_json(r, T.dims));
    e.prefix_fact = je.at("prefix_fact").get<std::vector<std::vector<int>>>();
    e.suffix_fact = je.at("suffix_fact").get<std::vector<std::vector<int>>>();
    e.word = canonical(e.word);
    T.entries.push_back(std::move(e));
  }
  T.letter_gen_.assign(static_cast<size_t>(T.ab->size()), -1);
  for (LetterId l = 0; l < T.ab->size(); ++l) {
    int id = T.find(make_finite(T.ab, T.dims, {l}));
    if (id < 0) throw invalid_input_error("letter missing from imported table");
    T.letter_gen_[static_cast<size_t>(l)] = id;
  }
  return T;
}

}  // namespace extword
