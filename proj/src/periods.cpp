#include "extword/periods.hpp"

#include <mutex>
#include <unordered_map>

#include "extword/json_io.hpp"

namespace extword {

namespace {

// Minimal period of a finite letter sequence that divides its length
// (= primitive-root length), via the classic border array.
long primitive_root_length(const std::vector<LetterId>& ls) {
  long n = static_cast<long>(ls.size());
  std::vector<long> fail(static_cast<size_t>(n) + 1, 0);
  fail[0] = -1;
  long k = -1;
  for (long i = 0; i < n; ++i) {
    while (k >= 0 && ls[static_cast<size_t>(k)] != ls[static_cast<size_t>(i)]) k = fail[static_cast<size_t>(k)];
    ++k;
    fail[static_cast<size_t>(i) + 1] = k;
  }
  long p = n - fail[static_cast<size_t>(n)];
  return (p > 0 && n % p == 0) ? p : n;
}

}  // namespace

bool is_period(const Word& w, const Exponent& pi) {
  if (pi.is_zero()) return true;
  Exponent p = pi.positive() ? pi : -pi;
  if (p >= w.length()) return true;  // no overlapping positions
  Exponent one = Exponent::unit(w.dims());
  return equal(factor(w, one, w.length() - p), factor(w, one + p, w.length()));
}

PeriodLattice stab_lattice(const Word& p) {
  if (p.empty()) throw invalid_input_error("stab_lattice of empty word");
  int dims = p.dims();
  if (p.degree() == 0) {
    auto ls = finite_letters(p);
    return PeriodLattice::from_generators(
        dims, {Exponent::monomial(dims, 0, Int(primitive_root_length(ls)))});
  }
  // ray periods recur constantly during canonicalization; memoize
  static std::mutex memo_mu;
  static std::unordered_map<std::string, PeriodLattice> memo;
  Word cp = canonical(p);
  std::string key = std::to_string(reinterpret_cast<uintptr_t>(p.alphabet().get())) + "/" +
                    std::to_string(dims) + "/" + word_to_json(cp).dump();
  {
    std::lock_guard<std::mutex> lk(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  PeriodLattice result = [&] {
  const Word& pc = cp;
  int f = pc.degree();
  PeriodLattice L(dims);
  L.insert(pc.length());
  Word sq = canonical(raw_concat(pc, pc));
  for (const auto& row : proper_period_lattice(sq).rows()) L.insert(row);
  // Top-degree sub-periods: elements of degree f with smaller leading
  // coefficient than |p| may stabilize the power (e.g. a length-2t ray with
  // rotation period t + m). Bounded divisor/box search, exact at desk scale.
  const Int& lead = pc.length().coeff(f);
  if (lead > 1) {
    for (Int m = 2; m <= lead; ++m) {
      if (lead % m != 0) continue;
      Int lead2 = lead / m;
      std::vector<Exponent> cands;
      Exponent base = Exponent::monomial(dims, f, lead2);
      cands.push_back(base);
      std::vector<Exponent> lower = L.rows();
      for (const auto& r : lower) {
        if (r.degree() >= f) continue;
        for (int j = -kStabTopSearchBound; j <= kStabTopSearchBound; ++j)
          if (j != 0) cands.push_back(base + Int(j) * r);
      }
      for (int j = -kStabTopSearchBound; j <= kStabTopSearchBound; ++j)
        if (j != 0) cands.push_back(base + Exponent::monomial(dims, 0, Int(j)));
      bool found = false;
      for (const auto& c : cands) {
        if (!c.positive() || L.member(c)) continue;
        if (is_period(sq, c)) {
          L.insert(c);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  return L;
  }();
  std::lock_guard<std::mutex> lk(memo_mu);
  if (memo.size() > 20000) memo.clear();
  memo.emplace(key, result);
  return result;
}

PeriodLattice proper_period_lattice(const Word& w) {
  int dims = w.dims();
  if (w.empty()) throw invalid_input_error("proper_period_lattice of empty word");
  int f = w.degree();
  if (f <= 0) return PeriodLattice::trivial(dims);
  Word cw = canonical(w);
  // Candidate lattice: every proper period must stabilize both rays of every
  // top-level atom of full degree (those zones are unbounded).
  bool have = false;
  PeriodLattice cand(dims);
  int atom_count = 0;
  for (const auto& b : cw.blocks()) {
    const auto* a = std::get_if<AtomBlock>(&b);
    if (!a || a->level != f) continue;
    ++atom_count;
    PeriodLattice both = intersect(stab_lattice(*a->rho), stab_lattice(*a->lambda));
    cand = have ? intersect(cand, both) : both;
    have = true;
  }
  if (!have) return PeriodLattice::trivial(dims);
  if (atom_count == static_cast<int>(cw.blocks().size()) && atom_count == 1) return cand;
  // Refine by exact tests: the candidate rows may fail across seams; periods
  // are closed under integer multiples, so search k * row (plus small
  // combinations with lower candidate rows).
  PeriodLattice out(dims);
  std::vector<Exponent> rows = cand.rows();
  for (const auto& row : rows) {
    bool ok = false;
    for (int k = 1; k <= kPeriodMultCap && !ok; ++k) {
      Exponent pi = Int(k) * row;
      if (is_period(cw, pi)) {
        out.insert(pi);
        ok = true;
      }
    }
    if (!ok) {
      for (int k = 1; k <= kPeriodComboCap && !ok; ++k) {
        for (const auto& low : rows) {
          if (low.degree() >= row.degree()) continue;
          for (int j = -kPeriodComboCap; j <= kPeriodComboCap && !ok; ++j) {
            if (j == 0) continue;
            Exponent pi = Int(k) * row + Int(j) * low;
            if (pi.positive() && is_period(cw, pi)) {
              out.insert(pi);
              ok = true;
            }
          }
        }
      }
    }
  }
  return out;
}

std::pair<Word, Word> boundary_words(const Word& g, const Exponent& beta) {
  if (!(beta.is_zero() || beta.positive()) || beta.degree() >= g.degree() || !is_period(g, beta))
    throw invalid_input_error("boundary_words: beta is not a nonnegative proper period");
  Word r = prefix(g, beta);
  Word s = suffix(g, beta);
  if (!equal(concat(r, g), concat(g, s)))
    throw invalid_input_error("boundary_words postcondition failed");
  return {std::move(r), std::move(s)};
}

}  // namespace extword
