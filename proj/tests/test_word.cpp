#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extword/periods.hpp"
#include "extword/word.hpp"

using namespace extword;

namespace {

struct Fixture {
  std::shared_ptr<const Alphabet> ab = Alphabet::with_inverses({"a", "b"});
  int dims = 2;
  Word lw(const std::string& s) const { return parse_letters(ab, dims, s); }
  Word atom(const std::string& rho, const std::string& lam, long c) const {
    return make_atom(1, lw(rho), lw(lam), Exponent::monomial(dims, 0, c));
  }
  Exponent e(long a0, long a1) const { return Exponent::from_coeffs({Int(a0), Int(a1)}); }
  // w of the figure: [aaa...)(... abab ...)(... bbb], length 2t
  Word figw() const { return raw_concat(atom("a", "a b", 0), atom("a b", "b", 0)); }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "eval basics") {
  CHECK(eval_at(lw("a b a"), e(2, 0)) == ab->find("b"));
  Word t = atom("a b", "b", 0);
  CHECK(eval_at(t, e(-3, 1)) == ab->find("b"));  // deep in the left ray
  CHECK(eval_at(t, e(1, 0)) == ab->find("a"));
  CHECK(eval_at(t, e(2, 0)) == ab->find("b"));
  CHECK(eval_at(t, e(0, 1)) == ab->find("b"));  // last position
  Word p = make_power(lw("a b"), Int(4));
  CHECK(eval_at(p, e(3, 0)) == ab->find("a"));
  CHECK(eval_at(p, e(8, 0)) == ab->find("b"));
}

TEST_CASE_FIXTURE(Fixture, "figure w: aw != wb but aaw = wbb") {
  Word w = figw();
  Word aw = concat(lw("a"), w);
  Word wb = concat(w, lw("b"));
  // paper: aw[(0,1)] = a and wb[(0,1)] = b
  CHECK(eval_at(aw, e(0, 1)) == ab->find("a"));
  CHECK(eval_at(wb, e(0, 1)) == ab->find("b"));
  CHECK_FALSE(equal(aw, wb));
  Word aaw = concat(lw("a a"), w);
  Word wbb = concat(w, lw("b b"));
  CHECK(equal(aaw, wbb));
}

TEST_CASE_FIXTURE(Fixture, "conjugating ray pair: xt = ty") {
  Word t = atom("a", "b", 0);
  CHECK(equal(concat(lw("a"), t), concat(t, lw("b"))));
  CHECK_FALSE(equal(concat(lw("b"), t), concat(t, lw("b"))));
}

TEST_CASE_FIXTURE(Fixture, "collapse example: ab u = u a~a") {
  Word u = atom("a b", "a ~a", 0);
  CHECK(equal(concat(lw("a b"), u), concat(u, lw("a ~a"))));
}

TEST_CASE_FIXTURE(Fixture, "neutral element and power unrolling") {
  Word w = figw();
  Word one(ab, dims);
  CHECK(equal(concat(one, w), w));
  CHECK(equal(concat(w, one), w));
  CHECK(equal(make_power(lw("a b"), Int(3)), lw("a b a b a b")));
}

TEST_CASE_FIXTURE(Fixture, "involution") {
  Word w = figw();
  CHECK(equal(involute(involute(w)), w));
  CHECK(equal(involute(lw("a b")), lw("~b ~a")));
  // involute(Atom(1,a,b,0)) = Atom(1,~b,~a,0)
  CHECK(equal(involute(atom("a", "b", 0)), atom("~b", "~a", 0)));
  // anti-homomorphism on random pairs
  std::mt19937_64 rng(5);
  auto rnd_word = [&](int n) {
    std::vector<LetterId> ls;
    std::uniform_int_distribution<int> d(0, ab->size() - 1);
    for (int i = 0; i < n; ++i) ls.push_back(d(rng));
    return make_finite(ab, dims, ls);
  };
  for (int i = 0; i < 50; ++i) {
    Word u = rnd_word(4), v = rnd_word(5);
    CHECK(equal(involute(concat(u, v)), concat(involute(v), involute(u))));
  }
  // pointwise: eval(inv w, beta) = inverse of eval(w, |w|-beta+1)
  Word t = atom("a b", "b", 0);
  Word it = involute(t);
  for (long k : {1L, 2L, 5L}) {
    Exponent beta = e(k, 0);
    CHECK(it.alphabet()->inverse(eval_at(it, beta)) == eval_at(t, t.length() - beta + 1));
  }
}

TEST_CASE_FIXTURE(Fixture, "factor") {
  Word w = figw();
  CHECK(equal(factor(w, e(1, 0), w.length()), w));
  // splitting law at sampled points
  for (auto beta : {e(3, 0), e(0, 1), e(-2, 1), e(5, 1)}) {
    Word l = factor(w, e(1, 0), beta);
    Word r = factor(w, beta + 1, w.length());
    CHECK(equal(concat(l, r), w));
  }
  // factor(Atom(1,ab,b,0), (2,0), (0,1)) = Atom(1,ba,b,-1)
  Word f = factor(atom("a b", "b", 0), e(2, 0), e(0, 1));
  CHECK(equal(f, atom("b a", "b", -1)));
  CHECK(f.length() == e(-1, 1));
  // empty factor
  CHECK(factor(w, e(3, 0), e(2, 0)).empty());
}

TEST_CASE_FIXTURE(Fixture, "rotate") {
  CHECK(equal(rotate(lw("a b"), Exponent::unit(dims)), lw("b a")));
  Word w = figw();
  CHECK(equal(rotate(w, w.length()), w));
  CHECK(equal(rotate(rotate(w, e(3, 0)), e(-3, 0)), w));
  // rotate of a uniform ray pair agrees pointwise with the shifted bi-power
  Word t = atom("a b", "a b", 0);
  Word rt = rotate(t, e(1, 0));
  for (long k : {1L, 2L, 3L, 6L}) {
    CHECK(eval_at(rt, e(k, 0)) == eval_at(t, e(k + 1, 0)));
  }
  CHECK(equal(rotate(t, e(2, 0)), t));  // 2 is a period of the bi-power
}

TEST_CASE_FIXTURE(Fixture, "freely and cyclically reduced") {
  CHECK_FALSE(is_freely_reduced(lw("a ~a")));
  CHECK(is_freely_reduced(lw("a b ~a")));
  CHECK(is_freely_reduced(atom("a", "b", 0)));
  CHECK(is_freely_reduced(atom("a", "~a", 0)));
  CHECK_FALSE(is_cyclically_reduced(atom("a", "~a", 0)));
  CHECK(is_cyclically_reduced(atom("a", "b", 0)));
  CHECK_FALSE(is_freely_reduced(atom("a b", "a ~a", 0)));  // seam inside lambda power
  CHECK_FALSE(is_freely_reduced(raw_concat(lw("a"), raw_concat(lw("~a"), figw()))));
}

TEST_CASE_FIXTURE(Fixture, "canonical absorbs and is idempotent") {
  Word w = figw();
  Word c1 = canonical(raw_concat(lw("a a"), w));
  Word c2 = canonical(raw_concat(w, lw("b b")));
  CHECK(identical(c1, c2));
  CHECK(identical(canonical(c1), c1));
  // canonical soundness: eval agrees at sampled positions
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-10, 10);
  Word raw = raw_concat(lw("a a"), w);
  for (int i = 0; i < 100; ++i) {
    Exponent pos = e(d(rng), 1);  // ray-deep positions
    if (pos < Exponent::unit(dims) || pos > raw.length()) continue;
    CHECK(eval_at(raw, pos) == eval_at(c1, pos));
  }
  for (long k = 1; k <= 10; ++k) CHECK(eval_at(raw, e(k, 0)) == eval_at(c1, e(k, 0)));
}

TEST_CASE_FIXTURE(Fixture, "re-slicing stability") {
  std::mt19937_64 rng(23);
  Word w = concat(figw(), atom("b", "~a", 2));
  std::uniform_int_distribution<long> dc(-6, 6);
  for (int i = 0; i < 40; ++i) {
    Exponent beta = e(dc(rng), (i % 2) ? 1 : 0);
    Exponent one = Exponent::unit(dims);
    if (beta < one || beta >= w.length()) continue;
    Word l = factor(w, one, beta), r = factor(w, beta + 1, w.length());
    CHECK(equal(concat(l, r), w));
    CHECK(identical(canonical(raw_concat(l, r)), canonical(w)));
  }
}

TEST_CASE("atom towers commute as words") {
  // x_1-style towers: Finite(ab) and Atom(1,ab,ab,0) merge by absorption
  auto ab = Alphabet::with_inverses({"a", "b"});
  int dims = 3;
  Word x = parse_letters(ab, dims, "a b");
  Word x1 = make_atom(1, x, x, Exponent(dims));
  CHECK(equal(concat(x, x1), concat(x1, x)));
  Word x2 = make_atom(2, x1, x1, Exponent(dims));
  CHECK(equal(concat(x1, x2), concat(x2, x1)));
  CHECK(equal(concat(x, x2), concat(x2, x)));
}

TEST_CASE_FIXTURE(Fixture, "periods: figure w") {
  Word w = figw();
  CHECK(is_period(w, Exponent(dims)));
  CHECK(is_period(w, e(2, 0)));
  CHECK_FALSE(is_period(w, e(1, 0)));
  CHECK_FALSE(is_period(w, e(0, 1)));
  CHECK(is_period(atom("a", "a", 0), e(1, 0)));
  PeriodLattice L = proper_period_lattice(w);
  CHECK(L.rows().size() == 1);
  CHECK(L.rows()[0] == e(2, 0));
}

TEST_CASE_FIXTURE(Fixture, "periods: brute force box agreement on atoms") {
  std::mt19937_64 rng(31);
  std::vector<std::pair<std::string, std::string>> rays = {
      {"a", "b"}, {"a b", "b"}, {"a b", "a b"}, {"a", "a"}, {"a b a", "b a"}, {"a b b", "a b b"}};
  for (auto& [r, l] : rays) {
    for (long c : {-2L, 0L, 3L}) {
      Word at = atom(r, l, c);
      PeriodLattice L = proper_period_lattice(at);
      for (long p = -20; p <= 20; ++p) {
        bool brute = is_period(at, e(p, 0));
        CHECK(L.member(e(p, 0)) == brute);
      }
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "periods: lattice membership and closure") {
  Word w = figw();
  PeriodLattice L = proper_period_lattice(w);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> d(-8, 8);
  for (int i = 0; i < 200; ++i) {
    Exponent p1 = Int(d(rng)) * L.rows()[0];
    Exponent p2 = Int(d(rng)) * L.rows()[0];
    CHECK(is_period(w, p1 - p2));
  }
}

TEST_CASE_FIXTURE(Fixture, "boundary words") {
  // g = Atom(1,ab,ab,0), beta=(2,0) -> r = s = ab with ab g = g ab
  Word g = atom("a b", "a b", 0);
  auto [r, s] = boundary_words(g, e(2, 0));
  CHECK(equal(r, lw("a b")));
  CHECK(equal(s, lw("a b")));
  auto [r0, s0] = boundary_words(g, Exponent(dims));
  CHECK(r0.empty());
  CHECK(s0.empty());
  // figure-w word with period 2: r = aa, s = bb
  Word w = figw();
  auto [r2, s2] = boundary_words(w, e(2, 0));
  CHECK(equal(r2, lw("a a")));
  CHECK(equal(s2, lw("b b")));
}

TEST_CASE_FIXTURE(Fixture, "stab lattice of rays") {
  CHECK(stab_lattice(lw("a b a b")).rows()[0] == e(2, 0));
  CHECK(stab_lattice(lw("a b a")).rows()[0] == e(3, 0));
  Word x1 = atom("a b", "a b", 0);
  PeriodLattice L = stab_lattice(x1);  // periods of the bi-infinite x1-power
  CHECK(L.member(e(2, 0)));
  CHECK(L.member(e(0, 1)));
  CHECK_FALSE(L.member(e(1, 0)));
}

TEST_CASE_FIXTURE(Fixture, "monoid laws on random words") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dl(0, 3), dn(1, 4), kind(0, 2);
  auto rnd_finite = [&](int n) {
    std::vector<LetterId> ls;
    for (int i = 0; i < n; ++i) ls.push_back(dl(rng));
    return make_finite(ab, dims, ls);
  };
  auto rnd_word = [&]() {
    switch (kind(rng)) {
      case 0: return rnd_finite(dn(rng));
      case 1: return make_power(rnd_finite(dn(rng)), Int(dn(rng) + 1));
      default: {
        Word r = rnd_finite(dn(rng)), l = rnd_finite(dn(rng));
        return make_atom(1, r, l, Exponent::monomial(2, 0, dn(rng) - 2));
      }
    }
  };
  for (int i = 0; i < 60; ++i) {
    Word u = rnd_word(), v = rnd_word(), w = rnd_word();
    Word lhs = concat(concat(u, v), w);
    Word rhs = concat(u, concat(v, w));
    CHECK(equal(lhs, rhs));
    CHECK(lhs.length() == u.length() + v.length() + w.length());
    CHECK(equal(involute(concat(u, v)), concat(involute(v), involute(u))));
  }
}
