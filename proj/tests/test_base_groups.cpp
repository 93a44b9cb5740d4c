#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "extword/base_group.hpp"

using namespace extword;

namespace {

std::vector<LetterId> rnd_word(std::mt19937_64& rng, const Alphabet& ab, int maxlen) {
  std::uniform_int_distribution<int> dl(0, ab.size() - 1), dn(0, maxlen);
  std::vector<LetterId> w;
  int n = dn(rng);
  for (int i = 0; i < n; ++i) w.push_back(dl(rng));
  return w;
}

void check_s0_laws(const BaseGroupPtr& g, uint64_t seed) {
  const auto& ab = *g->alphabet();
  std::mt19937_64 rng(seed);
  // (a ~a, 1) in S0 for all letters
  for (LetterId a = 0; a < ab.size(); ++a) CHECK(g->is_trivial({a, ab.inverse(a)}));
  CHECK(g->normal_form({}).empty());
  for (int i = 0; i < 200; ++i) {
    auto u = rnd_word(rng, ab, 6), v = rnd_word(rng, ab, 6), w = rnd_word(rng, ab, 4);
    // involution compatibility
    CHECK(g->normal_form(g->involute_letters(u)) == g->involute_letters(g->normal_form(u)));
    // confluence law: nf(u nf(v) w) = nf(u v w)
    auto mid = g->normal_form(v);
    std::vector<LetterId> a = u, b = u;
    a.insert(a.end(), mid.begin(), mid.end());
    a.insert(a.end(), w.begin(), w.end());
    b.insert(b.end(), v.begin(), v.end());
    b.insert(b.end(), w.begin(), w.end());
    CHECK(g->normal_form(a) == g->normal_form(b));
    // soundness
    CHECK(g->is_trivial(u) == g->normal_form(u).empty());
    // u * involute(u) trivial
    auto ui = g->involute_letters(u);
    std::vector<LetterId> uu = u;
    uu.insert(uu.end(), ui.begin(), ui.end());
    CHECK(g->is_trivial(uu));
  }
}

}  // namespace

TEST_CASE("free group basics") {
  auto g = make_free_group({"a", "b"});
  const auto& ab = *g->alphabet();
  auto L = [&](const std::string& s) {
    std::vector<LetterId> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(ab.find(t));
    return out;
  };
  CHECK(g->normal_form(L("a b ~b ~a")).empty());
  CHECK(g->normal_form(L("a b ~a")) == L("a b ~a"));
  CHECK(g->is_free());
  CHECK(*g->geodesic_length(L("a ~a b")) == 1);
  CHECK(g->is_local_geodesic_window(L("a b ~a")));
  CHECK_FALSE(g->is_local_geodesic_window(L("a ~a b")));
}

TEST_CASE("free group cyclic membership") {
  auto g = make_free_group({"a", "b"});
  const auto& ab = *g->alphabet();
  auto L = [&](const std::string& s) {
    std::vector<LetterId> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(ab.find(t));
    return out;
  };
  CHECK(*g->cyclic_member(L("a b a b"), L("a b")) == 2);
  CHECK_FALSE(g->cyclic_member(L("a"), L("a b")));
  CHECK_FALSE(g->cyclic_member(L("b a"), L("a b")));
  CHECK(*g->cyclic_member(L("~b ~a"), L("a b")) == -1);
  // conjugated generator: v = a b ~a
  CHECK(*g->cyclic_member(L("a b b ~a"), L("a b ~a")) == 2);
  // desk-scale completeness: agree with brute force for short words
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    auto u = rnd_word(rng, ab, 8), v = rnd_word(rng, ab, 8);
    auto m = g->cyclic_member(u, v);
    bool brute = false;
    Int brute_m = 0;
    for (int k = -10; k <= 10 && !brute; ++k) {
      std::vector<LetterId> p;
      auto vv = k >= 0 ? v : g->involute_letters(v);
      for (int t = 0; t < std::abs(k); ++t) p.insert(p.end(), vv.begin(), vv.end());
      auto iu = g->involute_letters(u);
      p.insert(p.end(), iu.begin(), iu.end());
      if (g->is_trivial(p)) {
        brute = true;
        brute_m = k;
      }
    }
    if (m && (*m >= -10 && *m <= 10)) {
      CHECK(brute);
      // witness law: u = v^m
      std::vector<LetterId> p;
      auto vv = *m >= 0 ? v : g->involute_letters(v);
      long k = std::abs(m->get_si());
      for (long t = 0; t < k; ++t) p.insert(p.end(), vv.begin(), vv.end());
      auto iu = g->involute_letters(u);
      p.insert(p.end(), iu.begin(), iu.end());
      CHECK(g->is_trivial(p));
    }
    if (brute) CHECK(m.has_value());
  }
}

TEST_CASE("abelian oracle") {
  auto g = make_free_abelian(2);
  const auto& ab = *g->alphabet();
  auto L = [&](const std::string& s) {
    std::vector<LetterId> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(ab.find(t));
    return out;
  };
  // b a b -> a b^2
  CHECK(g->normal_form(L("b a b")) == L("a b b"));
  CHECK(*g->cyclic_member(L("a a b b b b"), L("a b b")) == 2);
  CHECK_FALSE(g->cyclic_member(L("a b"), L("a b b")));
  CHECK(*g->geodesic_length(L("a b ~a")) == 1);
  CHECK_FALSE(g->is_local_geodesic_window(L("b a ~b")));
}

TEST_CASE("S0 laws, all stock oracles") {
  check_s0_laws(make_free_group({"a", "b"}), 101);
  check_s0_laws(make_free_abelian(2), 102);
  check_s0_laws(make_cyclic_z(), 103);
}

static const char* kS3 = R"({
  "elements": ["e", "s", "t", "st", "ts", "sts"],
  "identity": "e",
  "table": {
    "e,e":"e","e,s":"s","e,t":"t","e,st":"st","e,ts":"ts","e,sts":"sts",
    "s,e":"s","s,s":"e","s,t":"st","s,st":"t","s,ts":"sts","s,sts":"ts",
    "t,e":"t","t,s":"ts","t,t":"e","t,st":"sts","t,ts":"s","t,sts":"st",
    "st,e":"st","st,s":"sts","st,t":"s","st,st":"ts","st,ts":"e","st,sts":"t",
    "ts,e":"ts","ts,s":"t","ts,t":"sts","ts,st":"e","ts,ts":"st","ts,sts":"s",
    "sts,e":"sts","sts,s":"st","sts,t":"ts","sts,st":"s","sts,ts":"t","sts,sts":"e"
  },
  "generators": {"s":"s", "t":"t"}
})";

TEST_CASE("finite table group: S3 as a Coxeter system") {
  auto g = make_finite_table(kS3);
  const auto& ab = *g->alphabet();
  CHECK(ab.size() == 2);  // both generators are involutions: fixed-point letters
  CHECK(ab.inverse(ab.find("s")) == ab.find("s"));
  LetterId s = ab.find("s"), t = ab.find("t");
  CHECK(g->is_trivial({s, s}));
  CHECK(g->is_trivial({s, t, s, t, s, t}));
  CHECK_FALSE(g->is_trivial({s, t}));
  CHECK(*g->cyclic_member({s, t, s, t}, {s, t}) == 2);
  CHECK(*g->geodesic_length({s, s, t}) == 1);
  CHECK(g->is_finite_group());
  check_s0_laws(g, 104);
}

TEST_CASE("group spec parsing") {
  CHECK(make_group("free:a,b")->is_free());
  CHECK(make_group("abelian:3")->alphabet()->size() == 6);
  CHECK(make_group("cyclic")->alphabet()->size() == 2);
  CHECK_THROWS_AS(make_group("nonsense"), invalid_input_error);
}
