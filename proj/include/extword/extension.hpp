#pragma once

#include <optional>

#include "extword/periods.hpp"
#include "extword/rewriting.hpp"

namespace extword {

struct Caps {
  int preprocess_rounds = 100;
  long reduction_steps = 1000000;
  int recursion_depth = 0;  // 0 -> dims + 1
};

// One preprocessed generator: its canonical word, the involution partner,
// the proper-period basis B(g) and per-row boundary words r(beta) (prefix)
// and s(beta) (suffix), factorized over the table.
struct TableEntry {
  Word word;
  int inverse = -1;
  std::vector<Exponent> basis;                       // HNF rows, ascending degree
  std::vector<std::vector<int>> prefix_fact;         // r(beta) over table ids
  std::vector<std::vector<int>> suffix_fact;         // s(beta) over table ids
};

class GeneratorTable {
public:
  BaseGroupPtr group;
  std::shared_ptr<const Alphabet> ab;
  int dims = 2;
  std::vector<TableEntry> entries;

  int find(const Word& canon) const;
  int letter_gen(LetterId l) const { return letter_gen_[static_cast<size_t>(l)]; }
  int inverse(int gen) const { return entries[static_cast<size_t>(gen)].inverse; }
  const Word& word_of(int gen) const { return entries[static_cast<size_t>(gen)].word; }
  int degree_of(int gen) const { return word_of(gen).degree(); }

  std::vector<int> involute_fact(const std::vector<int>& gens) const;
  Word word_of_fact(const std::vector<int>& gens) const;
  std::vector<int> letters_to_fact(const std::vector<LetterId>& ls) const;
  // Factorize an arbitrary represented word over the table (greedy,
  // longest-first; budget-capped).
  std::optional<std::vector<int>> factorize(const Word& w) const;

  std::vector<int> letter_gen_;       // letter id -> generator id
  std::vector<std::vector<int>> delta_fact;  // the original inputs over the table
};

// Thm Part I rules 1-7 as a fixpoint, starting from Delta plus all letters.
GeneratorTable preprocess(const std::vector<Word>& delta, const BaseGroupPtr& group,
                          const Caps& caps = {});

// Part II: reduced degree with a witness reachable by S-rewriting.
struct ReducedDegree {
  int degree = kBottomDegree;  // kBottomDegree = the element is trivial
  Word witness;
  std::vector<int> witness_fact;
};
ReducedDegree reduced_degree(const GeneratorTable& table, const std::vector<int>& gens,
                             const Caps& caps = {});

bool ext_is_trivial(const GeneratorTable& table, const std::vector<int>& gens, const Caps& caps = {});
bool ext_equal(const GeneratorTable& table, const std::vector<int>& x, const std::vector<int>& y,
               const Caps& caps = {});
std::optional<long> order_probe(const GeneratorTable& table, const std::vector<int>& x, long max_n,
                                const Caps& caps = {});

// Thm neccond bridge: u in <v> iff u commutes with V = [vvv...)(...vvv].
bool membership_via_commutation(const std::vector<LetterId>& u, const std::vector<LetterId>& v,
                                const BaseGroupPtr& group, const Caps& caps = {});

// Prop torsion best-effort: search a reduction y of x with y = involute(y).
std::optional<Word> symmetric_witness(const GeneratorTable& table, const std::vector<int>& x,
                                      int peel_cap = 64, const Caps& caps = {});

// A big-rule redex u v ~u located through the table (Part II conditions).
struct Redex {
  size_t i = 0, j = 0;  // generator positions, i < j
  Word u;               // the degree-d generator word at i
  Word v;               // the middle
  int level = 0;
};
std::optional<Redex> find_big_redex(const GeneratorTable& table, const std::vector<int>& gens,
                                    const Caps& caps = {});

// Randomized-order reduction harness probing confluence. Returns the final
// degree and word after applying randomly chosen S0 simplifications and big
// splices until none applies.
struct TraceResult {
  int degree = kBottomDegree;
  Word word;
  long steps = 0;
};
TraceResult random_reduction_trace(const GeneratorTable& table, const std::vector<int>& gens,
                                   uint64_t seed, const Caps& caps = {},
                                   std::vector<std::string>* log = nullptr);

// JSON import/export of preprocessed tables (bit-exact caching).
std::string table_to_json(const GeneratorTable& table);
GeneratorTable table_from_json(const std::string& text, const BaseGroupPtr& group);

}  // namespace extword
