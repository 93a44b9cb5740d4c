#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "extword/alphabet.hpp"
#include "extword/exponent.hpp"

namespace extword {

class Word;
using WordPtr = std::shared_ptr<const Word>;

// A nonempty run of explicit letters.
struct FiniteBlock {
  std::vector<LetterId> letters;
};

// exp >= 2 copies of a nonempty base. Canonical forms only use finite
// primitive bases; word bases are accepted at construction and expanded
// while canonicalizing (cap-guarded).
struct PowerBlock {
  WordPtr base;
  Int exp;
};

// [rho rho rho ...)(... lambda lambda lambda] of length t^level + offset.
// The right ray is the rho-power anchored at position 1; the left ray is
// the lambda-power anchored at the last position. deg(|rho|) =
// deg(|lambda|) = level-1 with positive leading coefficients;
// deg(offset) < level; t^level + offset > 0.
struct AtomBlock {
  int level;
  WordPtr rho;
  WordPtr lambda;
  Exponent offset;
};

using Block = std::variant<FiniteBlock, PowerBlock, AtomBlock>;

Exponent block_length(const Block& b, int dims);
int block_level(const Block& b);

// A closed A-word as a canonicalizable block sequence, anchored at 1.
// Value semantics; immutable once built (sub-words shared through
// WordPtr). Safe to read concurrently.
class Word {
public:
  Word() : dims_(1), length_(1) {}                     // empty word, no alphabet
  Word(std::shared_ptr<const Alphabet> ab, int dims);  // the empty word

  const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }
  int dims() const { return dims_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Exponent& length() const { return length_; }
  bool empty() const { return blocks_.empty(); }
  int degree() const { return length_.degree(); }
  bool canonical_flag() const { return canonical_; }

  static Word make(std::shared_ptr<const Alphabet> ab, int dims, std::vector<Block> blocks,
                   bool canonical = false);

private:
  std::shared_ptr<const Alphabet> alphabet_;
  int dims_;
  std::vector<Block> blocks_;
  Exponent length_;
  bool canonical_ = false;
  friend Word mark_canonical(Word w);
};

// --- constructors ---------------------------------------------------------

Word make_finite(std::shared_ptr<const Alphabet> ab, int dims, std::vector<LetterId> letters);
Word parse_letters(const std::shared_ptr<const Alphabet>& ab, int dims, const std::string& spaced);
// exp may be any integer: 0 -> empty, negatives -> power of the involution.
Word make_power(const Word& base, const Int& exp);
Word make_atom(int level, const Word& rho, const Word& lambda, Exponent offset);

// --- raw structural operations (no canonicalization) -----------------------

Word raw_concat(const Word& u, const Word& v);
Word involute(const Word& w);
LetterId eval_at(const Word& w, const Exponent& pos);                 // 1 <= pos <= |w|
Word factor(const Word& w, const Exponent& from, const Exponent& to);  // inclusive; to = from-1 -> empty
Word prefix(const Word& w, const Exponent& len);
Word suffix(const Word& w, const Exponent& len);
// Length-|w| factor of the bi-infinite w-power starting at position delta+1.
Word rotate(const Word& w, const Exponent& delta);

// Factor [from, to] of the bi-infinite p-power anchored at position 1
// (positions may be <= 0). deg of the positions must stay < level(p)+1.
Word power_factor(const Word& p, const Exponent& from, const Exponent& to);
// Factor of the p-power anchored so that position `anchor_end` is the last
// letter of a copy; extracts [anchor_end - dist - len + 1, anchor_end - dist].
Word power_factor_from_end(const Word& p, const Exponent& dist, const Exponent& len);

// --- canonical forms & equality --------------------------------------------

// Canonicalizing concatenation (the monoid product).
Word concat(const Word& u, const Word& v);
Word canonical(const Word& w);
bool equal(const Word& u, const Word& v);
// Structural identity; meaningful on canonical words.
bool identical(const Word& u, const Word& v);

// Longest common suffix/prefix search. !free: the agreement is exactly
// `len`. free: the agreeing lengths are `len` plus every exponent of degree
// < scale, and nothing of larger degree (two periodic zones coincide).
struct AgreementResult {
  bool free = false;
  int scale = 0;
  Exponent len;
};
AgreementResult agree_suffix_words(const Word& u, const Word& v);
AgreementResult agree_prefix_words(const Word& u, const Word& v);

// --- predicates -------------------------------------------------------------

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

LetterId first_letter(const Word& w);
LetterId last_letter(const Word& w);

// Explicit letters of a finite word (degree <= 0). Throws on infinite words
// or when the expansion would exceed `cap`.
std::vector<LetterId> finite_letters(const Word& w, long cap = 1 << 20);

std::string word_str(const Word& w);  // human-readable bracket notation

// Expansion guard used when canonicalization must materialize letter runs.
inline constexpr long kExpandCap = 1 << 20;

}  // namespace extword
