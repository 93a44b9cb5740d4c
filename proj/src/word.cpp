#include "extword/word.hpp"

#include <sstream>

namespace extword {

Exponent block_length(const Block& b, int dims) {
  if (const auto* f = std::get_if<FiniteBlock>(&b))
    return Exponent::monomial(dims, 0, Int(static_cast<long>(f->letters.size())));
  if (const auto* p = std::get_if<PowerBlock>(&b)) return p->exp * p->base->length();
  const auto& a = std::get<AtomBlock>(b);
  return Exponent::monomial(dims, a.level) + a.offset;
}

int block_level(const Block& b) {
  if (std::holds_alternative<FiniteBlock>(b)) return 0;
  if (const auto* p = std::get_if<PowerBlock>(&b)) {
    int lvl = 0;
    for (const auto& sub : p->base->blocks()) lvl = std::max(lvl, block_level(sub));
    return lvl;
  }
  return std::get<AtomBlock>(b).level;
}

Word::Word(std::shared_ptr<const Alphabet> ab, int dims)
    : alphabet_(std::move(ab)), dims_(dims), length_(dims) {}

Word Word::make(std::shared_ptr<const Alphabet> ab, int dims, std::vector<Block> blocks,
                bool canonical) {
  Word w(std::move(ab), dims);
  Exponent len(dims);
  for (const auto& b : blocks) len += block_length(b, dims);
  w.blocks_ = std::move(blocks);
  w.length_ = std::move(len);
  w.canonical_ = canonical;
  return w;
}

Word mark_canonical(Word w) {
  w.canonical_ = true;
  return w;
}

Word make_finite(std::shared_ptr<const Alphabet> ab, int dims, std::vector<LetterId> letters) {
  if (letters.empty()) return Word(std::move(ab), dims);
  std::vector<Block> bs;
  bs.push_back(FiniteBlock{std::move(letters)});
  return Word::make(std::move(ab), dims, std::move(bs));
}

Word parse_letters(const std::shared_ptr<const Alphabet>& ab, int dims, const std::string& spaced) {
  std::vector<LetterId> ls;
  std::istringstream is(spaced);
  std::string tok;
  while (is >> tok) ls.push_back(ab->find(tok));
  return make_finite(ab, dims, std::move(ls));
}

Word make_power(const Word& base, const Int& exp) {
  if (exp == 0 || base.empty()) return Word(base.alphabet(), base.dims());
  if (exp < 0) return make_power(involute(base), -exp);
  if (exp == 1) return base;
  std::vector<Block> bs;
  bs.push_back(PowerBlock{std::make_shared<Word>(base), exp});
  return Word::make(base.alphabet(), base.dims(), std::move(bs));
}

Word make_atom(int level, const Word& rho, const Word& lambda, Exponent offset) {
  if (level < 1) throw invalid_input_error("atom level must be >= 1");
  if (level >= rho.dims()) throw invalid_input_error("atom level exceeds session d_max");
  if (rho.degree() != level - 1 || !rho.length().positive())
    throw invalid_input_error("atom rho must have positive length of degree level-1");
  if (lambda.degree() != level - 1 || !lambda.length().positive())
    throw invalid_input_error("atom lambda must have positive length of degree level-1");
  if (offset.degree() >= level) throw invalid_input_error("atom offset degree must be < level");
  if (rho.alphabet() != lambda.alphabet()) throw invalid_input_error("alphabet mismatch in atom");
  std::vector<Block> bs;
  bs.push_back(AtomBlock{level, std::make_shared<Word>(rho), std::make_shared<Word>(lambda),
                         std::move(offset)});
  return Word::make(rho.alphabet(), rho.dims(), std::move(bs));
}

Word raw_concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet() || u.dims() != v.dims())
    throw invalid_input_error("alphabet or dimension mismatch in concat");
  std::vector<Block> bs = u.blocks();
  bs.insert(bs.end(), v.blocks().begin(), v.blocks().end());
  return Word::make(u.alphabet(), u.dims(), std::move(bs));
}

Word involute(const Word& w) {
  const auto& ab = *w.alphabet();
  std::vector<Block> out;
  out.reserve(w.blocks().size());
  for (auto it = w.blocks().rbegin(); it != w.blocks().rend(); ++it) {
    if (const auto* f = std::get_if<FiniteBlock>(&*it)) {
      std::vector<LetterId> ls(f->letters.rbegin(), f->letters.rend());
      for (auto& l : ls) l = ab.inverse(l);
      out.push_back(FiniteBlock{std::move(ls)});
    } else if (const auto* p = std::get_if<PowerBlock>(&*it)) {
      out.push_back(PowerBlock{std::make_shared<Word>(involute(*p->base)), p->exp});
    } else {
      const auto& a = std::get<AtomBlock>(*it);
      out.push_back(AtomBlock{a.level, std::make_shared<Word>(involute(*a.lambda)),
                              std::make_shared<Word>(involute(*a.rho)), a.offset});
    }
  }
  // The canonical form is not mirror-symmetric (seam gauge and fold are
  // left-to-right), so the involute of a canonical word is not canonical.
  return Word::make(w.alphabet(), w.dims(), std::move(out));
}

LetterId eval_at(const Word& w, const Exponent& pos) {
  Exponent one = Exponent::unit(w.dims());
  if (!(pos >= one && pos <= w.length())) throw invalid_input_error("eval position out of domain");
  Exponent start(w.dims());  // positions (start, start + |block|]
  for (const auto& b : w.blocks()) {
    Exponent blen = block_length(b, w.dims());
    Exponent end = start + blen;
    if (pos <= end) {
      Exponent p = pos - start;  // 1 <= p <= blen
      if (const auto* f = std::get_if<FiniteBlock>(&b)) {
        auto idx = p.as_long();
        return f->letters[static_cast<size_t>(*idx - 1)];
      }
      if (const auto* pw = std::get_if<PowerBlock>(&b)) {
        FloorDiv fd = floor_div(p - 1, pw->base->length());
        return eval_at(*pw->base, fd.rem + 1);
      }
      const auto& a = std::get<AtomBlock>(b);
      if (p.degree() < a.level) {  // right ray, rho-power anchored at 1
        FloorDiv fd = floor_div(p - 1, a.rho->length());
        return eval_at(*a.rho, fd.rem + 1);
      }
      // left ray, lambda-power anchored at the last position
      Exponent dist = blen - p;  // >= 0, degree < level
      FloorDiv fd = floor_div(dist, a.lambda->length());
      return eval_at(*a.lambda, a.lambda->length() - fd.rem);
    }
    start = std::move(end);
  }
  throw invalid_input_error("eval position out of domain");
}

LetterId first_letter(const Word& w) {
  if (w.empty()) throw invalid_input_error("first_letter of empty word");
  const Block& b = w.blocks().front();
  if (const auto* f = std::get_if<FiniteBlock>(&b)) return f->letters.front();
  if (const auto* p = std::get_if<PowerBlock>(&b)) return first_letter(*p->base);
  return first_letter(*std::get<AtomBlock>(b).rho);
}

LetterId last_letter(const Word& w) {
  if (w.empty()) throw invalid_input_error("last_letter of empty word");
  const Block& b = w.blocks().back();
  if (const auto* f = std::get_if<FiniteBlock>(&b)) return f->letters.back();
  if (const auto* p = std::get_if<PowerBlock>(&b)) return last_letter(*p->base);
  return last_letter(*std::get<AtomBlock>(b).lambda);
}

namespace {

bool block_freely_reduced(const Alphabet& ab, const Block& b) {
  if (const auto* f = std::get_if<FiniteBlock>(&b)) {
    for (size_t i = 0; i + 1 < f->letters.size(); ++i)
      if (ab.is_inverse_pair(f->letters[i], f->letters[i + 1])) return false;
    return true;
  }
  if (const auto* p = std::get_if<PowerBlock>(&b)) {
    if (!is_freely_reduced(*p->base)) return false;
    return !ab.is_inverse_pair(last_letter(*p->base), first_letter(*p->base));
  }
  const auto& a = std::get<AtomBlock>(b);
  if (!is_freely_reduced(*a.rho) || !is_freely_reduced(*a.lambda)) return false;
  // the ray powers add exactly one new adjacency each: the period seam
  if (ab.is_inverse_pair(last_letter(*a.rho), first_letter(*a.rho))) return false;
  if (ab.is_inverse_pair(last_letter(*a.lambda), first_letter(*a.lambda))) return false;
  return true;
}

}  // namespace

namespace {

LetterId block_first_letter(const Block& b) {
  if (const auto* f = std::get_if<FiniteBlock>(&b)) return f->letters.front();
  if (const auto* p = std::get_if<PowerBlock>(&b)) return first_letter(*p->base);
  return first_letter(*std::get<AtomBlock>(b).rho);
}

LetterId block_last_letter(const Block& b) {
  if (const auto* f = std::get_if<FiniteBlock>(&b)) return f->letters.back();
  if (const auto* p = std::get_if<PowerBlock>(&b)) return last_letter(*p->base);
  return last_letter(*std::get<AtomBlock>(b).lambda);
}

}  // namespace

bool is_freely_reduced(const Word& w) {
  const auto& ab = *w.alphabet();
  const auto& bs = w.blocks();
  for (const auto& b : bs)
    if (!block_freely_reduced(ab, b)) return false;
  for (size_t i = 0; i + 1 < bs.size(); ++i)
    if (ab.is_inverse_pair(block_last_letter(bs[i]), block_first_letter(bs[i + 1]))) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (w.empty()) return true;
  if (!is_freely_reduced(w)) return false;
  return !w.alphabet()->is_inverse_pair(last_letter(w), first_letter(w));
}

std::vector<LetterId> finite_letters(const Word& w, long cap) {
  if (w.degree() > 0) throw invalid_input_error("cannot expand an infinite word into letters");
  auto n = w.length().as_long();
  if (!n || *n > cap) throw cap_exceeded_error("letter expansion exceeds cap");
  std::vector<LetterId> out;
  out.reserve(static_cast<size_t>(*n));
  for (const auto& b : w.blocks()) {
    if (const auto* f = std::get_if<FiniteBlock>(&b)) {
      out.insert(out.end(), f->letters.begin(), f->letters.end());
    } else if (const auto* p = std::get_if<PowerBlock>(&b)) {
      auto sub = finite_letters(*p->base, cap);
      long k = p->exp.get_si();
      for (long i = 0; i < k; ++i) out.insert(out.end(), sub.begin(), sub.end());
    } else {
      throw invalid_input_error("atom inside a finite word");
    }
  }
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  const auto& ab = *w.alphabet();
  std::ostringstream os;
  bool first = true;
  for (const auto& b : w.blocks()) {
    if (!first) os << ' ';
    first = false;
    if (const auto* f = std::get_if<FiniteBlock>(&b)) {
      for (size_t i = 0; i < f->letters.size(); ++i) {
        if (i) os << ' ';
        os << ab.name(f->letters[i]);
      }
    } else if (const auto* p = std::get_if<PowerBlock>(&b)) {
      os << '(' << word_str(*p->base) << ")^" << p->exp.get_str();
    } else {
      const auto& a = std::get<AtomBlock>(b);
      os << '[' << word_str(*a.rho) << " ...)(... " << word_str(*a.lambda) << "]{" << a.level;
      if (!a.offset.is_zero()) os << ";c=" << a.offset.str();
      os << '}';
    }
  }
  return os.str();
}

}  // namespace extword
