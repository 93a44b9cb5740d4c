#include "extword/alphabet.hpp"

namespace extword {

std::shared_ptr<const Alphabet> Alphabet::with_inverses(const std::vector<std::string>& base) {
  auto ab = std::make_shared<Alphabet>();
  for (const auto& s : base) {
    if (s.empty() || s[0] == '~') throw invalid_input_error("bad base symbol: " + s);
    if (ab->index_.count(s)) throw invalid_input_error("duplicate symbol: " + s);
    LetterId pos = static_cast<LetterId>(ab->names_.size());
    ab->names_.push_back(s);
    ab->names_.push_back("~" + s);
    ab->inverse_.push_back(pos + 1);
    ab->inverse_.push_back(pos);
    ab->index_[s] = pos;
    ab->index_["~" + s] = pos + 1;
    ab->base_.push_back(pos);
  }
  return ab;
}

std::shared_ptr<const Alphabet> Alphabet::custom(std::vector<std::string> names,
                                                 std::vector<LetterId> inverse_of) {
  if (names.size() != inverse_of.size()) throw invalid_input_error("alphabet shape mismatch");
  auto ab = std::make_shared<Alphabet>();
  ab->names_ = std::move(names);
  ab->inverse_ = std::move(inverse_of);
  int n = ab->size();
  for (LetterId a = 0; a < n; ++a) {
    LetterId inv = ab->inverse_[static_cast<size_t>(a)];
    if (inv < 0 || inv >= n || ab->inverse_[static_cast<size_t>(inv)] != a)
      throw invalid_input_error("involution is not self-inverse");
    if (ab->index_.count(ab->names_[static_cast<size_t>(a)]))
      throw invalid_input_error("duplicate symbol: " + ab->names_[static_cast<size_t>(a)]);
    ab->index_[ab->names_[static_cast<size_t>(a)]] = a;
    if (inv >= a) ab->base_.push_back(a);
  }
  return ab;
}

}  // namespace extword
