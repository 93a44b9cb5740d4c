#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "extword/errors.hpp"

namespace extword {

using LetterId = int;

// Alphabet Gamma = Sigma u ~Sigma with an involution. Fixed points are
// allowed (order-2 generators map a letter to itself).
class Alphabet {
public:
  // Standard shape: every base symbol s gets a partner ~s.
  static std::shared_ptr<const Alphabet> with_inverses(const std::vector<std::string>& base);
  // Custom shape: names[i] paired with inverse_of[i]; fixed points allowed.
  static std::shared_ptr<const Alphabet> custom(std::vector<std::string> names,
                                                std::vector<LetterId> inverse_of);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(LetterId a) const { return names_[static_cast<size_t>(a)]; }
  LetterId inverse(LetterId a) const { return inverse_[static_cast<size_t>(a)]; }
  bool is_inverse_pair(LetterId a, LetterId b) const { return inverse(a) == b; }

  // Accepts "x" and "~x" spellings.
  LetterId find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw invalid_input_error("unknown letter: " + name);
    return it->second;
  }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  // The base symbols (one representative per involution orbit).
  const std::vector<LetterId>& base_letters() const { return base_; }

private:
  std::vector<std::string> names_;
  std::vector<LetterId> inverse_;
  std::vector<LetterId> base_;
  std::unordered_map<std::string, LetterId> index_;
};

}  // namespace extword
