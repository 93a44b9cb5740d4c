#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extword/alphabet.hpp"
#include "extword/exponent.hpp"

namespace extword {

// The pluggable base group G: confluent normal forms on finite words over
// Gamma, triviality, cyclic membership with witness exponent, and (where
// available) geodesic lengths. Implementations are stateless and re-entrant.
class BaseGroup {
public:
  virtual ~BaseGroup() = default;

  virtual const std::shared_ptr<const Alphabet>& alphabet() const = 0;
  virtual std::vector<LetterId> normal_form(const std::vector<LetterId>& u) const = 0;
  virtual bool is_trivial(const std::vector<LetterId>& u) const { return normal_form(u).empty(); }
  // m with u = v^m in G, if any.
  virtual std::optional<Int> cyclic_member(const std::vector<LetterId>& u,
                                           const std::vector<LetterId>& v) const = 0;
  virtual std::optional<long> geodesic_length(const std::vector<LetterId>& u) const = 0;

  virtual bool is_free() const { return false; }
  virtual bool is_finite_group() const { return false; }
  virtual bool is_infinite() const { return !is_finite_group(); }
  virtual std::string describe() const = 0;

  // true iff every factor of u is geodesic; requires the capability.
  bool is_local_geodesic_window(const std::vector<LetterId>& u) const;

  std::vector<LetterId> involute_letters(const std::vector<LetterId>& u) const;
};

using BaseGroupPtr = std::shared_ptr<const BaseGroup>;

BaseGroupPtr make_free_group(const std::vector<std::string>& generators);
BaseGroupPtr make_free_abelian(int rank);
BaseGroupPtr make_cyclic_z();
BaseGroupPtr make_finite_table(const std::string& json_text);

// CLI specifiers: free:a,b[,c...] | abelian:k | cyclic | table:FILE
BaseGroupPtr make_group(const std::string& spec);

}  // namespace extword
