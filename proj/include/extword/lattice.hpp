#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extword/exponent.hpp"

namespace extword {

// A subgroup of Z^dims kept in Hermite normal form: at most one basis row
// per degree, positive leading coefficient, off-pivot entries reduced into
// [0, pivot) by the lower rows.
class PeriodLattice {
public:
  explicit PeriodLattice(int dims) : dims_(dims), rows_(static_cast<size_t>(dims)) {}
  static PeriodLattice trivial(int dims) { return PeriodLattice(dims); }
  static PeriodLattice from_generators(int dims, const std::vector<Exponent>& gens) {
    PeriodLattice L(dims);
    for (const auto& g : gens) L.insert(g);
    return L;
  }

  int dims() const { return dims_; }
  void insert(Exponent v);
  bool member(const Exponent& v) const { return reduce(v).is_zero(); }
  // Canonical residue of v modulo the lattice.
  Exponent reduce(Exponent v) const;
  std::optional<Exponent> row_of_degree(int d) const {
    if (d < 0 || d >= dims_) return std::nullopt;
    return rows_[static_cast<size_t>(d)];
  }
  // Basis rows in ascending degree order.
  std::vector<Exponent> rows() const;
  bool is_trivial() const { return rows().empty(); }
  int rank() const { return static_cast<int>(rows().size()); }

  friend bool operator==(const PeriodLattice& a, const PeriodLattice& b) {
    return a.dims_ == b.dims_ && a.rows() == b.rows();
  }
  friend PeriodLattice intersect(const PeriodLattice& a, const PeriodLattice& b);

  std::string str() const;

private:
  void renormalize();
  int dims_;
  std::vector<std::optional<Exponent>> rows_;  // indexed by degree
};

}  // namespace extword
