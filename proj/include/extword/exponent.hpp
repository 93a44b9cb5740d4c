#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "extword/errors.hpp"

namespace extword {

using Int = mpz_class;

// deg(0) is a distinguished bottom value below every integer degree.
inline constexpr int kBottomDegree = -1;

// An element of A = Z^{dims} under the lexicographic order by degree:
// coeffs[i] is the coefficient of t^i. All exponents in one session share
// the same dims (= d_max + 1).
class Exponent {
public:
  Exponent() : coeffs_(1, Int(0)) {}
  explicit Exponent(int dims) : coeffs_(static_cast<size_t>(dims), Int(0)) {
    if (dims < 1) throw invalid_input_error("exponent dimension must be >= 1");
  }
  static Exponent from_coeffs(std::vector<Int> cs) {
    if (cs.empty()) throw invalid_input_error("exponent needs at least one coefficient");
    Exponent e;
    e.coeffs_ = std::move(cs);
    return e;
  }
  // 1_A = the least positive element (unit coefficient at index 0).
  static Exponent unit(int dims) { return monomial(dims, 0, 1); }
  static Exponent monomial(int dims, int deg, Int coeff = Int(1)) {
    Exponent e(dims);
    if (deg < 0 || deg >= dims) throw invalid_input_error("monomial degree out of range");
    e.coeffs_[static_cast<size_t>(deg)] = std::move(coeff);
    return e;
  }

  int dims() const { return static_cast<int>(coeffs_.size()); }
  const Int& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

  int degree() const {
    for (int i = dims() - 1; i >= 0; --i)
      if (coeffs_[static_cast<size_t>(i)] != 0) return i;
    return kBottomDegree;
  }
  bool is_zero() const { return degree() == kBottomDegree; }
  bool positive() const {
    int d = degree();
    return d >= 0 && coeffs_[static_cast<size_t>(d)] > 0;
  }
  const Int& leading() const {
    static const Int zero(0);
    int d = degree();
    return d == kBottomDegree ? zero : coeffs_[static_cast<size_t>(d)];
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    check_dims(a, b);
    Exponent r(a.dims());
    for (int i = 0; i < a.dims(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    check_dims(a, b);
    Exponent r(a.dims());
    for (int i = 0; i < a.dims(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  Exponent operator-() const {
    Exponent r(dims());
    for (int i = 0; i < dims(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }
  friend Exponent operator*(const Int& k, const Exponent& a) {
    Exponent r(a.dims());
    for (int i = 0; i < a.dims(); ++i) r.coeffs_[i] = k * a.coeffs_[i];
    return r;
  }
  Exponent& operator+=(const Exponent& b) { return *this = *this + b; }
  Exponent& operator-=(const Exponent& b) { return *this = *this - b; }

  // cmp by the sign of the leading coefficient of b - a.
  friend int cmp(const Exponent& a, const Exponent& b) {
    check_dims(a, b);
    for (int i = a.dims() - 1; i >= 0; --i) {
      int c = ::cmp(a.coeffs_[static_cast<size_t>(i)], b.coeffs_[static_cast<size_t>(i)]);
      if (c != 0) return c;
    }
    return 0;
  }
  friend bool operator==(const Exponent& a, const Exponent& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Exponent& a, const Exponent& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Exponent& a, const Exponent& b) { return cmp(a, b) >= 0; }

  // Literal syntax [a0,a1,...,ak]; missing high coefficients are zero.
  std::string str() const;
  static Exponent parse(const std::string& text, int dims);

  // Small-integer view for finite lengths (degree <= 0).
  std::optional<long> as_long() const {
    if (degree() > 0) return std::nullopt;
    if (!coeffs_[0].fits_slong_p()) return std::nullopt;
    return coeffs_[0].get_si();
  }

private:
  static void check_dims(const Exponent& a, const Exponent& b) {
    if (a.dims() != b.dims()) throw invalid_input_error("exponent dimension mismatch");
  }
  std::vector<Int> coeffs_;
};

inline Exponent operator+(const Exponent& a, long n) { return a + Exponent::monomial(a.dims(), 0, n); }
inline Exponent operator-(const Exponent& a, long n) { return a - Exponent::monomial(a.dims(), 0, n); }

// beta = quot * mu + rem with 0 <= rem < mu and an ordinary integer quot.
// Requires mu > 0 and deg(beta) <= deg(mu), otherwise the quotient would
// not be an integer.
struct FloorDiv {
  Int quot;
  Exponent rem;
};
FloorDiv floor_div(const Exponent& beta, const Exponent& mu);

// Closed interval [lo, hi] with a distinguished empty value.
class Interval {
public:
  static Interval empty(int dims) { return Interval(dims); }
  Interval(Exponent lo, Exponent hi) : lo_(std::move(lo)), hi_(std::move(hi)), empty_(false) {
    if (lo_ > hi_) throw invalid_input_error("interval with lo > hi; use Interval::empty");
  }
  bool is_empty() const { return empty_; }
  const Exponent& lo() const { return lo_; }
  const Exponent& hi() const { return hi_; }

private:
  explicit Interval(int dims) : lo_(dims), hi_(dims), empty_(true) {}
  Exponent lo_, hi_;
  bool empty_;
};

// hi - lo + 1_A; the empty interval has length 0.
Exponent interval_length(const Interval& iv);

}  // namespace extword
