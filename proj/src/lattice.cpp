#include "extword/lattice.hpp"

#include <sstream>

namespace extword {

namespace {

// g = a*x + b*y, g > 0 for (x,y) != (0,0).
void ext_gcd(const Int& x, const Int& y, Int& g, Int& a, Int& b) {
  mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

}  // namespace

void PeriodLattice::insert(Exponent v) {
  if (v.dims() != dims_) throw invalid_input_error("lattice dimension mismatch");
  for (;;) {
    int d = v.degree();
    if (d == kBottomDegree) break;
    auto& slot = rows_[static_cast<size_t>(d)];
    if (!slot) {
      slot = v.positive() ? v : -v;
      break;
    }
    const Exponent& r = *slot;
    Int g, a, b;
    ext_gcd(r.coeff(d), v.coeff(d), g, a, b);
    Exponent np = a * r + b * v;
    Exponent rest = (r.coeff(d) / g) * v - (v.coeff(d) / g) * r;  // degree < d
    slot = np.positive() ? np : -np;
    v = std::move(rest);
  }
  renormalize();
}

void PeriodLattice::renormalize() {
  for (int e = 0; e < dims_; ++e) {
    auto& re = rows_[static_cast<size_t>(e)];
    if (!re) continue;
    for (int d = e - 1; d >= 0; --d) {
      const auto& rd = rows_[static_cast<size_t>(d)];
      if (!rd || re->coeff(d) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), re->coeff(d).get_mpz_t(), rd->coeff(d).get_mpz_t());
      if (q != 0) re = *re - q * *rd;
    }
  }
}

Exponent PeriodLattice::reduce(Exponent v) const {
  if (v.dims() != dims_) throw invalid_input_error("lattice dimension mismatch");
  for (int d = dims_ - 1; d >= 0; --d) {
    const auto& rd = rows_[static_cast<size_t>(d)];
    if (!rd || v.coeff(d) == 0) continue;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v.coeff(d).get_mpz_t(), rd->coeff(d).get_mpz_t());
    if (q != 0) v = v - q * *rd;
  }
  return v;
}

std::vector<Exponent> PeriodLattice::rows() const {
  std::vector<Exponent> out;
  for (int d = 0; d < dims_; ++d)
    if (rows_[static_cast<size_t>(d)]) out.push_back(*rows_[static_cast<size_t>(d)]);
  return out;
}

PeriodLattice intersect(const PeriodLattice& a, const PeriodLattice& b) {
  if (a.dims_ != b.dims_) throw invalid_input_error("lattice dimension mismatch");
  int dims = a.dims_;
  std::vector<Exponent> ra = a.rows(), rb = b.rows();
  if (ra.empty() || rb.empty()) return PeriodLattice(dims);
  // Kernel method: rows M = [ra; -rb]; z*M = 0 => (z restricted to ra part)*ra
  // lies in both lattices.
  size_t n = ra.size() + rb.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(static_cast<size_t>(dims), Int(0)));
  for (size_t i = 0; i < ra.size(); ++i)
    for (int d = 0; d < dims; ++d) m[i][static_cast<size_t>(d)] = ra[i].coeff(d);
  for (size_t j = 0; j < rb.size(); ++j)
    for (int d = 0; d < dims; ++d) m[ra.size() + j][static_cast<size_t>(d)] = -rb[j].coeff(d);
  // unimodular transform U with U*m in row echelon form; kernel = U-rows of zero rows
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  size_t row = 0;
  for (int col = dims - 1; col >= 0 && row < n; --col) {
    // eliminate column col below/at `row` by gcd pivoting
    for (;;) {
      size_t piv = n;
      for (size_t i = row; i < n; ++i)
        if (m[i][static_cast<size_t>(col)] != 0) {
          piv = i;
          break;
        }
      if (piv == n) break;
      std::swap(m[row], m[piv]);
      std::swap(u[row], u[piv]);
      bool cleared = true;
      for (size_t i = row + 1; i < n; ++i) {
        if (m[i][static_cast<size_t>(col)] == 0) continue;
        Int g, s, t;
        ext_gcd(m[row][static_cast<size_t>(col)], m[i][static_cast<size_t>(col)], g, s, t);
        Int p = m[row][static_cast<size_t>(col)] / g, q = m[i][static_cast<size_t>(col)] / g;
        for (size_t c = 0; c < static_cast<size_t>(dims); ++c) {
          Int mr = s * m[row][c] + t * m[i][c];
          Int mi = p * m[i][c] - q * m[row][c];
          m[row][c] = mr;
          m[i][c] = mi;
        }
        for (size_t c = 0; c < n; ++c) {
          Int ur = s * u[row][c] + t * u[i][c];
          Int ui = p * u[i][c] - q * u[row][c];
          u[row][c] = ur;
          u[i][c] = ui;
        }
        cleared = false;
      }
      if (cleared) {
        ++row;
        break;
      }
    }
  }
  PeriodLattice out(dims);
  for (size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (int d = 0; d < dims && zero; ++d) zero = m[i][static_cast<size_t>(d)] == 0;
    if (!zero) continue;
    // kernel row: combination of the ra part gives an intersection element
    Exponent v(dims);
    for (size_t j = 0; j < ra.size(); ++j)
      if (u[i][j] != 0) v += u[i][j] * ra[j];
    if (!v.is_zero()) out.insert(v);
  }
  return out;
}

std::string PeriodLattice::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& r : rows()) {
    if (!first) os << ", ";
    first = false;
    os << r.str();
  }
  os << '}';
  return os.str();
}

std::string lattice_str(const PeriodLattice& l);

}  // namespace extword
