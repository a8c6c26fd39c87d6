#include "torext/exactlin.hpp"

#include <algorithm>
#include <utility>

#include "torext/errors.hpp"

namespace torext {

IntVector::IntVector(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntVector& IntVector::operator+=(const IntVector& rhs) {
  if (rhs.size() != size()) throw DimensionError("vector length mismatch in addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& rhs) {
  if (rhs.size() != size()) throw DimensionError("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

IntVector IntVector::unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw DimensionError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw DimensionError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix shape mismatch in product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << m.row(r);
  }
  return os << ']';
}

std::size_t SNFResult::rank() const {
  std::size_t k = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (k < n && D(k, k) != 0) ++k;
  return k;
}

std::vector<Integer> SNFResult::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Reduces the entry at (t, t) until it divides, and has cleared, the rest of
// row t and column t. Returns false when the trailing block is zero.
bool settle_pivot(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  for (;;) {
    // Smallest nonzero magnitude in the trailing block.
    std::size_t pr = m, pc = n;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c) {
        if (d(r, c) == 0) continue;
        if (pr == m || abs(d(r, c)) < abs(d(pr, pc))) {
          pr = r;
          pc = c;
        }
      }
    if (pr == m) return false;
    d.swap_rows(t, pr);
    u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    v.swap_cols(t, pc);

    bool clean = true;
    for (std::size_t r = t + 1; r < m; ++r) {
      if (d(r, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
      d.add_row_multiple(r, t, -q);
      u.add_row_multiple(r, t, -q);
      if (d(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < n; ++c) {
      if (d(t, c) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
      d.add_col_multiple(c, t, -q);
      v.add_col_multiple(c, t, -q);
      if (d(t, c) != 0) clean = false;
    }
    if (!clean) continue;

    // Divisibility of the trailing block: fold an offending row into row t.
    bool divides = true;
    for (std::size_t r = t + 1; r < m && divides; ++r)
      for (std::size_t c = t + 1; c < n; ++c) {
        if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
          d.add_row_multiple(t, r, Integer(1));
          u.add_row_multiple(t, r, Integer(1));
          divides = false;
          break;
        }
      }
    if (divides) return true;
  }
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  SNFResult res{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    if (!settle_pivot(res.D, res.U, res.V, t)) break;
    if (res.D(t, t) < 0) {
      res.D.negate_row(t);
      res.U.negate_row(t);
    }
  }
  return res;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve_integer: rows(A) != rows(b)");
  const SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const IntMatrix ub = snf.U * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t k = 0; k < b.cols(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < r) {
        if (!mpz_divisible_p(ub(i, k).get_mpz_t(), snf.D(i, i).get_mpz_t())) return std::nullopt;
        mpz_divexact(y(i, k).get_mpz_t(), ub(i, k).get_mpz_t(), snf.D(i, i).get_mpz_t());
      } else if (ub(i, k) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf.V * y;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve_integer: rows(A) != len(b)");
  auto x = solve_integer(a, IntMatrix::from_columns(b.size(), {b}));
  if (!x) return std::nullopt;
  return x->column(0);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix k(a.cols(), a.cols() - r);
  for (std::size_t c = r; c < a.cols(); ++c)
    for (std::size_t i = 0; i < a.cols(); ++i) k(i, c - r) = snf.V(i, c);
  return k;
}

bool lattice_membership(const IntMatrix& basis, const IntVector& v) {
  if (basis.rows() != v.size()) throw DimensionError("lattice_membership: basis rows != len(v)");
  return solve_integer(basis, v).has_value();
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  return g;
}

}  // namespace torext
