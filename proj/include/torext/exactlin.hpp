#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torext {

using Integer = mpz_class;

// Dense vector of arbitrary-precision integers. The length is fixed at
// construction.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n, Integer(0)) {}
  IntVector(std::initializer_list<long> values);
  explicit IntVector(std::vector<Integer> values) : entries_(std::move(values)) {}

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;

  IntVector& operator+=(const IntVector& rhs);
  IntVector& operator-=(const IntVector& rhs);
  IntVector& operator*=(const Integer& s);

  friend IntVector operator+(IntVector lhs, const IntVector& rhs) { return lhs += rhs; }
  friend IntVector operator-(IntVector lhs, const IntVector& rhs) { return lhs -= rhs; }
  friend IntVector operator-(IntVector v) { return v *= Integer(-1); }
  friend IntVector operator*(const Integer& s, IntVector v) { return v *= s; }
  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }

  static IntVector unit(std::size_t n, std::size_t i);

 private:
  std::vector<Integer> entries_;
};

Integer dot(const IntVector& a, const IntVector& b);

// Dense row-major integer matrix with immutable dimensions.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  // Elementary operations used by the normal form reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  IntMatrix& operator*=(const Integer& s);

  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
  friend IntMatrix operator-(IntMatrix m) { return m *= Integer(-1); }
  friend IntMatrix operator*(const Integer& s, IntMatrix m) { return m *= s; }
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

std::ostream& operator<<(std::ostream& os, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  // Number of nonzero invariant factors.
  std::size_t rank() const;
  std::vector<Integer> invariant_factors() const;
};

SNFResult smith_normal_form(const IntMatrix& a);

// Some x with A x = b over the integers, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);
// Column-wise solve of A X = B.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

// Columns form a saturated basis of the integer kernel {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// True iff v is an integer combination of the columns of basis.
bool lattice_membership(const IntMatrix& basis, const IntVector& v);

std::size_t rank(const IntMatrix& a);

// Fraction-free (Bareiss) determinant; independent of the Smith reduction.
Integer determinant(const IntMatrix& a);

// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

}  // namespace torext
