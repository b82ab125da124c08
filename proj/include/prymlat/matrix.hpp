#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prymlat {

// All lattice arithmetic is exact.  Smith normal form intermediates can blow
// up well past 64 bits even for small inputs, so entries are arbitrary
// precision throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);
  static IntegerMatrix column_vector(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_identity() const;

  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-() const;
  bool operator==(const IntegerMatrix&) const = default;

  IntegerMatrix scaled(const Int& c) const;

  std::vector<Int> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Int>& v);
  std::vector<Int> apply(const std::vector<Int>& v) const;

  // Elementary row/column operations, the building blocks of the normal-form
  // routines below.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;  // row-major
};

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks);
IntegerMatrix matrix_power(const IntegerMatrix& a, long long e);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntegerMatrix& a);

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
// Deterministic for a given input: pivots are chosen smallest in absolute
// value, ties broken by lowest row then lowest column index.
struct SmithDecomposition {
  IntegerMatrix u, d, v;
  std::size_t rank() const;
  std::vector<Int> divisors() const;  // the nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Same computation, additionally tracking the inverses of U and V.  The
// inverse columns are what saturation needs.
struct SmithExtended {
  IntegerMatrix u, u_inv, d, v, v_inv;
  std::size_t rank() const;
};

SmithExtended smith_extended(const IntegerMatrix& a);

// Canonical Hermite forms.  hermite_row_basis returns the unique row-echelon
// basis of the row lattice (positive pivots, entries above a pivot reduced
// into [0, pivot), zero rows dropped); hermite_column_basis is the same for
// the column lattice.  Lattice equality is equality of these bases.
IntegerMatrix hermite_row_basis(const IntegerMatrix& a);
IntegerMatrix hermite_column_basis(const IntegerMatrix& a);

std::size_t rational_rank(const IntegerMatrix& a);

}  // namespace prymlat
