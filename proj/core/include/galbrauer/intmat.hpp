#pragma once

/// Dense matrices over the integers with exact arithmetic (GMP), plus the
/// normal-form and linear-system routines everything else is built on.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "galbrauer/errors.hpp"

namespace galbrauer {

using Int = mpz_class;
using IntVector = std::vector<Int>;

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transpose() const;
  IntVector col(std::size_t j) const;
  void set_col(std::size_t j, const IntVector& v);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[a] += c * row[b]
  void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
  /// col[a] += c * col[b]
  void add_col_multiple(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  std::string to_string() const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

/// [A | B], row counts must match.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [A; B], column counts must match.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

/// Quotient nearest to a/b (|remainder| <= |b|/2); b must be nonzero.
Int rounded_div(const Int& a, const Int& b);

/// U * A * V = D with U, V unimodular, D diagonal, nonnegative entries,
/// and d1 | d2 | ... | dk.  D is unique given A.
struct SnfDecomposition {
  IntMatrix U; // rows x rows
  IntMatrix D; // rows x cols
  IntMatrix V; // cols x cols
};

SnfDecomposition snf(const IntMatrix& a);

/// Diagonal of an SNF without the transforms.
std::vector<Int> snf_diagonal(const IntMatrix& a);

/// H = A * U in column-style Hermite normal form, U unimodular.  Nonzero
/// columns come first with strictly increasing pivot rows and positive
/// pivots; within a pivot row, entries in earlier columns are reduced into
/// [0, pivot).  The column span of H equals the column span of A.
struct HermiteDecomposition {
  IntMatrix H; // rows x cols
  IntMatrix U; // cols x cols
};

HermiteDecomposition hnf(const IntMatrix& a);

/// Basis of the integer kernel {x : A x = 0} as matrix columns.  The basis
/// is saturated: the span is a direct summand of Z^cols.
IntMatrix kernel_basis(const IntMatrix& a);

/// First k rows of a kernel basis of A, i.e. the coordinates of kernel
/// vectors on the leading k columns.  Much cheaper than kernel_basis when
/// the trailing columns are a large relation block whose coordinates the
/// caller discards.
IntMatrix kernel_basis_top(const IntMatrix& a, std::size_t k);

/// One integer solution of A x = b, or nullopt when none exists.
std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);

std::size_t rank(const IntMatrix& a);

/// Exact determinant (square input) by fraction-free elimination.
Int determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws "not-unimodular" otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Precomputed column echelon form of a fixed matrix, for repeated
/// membership tests and solves against the same column span.
class ColumnSpan {
public:
  explicit ColumnSpan(const IntMatrix& a);
  ~ColumnSpan();
  ColumnSpan(ColumnSpan&&) noexcept;
  ColumnSpan& operator=(ColumnSpan&&) noexcept;
  ColumnSpan(const ColumnSpan&);
  ColumnSpan& operator=(const ColumnSpan&);

  std::size_t rank() const;
  bool contains(const IntVector& v) const;
  /// Coordinates w.r.t. the original columns of A, or nullopt.
  std::optional<IntVector> solve(const IntVector& v) const;
  IntMatrix kernel() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace galbrauer
