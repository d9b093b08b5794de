#pragma once

/// Internal sparse column elimination shared by the normal-form routines and
/// the cochain machinery.  Columns are kept sorted by row index; elimination
/// uses gcd steps with nearest-quotient reduction and a smallest-pivot rule,
/// which keeps intermediate entries small in practice.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "galbrauer/intmat.hpp"

namespace galbrauer::detail {

using SparseCol = std::vector<std::pair<std::size_t, Int>>;

struct SparseMat {
  std::size_t rows = 0;
  std::vector<SparseCol> cols;

  std::size_t ncols() const { return cols.size(); }
  void add_entry(std::size_t col, std::size_t row, Int v) {
    if (v != 0) cols[col].emplace_back(row, std::move(v));
  }
  /// Sorts every column by row and merges duplicate rows.
  void normalize();
};

SparseMat to_sparse(const IntMatrix& a);
IntMatrix to_dense(const SparseMat& a);
IntVector col_to_dense(const SparseCol& c, std::size_t rows);

/// y += k * x, keeping y sorted and free of explicit zeros.
void axpy(SparseCol& y, const Int& k, const SparseCol& x);

/// Sparse product a * b (a given by columns).
SparseMat mul(const SparseMat& a, const SparseMat& b);

/// Column echelon form reached by unimodular column operations.
/// h[c] = (original matrix) * t[c] columnwise; pivot list is ascending in
/// row, pivot values positive, and every non-pivot column is zero.
struct Echelon {
  std::size_t rows = 0;
  std::vector<SparseCol> h;
  std::vector<SparseCol> t; // empty when built without transform
  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
  bool with_transform = false;
  /// Number of leading transform coordinates actually tracked; the
  /// remaining coordinates are dropped when a caller only consumes the top
  /// block of the transform.
  std::size_t transform_rows = 0;

  std::size_t rank() const { return pivots.size(); }
  std::vector<std::size_t> zero_columns() const;
  bool contains(const IntVector& b) const;
  /// Coordinates w.r.t. the original columns (needs the full transform).
  std::optional<IntVector> solve(const IntVector& b) const;
};

Echelon echelonize(SparseMat a, bool with_transform);

/// Same elimination, but the transform keeps only coordinates on the first
/// transform_rows columns.  Projection onto a leading block commutes with
/// column operations, so the tracked block stays exact while the axpy work
/// on the transform shrinks with it.
Echelon echelonize_top(SparseMat a, std::size_t transform_rows);

/// Reduces aligned row blocks of a column against a fixed relation
/// lattice.  Rows are grouped into consecutive blocks of block_rows; the
/// same lattice applies to every block.  Reduction keeps the entries at
/// the lattice pivot rows small, which is what stops entry growth when a
/// system of quotient-group coordinates is eliminated.
class BlockReducer {
public:
  BlockReducer(std::size_t block_rows, const IntMatrix& block_relations);

  std::size_t block_rows() const { return block_rows_; }
  bool trivial() const { return leads_.empty(); }
  void reduce(SparseCol& c) const;

private:
  std::size_t block_rows_;
  IntMatrix basis_; // column echelon of the block relations
  std::vector<std::size_t> leads_; // leading row of each basis column
};

/// echelonize_top with blockwise reduction of every working column.  Each
/// reduction silently adds lattice columns, so the caller must append the
/// per-block relation columns after the first transform_rows columns and
/// only consume the tracked top of the transform.  Appended relation
/// columns are left unreduced initially; that is what lets a column whose
/// image is torsion surface its annihilating multiple as a kernel vector.
Echelon echelonize_top_reduced(SparseMat a, std::size_t transform_rows,
                               const BlockReducer& reducer);

/// Forward substitution against an echelon; fills original-column
/// coordinates when coords is non-null.
bool forward_solve(const Echelon& e, const IntVector& b, IntVector* coords);

} // namespace galbrauer::detail
