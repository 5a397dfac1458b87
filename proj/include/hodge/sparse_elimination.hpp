#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hodge/exact_matrix.hpp"
#include "hodge/rational.hpp"

namespace hodge {

/// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Row-oriented sparse matrix over Q. Rows play the role of generators of a
/// row space; the column index doubles as pivot preference (lower index is
/// eliminated first, so it becomes a pivot whenever possible).
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Accumulates value into entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& value);
  /// Sorts and compacts rows; call once after the last add().
  void finalize();

  const SparseVector& row(std::size_t r) const { return rows_[r]; }

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

/// One connected component of the row/column incidence graph.
struct MatrixBlock {
  std::vector<std::size_t> rows;  // ascending global row ids
  std::vector<std::size_t> cols;  // ascending global column ids
};

/// Splits the matrix into independent blocks (union-find on columns linked
/// by shared rows). Zero rows are dropped; untouched columns are singleton
/// blocks with no rows.
std::vector<MatrixBlock> connected_blocks(const SparseMatrix& m);

/// Certified reduced echelon form of one block's row space.
///
/// Independent generator rows are preselected modulo a 31-bit prime (a
/// rank lower bound), their span is put in reduced form by fraction-free
/// elimination over Z, and every remaining generator is then reduced to
/// zero exactly over Q. Any generator that fails to reduce is promoted and
/// the echelon recomputed, so the reported rank is always the rational rank.
class BlockEchelon {
 public:
  BlockEchelon(const SparseMatrix& m, const MatrixBlock& block);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
  const std::vector<std::size_t>& basis_rows() const { return basis_rows_; }
  /// Reduced rows in global column indices; row i has a 1 at pivot_cols()[i].
  const std::vector<SparseVector>& reduced_rows() const { return reduced_; }

  /// Subtracts the row-space component: returns the normal form of v,
  /// supported on non-pivot columns. Entries outside the block pass through.
  SparseVector reduce(const SparseVector& v) const;

  /// Coefficients y (indexed like basis_rows()) with sum_i y_i * row_i == v,
  /// for v already known to lie in the row space.
  RationalVector lift(const SparseMatrix& m, const SparseVector& v) const;

 private:
  void compute(const SparseMatrix& m, const MatrixBlock& block);

  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> basis_rows_;
  std::vector<SparseVector> reduced_;
  std::vector<std::pair<std::size_t, std::size_t>> pivot_index_;  // (col, row in reduced_)
  mutable std::shared_ptr<const ExactMatrix> lift_inverse_;
};

/// Ceiling on the dimension of any single dense elimination block, taken
/// from HODGE_MAX_MATRIX_DIM (default 6000). Throws BudgetExceeded.
void check_work_budget(std::size_t rows, std::size_t cols);
std::size_t work_budget();

/// Total rank of a sparse matrix, block by block.
std::size_t sparse_rank(const SparseMatrix& m);

/// Rank over F_p (p < 2^32), a lower bound for the rational rank; nullopt
/// when some denominator vanishes mod p.
std::optional<std::size_t> sparse_rank_mod_p(const SparseMatrix& m, std::uint64_t p = 2147483647ULL);

}  // namespace hodge
