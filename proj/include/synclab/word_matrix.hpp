#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "synclab/dfa.hpp"

namespace synclab {

/// 0/1 square matrix with exactly one unit per row, stored as the column index
/// of each row's unit. This is the matrix of the state mapping induced by a word.
class RowMonoMatrix {
 public:
  explicit RowMonoMatrix(std::vector<State> img);
  static RowMonoMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return img_.size(); }
  State column_of(std::size_t row) const { return img_[row]; }
  std::span<const State> img() const noexcept { return img_; }

  friend bool operator==(const RowMonoMatrix&, const RowMonoMatrix&) = default;

 private:
  std::vector<State> img_;
};

using ColumnSet = IndexSet;

RowMonoMatrix matrix_of_word(const Dfa& dfa, const Word& w);

/// Product x*y; row i of the result has its unit at y.img[x.img[i]].
RowMonoMatrix mat_mul(const RowMonoMatrix& x, const RowMonoMatrix& y);

ColumnSet nonzero_columns(const RowMonoMatrix& m);

/// Number of nonzero columns, which equals the linear-algebra rank.
std::size_t rank(const RowMonoMatrix& m);

bool is_permutation(const RowMonoMatrix& m);

/// Units per column.
std::vector<std::size_t> column_unit_counts(const RowMonoMatrix& m);

using DenseMatrix = std::vector<std::vector<long long>>;

DenseMatrix expand(const RowMonoMatrix& m);

/// Rank of an integer matrix by fraction-free elimination. Independent of the
/// span engine; used to audit rank() against linear algebra.
std::size_t dense_rank(DenseMatrix m);

/// One "row i -> col j" line per row.
std::string render_matrix(const RowMonoMatrix& m);

}  // namespace synclab
