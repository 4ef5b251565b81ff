#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "synclab/dfa.hpp"
#include "synclab/word_matrix.hpp"

namespace synclab {

using IntVector = std::vector<std::int64_t>;

/// Row-major embedding of an n x n matrix into Z^(n*n).
IntVector flatten(const RowMonoMatrix& m);

/// A matrix that entered a basis unreduced, together with its word.
struct Generator {
  Word word;
  RowMonoMatrix matrix;
};

/// Exact linear span of flattened n x n matrices.
///
/// Rows are kept in reduced echelon form: each row is a primitive integer
/// vector (content 1) with a positive pivot, and every pivot column is zero in
/// all other rows. Arithmetic is checked; an overflow throws instead of
/// silently losing exactness.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<IntVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  /// Residual of v after elimination against the basis (zero iff v is in the span).
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;
  bool contains(const RowMonoMatrix& m) const { return contains(flatten(m)); }

  /// Adds v when it is independent of the span. Returns whether the dimension grew.
  bool try_insert(IntVector v);
  /// As above, and records (word, m) as a generator when admitted.
  bool try_insert(const RowMonoMatrix& m, const Word& word);

 private:
  void admit(IntVector residual);

  std::size_t n_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Generator> generators_;
};

/// The n(k-1) matrices V_{i,j} (unit at (i,j) for j < k-1, all other rows in
/// column k-1) followed by K (every row in column k-1). Requires 2 <= k <= n.
std::vector<RowMonoMatrix> canonical_basis(std::size_t n, std::size_t k);

/// Dimension of the span of all k^n row-monomial matrices whose units lie in
/// the first k columns. Throws std::length_error when k^n exceeds `limit`.
std::size_t span_dimension_of_all(std::size_t n, std::size_t k, std::uint64_t limit = 10'000'000);

}  // namespace synclab
