#include "synclab/word_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace synclab {

RowMonoMatrix::RowMonoMatrix(std::vector<State> img) : img_(std::move(img)) {
  for (auto j : img_)
    if (j >= img_.size()) throw std::invalid_argument("row unit outside the matrix");
}

RowMonoMatrix RowMonoMatrix::identity(std::size_t n) {
  std::vector<State> img(n);
  std::iota(img.begin(), img.end(), State{0});
  return RowMonoMatrix(std::move(img));
}

RowMonoMatrix matrix_of_word(const Dfa& dfa, const Word& w) {
  check_word(dfa, w);
  std::vector<State> img(dfa.states());
  for (State q = 0; q < dfa.states(); ++q) img[q] = apply_word(dfa, q, w);
  return RowMonoMatrix(std::move(img));
}

RowMonoMatrix mat_mul(const RowMonoMatrix& x, const RowMonoMatrix& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  std::vector<State> img(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) img[i] = y.column_of(x.column_of(i));
  return RowMonoMatrix(std::move(img));
}

ColumnSet nonzero_columns(const RowMonoMatrix& m) {
  ColumnSet cols(m.dim());
  for (auto j : m.img()) cols.insert(j);
  return cols;
}

std::size_t rank(const RowMonoMatrix& m) { return nonzero_columns(m).size(); }

bool is_permutation(const RowMonoMatrix& m) { return rank(m) == m.dim(); }

std::vector<std::size_t> column_unit_counts(const RowMonoMatrix& m) {
  std::vector<std::size_t> counts(m.dim(), 0);
  for (auto j : m.img()) ++counts[j];
  return counts;
}

DenseMatrix expand(const RowMonoMatrix& m) {
  DenseMatrix d(m.dim(), std::vector<long long>(m.dim(), 0));
  for (std::size_t i = 0; i < m.dim(); ++i) d[i][m.column_of(i)] = 1;
  return d;
}

std::size_t dense_rank(DenseMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const long long f = m[i][c], g = m[r][c];
      long long content = 0;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = m[i][j] * g - m[r][j] * f;
        content = std::gcd(content, m[i][j]);
      }
      if (content > 1)
        for (std::size_t j = c; j < cols; ++j) m[i][j] /= content;
    }
    ++r;
  }
  return r;
}

std::string render_matrix(const RowMonoMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i)
    out += "row " + std::to_string(i) + " -> col " + std::to_string(m.column_of(i)) + "\n";
  return out;
}

}  // namespace synclab
