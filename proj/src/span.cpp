#include "synclab/span.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace synclab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("span elimination overflowed int64");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("span elimination overflowed int64");
  return r;
}

// Divides out the content and makes the first nonzero entry positive.
void make_primitive(IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) return;
  auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : v) x /= g;
}

// v <- row[p] * v - v[p] * row, clearing position p of v.
void eliminate(IntVector& v, const IntVector& row, std::size_t p) {
  const std::int64_t f = v[p];
  if (f == 0) return;
  const std::int64_t lead = row[p];
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_sub(checked_mul(lead, v[j]), checked_mul(f, row[j]));
  make_primitive(v);
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

IntVector flatten(const RowMonoMatrix& m) {
  const std::size_t n = m.dim();
  IntVector v(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + m.column_of(i)] = 1;
  return v;
}

SpanBasis::SpanBasis(std::size_t n) : n_(n) {}

IntVector SpanBasis::reduce(IntVector v) const {
  if (v.size() != n_ * n_) throw std::invalid_argument("vector length does not match basis dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) eliminate(v, rows_[r], pivots_[r]);
  return v;
}

bool SpanBasis::contains(const IntVector& v) const { return is_zero(reduce(v)); }

void SpanBasis::admit(IntVector residual) {
  make_primitive(residual);
  const auto pivot = static_cast<std::size_t>(
      std::find_if(residual.begin(), residual.end(), [](std::int64_t x) { return x != 0; }) - residual.begin());
  for (auto& row : rows_) eliminate(row, residual, pivot);
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, pivot);
  rows_.insert(rows_.begin() + at, std::move(residual));
}

bool SpanBasis::try_insert(IntVector v) {
  auto residual = reduce(std::move(v));
  if (is_zero(residual)) return false;
  admit(std::move(residual));
  return true;
}

bool SpanBasis::try_insert(const RowMonoMatrix& m, const Word& word) {
  if (m.dim() != n_) throw std::invalid_argument("matrix dimension does not match basis");
  if (!try_insert(flatten(m))) return false;
  generators_.push_back({word, m});
  return true;
}

std::vector<RowMonoMatrix> canonical_basis(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) throw std::invalid_argument("canonical basis needs 2 <= k <= n");
  const auto last = static_cast<State>(k - 1);
  std::vector<RowMonoMatrix> out;
  out.reserve(n * (k - 1) + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (State j = 0; j < last; ++j) {
      std::vector<State> img(n, last);
      img[i] = j;
      out.emplace_back(std::move(img));
    }
  out.emplace_back(std::vector<State>(n, last));
  return out;
}

std::size_t span_dimension_of_all(std::size_t n, std::size_t k, std::uint64_t limit) {
  if (k < 1 || k > n) throw std::invalid_argument("span_dimension_of_all needs 1 <= k <= n");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= k;
    if (count > limit) throw std::length_error("k^n exceeds the enumeration limit");
  }
  SpanBasis basis(n);
  std::vector<State> img(n, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t x = c;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<State>(x % k);
      x /= k;
    }
    basis.try_insert(flatten(RowMonoMatrix(img)));
  }
  return basis.dimension();
}

}  // namespace synclab
