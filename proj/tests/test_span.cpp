#include <doctest.h>

#include <random>

#include "synclab/span.hpp"
#include "test_util.hpp"

using namespace synclab;

namespace {

// All row-monomial n x n matrices whose units lie in the first k columns.
std::vector<RowMonoMatrix> all_matrices(std::size_t n, std::size_t k) {
  std::vector<RowMonoMatrix> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= k;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<State> img(n);
    std::size_t x = c;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<State>(x % k);
      x /= k;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

// Rank of the stacked flattened matrices by dense elimination: an oracle
// that shares no code with SpanBasis.
std::size_t stacked_rank(const std::vector<RowMonoMatrix>& ms) {
  DenseMatrix rows;
  for (const auto& m : ms) {
    const std::size_t n = m.dim();
    std::vector<long long> v(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + m.column_of(i)] = 1;
    rows.push_back(std::move(v));
  }
  return dense_rank(std::move(rows));
}

void check_echelon(const SpanBasis& b) {
  REQUIRE(b.rows().size() == b.pivots().size());
  for (std::size_t r = 0; r < b.rows().size(); ++r) {
    const auto& row = b.rows()[r];
    const auto p = b.pivots()[r];
    if (r > 0) CHECK(b.pivots()[r - 1] < p);
    CHECK(row[p] > 0);
    for (std::size_t j = 0; j < p; ++j) CHECK(row[j] == 0);
    for (std::size_t other = 0; other < b.rows().size(); ++other)
      if (other != r) CHECK(b.rows()[other][p] == 0);
  }
}

}  // namespace

TEST_CASE("flatten examples") {
  CHECK(flatten(RowMonoMatrix::identity(2)) == IntVector{1, 0, 0, 1});
  CHECK(flatten(RowMonoMatrix({1, 1})) == IntVector{0, 1, 0, 1});
  CHECK(flatten(RowMonoMatrix({1, 0})) == IntVector{0, 1, 1, 0});
}

TEST_CASE("try_insert examples") {
  SpanBasis b(2);
  CHECK(b.try_insert(RowMonoMatrix::identity(2), Word{}));
  CHECK(b.dimension() == 1);
  CHECK_FALSE(b.try_insert(RowMonoMatrix::identity(2), Word{}));
  CHECK(b.dimension() == 1);
  CHECK(b.generators().size() == 1);

  SpanBasis all(2);
  for (const auto& m : all_matrices(2, 2)) all.try_insert(m, Word{});
  CHECK(stacked_rank(all_matrices(2, 2)) == 3);
  CHECK(all.dimension() == 3);
  CHECK(all.generators().size() == 3);
  check_echelon(all);
}

TEST_CASE("try_insert matches the dense oracle on random matrix sets") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<RowMonoMatrix> ms;
    SpanBasis b(n);
    const std::size_t count = 1 + rng() % 25;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<State> img(n);
      for (auto& x : img) x = static_cast<State>(rng() % n);
      const auto before = stacked_rank(ms);
      ms.emplace_back(img);
      CHECK(b.try_insert(ms.back(), Word{}) == (stacked_rank(ms) > before));
    }
    CHECK(b.dimension() == stacked_rank(ms));
    check_echelon(b);
    for (const auto& m : ms) CHECK(b.contains(m));
  }
}

TEST_CASE("canonical_basis for n=2, k=2") {
  auto basis = canonical_basis(2, 2);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == RowMonoMatrix({0, 1}));  // V_{1,1}
  CHECK(basis[1] == RowMonoMatrix({1, 0}));  // V_{2,1}
  CHECK(basis[2] == RowMonoMatrix({1, 1}));  // K
  CHECK(stacked_rank(basis) == 3);
}

TEST_CASE("canonical_basis for n=3, k=2 spans every 3x2 matrix") {
  auto basis = canonical_basis(3, 2);
  REQUIRE(basis.size() == 4);
  CHECK(stacked_rank(basis) == 4);
  auto all = all_matrices(3, 2);
  CHECK(stacked_rank(all) == 4);
  auto combined = all;
  combined.insert(combined.end(), basis.begin(), basis.end());
  CHECK(stacked_rank(combined) == 4);
}

TEST_CASE("canonical_basis shape and errors") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 2; k <= n; ++k) {
      auto basis = canonical_basis(n, k);
      CHECK(basis.size() == n * (k - 1) + 1);
      for (const auto& m : basis)
        for (auto j : m.img()) CHECK(j < k);
    }
  CHECK_THROWS_AS(canonical_basis(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(canonical_basis(3, 4), std::invalid_argument);
}

TEST_CASE("span_dimension_of_all") {
  CHECK(span_dimension_of_all(2, 2) == 3);
  CHECK(stacked_rank(all_matrices(4, 3)) == 9);
  CHECK(span_dimension_of_all(4, 3) == 9);
  CHECK(span_dimension_of_all(3, 1) == 1);
  CHECK_THROWS_AS(span_dimension_of_all(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(span_dimension_of_all(8, 8, 1000), std::length_error);
}

TEST_CASE("dimension ceiling n(n-1)+1 for random row-monomial matrices") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    SpanBasis b(n);
    for (int i = 0; i < 2000; ++i) {
      std::vector<State> img(n);
      for (auto& x : img) x = static_cast<State>(rng() % n);
      b.try_insert(RowMonoMatrix(img), Word{});
    }
    CHECK(b.dimension() <= n * (n - 1) + 1);
    check_echelon(b);
  }
}

TEST_CASE("constant maps are independent") {
  for (std::size_t n = 1; n <= 6; ++n) {
    SpanBasis b(n);
    for (State c = 0; c < n; ++c) CHECK(b.try_insert(RowMonoMatrix(std::vector<State>(n, c)), Word{}));
    CHECK(b.dimension() == n);
  }
}

TEST_CASE("reduce leaves vectors outside the span with a nonzero residual") {
  SpanBasis b(2);
  b.try_insert(RowMonoMatrix({0, 1}), Word{});
  CHECK_FALSE(b.contains(RowMonoMatrix({1, 0})));
  CHECK_THROWS_AS(b.reduce(IntVector{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(b.try_insert(RowMonoMatrix::identity(3), Word{}), std::invalid_argument);
}
