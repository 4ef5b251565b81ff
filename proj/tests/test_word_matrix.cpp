#include <doctest.h>

#include <random>

#include "synclab/word_matrix.hpp"
#include "test_util.hpp"

using namespace synclab;

TEST_CASE("matrix_of_word examples on C_3") {
  auto c3 = cerny_family(3);
  CHECK(matrix_of_word(c3, Word{}) == RowMonoMatrix::identity(3));
  CHECK(matrix_of_word(c3, Word{1}) == RowMonoMatrix({1, 1, 2}));
  CHECK(matrix_of_word(c3, Word{0, 1}) == RowMonoMatrix({1, 2, 1}));
  CHECK_THROWS_AS(matrix_of_word(c3, Word{2}), std::out_of_range);
}

TEST_CASE("mat_mul") {
  auto c3 = cerny_family(3);
  const RowMonoMatrix m({2, 0, 0});
  CHECK(mat_mul(RowMonoMatrix::identity(3), m) == m);
  CHECK(mat_mul(m, RowMonoMatrix::identity(3)) == m);
  CHECK(mat_mul(matrix_of_word(c3, Word{0}), matrix_of_word(c3, Word{1})) == RowMonoMatrix({1, 2, 1}));
  CHECK_THROWS_AS(mat_mul(RowMonoMatrix::identity(2), RowMonoMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("mat_mul agrees with dense integer matrix multiplication") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<State> a(n), b(n);
    for (auto& x : a) x = static_cast<State>(rng() % n);
    for (auto& x : b) x = static_cast<State>(rng() % n);
    const auto da = expand(RowMonoMatrix(a)), db = expand(RowMonoMatrix(b));
    DenseMatrix prod(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) prod[i][j] += da[i][l] * db[l][j];
    CHECK(expand(mat_mul(RowMonoMatrix(a), RowMonoMatrix(b))) == prod);
  }
}

TEST_CASE("nonzero_columns and rank") {
  CHECK(nonzero_columns(RowMonoMatrix::identity(4)).size() == 4);
  CHECK(rank(RowMonoMatrix::identity(5)) == 5);

  // Six-row example with units in (1-based) columns 3, 1, last, 1, 2, 1.
  const RowMonoMatrix example({2, 0, 5, 0, 1, 0});
  CHECK(nonzero_columns(example).members() == std::vector<std::size_t>{0, 1, 2, 5});
  CHECK(rank(example) == 4);

  const RowMonoMatrix constant({2, 2, 2});
  CHECK(nonzero_columns(constant).members() == std::vector<std::size_t>{2});
  CHECK(rank(constant) == 1);

  CHECK(rank(matrix_of_word(cerny_family(3), Word{1})) == 2);
}

TEST_CASE("RowMonoMatrix rejects units outside the matrix") {
  CHECK_THROWS_AS(RowMonoMatrix({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("dense_rank on hand-checked matrices") {
  CHECK(dense_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(dense_rank({{0, 1}, {1, 0}}) == 2);
  CHECK(dense_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) == 2);
  CHECK(dense_rank({}) == 0);
}

TEST_CASE("matrix laws on random words") {
  std::mt19937_64 rng(2024);
  int permutation_cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 6, k = 1 + rng() % 3;
    auto dfa = testutil::random_dfa(rng, n, k);
    auto u = testutil::random_word(rng, k, 3 * n);
    auto v = testutil::random_word(rng, k, 3 * n);
    const Word a{static_cast<Letter>(rng() % k)};
    const auto mu = matrix_of_word(dfa, u);
    const auto ma = matrix_of_word(dfa, a);

    CHECK(mat_mul(mu, matrix_of_word(dfa, v)) == matrix_of_word(dfa, concat(u, v)));
    CHECK(rank(mu) == dense_rank(expand(mu)));
    CHECK(rank(matrix_of_word(dfa, concat(u, a))) <= rank(mu));
    CHECK(nonzero_columns(matrix_of_word(dfa, concat(a, u))).is_subset_of(nonzero_columns(mu)));
    CHECK(nonzero_columns(matrix_of_word(dfa, concat(u, a))).is_subset_of(nonzero_columns(ma)));
    if (is_permutation(ma)) {
      ++permutation_cases;
      CHECK(nonzero_columns(matrix_of_word(dfa, concat(a, u))) == nonzero_columns(mu));
      CHECK(rank(matrix_of_word(dfa, concat(u, a))) == rank(mu));
      CHECK(column_unit_counts(matrix_of_word(dfa, concat(a, u))) == column_unit_counts(mu));
    }
  }
  CHECK(permutation_cases > 0);
}

TEST_CASE("render_matrix") {
  CHECK(render_matrix(RowMonoMatrix({1, 0})) == "row 0 -> col 1\nrow 1 -> col 0\n");
}
