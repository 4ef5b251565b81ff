#include <doctest.h>

#include <algorithm>
#include <random>

#include "synclab/oracle.hpp"
#include "test_util.hpp"

using namespace synclab;

TEST_CASE("oracle lengths on small Cerny automata") {
  auto r3 = shortest_sync_word(cerny_family(3));
  REQUIRE(r3.length);
  CHECK(*r3.length == 4);
  REQUIRE(r3.witness);
  CHECK(*r3.witness == Word{1, 0, 0, 1});
  CHECK(*shortest_sync_word(cerny_family(4)).length == 9);
  CHECK(*shortest_sync_word(Dfa(1, 1, {0})).length == 0);
}

TEST_CASE("oracle on a permutation automaton finds nothing") {
  auto r = shortest_sync_word(Dfa(2, 1, {1, 0}));
  CHECK_FALSE(r.length);
  CHECK_FALSE(r.witness);
  CHECK(r.explored > 0);
}

TEST_CASE("oracle agrees with word enumeration on random automata") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 3;
    auto dfa = testutil::random_dfa(rng, n, k);
    auto r = shortest_sync_word(dfa);
    // Any reset length is at most the classical cubic bound, so searching up
    // to (n^3 - n) / 6 decides synchronizability for these sizes.
    const std::size_t cap = (n * n * n - n) / 6;
    auto brute = testutil::brute_force_reset_length(dfa, std::min<std::size_t>(cap, 10));
    if (brute) {
      REQUIRE(r.length);
      CHECK(*r.length == *brute);
    } else if (r.length) {
      CHECK(*r.length > 10);
    }
    if (r.witness) {
      CHECK(r.witness->size() == *r.length);
      CHECK(testutil::resets(dfa, *r.witness));
    }
  }
}

TEST_CASE("oracle refuses oversized state spaces") {
  CHECK_THROWS_AS(shortest_sync_word(cerny_family(10), 512), std::length_error);
  CHECK_THROWS_AS(shortest_sync_word(cerny_family(41)), std::length_error);
  CHECK_NOTHROW(shortest_sync_word(cerny_family(9), 512));
}

TEST_CASE("sporadic automata reach their tagged lengths") {
  for (const auto& e : sporadic_examples()) {
    auto r = shortest_sync_word(e.dfa);
    REQUIRE(r.length);
    CHECK(*r.length == e.expected_length);
    CHECK(testutil::resets(e.dfa, *r.witness));
  }
}

TEST_CASE("greedy words synchronize and are never shorter than the oracle") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 6, k = 1 + rng() % 3;
    auto dfa = testutil::random_dfa(rng, n, k);
    auto exact = shortest_sync_word(dfa);
    auto greedy = greedy_sync_word(dfa);
    CHECK(exact.length.has_value() == greedy.has_value());
    if (greedy) {
      CHECK(testutil::resets(dfa, *greedy));
      CHECK(greedy->size() >= *exact.length);
    }
  }
}

TEST_CASE("greedy edge cases") {
  auto one = greedy_sync_word(Dfa(1, 1, {0}));
  REQUIRE(one);
  CHECK(one->empty());
  CHECK_FALSE(greedy_sync_word(Dfa(2, 1, {1, 0})));
  auto c4 = greedy_sync_word(cerny_family(4));
  REQUIRE(c4);
  CHECK(testutil::resets(cerny_family(4), *c4));
}
