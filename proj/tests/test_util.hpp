#pragma once

#include <optional>
#include <random>
#include <set>

#include "synclab/dfa.hpp"

namespace testutil {

inline synclab::Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<synclab::State> table(n * k);
  for (auto& t : table) t = static_cast<synclab::State>(rng() % n);
  return synclab::Dfa(n, k, std::move(table));
}

inline synclab::Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
  synclab::Word w;
  const auto len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<synclab::Letter>(rng() % k));
  return w;
}

/// Whether `w` maps every state to one state, computed state by state.
inline bool resets(const synclab::Dfa& dfa, const synclab::Word& w) {
  std::set<synclab::State> images;
  for (synclab::State q = 0; q < dfa.states(); ++q) images.insert(synclab::apply_word(dfa, q, w));
  return images.size() == 1;
}

/// Length of a shortest synchronizing word found by trying every word in
/// order of length, up to max_len. Independent of the power-set search.
inline std::optional<std::size_t> brute_force_reset_length(const synclab::Dfa& dfa, std::size_t max_len) {
  const std::size_t k = dfa.letters();
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<synclab::Letter> digits(len, 0);
    while (true) {
      if (resets(dfa, synclab::Word(digits))) return len;
      std::size_t i = 0;
      while (i < len && ++digits[i] == k) digits[i++] = 0;
      if (i == len) break;
    }
  }
  return std::nullopt;
}

}  // namespace testutil
