#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "synclab/dfa.hpp"

namespace synclab {

struct OracleResult {
  std::optional<std::size_t> length;  // absent when the automaton is not synchronizing
  std::optional<Word> witness;
  std::uint64_t explored = 0;  // subsets visited
};

inline constexpr std::uint64_t kDefaultSubsetLimit = std::uint64_t{1} << 24;

/// Exact shortest synchronizing word: breadth-first search over the power-set
/// automaton from the full state set, letters tried in alphabet order, so the
/// witness is deterministic. Throws std::length_error when 2^n > subset_limit.
OracleResult shortest_sync_word(const Dfa& dfa, std::uint64_t subset_limit = kDefaultSubsetLimit);

/// Greedy pair merging: repeatedly applies a shortest word that merges some
/// pair of the current set (smallest pair index on ties). Returns nullopt when
/// some pair can never be merged, i.e. the automaton is not synchronizing.
std::optional<Word> greedy_sync_word(const Dfa& dfa);

}  // namespace synclab
