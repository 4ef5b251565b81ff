#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "synclab/chain.hpp"
#include "synclab/dfa.hpp"

namespace synclab {

struct CensusEntry {
  Dfa dfa;
  bool strongly_connected = false;
  std::size_t oracle_length = 0;
  Word oracle_witness;
  ChainOutcome chain_outcome = ChainOutcome::exhausted;
  std::size_t chain_steps = 0;
  std::optional<std::size_t> chain_word_length;
};

struct CensusRecord {
  std::size_t states = 0;
  std::size_t letters = 0;
  std::uint64_t tables = 0;             // n^(nk)
  std::size_t canonical_classes = 0;    // all isomorphism classes
  std::size_t synchronizing = 0;        // canonical synchronizing classes
  std::size_t extremal = 0;             // of those, oracle length == (n-1)^2
  std::size_t extremal_strongly_connected = 0;
  std::size_t max_oracle_length = 0;
  std::size_t max_chain_word_length = 0;
  double max_chain_ratio = 0.0;         // chain word length / (n-1)^2
  std::size_t chain_exhausted = 0;
  std::vector<CensusEntry> entries;     // every canonical synchronizing class
  std::vector<std::size_t> extremal_indices;
};

struct CensusOptions {
  std::uint64_t budget = 20'000'000;
  unsigned workers = 1;
  ExtensionOrder order = ExtensionOrder::insertion;
};

/// Exhaustive census of canonical synchronizing automata with n states and k
/// letters: oracle length and chain result for each class.
CensusRecord extremal_census(std::size_t n, std::size_t k, const CensusOptions& options = {});

}  // namespace synclab
