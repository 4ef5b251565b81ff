#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "synclab/dfa.hpp"
#include "synclab/span.hpp"
#include "synclab/word_matrix.hpp"

namespace synclab {

enum class ChainOutcome { synchronized, exhausted, step_limit };

/// Order in which chain_extend tries generators. Letters are always tried in
/// alphabet order.
enum class ExtensionOrder {
  insertion,           // oldest generator first
  shortest_word_first  // shortest generator word first, ties by insertion
};

std::string to_string(ChainOutcome outcome);
std::string to_string(ExtensionOrder order);

struct Extension {
  std::size_t parent;  // index into basis.generators()
  Word word;           // parent word + letter
  Letter letter;
  RowMonoMatrix matrix;
};

/// Finds the first (generator u, letter b) such that M_{ub} is outside the span
/// and admits it. Returns nullopt, leaving the basis untouched, when every
/// extension is already in the span.
std::optional<Extension> chain_extend(const Dfa& dfa, SpanBasis& basis,
                                      ExtensionOrder order = ExtensionOrder::insertion);

struct ChainStep {
  Word word;
  Letter letter;
  std::size_t parent;  // index of the parent generator; 0 is the empty word
  RowMonoMatrix matrix;
  std::size_t rank;
  std::size_t dimension;  // span dimension after admitting this step
};

struct ChainCertificate {
  Dfa automaton;
  ExtensionOrder order = ExtensionOrder::insertion;
  std::vector<ChainStep> steps;
  ChainOutcome outcome = ChainOutcome::exhausted;
  std::optional<Word> sync_word;
  std::vector<std::string> notices;
};

/// n(n-1)+1, the default step limit.
std::size_t default_step_limit(std::size_t n);

/// Ascending chain of spans starting from W_0 = span{M_empty}, extended one
/// admitted matrix at a time until a rank-1 matrix is admitted, no extension
/// remains, or `step_limit` steps were taken.
ChainCertificate run_chain(const Dfa& dfa, std::optional<std::size_t> step_limit = std::nullopt,
                           ExtensionOrder order = ExtensionOrder::insertion);

/// Re-derives every step from the automaton: parent linkage, word = parent + letter,
/// matrix = matrix_of_word(word), ranks, strictly increasing dimensions, and the
/// synchronizing property of the final word. Returns a description of the first
/// problem, or nullopt when the certificate is sound.
std::optional<std::string> verify_certificate(const ChainCertificate& cert);

}  // namespace synclab
