#include "synclab/chain.hpp"

#include <algorithm>
#include <numeric>

namespace synclab {

std::string to_string(ChainOutcome outcome) {
  switch (outcome) {
    case ChainOutcome::synchronized: return "synchronized";
    case ChainOutcome::exhausted: return "exhausted";
    case ChainOutcome::step_limit: return "step_limit";
  }
  return "unknown";
}

std::string to_string(ExtensionOrder order) {
  return order == ExtensionOrder::insertion ? "insertion" : "shortest_word_first";
}

std::optional<Extension> chain_extend(const Dfa& dfa, SpanBasis& basis, ExtensionOrder order) {
  const auto& gens = basis.generators();
  std::vector<std::size_t> visit(gens.size());
  std::iota(visit.begin(), visit.end(), std::size_t{0});
  if (order == ExtensionOrder::shortest_word_first)
    std::stable_sort(visit.begin(), visit.end(),
                     [&](std::size_t x, std::size_t y) { return gens[x].word.size() < gens[y].word.size(); });

  for (auto g : visit) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      // Copy before try_insert: admission appends to the generator list.
      const Word word = gens[g].word.extended(a);
      const RowMonoMatrix m = mat_mul(gens[g].matrix, matrix_of_word(dfa, Word{a}));
      if (basis.try_insert(m, word)) return Extension{g, word, a, m};
    }
  }
  return std::nullopt;
}

std::size_t default_step_limit(std::size_t n) { return n * (n - 1) + 1; }

ChainCertificate run_chain(const Dfa& dfa, std::optional<std::size_t> step_limit, ExtensionOrder order) {
  const std::size_t n = dfa.states();
  const std::size_t limit = step_limit.value_or(default_step_limit(n));
  ChainCertificate cert{dfa, order, {}, ChainOutcome::exhausted, std::nullopt, {}};

  if (n <= 2) cert.notices.push_back("degenerate instance: n <= 2");
  if (dfa.letters() == 1) cert.notices.push_back("degenerate instance: single-letter alphabet");
  for (Letter a = 0; a < dfa.letters(); ++a)
    if (rank(matrix_of_word(dfa, Word{a})) == 1)
      cert.notices.push_back("degenerate instance: letter " + format_word(Word{a}, dfa.letters()) +
                             " is already synchronizing");
  if (!is_strongly_connected(dfa)) cert.notices.push_back("automaton is not strongly connected");

  SpanBasis basis(n);
  basis.try_insert(RowMonoMatrix::identity(n), Word{});
  if (n == 1) {
    cert.outcome = ChainOutcome::synchronized;
    cert.sync_word = Word{};
    return cert;
  }

  while (true) {
    if (cert.steps.size() >= limit) {
      cert.outcome = ChainOutcome::step_limit;
      return cert;
    }
    auto ext = chain_extend(dfa, basis, order);
    if (!ext) {
      cert.outcome = ChainOutcome::exhausted;
      return cert;
    }
    const std::size_t r = rank(ext->matrix);
    cert.steps.push_back({ext->word, ext->letter, ext->parent, ext->matrix, r, basis.dimension()});
    if (r == 1) {
      cert.outcome = ChainOutcome::synchronized;
      cert.sync_word = ext->word;
      return cert;
    }
  }
}

std::optional<std::string> verify_certificate(const ChainCertificate& cert) {
  const Dfa& dfa = cert.automaton;
  std::vector<Word> words{Word{}};
  std::size_t prev_dim = 1;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (s.parent >= words.size()) return at + "parent index out of range";
    if (s.letter >= dfa.letters()) return at + "letter outside alphabet";
    if (s.word != words[s.parent].extended(s.letter)) return at + "word is not parent word plus letter";
    if (s.matrix != matrix_of_word(dfa, s.word)) return at + "stored matrix does not replay";
    if (s.rank != rank(s.matrix)) return at + "stored rank does not match";
    if (s.dimension != prev_dim + 1) return at + "dimension did not grow by exactly one";
    prev_dim = s.dimension;
    words.push_back(s.word);
  }
  if (cert.outcome == ChainOutcome::synchronized) {
    if (!cert.sync_word) return "synchronized outcome without a word";
    if (!is_synchronizing_word(dfa, *cert.sync_word)) return "reported word does not synchronize";
  }
  // Every admitted matrix must be independent of its predecessors.
  SpanBasis replay(dfa.states());
  replay.try_insert(RowMonoMatrix::identity(dfa.states()), Word{});
  for (std::size_t i = 0; i < cert.steps.size(); ++i)
    if (!replay.try_insert(cert.steps[i].matrix, cert.steps[i].word))
      return "step " + std::to_string(i) + ": matrix is dependent on earlier generators";
  return std::nullopt;
}

}  // namespace synclab
