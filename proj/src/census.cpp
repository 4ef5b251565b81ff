#include "synclab/census.hpp"

#include <algorithm>

#include "synclab/enumerate.hpp"
#include "synclab/oracle.hpp"

namespace synclab {

CensusRecord extremal_census(std::size_t n, std::size_t k, const CensusOptions& options) {
  CensusRecord rec;
  rec.states = n;
  rec.letters = k;
  rec.tables = table_count(n, k, options.budget);

  EnumerationOptions enum_opts;
  enum_opts.states = n;
  enum_opts.letters = k;
  enum_opts.filter = Filter::all;
  enum_opts.canonical = true;
  enum_opts.budget = options.budget;
  enum_opts.workers = options.workers;
  const auto classes = enumerate_dfas(enum_opts);
  rec.canonical_classes = classes.size();

  std::vector<std::optional<CensusEntry>> slots(classes.size());
  parallel_for(classes.size(), options.workers, [&](std::size_t i) {
    const Dfa& dfa = classes[i];
    auto oracle = shortest_sync_word(dfa);
    if (!oracle.length) return;
    auto cert = run_chain(dfa, std::nullopt, options.order);
    CensusEntry e{dfa, is_strongly_connected(dfa), *oracle.length, *oracle.witness, cert.outcome, cert.steps.size(),
                  std::nullopt};
    if (cert.sync_word) e.chain_word_length = cert.sync_word->size();
    slots[i] = std::move(e);
  });

  const std::size_t bound = (n - 1) * (n - 1);
  for (auto& slot : slots) {
    if (!slot) continue;
    auto& e = *slot;
    rec.max_oracle_length = std::max(rec.max_oracle_length, e.oracle_length);
    if (e.chain_word_length) {
      rec.max_chain_word_length = std::max(rec.max_chain_word_length, *e.chain_word_length);
      if (bound > 0)
        rec.max_chain_ratio =
            std::max(rec.max_chain_ratio, static_cast<double>(*e.chain_word_length) / static_cast<double>(bound));
    }
    if (e.chain_outcome == ChainOutcome::exhausted) ++rec.chain_exhausted;
    if (e.oracle_length == bound) {
      ++rec.extremal;
      if (e.strongly_connected) ++rec.extremal_strongly_connected;
      rec.extremal_indices.push_back(rec.entries.size());
    }
    rec.entries.push_back(std::move(e));
  }
  rec.synchronizing = rec.entries.size();
  return rec;
}

}  // namespace synclab
