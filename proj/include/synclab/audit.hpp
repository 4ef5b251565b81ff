#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synclab/chain.hpp"
#include "synclab/dfa.hpp"

namespace synclab {

enum class Verdict { pass, fail, not_applicable };
std::string to_string(Verdict v);

/// One concrete instance of a claim: an automaton in text form (empty for
/// purely matrix-dimensional claims) plus words or "key=value" parameters.
struct Instance {
  std::string automaton;
  std::vector<std::string> words;
  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Counterexample {
  Instance instance;
  std::string detail;
};

struct AuditReport {
  std::string claim;
  std::string population;
  std::uint64_t trials = 0;
  std::uint64_t violation_count = 0;       // all violations found
  std::vector<Counterexample> violations;  // the first few, kept verbatim
  Verdict verdict = Verdict::not_applicable;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> notes;
};

struct AuditScope {
  std::vector<std::size_t> cerny_sizes{3, 4, 5, 6, 7, 8};
  bool sporadic = true;
  std::size_t exhaustive_states = 3;
  std::size_t exhaustive_letters = 2;
  std::size_t sampled_trials = 1000;
  std::size_t sampled_max_states = 6;
  std::size_t sampled_max_letters = 3;
  std::size_t dim_max_states = 5;
  std::size_t ceiling_automata = 10;
  std::size_t ceiling_states = 6;
  std::size_t ceiling_words_per_automaton = 1000;
  std::size_t kept_violations = 10;
  unsigned workers = 1;
  ExtensionOrder order = ExtensionOrder::insertion;
};

/// Claim ids in report order.
const std::vector<std::string>& claim_ids();

/// Evaluates one instance of a claim. Returns a description of the violation,
/// or nullopt when the instance satisfies the claim (or is outside its
/// hypotheses). Throws std::invalid_argument for an unknown claim id.
std::optional<std::string> evaluate_instance(const std::string& claim, const Instance& instance,
                                             ExtensionOrder order = ExtensionOrder::insertion);

/// True when the counterexample still violates the claim when re-evaluated
/// from its stored text alone.
bool replay_counterexample(const std::string& claim, const Counterexample& cx,
                           ExtensionOrder order = ExtensionOrder::insertion);

/// One report per claim id. All randomness derives from `seed`; the output is
/// identical for identical (scope, seed) regardless of worker count.
std::vector<AuditReport> audit_claims(const AuditScope& scope, std::uint64_t seed);

}  // namespace synclab
