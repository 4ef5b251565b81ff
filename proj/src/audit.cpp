#include "synclab/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "synclab/enumerate.hpp"
#include "synclab/oracle.hpp"
#include "synclab/span.hpp"
#include "synclab/word_matrix.hpp"

namespace synclab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "homomorphism",          "lemma_1_rank",        "lemma_1_monotone",   "lemma_1_left_containment",
      "lemma_1_suffix",        "lemma_1_invertible",  "remark_4_columns",   "cor_3_unit_counts",
      "cor_c1_prefix",         "oracle_witness",      "greedy_vs_oracle",   "cerny_length",
      "sporadic_length",       "frankl_bound",        "cerny_conjecture_bound", "dim_formula",
      "canonical_basis",       "ambient_ceiling",     "two_column_ceiling", "constant_maps",
      "chain_soundness",       "lemma_2_extension",   "thm_1_chain_length",
  };
  return ids;
}

namespace {

using Violation = std::optional<std::string>;

std::size_t param(const Instance& in, const std::string& key) {
  const std::string prefix = key + "=";
  for (const auto& w : in.words)
    if (w.starts_with(prefix)) return std::stoul(w.substr(prefix.size()));
  throw std::invalid_argument("instance lacks parameter " + key);
}

struct Parsed {
  Dfa dfa;
  std::vector<Word> words;
};

Parsed parse_instance(const Instance& in) {
  Dfa dfa = parse_dfa(in.automaton);
  std::vector<Word> words;
  for (const auto& w : in.words) words.push_back(parse_word(w, dfa.letters()));
  return {std::move(dfa), std::move(words)};
}

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (auto i : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string img_text(const RowMonoMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) out += (i ? "," : "") + std::to_string(m.column_of(i));
  return out + "]";
}

std::size_t square(std::size_t x) { return x * x; }

// Subsets reachable by words of length exactly 0, 1, 2, ... computed with
// apply_word_set only. Returns the first level containing a singleton.
std::optional<std::size_t> first_singleton_level(const Dfa& dfa, std::size_t max_level) {
  std::set<std::vector<std::size_t>> level{IndexSet::full(dfa.states()).members()};
  for (std::size_t depth = 0; depth <= max_level; ++depth) {
    for (const auto& s : level)
      if (s.size() == 1) return depth;
    std::set<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      IndexSet set(dfa.states());
      for (auto q : s) set.insert(q);
      for (Letter a = 0; a < dfa.letters(); ++a) next.insert(apply_word_set(dfa, set, Word{a}).members());
    }
    level.swap(next);
  }
  return std::nullopt;
}

Violation check_homomorphism(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& v = p.words.at(1);
  auto lhs = mat_mul(matrix_of_word(p.dfa, u), matrix_of_word(p.dfa, v));
  auto rhs = matrix_of_word(p.dfa, concat(u, v));
  if (lhs != rhs) return "M_u M_v = " + img_text(lhs) + " but M_uv = " + img_text(rhs);
  return std::nullopt;
}

Violation check_rank(const Instance& in) {
  auto p = parse_instance(in);
  auto m = matrix_of_word(p.dfa, p.words.at(0));
  const auto cols = nonzero_columns(m).size();
  const auto r = dense_rank(expand(m));
  if (cols != r || rank(m) != r)
    return "|R(u)| = " + std::to_string(cols) + " but elimination rank = " + std::to_string(r);
  return std::nullopt;
}

Violation check_monotone(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& a = p.words.at(1);
  const auto ru = rank(matrix_of_word(p.dfa, u));
  const auto rua = rank(matrix_of_word(p.dfa, concat(u, a)));
  if (rua > ru) return "|R(ua)| = " + std::to_string(rua) + " > |R(u)| = " + std::to_string(ru);
  return std::nullopt;
}

Violation check_left_containment(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& a = p.words.at(1);
  auto rau = nonzero_columns(matrix_of_word(p.dfa, concat(a, u)));
  auto ru = nonzero_columns(matrix_of_word(p.dfa, u));
  if (!rau.is_subset_of(ru)) return "R(au) = " + set_text(rau) + " not within R(u) = " + set_text(ru);
  return std::nullopt;
}

Violation check_suffix(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& a = p.words.at(1);
  auto rua = nonzero_columns(matrix_of_word(p.dfa, concat(u, a)));
  auto ra = nonzero_columns(matrix_of_word(p.dfa, a));
  if (!rua.is_subset_of(ra)) return "R(ua) = " + set_text(rua) + " not within R(a) = " + set_text(ra);
  return std::nullopt;
}

Violation check_invertible(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& a = p.words.at(1);
  if (!is_permutation(matrix_of_word(p.dfa, a))) return std::nullopt;
  auto ru = nonzero_columns(matrix_of_word(p.dfa, u));
  auto rau = nonzero_columns(matrix_of_word(p.dfa, concat(a, u)));
  auto rua = nonzero_columns(matrix_of_word(p.dfa, concat(u, a)));
  if (rau != ru) return "R(au) = " + set_text(rau) + " differs from R(u) = " + set_text(ru);
  if (rua.size() != ru.size())
    return "|R(ua)| = " + std::to_string(rua.size()) + " differs from |R(u)| = " + std::to_string(ru.size());
  return std::nullopt;
}

Violation check_remark_4(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& a = p.words.at(1);
  const std::size_t n = p.dfa.states();
  const auto mu = expand(matrix_of_word(p.dfa, u));
  const auto ma = matrix_of_word(p.dfa, a);
  const auto product = expand(matrix_of_word(p.dfa, concat(u, a)));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long long> merged(n, 0);
    std::size_t contributing = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (ma.column_of(c) != j) continue;
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        merged[i] += mu[i][c];
        nonzero |= mu[i][c] != 0;
      }
      contributing += nonzero;
    }
    bool product_nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (merged[i] != product[i][j]) return "column " + std::to_string(j) + " of M_ua is not the merge of M_u columns";
      product_nonzero |= product[i][j] != 0;
    }
    if (product_nonzero && contributing == 0)
      return "nonzero column " + std::to_string(j) + " of M_ua has no source column in M_u";
  }
  return std::nullopt;
}

Violation check_cor_3(const Instance& in) {
  auto p = parse_instance(in);
  const auto& u = p.words.at(0);
  const auto& a = p.words.at(1);
  if (!is_permutation(matrix_of_word(p.dfa, a))) return std::nullopt;
  auto before = column_unit_counts(matrix_of_word(p.dfa, u));
  auto after = column_unit_counts(matrix_of_word(p.dfa, concat(a, u)));
  for (std::size_t j = 0; j < before.size(); ++j)
    if (before[j] != after[j])
      return "column " + std::to_string(j) + " has " + std::to_string(before[j]) + " units in M_u but " +
             std::to_string(after[j]) + " in M_a M_u";
  return std::nullopt;
}

Violation check_cor_c1(const Instance& in) {
  auto p = parse_instance(in);
  const auto& s = p.words.at(0);
  if (!is_synchronizing_word(p.dfa, s)) return std::nullopt;
  auto oracle = shortest_sync_word(p.dfa);
  if (!oracle.length || *oracle.length != s.size()) return std::nullopt;  // only minimal words qualify
  const auto sink = nonzero_columns(matrix_of_word(p.dfa, s)).members().front();
  for (std::size_t len = 0; len <= s.size(); ++len) {
    auto cols = nonzero_columns(matrix_of_word(p.dfa, s.prefix(len)));
    if (!cols.contains(sink))
      return "prefix of length " + std::to_string(len) + " has no unit in column " + std::to_string(sink);
  }
  return std::nullopt;
}

Violation check_oracle_witness(const Instance& in) {
  auto p = parse_instance(in);
  const auto& w = p.words.at(0);
  if (!is_synchronizing_word(p.dfa, w)) return "witness does not synchronize";
  auto level = first_singleton_level(p.dfa, w.size());
  if (!level) return "level search finds no synchronizing word within the witness length";
  if (*level < w.size())
    return "a synchronizing word of length " + std::to_string(*level) + " exists, witness has " +
           std::to_string(w.size());
  return std::nullopt;
}

Violation check_greedy(const Instance& in) {
  auto p = parse_instance(in);
  const auto& g = p.words.at(0);
  if (!is_synchronizing_word(p.dfa, g)) return "greedy word does not synchronize";
  auto oracle = shortest_sync_word(p.dfa);
  if (!oracle.length) return "oracle finds no synchronizing word";
  if (g.size() < *oracle.length)
    return "greedy length " + std::to_string(g.size()) + " below oracle " + std::to_string(*oracle.length);
  return std::nullopt;
}

Violation check_exact_length(const Instance& in) {
  auto dfa = parse_dfa(in.automaton);
  const std::size_t expected = square(dfa.states() - 1);
  auto oracle = shortest_sync_word(dfa);
  if (!oracle.length) return "not synchronizing";
  if (*oracle.length != expected)
    return "oracle length " + std::to_string(*oracle.length) + ", expected " + std::to_string(expected);
  return std::nullopt;
}

Violation check_sporadic(const Instance& in) {
  auto dfa = parse_dfa(in.automaton);
  const std::size_t tag = param(in, "expected");
  if (tag != square(dfa.states() - 1)) return "expected-length tag differs from (n-1)^2";
  if (!is_strongly_connected(dfa)) return "not strongly connected";
  return check_exact_length(in);
}

Violation check_bound(const Instance& in, std::size_t (*bound)(std::size_t), const char* name) {
  auto dfa = parse_dfa(in.automaton);
  auto oracle = shortest_sync_word(dfa);
  if (!oracle.length) return std::nullopt;
  const auto b = bound(dfa.states());
  if (*oracle.length > b)
    return "oracle length " + std::to_string(*oracle.length) + " exceeds " + name + " " + std::to_string(b);
  return std::nullopt;
}

std::size_t frankl(std::size_t n) { return (n * n * n - n) / 6; }
std::size_t cerny_bound(std::size_t n) { return square(n - 1); }

Violation check_dim_formula(const Instance& in) {
  const auto n = param(in, "n"), k = param(in, "k");
  const auto dim = span_dimension_of_all(n, k);
  const auto expected = k == 1 ? 1 : n * (k - 1) + 1;
  if (dim != expected) return "dimension " + std::to_string(dim) + ", expected " + std::to_string(expected);
  return std::nullopt;
}

Violation check_canonical_basis(const Instance& in) {
  const auto n = param(in, "n"), k = param(in, "k");
  const auto basis = canonical_basis(n, k);
  SpanBasis full(n);
  for (const auto& m : basis) full.try_insert(flatten(m));
  if (full.dimension() != basis.size()) return "canonical matrices are linearly dependent";
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= k;
  std::vector<State> img(n);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t x = c;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<State>(x % k);
      x /= k;
    }
    if (!full.contains(RowMonoMatrix(img))) return "matrix " + img_text(RowMonoMatrix(img)) + " outside the span";
  }
  for (std::size_t drop = 0; drop + 1 < basis.size(); ++drop) {
    SpanBasis partial(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (i != drop) partial.try_insert(flatten(basis[i]));
    if (partial.contains(basis[drop])) return "V number " + std::to_string(drop) + " is redundant";
  }
  return std::nullopt;
}

Violation check_ambient(const Instance& in) {
  auto p = parse_instance(in);
  const std::size_t n = p.dfa.states();
  SpanBasis basis(n);
  for (const auto& w : p.words) basis.try_insert(matrix_of_word(p.dfa, w), w);
  if (basis.dimension() > n * (n - 1) + 1)
    return "span dimension " + std::to_string(basis.dimension()) + " exceeds n(n-1)+1";
  return std::nullopt;
}

Violation check_two_column(const Instance& in) {
  const auto n = param(in, "n"), lo = param(in, "c0"), hi = param(in, "c1");
  SpanBasis basis(n);
  std::vector<State> img(n);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<State>((c >> i) & 1U ? hi : lo);
    basis.try_insert(flatten(RowMonoMatrix(img)));
  }
  if (basis.dimension() > n + 1) return "dimension " + std::to_string(basis.dimension()) + " exceeds n+1";
  return std::nullopt;
}

Violation check_constant_maps(const Instance& in) {
  const auto n = param(in, "n");
  SpanBasis basis(n);
  for (State c = 0; c < n; ++c) basis.try_insert(flatten(RowMonoMatrix(std::vector<State>(n, c))));
  if (basis.dimension() != n) return "constant maps span dimension " + std::to_string(basis.dimension());
  return std::nullopt;
}

Violation check_chain_soundness(const Instance& in, ExtensionOrder order) {
  auto dfa = parse_dfa(in.automaton);
  auto cert = run_chain(dfa, std::nullopt, order);
  if (auto problem = verify_certificate(cert)) return *problem;
  const std::size_t n = dfa.states();
  if (cert.steps.size() > n * (n - 1))
    return "certificate has " + std::to_string(cert.steps.size()) + " steps, more than n(n-1)";
  if (cert.outcome == ChainOutcome::step_limit) return "chain hit the step limit";
  return std::nullopt;
}

Violation check_lemma_2(const Instance& in, ExtensionOrder order) {
  auto dfa = parse_dfa(in.automaton);
  if (!is_strongly_connected(dfa) || !shortest_sync_word(dfa).length) return std::nullopt;
  auto cert = run_chain(dfa, std::nullopt, order);
  if (cert.outcome == ChainOutcome::exhausted)
    return "chain exhausted after " + std::to_string(cert.steps.size()) +
           " steps with no rank-1 matrix admitted (span dimension " + std::to_string(cert.steps.size() + 1) + ")";
  return std::nullopt;
}

Violation check_thm_1(const Instance& in, ExtensionOrder order) {
  auto dfa = parse_dfa(in.automaton);
  auto cert = run_chain(dfa, std::nullopt, order);
  if (!cert.sync_word) return std::nullopt;
  const auto bound = square(dfa.states() - 1);
  if (cert.sync_word->size() > bound)
    return "chain word length " + std::to_string(cert.sync_word->size()) + " exceeds (n-1)^2 = " +
           std::to_string(bound);
  return std::nullopt;
}

// ---- populations -----------------------------------------------------------

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Dfa automaton(std::size_t n, std::size_t k) {
    std::vector<State> table(n * k);
    for (auto& t : table) t = static_cast<State>(uniform(0, n - 1));
    return Dfa(n, k, std::move(table));
  }

  // Letter 0 replaced by a uniformly random permutation.
  Dfa with_permutation_letter(const Dfa& dfa) {
    std::vector<State> perm(dfa.states());
    for (State i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform(0, i - 1)]);
    std::vector<State> table(dfa.table().begin(), dfa.table().end());
    for (std::size_t q = 0; q < dfa.states(); ++q) table[q * dfa.letters()] = perm[q];
    return Dfa(dfa.states(), dfa.letters(), std::move(table));
  }

  Word word(std::size_t k, std::size_t max_len) {
    Word w;
    const auto len = uniform(0, max_len);
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(uniform(0, k - 1)));
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t claim_seed(std::uint64_t seed, std::size_t claim_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(claim_index)};
  std::uint32_t parts[2];
  seq.generate(parts, parts + 2);
  return (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1];
}

std::vector<Instance> word_trials(const AuditScope& scope, std::uint64_t seed, std::size_t words_per_trial,
                                  bool permutation_letter) {
  Sampler s(seed);
  std::vector<Instance> out;
  for (std::size_t t = 0; t < scope.sampled_trials; ++t) {
    const auto n = s.uniform(2, scope.sampled_max_states);
    const auto k = s.uniform(1, scope.sampled_max_letters);
    Dfa dfa = s.automaton(n, k);
    Instance in{serialize_dfa(dfa), {}};
    for (std::size_t i = 0; i + 1 < words_per_trial; ++i) in.words.push_back(format_word(s.word(k, 3 * n), k));
    if (permutation_letter) {
      dfa = s.with_permutation_letter(dfa);
      in.automaton = serialize_dfa(dfa);
      in.words.push_back(format_word(Word{0}, k));
    } else {
      in.words.push_back(format_word(Word{static_cast<Letter>(s.uniform(0, k - 1))}, k));
    }
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<Instance> homomorphism_trials(const AuditScope& scope, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Instance> out;
  for (std::size_t t = 0; t < scope.sampled_trials; ++t) {
    const auto n = s.uniform(1, scope.sampled_max_states);
    const auto k = s.uniform(1, scope.sampled_max_letters);
    Dfa dfa = s.automaton(n, k);
    out.push_back({serialize_dfa(dfa), {format_word(s.word(k, 3 * n), k), format_word(s.word(k, 3 * n), k)}});
  }
  return out;
}

std::vector<Instance> rank_trials(const AuditScope& scope, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Instance> out;
  for (std::size_t t = 0; t < scope.sampled_trials; ++t) {
    const auto n = s.uniform(1, scope.sampled_max_states);
    const auto k = s.uniform(1, scope.sampled_max_letters);
    Dfa dfa = s.automaton(n, k);
    out.push_back({serialize_dfa(dfa), {format_word(s.word(k, 3 * n), k)}});
  }
  return out;
}

// Every table of the exhaustive scope, plus `sampled_trials` random
// synchronizing automata with 2..max states and 2..max letters.
struct AutomatonPopulation {
  std::vector<Dfa> exhaustive;
  std::vector<Dfa> sampled;
};

AutomatonPopulation automaton_population(const AuditScope& scope, std::uint64_t seed) {
  AutomatonPopulation pop;
  EnumerationOptions opts;
  opts.states = scope.exhaustive_states;
  opts.letters = scope.exhaustive_letters;
  opts.workers = scope.workers;
  pop.exhaustive = enumerate_dfas(opts);
  Sampler s(seed);
  std::size_t draws = 0;
  while (pop.sampled.size() < scope.sampled_trials && draws < 50 * scope.sampled_trials + 50) {
    ++draws;
    const auto n = s.uniform(2, scope.sampled_max_states);
    const auto k = s.uniform(2, std::max<std::size_t>(2, scope.sampled_max_letters));
    Dfa dfa = s.automaton(n, k);
    if (shortest_sync_word(dfa).length) pop.sampled.push_back(std::move(dfa));
  }
  return pop;
}

std::string describe_exhaustive(const AuditScope& scope) {
  return "exhaustive n=" + std::to_string(scope.exhaustive_states) + " k=" + std::to_string(scope.exhaustive_letters);
}

std::string describe_sampled(const AuditScope& scope) {
  return std::to_string(scope.sampled_trials) + " random synchronizing automata, n in [2," +
         std::to_string(scope.sampled_max_states) + "], k in [2," +
         std::to_string(std::max<std::size_t>(2, scope.sampled_max_letters)) + "]";
}

AuditReport run_claim(const std::string& claim, std::string population, const std::vector<Instance>& instances,
                      const AuditScope& scope) {
  std::vector<Violation> results(instances.size());
  parallel_for(instances.size(), scope.workers,
               [&](std::size_t i) { results[i] = evaluate_instance(claim, instances[i], scope.order); });
  AuditReport rep;
  rep.claim = claim;
  rep.population = std::move(population);
  rep.trials = instances.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    ++rep.violation_count;
    if (rep.violations.size() < scope.kept_violations) rep.violations.push_back({instances[i], *results[i]});
  }
  rep.verdict = rep.violation_count ? Verdict::fail : rep.trials ? Verdict::pass : Verdict::not_applicable;
  if (rep.verdict == Verdict::pass && rep.population.find("random") != std::string::npos)
    rep.notes.push_back("no counterexample in " + std::to_string(rep.trials) + " trials");
  return rep;
}

}  // namespace

std::optional<std::string> evaluate_instance(const std::string& claim, const Instance& in, ExtensionOrder order) {
  static const std::map<std::string, std::function<Violation(const Instance&, ExtensionOrder)>> table = {
      {"homomorphism", [](const Instance& i, ExtensionOrder) { return check_homomorphism(i); }},
      {"lemma_1_rank", [](const Instance& i, ExtensionOrder) { return check_rank(i); }},
      {"lemma_1_monotone", [](const Instance& i, ExtensionOrder) { return check_monotone(i); }},
      {"lemma_1_left_containment", [](const Instance& i, ExtensionOrder) { return check_left_containment(i); }},
      {"lemma_1_suffix", [](const Instance& i, ExtensionOrder) { return check_suffix(i); }},
      {"lemma_1_invertible", [](const Instance& i, ExtensionOrder) { return check_invertible(i); }},
      {"remark_4_columns", [](const Instance& i, ExtensionOrder) { return check_remark_4(i); }},
      {"cor_3_unit_counts", [](const Instance& i, ExtensionOrder) { return check_cor_3(i); }},
      {"cor_c1_prefix", [](const Instance& i, ExtensionOrder) { return check_cor_c1(i); }},
      {"oracle_witness", [](const Instance& i, ExtensionOrder) { return check_oracle_witness(i); }},
      {"greedy_vs_oracle", [](const Instance& i, ExtensionOrder) { return check_greedy(i); }},
      {"cerny_length", [](const Instance& i, ExtensionOrder) { return check_exact_length(i); }},
      {"sporadic_length", [](const Instance& i, ExtensionOrder) { return check_sporadic(i); }},
      {"frankl_bound", [](const Instance& i, ExtensionOrder) { return check_bound(i, frankl, "(n^3-n)/6"); }},
      {"cerny_conjecture_bound",
       [](const Instance& i, ExtensionOrder) { return check_bound(i, cerny_bound, "(n-1)^2"); }},
      {"dim_formula", [](const Instance& i, ExtensionOrder) { return check_dim_formula(i); }},
      {"canonical_basis", [](const Instance& i, ExtensionOrder) { return check_canonical_basis(i); }},
      {"ambient_ceiling", [](const Instance& i, ExtensionOrder) { return check_ambient(i); }},
      {"two_column_ceiling", [](const Instance& i, ExtensionOrder) { return check_two_column(i); }},
      {"constant_maps", [](const Instance& i, ExtensionOrder) { return check_constant_maps(i); }},
      {"chain_soundness", [](const Instance& i, ExtensionOrder o) { return check_chain_soundness(i, o); }},
      {"lemma_2_extension", [](const Instance& i, ExtensionOrder o) { return check_lemma_2(i, o); }},
      {"thm_1_chain_length", [](const Instance& i, ExtensionOrder o) { return check_thm_1(i, o); }},
  };
  auto it = table.find(claim);
  if (it == table.end()) throw std::invalid_argument("unknown claim '" + claim + "'");
  return it->second(in, order);
}

bool replay_counterexample(const std::string& claim, const Counterexample& cx, ExtensionOrder order) {
  return evaluate_instance(claim, cx.instance, order).has_value();
}

std::vector<AuditReport> audit_claims(const AuditScope& scope, std::uint64_t seed) {
  const auto& ids = claim_ids();
  auto seed_for = [&](const std::string& claim) {
    const auto idx = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), claim) - ids.begin());
    return claim_seed(seed, idx);
  };
  const std::string sampled_words = std::to_string(scope.sampled_trials) +
                                    " random automata (uniform tables, n in [2," +
                                    std::to_string(scope.sampled_max_states) + "], k in [1," +
                                    std::to_string(scope.sampled_max_letters) + "]) with random words of length <= 3n";

  const auto pop = automaton_population(scope, claim_seed(seed, ids.size()));
  auto automaton_instances = [&](bool include_sampled) {
    std::vector<Instance> out;
    for (const auto& d : pop.exhaustive) out.push_back({serialize_dfa(d), {}});
    if (include_sampled)
      for (const auto& d : pop.sampled) out.push_back({serialize_dfa(d), {}});
    return out;
  };
  const std::string both_pops = describe_exhaustive(scope) + " tables, plus " + describe_sampled(scope);

  std::vector<AuditReport> reports;
  reports.push_back(run_claim("homomorphism", "random automata n in [1," + std::to_string(scope.sampled_max_states) +
                                                  "] with two random words",
                              homomorphism_trials(scope, seed_for("homomorphism")), scope));
  reports.push_back(run_claim("lemma_1_rank", "random words on random automata; elimination on the expanded 0/1 matrix",
                              rank_trials(scope, seed_for("lemma_1_rank")), scope));
  for (const char* claim : {"lemma_1_monotone", "lemma_1_left_containment", "lemma_1_suffix", "remark_4_columns"})
    reports.push_back(run_claim(claim, sampled_words + " and a random letter", word_trials(scope, seed_for(claim), 2, false),
                                scope));
  for (const char* claim : {"lemma_1_invertible", "cor_3_unit_counts"})
    reports.push_back(run_claim(claim, sampled_words + "; letter a replaced by a random permutation",
                                word_trials(scope, seed_for(claim), 2, true), scope));

  {
    std::vector<Instance> minimal;
    for (const auto* part : {&pop.exhaustive, &pop.sampled})
      for (const auto& d : *part) {
        auto o = shortest_sync_word(d);
        if (o.witness) minimal.push_back({serialize_dfa(d), {format_word(*o.witness, d.letters())}});
      }
    auto rep = run_claim("cor_c1_prefix", both_pops + "; s = oracle minimal witness", minimal, scope);
    rep.notes.push_back("checked for minimal synchronizing words only; non-minimal words can violate it");
    reports.push_back(std::move(rep));
    reports.push_back(run_claim("oracle_witness", both_pops + "; checked by level-by-level subset search", minimal, scope));

    std::vector<Instance> greedy;
    for (const auto* part : {&pop.exhaustive, &pop.sampled})
      for (const auto& d : *part)
        if (auto g = greedy_sync_word(d)) greedy.push_back({serialize_dfa(d), {format_word(*g, d.letters())}});
    reports.push_back(run_claim("greedy_vs_oracle", both_pops, greedy, scope));
  }

  {
    std::vector<Instance> cerny;
    std::string sizes;
    for (auto n : scope.cerny_sizes) {
      cerny.push_back({serialize_dfa(cerny_family(n)), {}});
      sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
    }
    reports.push_back(run_claim("cerny_length", "Cerny automata C_n, n in {" + sizes + "}", cerny, scope));

    std::vector<Instance> sporadic;
    std::string names;
    if (scope.sporadic)
      for (const auto& ex : sporadic_examples()) {
        sporadic.push_back({serialize_dfa(ex.dfa), {"expected=" + std::to_string(ex.expected_length)}});
        names += (names.empty() ? "" : ",") + ex.name;
      }
    reports.push_back(run_claim("sporadic_length", "sporadic extremal automata {" + names + "}", sporadic, scope));
  }

  {
    auto exhaustive = automaton_instances(false);
    reports.push_back(run_claim("frankl_bound", describe_exhaustive(scope) + " tables (synchronizing ones count)",
                                exhaustive, scope));
    reports.push_back(run_claim("cerny_conjecture_bound", both_pops, automaton_instances(true), scope));
  }

  {
    std::vector<Instance> dims, bases;
    for (std::size_t n = 1; n <= scope.dim_max_states; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        dims.push_back({"", {"n=" + std::to_string(n), "k=" + std::to_string(k)}});
        if (k >= 2) bases.push_back({"", {"n=" + std::to_string(n), "k=" + std::to_string(k)}});
      }
    const auto bound = std::to_string(scope.dim_max_states);
    reports.push_back(run_claim("dim_formula", "all (n,k) with 1 <= k <= n <= " + bound, dims, scope));
    reports.push_back(run_claim("canonical_basis", "all (n,k) with 2 <= k <= n <= " + bound +
                                                       "; every removal of a V_{i,j} checked",
                                bases, scope));
  }

  {
    Sampler s(seed_for("ambient_ceiling"));
    std::vector<Instance> ceiling;
    const auto n = scope.ceiling_states;
    for (std::size_t a = 0; a < scope.ceiling_automata; ++a) {
      const auto k = s.uniform(2, 3);
      Dfa dfa = s.automaton(n, k);
      Instance in{serialize_dfa(dfa), {}};
      for (std::size_t w = 0; w < scope.ceiling_words_per_automaton; ++w)
        in.words.push_back(format_word(s.word(k, 3 * n), k));
      ceiling.push_back(std::move(in));
    }
    auto rep = run_claim("ambient_ceiling",
                         std::to_string(scope.ceiling_automata) + " random " + std::to_string(n) + "-state automata x " +
                             std::to_string(scope.ceiling_words_per_automaton) + " random words",
                         ceiling, scope);
    std::size_t max_dim = 0;
    for (const auto& in : ceiling) {
      auto dfa = parse_dfa(in.automaton);
      SpanBasis basis(n);
      for (const auto& w : in.words) basis.try_insert(matrix_of_word(dfa, parse_word(w, dfa.letters())), Word{});
      max_dim = std::max(max_dim, basis.dimension());
    }
    rep.metrics.push_back({"max_dimension", static_cast<double>(max_dim)});
    rep.metrics.push_back({"ceiling", static_cast<double>(n * (n - 1) + 1)});
    reports.push_back(std::move(rep));
  }

  {
    std::vector<Instance> pairs, constants;
    for (std::size_t n = 2; n <= scope.dim_max_states; ++n) {
      pairs.push_back({"", {"n=" + std::to_string(n), "c0=0", "c1=1"}});
      pairs.push_back({"", {"n=" + std::to_string(n), "c0=0", "c1=" + std::to_string(n - 1)}});
    }
    for (std::size_t n = 1; n <= scope.ceiling_states; ++n) constants.push_back({"", {"n=" + std::to_string(n)}});
    reports.push_back(run_claim("two_column_ceiling",
                                "all matrices with units in columns {0,1} and {0,n-1}, n <= " +
                                    std::to_string(scope.dim_max_states),
                                pairs, scope));
    auto rep = run_claim("constant_maps", "the n constant maps, n <= " + std::to_string(scope.ceiling_states),
                         constants, scope);
    rep.notes.push_back("reading: any single common column, so the n constant maps are independent");
    reports.push_back(std::move(rep));
  }

  {
    auto chain_pop = automaton_instances(true);
    for (auto n : scope.cerny_sizes) chain_pop.push_back({serialize_dfa(cerny_family(n)), {}});
    if (scope.sporadic)
      for (const auto& ex : sporadic_examples()) chain_pop.push_back({serialize_dfa(ex.dfa), {}});
    const std::string chain_desc = both_pops + ", Cerny and sporadic automata; order " + to_string(scope.order);

    auto soundness = run_claim("chain_soundness", chain_desc, chain_pop, scope);
    soundness.notes.push_back("W_0 is spanned by the identity M_empty (rank n)");
    reports.push_back(std::move(soundness));

    auto lemma2 = run_claim("lemma_2_extension", chain_desc + "; strongly connected synchronizing only", chain_pop, scope);
    reports.push_back(std::move(lemma2));

    auto thm = run_claim("thm_1_chain_length", chain_desc, chain_pop, scope);
    double max_ratio = 0, max_vs_oracle = 0;
    std::size_t over_n2 = 0, synced = 0, exhausted = 0, max_steps = 0;
    std::vector<std::optional<std::pair<double, double>>> ratios(chain_pop.size());
    std::vector<int> flags(chain_pop.size(), 0);
    std::vector<std::size_t> steps(chain_pop.size(), 0);
    parallel_for(chain_pop.size(), scope.workers, [&](std::size_t i) {
      auto dfa = parse_dfa(chain_pop[i].automaton);
      auto cert = run_chain(dfa, std::nullopt, scope.order);
      steps[i] = cert.steps.size();
      if (cert.outcome == ChainOutcome::exhausted) flags[i] = 2;
      if (!cert.sync_word || dfa.states() < 2) return;
      const double len = static_cast<double>(cert.sync_word->size());
      const auto oracle = *shortest_sync_word(dfa).length;
      const auto n = dfa.states();
      ratios[i] = {len / static_cast<double>(square(n - 1)), oracle ? len / static_cast<double>(oracle) : 1.0};
      flags[i] = cert.sync_word->size() > square(n - 2) ? 1 : 0;
    });
    for (std::size_t i = 0; i < chain_pop.size(); ++i) {
      max_steps = std::max(max_steps, steps[i]);
      if (flags[i] == 2) ++exhausted;
      if (!ratios[i]) continue;
      ++synced;
      max_ratio = std::max(max_ratio, ratios[i]->first);
      max_vs_oracle = std::max(max_vs_oracle, ratios[i]->second);
      if (flags[i] == 1) ++over_n2;
    }
    thm.metrics = {{"synchronized_runs", static_cast<double>(synced)},
                   {"exhausted_runs", static_cast<double>(exhausted)},
                   {"max_chain_steps", static_cast<double>(max_steps)},
                   {"max_ratio_chain_to_n_minus_1_squared", max_ratio},
                   {"max_ratio_chain_to_oracle", max_vs_oracle},
                   {"runs_exceeding_n_minus_2_squared", static_cast<double>(over_n2)}};
    thm.notes.push_back("chain word length compared against (n-1)^2 (violations) and (n-2)^2 (counted only)");
    reports.push_back(std::move(thm));
  }

  // Keep report order aligned with claim_ids().
  std::stable_sort(reports.begin(), reports.end(), [&](const AuditReport& a, const AuditReport& b) {
    return std::find(ids.begin(), ids.end(), a.claim) < std::find(ids.begin(), ids.end(), b.claim);
  });
  return reports;
}

}  // namespace synclab
