// synclab: command-line front end for the synchronizing-automata laboratory.
//
// Exit codes: 0 success, 1 input automaton is not synchronizing (oracle,
// greedy, chain), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "synclab/audit.hpp"
#include "synclab/census.hpp"
#include "synclab/chain.hpp"
#include "synclab/dfa.hpp"
#include "synclab/oracle.hpp"
#include "synclab/report.hpp"
#include "synclab/span.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNotSynchronizing = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::optional<std::size_t> step_limit;
  std::uint64_t budget = 20'000'000;
  std::string out;
  std::string input;         // path or "-"
  std::string inline_dfa;    // automaton text given on the command line
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

synclab::Dfa load_input(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.inline_dfa.empty())
    throw UsageError("give exactly one input: a file path, '-' for stdin, or --dfa");
  if (!cfg.inline_dfa.empty()) return synclab::parse_dfa(cfg.inline_dfa);
  if (cfg.input == "-") return synclab::parse_dfa(std::cin);
  std::ifstream in(cfg.input);
  if (!in) throw UsageError("cannot open " + cfg.input);
  return synclab::parse_dfa(in);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + cfg.out);
  out << text;
}

synclab::ExtensionOrder parse_order(const std::string& s) {
  if (s == "insertion") return synclab::ExtensionOrder::insertion;
  if (s == "shortest") return synclab::ExtensionOrder::shortest_word_first;
  throw UsageError("unknown order '" + s + "' (insertion | shortest)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronizing automata laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format: text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "Random seed for sampled audits");
  app.add_option("--workers", cfg.workers, "Worker threads for exhaustive scopes")->check(CLI::PositiveNumber);
  app.add_option("--step-limit", cfg.step_limit, "Chain step limit (default n(n-1)+1)")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Enumeration budget on n^(nk)")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Emit a Cerny automaton or the sporadic extremal examples");
  std::string family;
  std::optional<std::size_t> gen_n;
  gen->add_option("family", family, "cerny | sporadic")->required();
  gen->add_option("--n", gen_n, "State count (cerny)");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", cfg.input, "Automaton file, or '-' for stdin");
    cmd->add_option("--dfa", cfg.inline_dfa, "Automaton text given inline");
  };
  auto* oracle = app.add_subcommand("oracle", "Shortest synchronizing word by power-set search");
  add_input(oracle);
  auto* greedy = app.add_subcommand("greedy", "Greedy pair-merging synchronizing word");
  add_input(greedy);
  auto* chain = app.add_subcommand("chain", "Run the ascending chain of spans");
  add_input(chain);
  std::string order = "insertion";
  chain->add_option("--order", order, "Extension order: insertion | shortest");

  auto* audit = app.add_subcommand("audit", "Audit every claim over a population");
  std::string scope_name = "default";
  std::optional<std::size_t> trials;
  audit->add_option("--scope", scope_name, "default | quick")->check(CLI::IsMember({"default", "quick"}));
  audit->add_option("--trials", trials, "Sampled trials per claim")->check(CLI::PositiveNumber);
  audit->add_option("--order", order, "Chain extension order: insertion | shortest");

  auto* census = app.add_subcommand("census", "Exhaustive census of extremal automata");
  std::size_t census_n = 3, census_k = 2;
  census->add_option("--n", census_n, "State count")->required()->check(CLI::PositiveNumber);
  census->add_option("--k", census_k, "Alphabet size")->required()->check(CLI::PositiveNumber);
  census->add_option("--order", order, "Chain extension order: insertion | shortest");

  auto* dim = app.add_subcommand("dim", "Span dimension of all row-monomial n x k matrices");
  std::size_t dim_n = 2, dim_k = 2;
  dim->add_option("--n", dim_n, "Rows")->required()->check(CLI::PositiveNumber);
  dim->add_option("--k", dim_k, "Columns")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto format = synclab::parse_format(cfg.format);
    if (gen->parsed()) {
      if (family == "cerny") {
        if (!gen_n) throw UsageError("gen cerny needs --n");
        if (*gen_n < 2) throw UsageError("gen cerny needs --n >= 2");
        auto dfa = synclab::cerny_family(*gen_n);
        if (format == synclab::Format::text)
          emit(cfg, synclab::serialize_dfa(dfa));
        else
          emit(cfg, synclab::render_sporadic({{"cerny_" + std::to_string(*gen_n), (*gen_n - 1) * (*gen_n - 1), dfa}},
                                             format));
        return kOk;
      }
      if (family == "sporadic") {
        emit(cfg, synclab::render_sporadic(synclab::sporadic_examples(), format));
        return kOk;
      }
      throw UsageError("unknown family '" + family + "' (cerny | sporadic)");
    }
    if (oracle->parsed()) {
      auto dfa = load_input(cfg);
      auto result = synclab::shortest_sync_word(dfa);
      emit(cfg, synclab::render_oracle(dfa, result, format));
      return result.length ? kOk : kNotSynchronizing;
    }
    if (greedy->parsed()) {
      auto dfa = load_input(cfg);
      auto word = synclab::greedy_sync_word(dfa);
      emit(cfg, synclab::render_greedy(dfa, word, format));
      return word ? kOk : kNotSynchronizing;
    }
    if (chain->parsed()) {
      auto dfa = load_input(cfg);
      auto cert = synclab::run_chain(dfa, cfg.step_limit, parse_order(order));
      emit(cfg, synclab::render_chain(cert, format));
      if (cert.outcome == synclab::ChainOutcome::synchronized) return kOk;
      return synclab::shortest_sync_word(dfa).length ? kOk : kNotSynchronizing;
    }
    if (audit->parsed()) {
      synclab::AuditScope scope;
      if (scope_name == "quick") {
        scope.cerny_sizes = {3, 4, 5};
        scope.sampled_trials = 100;
        scope.dim_max_states = 4;
        scope.ceiling_words_per_automaton = 200;
      }
      if (trials) scope.sampled_trials = *trials;
      scope.workers = cfg.workers;
      scope.order = parse_order(order);
      emit(cfg, synclab::render_audit(synclab::audit_claims(scope, cfg.seed), cfg.seed, format));
      return kOk;
    }
    if (census->parsed()) {
      synclab::CensusOptions opts;
      opts.budget = cfg.budget;
      opts.workers = cfg.workers;
      opts.order = parse_order(order);
      emit(cfg, synclab::render_census(synclab::extremal_census(census_n, census_k, opts), format));
      return kOk;
    }
    if (dim->parsed()) {
      emit(cfg, synclab::render_dim(dim_n, dim_k, synclab::span_dimension_of_all(dim_n, dim_k, cfg.budget), format));
      return kOk;
    }
  } catch (const synclab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
