#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "synclab/dfa.hpp"

namespace synclab {

enum class Filter { all, strongly_connected, synchronizing, both };

std::string to_string(Filter f);
Filter parse_filter(const std::string& s);

struct EnumerationOptions {
  std::size_t states = 1;
  std::size_t letters = 1;
  Filter filter = Filter::all;
  bool canonical = false;
  std::uint64_t budget = 20'000'000;  // cap on n^(nk)
  unsigned workers = 1;
};

/// Lexicographically least flattened table over all n! state relabelings and
/// k! letter permutations.
Dfa canonical_form(const Dfa& dfa);
bool is_canonical(const Dfa& dfa);

/// Number of transition tables, n^(nk); throws std::length_error above `budget`.
std::uint64_t table_count(std::size_t n, std::size_t k, std::uint64_t budget);

/// Every transition table passing the filter, in lexicographic table order.
/// With `canonical`, only the least member of each isomorphism class. The
/// output is identical for any worker count.
std::vector<Dfa> enumerate_dfas(const EnumerationOptions& options);

/// Runs body(i) for i in [0, count) on `workers` threads. Each index is handled
/// exactly once; callers write results into pre-sized slots to keep order.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace synclab
