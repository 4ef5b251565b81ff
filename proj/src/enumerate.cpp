#include "synclab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "synclab/oracle.hpp"

namespace synclab {

std::string to_string(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::strongly_connected: return "strongly_connected";
    case Filter::synchronizing: return "synchronizing";
    case Filter::both: return "both";
  }
  return "all";
}

Filter parse_filter(const std::string& s) {
  if (s == "all") return Filter::all;
  if (s == "strongly_connected") return Filter::strongly_connected;
  if (s == "synchronizing") return Filter::synchronizing;
  if (s == "both") return Filter::both;
  throw std::invalid_argument("unknown filter '" + s + "'");
}

namespace {

// Writes the relabeled `table` into out; returns <0, 0, >0 comparing it with `target`.
int relabeled_compare(std::span<const State> table, std::span<const State> target, std::size_t n, std::size_t k,
                      const std::vector<State>& perm, const std::vector<Letter>& letter_perm,
                      std::vector<State>& out) {
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < k; ++a) out[perm[q] * k + letter_perm[a]] = perm[table[q * k + a]];
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < target[i]) return -1;
    if (out[i] > target[i]) return 1;
  }
  return 0;
}

template <typename Visit>
void for_each_relabeling(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<State> perm(n);
  std::vector<Letter> letter_perm(k);
  std::iota(perm.begin(), perm.end(), State{0});
  do {
    std::iota(letter_perm.begin(), letter_perm.end(), Letter{0});
    do {
      if (!visit(perm, letter_perm)) return;
    } while (std::next_permutation(letter_perm.begin(), letter_perm.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool passes(const Dfa& dfa, Filter filter) {
  auto sync = [&] { return shortest_sync_word(dfa).length.has_value(); };
  switch (filter) {
    case Filter::all: return true;
    case Filter::strongly_connected: return is_strongly_connected(dfa);
    case Filter::synchronizing: return sync();
    case Filter::both: return is_strongly_connected(dfa) && sync();
  }
  return false;
}

}  // namespace

Dfa canonical_form(const Dfa& dfa) {
  const std::size_t n = dfa.states(), k = dfa.letters();
  std::vector<State> best(dfa.table().begin(), dfa.table().end());
  std::vector<State> scratch(best.size());
  for_each_relabeling(n, k, [&](const auto& perm, const auto& letter_perm) {
    if (relabeled_compare(dfa.table(), best, n, k, perm, letter_perm, scratch) < 0) best = scratch;
    return true;
  });
  return Dfa(n, k, std::move(best));
}

bool is_canonical(const Dfa& dfa) {
  const std::size_t n = dfa.states(), k = dfa.letters();
  std::vector<State> scratch(n * k);
  bool least = true;
  for_each_relabeling(n, k, [&](const auto& perm, const auto& letter_perm) {
    if (relabeled_compare(dfa.table(), dfa.table(), n, k, perm, letter_perm, scratch) < 0) least = false;
    return least;
  });
  return least;
}

std::uint64_t table_count(std::size_t n, std::size_t k, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n * k; ++i) {
    if (count > budget / n) throw std::length_error("n^(nk) exceeds the enumeration budget");
    count *= n;
  }
  if (count > budget) throw std::length_error("n^(nk) exceeds the enumeration budget");
  return count;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Dfa> enumerate_dfas(const EnumerationOptions& options) {
  const std::size_t n = options.states, k = options.letters;
  if (n == 0 || k == 0) throw std::invalid_argument("enumeration needs n >= 1 and k >= 1");
  const std::uint64_t total = table_count(n, k, options.budget);

  // Partition by the leading table digits; each chunk is a contiguous range of
  // tables in lexicographic order, so concatenating chunk outputs keeps order.
  const std::size_t digits = n * k;
  std::uint64_t chunk_count = 1;
  std::size_t lead = 0;
  while (lead < digits && chunk_count * n <= 4096) {
    chunk_count *= n;
    ++lead;
  }
  const std::uint64_t per_chunk = total / chunk_count;

  std::vector<std::vector<Dfa>> found(chunk_count);
  parallel_for(chunk_count, options.workers, [&](std::size_t chunk) {
    std::vector<State> table(digits, 0);
    for (std::uint64_t t = 0; t < per_chunk; ++t) {
      // Table index chunk*per_chunk + t, most significant digit first.
      std::uint64_t x = chunk * per_chunk + t;
      for (std::size_t i = digits; i-- > 0;) {
        table[i] = static_cast<State>(x % n);
        x /= n;
      }
      Dfa dfa(n, k, table);
      if (options.canonical && !is_canonical(dfa)) continue;
      if (!passes(dfa, options.filter)) continue;
      found[chunk].push_back(std::move(dfa));
    }
  });

  std::vector<Dfa> out;
  for (auto& part : found)
    for (auto& dfa : part) out.push_back(std::move(dfa));
  return out;
}

}  // namespace synclab
