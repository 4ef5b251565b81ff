#include "synclab/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace synclab {

namespace {

using Mask = std::uint64_t;

// Image of a subset under one letter, via per-byte lookup tables.
class SubsetImage {
 public:
  SubsetImage(const Dfa& dfa, Letter a) : chunks_((dfa.states() + 7) / 8) {
    tables_.resize(chunks_);
    for (std::size_t c = 0; c < chunks_; ++c)
      for (unsigned byte = 0; byte < 256; ++byte) {
        Mask img = 0;
        for (unsigned bit = 0; bit < 8; ++bit) {
          const std::size_t q = c * 8 + bit;
          if ((byte >> bit) & 1U && q < dfa.states()) img |= Mask{1} << dfa.next(static_cast<State>(q), a);
        }
        tables_[c][byte] = img;
      }
  }

  Mask operator()(Mask m) const {
    Mask img = 0;
    for (std::size_t c = 0; c < chunks_; ++c) img |= tables_[c][(m >> (8 * c)) & 0xFF];
    return img;
  }

 private:
  std::size_t chunks_;
  std::vector<std::array<Mask, 256>> tables_;
};

}  // namespace

OracleResult shortest_sync_word(const Dfa& dfa, std::uint64_t subset_limit) {
  const std::size_t n = dfa.states();
  if (n > 40 || (std::uint64_t{1} << n) > subset_limit)
    throw std::length_error("2^" + std::to_string(n) + " subsets exceed the oracle limit");

  OracleResult result;
  if (n == 1) {
    result.length = 0;
    result.witness = Word{};
    result.explored = 1;
    return result;
  }

  std::vector<SubsetImage> images;
  for (Letter a = 0; a < dfa.letters(); ++a) images.emplace_back(dfa, a);

  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  const Mask full = (Mask{1} << n) - 1;
  // parent[m] holds the predecessor subset; letter_of[m] the letter used.
  std::vector<Mask> parent(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> letter_of(std::size_t{1} << n, kUnseen);
  std::vector<Mask> frontier{full}, next;
  letter_of[full] = 0;
  parent[full] = full;

  std::size_t depth = 0;
  std::optional<Mask> target;
  while (!frontier.empty() && !target) {
    for (Mask m : frontier) {
      ++result.explored;
      if (std::popcount(m) == 1) {
        target = m;
        break;
      }
    }
    if (target) break;
    next.clear();
    for (Mask m : frontier)
      for (Letter a = 0; a < images.size(); ++a) {
        const Mask t = images[a](m);
        if (letter_of[t] != kUnseen) continue;
        letter_of[t] = a;
        parent[t] = m;
        next.push_back(t);
      }
    frontier.swap(next);
    ++depth;
  }
  if (!target) return result;

  std::vector<Letter> letters;
  for (Mask m = *target; m != full; m = parent[m]) letters.push_back(letter_of[m]);
  std::reverse(letters.begin(), letters.end());
  result.length = depth;
  result.witness = Word(std::move(letters));
  return result;
}

std::optional<Word> greedy_sync_word(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letters();
  auto pair_index = [n](State p, State q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * n + q;
  };

  // Backward BFS on the pair graph from the diagonal: dist[p*n+q] is the length
  // of a shortest word merging p and q; via[] is its first letter.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n * n, kInf);
  std::vector<Letter> via(n * n, 0);
  std::vector<std::vector<std::size_t>> preimage(n * n);
  for (State p = 0; p < n; ++p)
    for (State q = p + 1; q < n; ++q)
      for (Letter a = 0; a < k; ++a) preimage[pair_index(dfa.next(p, a), dfa.next(q, a))].push_back(p * n + q);

  std::vector<std::size_t> queue;
  for (State p = 0; p < n; ++p) {
    dist[p * n + p] = 0;
    queue.push_back(p * n + p);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    for (std::size_t pre : preimage[cur]) {
      if (dist[pre] != kInf) continue;
      dist[pre] = dist[cur] + 1;
      queue.push_back(pre);
    }
  }
  // Choose, for each pair, the first letter (alphabet order) that lowers the distance.
  for (State p = 0; p < n; ++p)
    for (State q = p + 1; q < n; ++q) {
      const std::size_t idx = p * n + q;
      if (dist[idx] == kInf) return std::nullopt;
      for (Letter a = 0; a < k; ++a)
        if (dist[pair_index(dfa.next(p, a), dfa.next(q, a))] + 1 == dist[idx]) {
          via[idx] = a;
          break;
        }
    }

  Word word;
  std::vector<State> current(n);
  for (State q = 0; q < n; ++q) current[q] = q;
  while (current.size() > 1) {
    std::size_t best = kInf, bp = 0, bq = 0;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const std::size_t d = dist[pair_index(current[i], current[j])];
        if (d < best) {
          best = d;
          bp = current[i];
          bq = current[j];
        }
      }
    State p = static_cast<State>(bp), q = static_cast<State>(bq);
    Word merge;
    while (p != q) {
      const Letter a = via[pair_index(p, q)];
      merge.push_back(a);
      p = dfa.next(p, a);
      q = dfa.next(q, a);
    }
    for (auto& s : current) s = apply_word(dfa, s, merge);
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    word = concat(word, merge);
  }
  return word;
}

}  // namespace synclab
