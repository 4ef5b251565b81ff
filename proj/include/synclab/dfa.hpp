#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synclab {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Raised by the text parsers; carries the 1-based line the problem was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A finite sequence of letter indices, read left to right.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter a) { letters_.push_back(a); }
  Word extended(Letter a) const {
    Word w = *this;
    w.push_back(a);
    return w;
  }
  Word prefix(std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

  friend Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Subset of [0, n) backed by 64-bit blocks.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe);
  static IndexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1U; }
  void insert(std::size_t i) { blocks_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_subset_of(const IndexSet& other) const;
  std::vector<std::size_t> members() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> blocks_;
};

using StateSet = IndexSet;

/// Complete deterministic automaton with states [0, n) and letters [0, k).
class Dfa {
 public:
  /// `table` is row-major: table[q * k + a] is the target of state q under letter a.
  Dfa(std::size_t states, std::size_t letters, std::vector<State> table);

  std::size_t states() const noexcept { return states_; }
  std::size_t letters() const noexcept { return letters_; }
  State next(State q, Letter a) const { return table_[q * letters_ + a]; }
  std::span<const State> table() const noexcept { return table_; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t states_;
  std::size_t letters_;
  std::vector<State> table_;
};

Dfa parse_dfa(std::istream& in);
Dfa parse_dfa(std::string_view text);
std::string serialize_dfa(const Dfa& dfa);

/// Letters render as 'a'..'z' when k <= 26, otherwise as "w:0,1,0".
std::string format_word(const Word& w, std::size_t alphabet_size);
Word parse_word(std::string_view text, std::size_t alphabet_size);

/// Throws std::out_of_range when a letter is not below the alphabet size.
void check_word(const Dfa& dfa, const Word& w);

State apply_word(const Dfa& dfa, State q, const Word& w);
StateSet apply_word_set(const Dfa& dfa, const StateSet& states, const Word& w);
bool is_synchronizing_word(const Dfa& dfa, const Word& w);

bool is_strongly_connected(const Dfa& dfa);

/// Letter a cycles q -> q+1 mod n; letter b sends 0 to 1 and fixes the others.
Dfa cerny_family(std::size_t n);

struct SporadicExample {
  std::string name;
  std::size_t expected_length;
  Dfa dfa;
};

/// Known extremal automata, loaded from the embedded data/sporadic tables.
std::vector<SporadicExample> sporadic_examples();

}  // namespace synclab
