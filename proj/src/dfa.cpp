#include "synclab/dfa.hpp"

#include <bit>
#include <charconv>
#include <istream>
#include <sstream>

namespace synclab {

IndexSet::IndexSet(std::size_t universe) : universe_(universe), blocks_((universe + 63) / 64, 0) {}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

std::size_t IndexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & ~other.blocks_[i]) return false;
  return true;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Dfa::Dfa(std::size_t states, std::size_t letters, std::vector<State> table)
    : states_(states), letters_(letters), table_(std::move(table)) {
  if (states_ == 0) throw std::invalid_argument("automaton needs at least one state");
  if (letters_ == 0) throw std::invalid_argument("automaton needs at least one letter");
  if (table_.size() != states_ * letters_)
    throw std::invalid_argument("transition table has " + std::to_string(table_.size()) +
                                " entries, expected " + std::to_string(states_ * letters_));
  for (auto t : table_)
    if (t >= states_) throw std::invalid_argument("transition target " + std::to_string(t) + " out of range");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_count(std::string_view tok, std::size_t& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Dfa parse_dfa(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0, k = 0;
  bool have_header = false;
  std::vector<State> table;
  std::size_t rows = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "dfa" || !parse_count(tokens[1], n) || !parse_count(tokens[2], k))
        throw ParseError(lineno, "malformed header, expected \"dfa <n> <k>\"");
      if (n == 0 || k == 0) throw ParseError(lineno, "state and letter counts must be positive");
      have_header = true;
      table.reserve(n * k);
      continue;
    }
    if (rows == n) throw ParseError(lineno, "unexpected row beyond the " + std::to_string(n) + " declared states");
    if (tokens.size() != k)
      throw ParseError(lineno, "expected " + std::to_string(k) + " targets, found " + std::to_string(tokens.size()));
    for (auto tok : tokens) {
      std::size_t t = 0;
      if (!parse_count(tok, t)) throw ParseError(lineno, "invalid state index '" + std::string(tok) + "'");
      if (t >= n)
        throw ParseError(lineno, "out-of-range target " + std::to_string(t) + " (n=" + std::to_string(n) + ")");
      table.push_back(static_cast<State>(t));
    }
    ++rows;
  }
  if (!have_header) throw ParseError(lineno + 1, "missing header");
  if (rows != n)
    throw ParseError(lineno + 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows));
  return Dfa(n, k, std::move(table));
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dfa(in);
}

std::string serialize_dfa(const Dfa& dfa) {
  std::string out = "dfa " + std::to_string(dfa.states()) + " " + std::to_string(dfa.letters()) + "\n";
  for (State q = 0; q < dfa.states(); ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      if (a) out += ' ';
      out += std::to_string(dfa.next(q, a));
    }
    out += '\n';
  }
  return out;
}

std::string format_word(const Word& w, std::size_t alphabet_size) {
  std::string out;
  if (alphabet_size <= 26) {
    for (auto a : w) out += static_cast<char>('a' + a);
    return out;
  }
  out = "w:";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t alphabet_size) {
  Word w;
  if (text.starts_with("w:")) {
    text.remove_prefix(2);
    while (!text.empty()) {
      auto comma = text.find(',');
      auto tok = text.substr(0, comma);
      std::size_t a = 0;
      if (!parse_count(tok, a) || a >= alphabet_size)
        throw ParseError(1, "invalid letter '" + std::string(tok) + "'");
      w.push_back(static_cast<Letter>(a));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return w;
  }
  for (char c : text) {
    if (c < 'a' || c > 'z' || static_cast<std::size_t>(c - 'a') >= alphabet_size)
      throw ParseError(1, std::string("invalid letter '") + c + "'");
    w.push_back(static_cast<Letter>(c - 'a'));
  }
  return w;
}

void check_word(const Dfa& dfa, const Word& w) {
  for (auto a : w)
    if (a >= dfa.letters()) throw std::out_of_range("letter " + std::to_string(a) + " outside alphabet");
}

State apply_word(const Dfa& dfa, State q, const Word& w) {
  for (auto a : w) q = dfa.next(q, a);
  return q;
}

StateSet apply_word_set(const Dfa& dfa, const StateSet& states, const Word& w) {
  StateSet current = states;
  for (auto a : w) {
    StateSet image(dfa.states());
    for (std::size_t q = 0; q < dfa.states(); ++q)
      if (current.contains(q)) image.insert(dfa.next(static_cast<State>(q), a));
    current = std::move(image);
  }
  return current;
}

bool is_synchronizing_word(const Dfa& dfa, const Word& w) {
  return apply_word_set(dfa, StateSet::full(dfa.states()), w).size() == 1;
}

namespace {

std::vector<bool> reachable_from(std::size_t n, State start, const std::vector<std::vector<State>>& adj) {
  std::vector<bool> seen(n, false);
  std::vector<State> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State t : adj[q])
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  std::vector<std::vector<State>> fwd(n), back(n);
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < dfa.letters(); ++a) {
      fwd[q].push_back(dfa.next(q, a));
      back[dfa.next(q, a)].push_back(q);
    }
  // Strongly connected iff state 0 reaches everything and everything reaches state 0.
  auto f = reachable_from(n, 0, fwd);
  auto b = reachable_from(n, 0, back);
  for (std::size_t q = 0; q < n; ++q)
    if (!f[q] || !b[q]) return false;
  return true;
}

Dfa cerny_family(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Cerny automaton needs n >= 2");
  std::vector<State> table(n * 2);
  for (std::size_t q = 0; q < n; ++q) {
    table[q * 2] = static_cast<State>((q + 1) % n);
    table[q * 2 + 1] = q == 0 ? 1 : static_cast<State>(q);
  }
  return Dfa(n, 2, std::move(table));
}

}  // namespace synclab
