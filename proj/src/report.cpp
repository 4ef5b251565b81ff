#include "synclab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "synclab/word_matrix.hpp"

namespace synclab {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
  return out + "\n";
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = csv_line(header);
  for (const auto& r : rows) out += csv_line(r);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Ratios in text reports use six decimals.
std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Single-line form of an automaton for table cells: rows separated by '|'.
std::string inline_dfa(const Dfa& dfa) {
  std::string out;
  for (State q = 0; q < dfa.states(); ++q) {
    if (q) out += '|';
    for (Letter a = 0; a < dfa.letters(); ++a) out += (a ? " " : "") + std::to_string(dfa.next(q, a));
  }
  return out;
}

std::string word_or_dash(const std::optional<Word>& w, std::size_t k) {
  if (!w) return "-";
  return w->empty() ? "(empty)" : format_word(*w, k);
}

}  // namespace

std::string aligned_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      out += (c ? "  " : "") + cell;
    }
    return out + "\n";
  };
  std::string out = line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  out += line(rule);
  for (const auto& r : rows) out += line(r);
  return out;
}

Json matrix_json(const RowMonoMatrix& m) {
  Json img = Json::array();
  for (auto j : m.img()) img.push_back(j);
  return img;
}

Json oracle_json(const Dfa& dfa, const OracleResult& r) {
  Json j;
  j["command"] = "oracle";
  j["automaton"] = serialize_dfa(dfa);
  j["synchronizing"] = r.length.has_value();
  j["status"] = r.length ? "synchronizing" : "not synchronizing";
  j["length"] = r.length ? Json(*r.length) : Json(nullptr);
  j["witness"] = r.witness ? Json(format_word(*r.witness, dfa.letters())) : Json(nullptr);
  j["explored"] = r.explored;
  j["cerny_bound"] = (dfa.states() - 1) * (dfa.states() - 1);
  return j;
}

Json greedy_json(const Dfa& dfa, const std::optional<Word>& w) {
  Json j;
  j["command"] = "greedy";
  j["automaton"] = serialize_dfa(dfa);
  j["synchronizing"] = w.has_value();
  j["status"] = w ? "synchronizing" : "not synchronizing";
  j["length"] = w ? Json(w->size()) : Json(nullptr);
  j["word"] = w ? Json(format_word(*w, dfa.letters())) : Json(nullptr);
  return j;
}

Json chain_json(const ChainCertificate& cert) {
  const auto k = cert.automaton.letters();
  Json j;
  j["command"] = "chain";
  j["automaton"] = serialize_dfa(cert.automaton);
  j["order"] = to_string(cert.order);
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json step;
    step["word"] = format_word(s.word, k);
    step["letter"] = format_word(Word{s.letter}, k);
    step["parent"] = s.parent;
    step["img"] = matrix_json(s.matrix);
    step["rank"] = s.rank;
    step["dimension"] = s.dimension;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["outcome"] = to_string(cert.outcome);
  if (cert.sync_word) {
    j["sync_word"] = format_word(*cert.sync_word, k);
    j["sync_word_length"] = cert.sync_word->size();
  }
  j["notices"] = cert.notices;
  return j;
}

Json audit_json(const std::vector<AuditReport>& reports, std::uint64_t seed) {
  Json j;
  j["command"] = "audit";
  j["seed"] = seed;
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json e;
    e["claim"] = r.claim;
    e["population"] = r.population;
    e["trials"] = r.trials;
    e["verdict"] = to_string(r.verdict);
    e["violation_count"] = r.violation_count;
    Json vs = Json::array();
    for (const auto& v : r.violations)
      vs.push_back({{"automaton", v.instance.automaton}, {"words", v.instance.words}, {"detail", v.detail}});
    e["violations"] = std::move(vs);
    Json metrics = Json::object();
    for (const auto& [name, value] : r.metrics) metrics[name] = value;
    e["metrics"] = std::move(metrics);
    e["notes"] = r.notes;
    arr.push_back(std::move(e));
  }
  j["reports"] = std::move(arr);
  return j;
}

Json census_json(const CensusRecord& rec) {
  const auto bound = (rec.states - 1) * (rec.states - 1);
  Json j;
  j["command"] = "census";
  j["states"] = rec.states;
  j["letters"] = rec.letters;
  j["tables"] = rec.tables;
  j["canonical_classes"] = rec.canonical_classes;
  j["synchronizing"] = rec.synchronizing;
  j["extremal"] = rec.extremal;
  j["extremal_strongly_connected"] = rec.extremal_strongly_connected;
  j["max_oracle_length"] = rec.max_oracle_length;
  j["cerny_bound"] = bound;
  j["max_chain_word_length"] = rec.max_chain_word_length;
  j["max_chain_ratio"] = rec.max_chain_ratio;
  j["chain_exhausted"] = rec.chain_exhausted;
  j["note"] =
      "counts are isomorphism classes under state relabeling and letter permutation for this exact (n, k); "
      "published extremal counts may use a different alphabet scope";
  Json entries = Json::array();
  for (const auto& e : rec.entries) {
    Json x;
    x["automaton"] = serialize_dfa(e.dfa);
    x["strongly_connected"] = e.strongly_connected;
    x["oracle_length"] = e.oracle_length;
    x["oracle_witness"] = format_word(e.oracle_witness, e.dfa.letters());
    x["chain_outcome"] = to_string(e.chain_outcome);
    x["chain_steps"] = e.chain_steps;
    x["chain_word_length"] = e.chain_word_length ? Json(*e.chain_word_length) : Json(nullptr);
    x["cerny_bound"] = bound;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["extremal_indices"] = rec.extremal_indices;
  return j;
}

Json dim_json(std::size_t n, std::size_t k, std::size_t dimension) {
  Json j;
  j["command"] = "dim";
  j["n"] = n;
  j["k"] = k;
  j["dimension"] = dimension;
  j["formula"] = k == 1 ? 1 : n * (k - 1) + 1;
  return j;
}

Json sporadic_json(const std::vector<SporadicExample>& examples) {
  Json j;
  j["command"] = "gen";
  Json arr = Json::array();
  for (const auto& e : examples)
    arr.push_back({{"name", e.name}, {"expected_length", e.expected_length}, {"automaton", serialize_dfa(e.dfa)}});
  j["automata"] = std::move(arr);
  return j;
}

std::string render_oracle(const Dfa& dfa, const OracleResult& r, Format f) {
  if (f == Format::json) return dump(oracle_json(dfa, r));
  std::vector<std::string> cells{r.length ? "synchronizing" : "not synchronizing",
                                 r.length ? std::to_string(*r.length) : "-", word_or_dash(r.witness, dfa.letters()),
                                 std::to_string(r.explored), inline_dfa(dfa)};
  const std::vector<std::string> header{"status", "length", "witness", "explored", "automaton"};
  if (f == Format::csv) return csv_table(header, {cells});
  return aligned_table(header, {cells});
}

std::string render_greedy(const Dfa& dfa, const std::optional<Word>& w, Format f) {
  if (f == Format::json) return dump(greedy_json(dfa, w));
  std::vector<std::string> cells{w ? "synchronizing" : "not synchronizing", w ? std::to_string(w->size()) : "-",
                                 word_or_dash(w, dfa.letters()), inline_dfa(dfa)};
  const std::vector<std::string> header{"status", "length", "word", "automaton"};
  if (f == Format::csv) return csv_table(header, {cells});
  return aligned_table(header, {cells});
}

std::string render_chain(const ChainCertificate& cert, Format f) {
  if (f == Format::json) return dump(chain_json(cert));
  const auto k = cert.automaton.letters();
  const std::vector<std::string> header{"step", "parent", "letter", "word", "rank", "dimension", "img"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    rows.push_back({std::to_string(i + 1), std::to_string(s.parent), format_word(Word{s.letter}, k),
                    format_word(s.word, k), std::to_string(s.rank), std::to_string(s.dimension),
                    matrix_json(s.matrix).dump()});
  }
  if (f == Format::csv) return csv_table(header, rows);
  std::string out = serialize_dfa(cert.automaton);
  out += "order: " + to_string(cert.order) + "\n";
  out += aligned_table(header, rows);
  out += "outcome: " + to_string(cert.outcome) + "\n";
  if (cert.sync_word)
    out += "sync word: " + word_or_dash(cert.sync_word, k) + " (length " + std::to_string(cert.sync_word->size()) +
           ")\n";
  for (const auto& n : cert.notices) out += "notice: " + n + "\n";
  return out;
}

std::string render_audit(const std::vector<AuditReport>& reports, std::uint64_t seed, Format f) {
  if (f == Format::json) return dump(audit_json(reports, seed));
  const std::vector<std::string> header{"claim", "verdict", "trials", "violations", "population"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports)
    rows.push_back({r.claim, to_string(r.verdict), std::to_string(r.trials), std::to_string(r.violation_count),
                    r.population});
  if (f == Format::csv) {
    std::vector<std::string> h = header;
    h.push_back("first_counterexample");
    for (std::size_t i = 0; i < reports.size(); ++i)
      rows[i].push_back(reports[i].violations.empty() ? "" : reports[i].violations.front().instance.automaton);
    return csv_table(h, rows);
  }
  std::string out = "seed: " + std::to_string(seed) + "\n" + aligned_table(header, rows);
  for (const auto& r : reports) {
    for (const auto& [name, value] : r.metrics) out += r.claim + ": " + name + " = " + fixed(value) + "\n";
    for (const auto& n : r.notes) out += r.claim + ": " + n + "\n";
    for (const auto& v : r.violations) {
      out += r.claim + " counterexample: " + v.detail + "\n" + v.instance.automaton;
      for (const auto& w : v.instance.words) out += "  word: " + (w.empty() ? "(empty)" : w) + "\n";
    }
  }
  return out;
}

std::string render_census(const CensusRecord& rec, Format f) {
  if (f == Format::json) return dump(census_json(rec));
  const auto bound = (rec.states - 1) * (rec.states - 1);
  const std::vector<std::string> header{"automaton",  "strongly_connected", "oracle_length",    "chain_outcome",
                                        "chain_steps", "chain_word_length", "cerny_bound"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : rec.entries)
    rows.push_back({f == Format::csv ? serialize_dfa(e.dfa) : inline_dfa(e.dfa), e.strongly_connected ? "yes" : "no",
                    std::to_string(e.oracle_length), to_string(e.chain_outcome), std::to_string(e.chain_steps),
                    e.chain_word_length ? std::to_string(*e.chain_word_length) : "-", std::to_string(bound)});
  if (f == Format::csv) return csv_table(header, rows);
  std::string out;
  out += "n=" + std::to_string(rec.states) + " k=" + std::to_string(rec.letters) + " tables=" +
         std::to_string(rec.tables) + " classes=" + std::to_string(rec.canonical_classes) + "\n";
  out += "synchronizing classes: " + std::to_string(rec.synchronizing) + "\n";
  out += "extremal classes (length (n-1)^2 = " + std::to_string(bound) + "): " + std::to_string(rec.extremal) +
         " (strongly connected: " + std::to_string(rec.extremal_strongly_connected) + ")\n";
  out += "max oracle length: " + std::to_string(rec.max_oracle_length) + "\n";
  out += "max chain word length: " + std::to_string(rec.max_chain_word_length) +
         " (ratio to (n-1)^2: " + fixed(rec.max_chain_ratio) + ")\n";
  out += "chain exhausted: " + std::to_string(rec.chain_exhausted) + "\n";
  out += aligned_table(header, rows);
  return out;
}

std::string render_dim(std::size_t n, std::size_t k, std::size_t dimension, Format f) {
  if (f == Format::json) return dump(dim_json(n, k, dimension));
  const std::vector<std::string> header{"n", "k", "dimension", "formula"};
  std::vector<std::string> cells{std::to_string(n), std::to_string(k), std::to_string(dimension),
                                 std::to_string(k == 1 ? 1 : n * (k - 1) + 1)};
  if (f == Format::csv) return csv_table(header, {cells});
  return aligned_table(header, {cells});
}

std::string render_sporadic(const std::vector<SporadicExample>& examples, Format f) {
  if (f == Format::json) return dump(sporadic_json(examples));
  if (f == Format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : examples) rows.push_back({e.name, std::to_string(e.expected_length), serialize_dfa(e.dfa)});
    return csv_table({"name", "expected_length", "automaton"}, rows);
  }
  std::string out;
  for (const auto& e : examples)
    out += "# name: " + e.name + "\n# expected_length: " + std::to_string(e.expected_length) + "\n" +
           serialize_dfa(e.dfa);
  return out;
}

}  // namespace synclab
