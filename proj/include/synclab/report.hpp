#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "synclab/audit.hpp"
#include "synclab/census.hpp"
#include "synclab/chain.hpp"
#include "synclab/dfa.hpp"
#include "synclab/oracle.hpp"

namespace synclab {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };
Format parse_format(const std::string& s);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(const std::string& s);

/// Fixed-width text table; every column is padded to its widest cell.
std::string aligned_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

Json matrix_json(const RowMonoMatrix& m);

Json oracle_json(const Dfa& dfa, const OracleResult& r);
Json greedy_json(const Dfa& dfa, const std::optional<Word>& w);
Json chain_json(const ChainCertificate& cert);
Json audit_json(const std::vector<AuditReport>& reports, std::uint64_t seed);
Json census_json(const CensusRecord& rec);
Json dim_json(std::size_t n, std::size_t k, std::size_t dimension);
Json sporadic_json(const std::vector<SporadicExample>& examples);

std::string render_oracle(const Dfa& dfa, const OracleResult& r, Format f);
std::string render_greedy(const Dfa& dfa, const std::optional<Word>& w, Format f);
std::string render_chain(const ChainCertificate& cert, Format f);
std::string render_audit(const std::vector<AuditReport>& reports, std::uint64_t seed, Format f);
std::string render_census(const CensusRecord& rec, Format f);
std::string render_dim(std::size_t n, std::size_t k, std::size_t dimension, Format f);
std::string render_sporadic(const std::vector<SporadicExample>& examples, Format f);

}  // namespace synclab
