#include "sporadic_data.hpp"
#include "synclab/dfa.hpp"

#include <charconv>
#include <sstream>

namespace synclab {

namespace {

// Looks for a "# expected_length: N" comment line.
std::size_t expected_length_tag(std::string_view text) {
  constexpr std::string_view key = "# expected_length:";
  auto pos = text.find(key);
  if (pos == std::string_view::npos) throw std::runtime_error("sporadic table lacks an expected_length tag");
  auto rest = text.substr(pos + key.size());
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc()) throw std::runtime_error("malformed expected_length tag");
  return value;
}

}  // namespace

std::vector<SporadicExample> sporadic_examples() {
  std::vector<SporadicExample> out;
  for (auto [name, text] : detail::sporadic_sources())
    out.push_back({std::string(name), expected_length_tag(text), parse_dfa(text)});
  return out;
}

}  // namespace synclab
