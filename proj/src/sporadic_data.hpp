#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace synclab::detail {

/// (file stem, file contents) for every data/sporadic/*.dfa, sorted by stem.
const std::vector<std::pair<std::string_view, std::string_view>>& sporadic_sources();

}  // namespace synclab::detail
