#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace germkit::detail {

// Non-empty directive lines with '#' comments stripped, tokenized on
// whitespace, paired with their 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string>>> directive_lines(std::string_view text);

std::optional<std::pair<std::string, std::string>> split_key_value(const std::string& token);

std::optional<std::int64_t> parse_int(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace germkit::detail
