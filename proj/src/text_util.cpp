#include "text_util.hpp"

#include <charconv>
#include <sstream>

namespace germkit::detail {

std::vector<std::pair<int, std::vector<std::string>>> directive_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> split_key_value(const std::string& token) {
  auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) return std::nullopt;
  return std::make_pair(token.substr(0, eq), token.substr(eq + 1));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(sep, pos);
    out.emplace_back(s.substr(pos, end == std::string_view::npos ? s.size() - pos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace germkit::detail
