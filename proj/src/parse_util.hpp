#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

namespace fif::detail {

inline void strip_line(std::string& line) {
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    line.clear();
    return;
  }
  const auto last = line.find_last_not_of(" \t\r\n");
  line = line.substr(first, last - first + 1);
}

// Whole-token decimal parse; rejects trailing garbage.
inline bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace fif::detail
