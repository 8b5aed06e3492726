#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidld::detail {

  inline bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'
           || c == '\v';
  }

  inline std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t                   i = 0;
    while (i < s.size()) {
      while (i < s.size() && is_space(s[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j])) {
        ++j;
      }
      if (j > i) {
        out.push_back(s.substr(i, j - i));
      }
      i = j;
    }
    return out;
  }

  // Decimal digits only; no sign, no leading '+'.
  inline std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
    if (s.empty()) {
      return std::nullopt;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      return std::nullopt;
    }
    return value;
  }

}  // namespace braidld::detail
