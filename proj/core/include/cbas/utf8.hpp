#pragma once

#include <string>
#include <string_view>

namespace cbas::utf8 {

/// Decodes UTF-8. Invalid or truncated sequences decode to U+FFFD.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

/// Number of codepoints.
std::size_t length(std::string_view text);

}  // namespace cbas::utf8
