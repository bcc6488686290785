#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers shared by the parsers and the analyzers. Malformed
// byte sequences decode to U+FFFD.
namespace cohesion::text {

std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view codepoints);
std::string encode(char32_t codepoint);
/// Appends the UTF-8 form of one code point.
void append(std::string& out, char32_t codepoint);

/// Number of code points in a UTF-8 string.
std::size_t length(std::string_view utf8);

bool is_letter(char32_t c);
bool is_space(char32_t c);
char32_t to_lower(char32_t c);
std::string to_lower(std::string_view utf8);

/// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view s);

std::string_view trim(std::string_view s);

}  // namespace cohesion::text
