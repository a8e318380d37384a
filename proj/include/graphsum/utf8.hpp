#ifndef GRAPHSUM_UTF8_HPP_
#define GRAPHSUM_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace graphsum::utf8 {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes the code point starting at `pos` and advances `pos` past it.
// Invalid or truncated sequences decode to U+FFFD and consume one byte.
char32_t decode(std::string_view text, std::size_t &pos);

void append(std::string &out, char32_t cp);

// Replaces every invalid byte sequence with U+FFFD.
std::string sanitize(std::string_view bytes);

bool is_valid(std::string_view bytes);

bool is_space(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }
bool is_upper(char32_t cp);
char32_t to_lower(char32_t cp);

// Apostrophe-like characters: ASCII ' and U+2019.
inline bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }
inline bool is_hyphen(char32_t cp) { return cp == U'-'; }

std::string to_lower(std::string_view text);

// Strips leading and trailing whitespace.
std::string_view trim(std::string_view text);

}  // namespace graphsum::utf8

#endif  // GRAPHSUM_UTF8_HPP_
