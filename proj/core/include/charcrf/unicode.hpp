#pragma once

#include <string>
#include <string_view>

namespace charcrf {

// Six-way character classification used by the type-level encoding and the
// whitespace handling in alignment.
enum class CharCategory : unsigned char {
  Other = 0,
  Upper,
  Lower,
  Digit,
  Whitespace,
  Punct,
};

inline constexpr int kCharCategoryCount = 6;

// Unicode scalar values only; throws Error(bad-format) on malformed input
// unless replace_invalid is set, in which case bad bytes become U+FFFD.
std::u32string decode_utf8(std::string_view bytes, bool replace_invalid = false);
std::string encode_utf8(std::u32string_view chars);
std::string encode_utf8(char32_t c);

CharCategory char_category(char32_t c);
bool is_whitespace(char32_t c);  // Unicode White_Space property
char32_t to_lower(char32_t c);   // simple 1:1 lowering; identity otherwise

// Appends the per-codepoint NFKC form of c (may be empty or several scalars).
void nfkc_fold(char32_t c, std::u32string& out);
std::u32string nfkc_fold(std::u32string_view text);

}  // namespace charcrf
