#include "charcrf/unicode.hpp"

#include <algorithm>
#include <array>

#include "charcrf/error.hpp"
#include "unicode_tables.hpp"

namespace charcrf {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Unicode White_Space property (PropList.txt), stable across versions.
constexpr std::array<std::pair<char32_t, char32_t>, 11> kWhitespaceRanges = {{
    {0x0009, 0x000D},
    {0x0020, 0x0020},
    {0x0085, 0x0085},
    {0x00A0, 0x00A0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x2028, 0x2029},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
    {0, 0},
}};

}  // namespace

std::u32string decode_utf8(std::string_view bytes, bool replace_invalid) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  auto bad = [&](std::size_t at) -> void {
    if (!replace_invalid) {
      throw Error(errkind::bad_format,
                  "invalid UTF-8 at byte offset " + std::to_string(at));
    }
    out.push_back(kReplacement);
  };
  while (i < bytes.size()) {
    unsigned char b = static_cast<unsigned char>(bytes[i]);
    if (b < 0x80) {
      out.push_back(b);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      bad(i);
      ++i;
      continue;
    }
    if (i + len > bytes.size()) {
      bad(i);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      unsigned char c = static_cast<unsigned char>(bytes[i + k]);
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    // Reject overlongs, surrogates, and out-of-range values.
    if (ok) {
      if (len == 2 && cp < 0x80) ok = false;
      if (len == 3 && cp < 0x800) ok = false;
      if (len == 4 && cp < 0x10000) ok = false;
      if (cp >= 0xD800 && cp <= 0xDFFF) ok = false;
      if (cp > 0x10FFFF) ok = false;
    }
    if (!ok) {
      bad(i);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view chars) {
  std::string out;
  out.reserve(chars.size());
  for (char32_t c : chars) out += encode_utf8(c);
  return out;
}

bool is_whitespace(char32_t c) {
  for (const auto& [lo, hi] : kWhitespaceRanges) {
    if (lo == 0 && hi == 0) break;
    if (c >= lo && c <= hi) return true;
  }
  return false;
}

CharCategory char_category(char32_t c) {
  if (is_whitespace(c)) return CharCategory::Whitespace;
  const auto* begin = detail::kCategoryRanges;
  const auto* end = begin + detail::kCategoryRangeCount;
  auto it = std::upper_bound(begin, end, c,
                             [](char32_t v, const detail::CategoryRange& r) {
                               return v < r.lo;
                             });
  if (it != begin) {
    --it;
    if (c >= it->lo && c <= it->hi) {
      switch (it->cat) {
        case 1: return CharCategory::Upper;
        case 2: return CharCategory::Lower;
        case 3: return CharCategory::Digit;
        case 4: return CharCategory::Punct;
      }
    }
  }
  return CharCategory::Other;
}

char32_t to_lower(char32_t c) {
  const auto* begin = detail::kLowerEntries;
  const auto* end = begin + detail::kLowerEntryCount;
  auto it = std::lower_bound(begin, end, c,
                             [](const detail::LowerEntry& e, char32_t v) {
                               return e.cp < v;
                             });
  if (it != end && it->cp == c) return it->lower;
  return c;
}

void nfkc_fold(char32_t c, std::u32string& out) {
  const auto* begin = detail::kNfkcEntries;
  const auto* end = begin + detail::kNfkcEntryCount;
  auto it = std::lower_bound(begin, end, c,
                             [](const detail::NfkcEntry& e, char32_t v) {
                               return e.cp < v;
                             });
  if (it != end && it->cp == c) {
    out.append(detail::kNfkcPool + it->offset, it->len);
  } else {
    out.push_back(c);
  }
}

std::u32string nfkc_fold(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) nfkc_fold(c, out);
  return out;
}

}  // namespace charcrf
