#pragma once

#include <cstddef>

namespace charcrf::detail {

struct NfkcEntry {
  char32_t cp;
  unsigned offset;  // into kNfkcPool
  unsigned len;
};

struct CategoryRange {
  char32_t lo;
  char32_t hi;
  unsigned char cat;  // 1=Lu 2=Ll 3=Nd 4=P*
};

struct LowerEntry {
  char32_t cp;
  char32_t lower;
};

extern const NfkcEntry kNfkcEntries[];
extern const std::size_t kNfkcEntryCount;
extern const char32_t kNfkcPool[];
extern const CategoryRange kCategoryRanges[];
extern const std::size_t kCategoryRangeCount;
extern const LowerEntry kLowerEntries[];
extern const std::size_t kLowerEntryCount;

}  // namespace charcrf::detail
