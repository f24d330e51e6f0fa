#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.cpp from Python's unicodedata.

Emits three tables:
  - per-codepoint NFKC replacement (only codepoints whose NFKC form differs),
  - general-category ranges folded to the six classes used by CharCategory,
  - simple (single-codepoint) lowercase mappings.

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

OUT = "core/src/unicode_tables.cpp"


def fold_category(cp: int) -> int:
    g = unicodedata.category(chr(cp))
    if g == "Lu":
        return 1
    if g == "Ll":
        return 2
    if g == "Nd":
        return 3
    if g.startswith("P"):
        return 4
    return 0


def main() -> None:
    nfkc = []
    pool = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        n = unicodedata.normalize("NFKC", c)
        if n != c:
            nfkc.append((cp, len(pool), len(n)))
            pool.extend(ord(x) for x in n)

    ranges = []
    prev = None
    start = 0
    for cp in range(0x110000):
        k = fold_category(cp)
        if prev is None:
            prev, start = k, cp
        elif k != prev:
            if prev != 0:
                ranges.append((start, cp - 1, prev))
            prev, start = k, cp
    if prev != 0:
        ranges.append((start, 0x10FFFF, prev))

    lower = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        l = c.lower()
        if l != c and len(l) == 1:
            lower.append((cp, ord(l)))

    with open(OUT, "w") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
          % unicodedata.unidata_version)
        w('#include "unicode_tables.hpp"\n\n')
        w("namespace charcrf::detail {\n\n")

        w("const NfkcEntry kNfkcEntries[] = {\n")
        for cp, off, ln in nfkc:
            w("  {0x%X,%d,%d},\n" % (cp, off, ln))
        w("};\n")
        w("const std::size_t kNfkcEntryCount = %d;\n\n" % len(nfkc))

        w("const char32_t kNfkcPool[] = {\n")
        for i in range(0, len(pool), 12):
            w("  " + ",".join("0x%X" % x for x in pool[i:i + 12]) + ",\n")
        w("};\n\n")

        w("const CategoryRange kCategoryRanges[] = {\n")
        for lo, hi, cat in ranges:
            w("  {0x%X,0x%X,%d},\n" % (lo, hi, cat))
        w("};\n")
        w("const std::size_t kCategoryRangeCount = %d;\n\n" % len(ranges))

        w("const LowerEntry kLowerEntries[] = {\n")
        for cp, lo in lower:
            w("  {0x%X,0x%X},\n" % (cp, lo))
        w("};\n")
        w("const std::size_t kLowerEntryCount = %d;\n\n" % len(lower))

        w("}  // namespace charcrf::detail\n")

    sys.stderr.write("wrote %s: %d nfkc, %d ranges, %d lower\n"
                     % (OUT, len(nfkc), len(ranges), len(lower)))


if __name__ == "__main__":
    main()
