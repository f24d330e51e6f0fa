#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charcrf/text.hpp"

namespace charcrf::convert {

// Monotonic processed-to-raw index map stored as segments. A segment with
// equally wide sides maps characters one to one; an uneven segment (entity
// unescapes, compatibility expansions) maps each of its processed characters
// to the segment's whole raw range.
struct IndexMapping {
  struct Segment {
    int proc_start = 0, proc_end = 0;
    int raw_start = 0, raw_end = 0;
  };
  std::vector<Segment> segments;
  int proc_length = 0;
  int raw_length = 0;

  // Raw range that produced the processed character at proc_index.
  std::pair<int, int> to_raw(int proc_index) const;
  // Union of the raw ranges behind processed range [first, last).
  std::pair<int, int> to_raw_range(int first, int last) const;
};

// HTML entity unescape, then per-character NFKC, with provenance for every
// produced character. Malformed entities pass through untouched.
std::pair<CharSequence, IndexMapping> normalize_with_offsets(const CharSequence& raw);

// Tokenizer output form -> plausible raw spellings, e.g. "-LRB-" -> "(".
class TokenTransformTable {
 public:
  static TokenTransformTable defaults();
  // "tokenized<TAB>raw" lines; repeated keys accumulate alternatives.
  static TokenTransformTable load(const std::string& path, bool include_defaults = true);

  void add(const std::string& tokenized, const std::string& raw_form);
  // Empty list when the token has no transform entries.
  const std::vector<std::string>& alternatives(const std::string& tokenized) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> labels;  // empty when unlabeled, else one per token
};

struct AlignOptions {
  // Also skip characters no token can explain, not just whitespace.
  bool allow_skip = false;
};

// Assigns each token a raw range matching its surface form or one of its
// table alternatives, leaving only whitespace between consecutive ranges.
// Among consistent assignments the leftmost-greedy one wins; the search
// backtracks over table alternatives. Fails naming the first token that
// cannot be placed.
std::vector<TokenSpan> align_tokens_to_raw(const CharSequence& raw,
                                           const TokenizedSentence& sentence,
                                           const TokenTransformTable& table,
                                           const AlignOptions& opts = {});

// BIO/BIOES word labels (scheme auto-detected) projected onto raw character
// spans: each labeled run covers from its first token's start to its last
// token's end.
AnnotatedDocument word_labels_to_char_labels(const CharSequence& raw,
                                             const TokenizedSentence& sentence,
                                             const TokenTransformTable& table,
                                             const TagSet& tags,
                                             const AlignOptions& opts = {});

// Whitespace split, then leading/trailing punctuation runs become their own
// tokens. No character transformation, so alignment is exact by slicing.
std::vector<TokenSpan> simple_tokenize(const CharSequence& text);

// "token<TAB>label" lines, blank line between sentences.
std::vector<TokenizedSentence> load_conll(const std::string& path);
// One document per line (trailing newline tolerated).
std::vector<std::string> load_lines(const std::string& path);

}  // namespace charcrf::convert
