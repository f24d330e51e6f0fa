#pragma once

#include <optional>
#include <string>
#include <vector>

namespace charcrf {

// Raw input as a sequence of Unicode scalar values. Indexing is 0-based and
// counts scalar values, never bytes; every offset in file formats and APIs
// follows this convention.
using CharSequence = std::u32string;

// Per-character label indices over a TagSet's alphabet.
using LabelSequence = std::vector<int>;

// Where a label sits inside an entity mention.
enum class LabelPosition { Outside, Begin, Inside, End, Single };

// Fixed label alphabet: index 0 is O; type k owns indices 4k+1..4k+4 in the
// order B, I, E, S.
class TagSet {
 public:
  explicit TagSet(std::vector<std::string> entity_types);

  const std::vector<std::string>& entity_types() const { return types_; }
  int type_count() const { return static_cast<int>(types_.size()); }
  int label_count() const { return 4 * type_count() + 1; }

  static constexpr int kOutside = 0;
  int begin_label(int type) const { return 4 * type + 1; }
  int inside_label(int type) const { return 4 * type + 2; }
  int end_label(int type) const { return 4 * type + 3; }
  int single_label(int type) const { return 4 * type + 4; }

  // -1 for O.
  int type_of(int label) const { return label == 0 ? -1 : (label - 1) / 4; }
  LabelPosition position_of(int label) const;

  std::string label_name(int label) const;
  std::optional<int> label_index(const std::string& name) const;
  int type_index(const std::string& type) const;  // -1 when absent

 private:
  std::vector<std::string> types_;
};

// Half-open token range over a CharSequence.
struct TokenSpan {
  int start = 0;
  int end = 0;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

// Typed half-open character range; the unit of evaluation.
struct EntitySpan {
  int start = 0;  // inclusive
  int end = 0;    // exclusive
  std::string type;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Text plus non-overlapping entity spans sorted by start.
struct AnnotatedDocument {
  CharSequence text;
  std::vector<EntitySpan> entities;
};

// Throws Error(invalid-argument) naming the offending span when spans are
// out of bounds, unsorted, or overlapping.
void validate_document(const AnnotatedDocument& doc);

// IOBES encoding of spans. Rejects overlapping spans and unknown types.
LabelSequence labels_from_spans(const AnnotatedDocument& doc, const TagSet& tags);

// Strict decoding: emits a span for every well-formed S or B I* E run of a
// uniform type; malformed fragments emit nothing.
std::vector<EntitySpan> spans_from_labels(const LabelSequence& labels,
                                          const TagSet& tags);

// True iff every maximal non-O run spells S or B I* E of a single type.
bool is_iobes_valid(const LabelSequence& labels, const TagSet& tags);

// JSONL document format: one object per line with fields "text" and
// "entities" ([{start, end, type}], scalar-value offsets, end exclusive).
AnnotatedDocument document_from_json_line(const std::string& line);
std::string document_to_json_line(const AnnotatedDocument& doc);
std::vector<AnnotatedDocument> load_jsonl(const std::string& path);
void save_jsonl(const std::vector<AnnotatedDocument>& docs, const std::string& path);

// Atomic file write helper (temp file + rename) used by every output path.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace charcrf
