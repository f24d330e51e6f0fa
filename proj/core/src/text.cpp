#include "charcrf/text.hpp"

#include <set>

#include "charcrf/error.hpp"
#include "charcrf/unicode.hpp"

namespace charcrf {

TagSet::TagSet(std::vector<std::string> entity_types)
    : types_(std::move(entity_types)) {
  if (types_.empty()) {
    throw Error(errkind::invalid_argument, "tag set needs at least one entity type");
  }
  std::set<std::string> seen;
  for (const auto& t : types_) {
    if (t.empty()) {
      throw Error(errkind::invalid_argument, "empty entity type name");
    }
    if (!seen.insert(t).second) {
      throw Error(errkind::invalid_argument, "duplicate entity type: " + t);
    }
  }
}

LabelPosition TagSet::position_of(int label) const {
  if (label == kOutside) return LabelPosition::Outside;
  switch ((label - 1) % 4) {
    case 0: return LabelPosition::Begin;
    case 1: return LabelPosition::Inside;
    case 2: return LabelPosition::End;
    default: return LabelPosition::Single;
  }
}

std::string TagSet::label_name(int label) const {
  if (label < 0 || label >= label_count()) {
    throw Error(errkind::invalid_argument, "label index out of range: " + std::to_string(label));
  }
  if (label == kOutside) return "O";
  static const char* kPrefix = "BIES";
  return std::string(1, kPrefix[(label - 1) % 4]) + "-" + types_[(label - 1) / 4];
}

std::optional<int> TagSet::label_index(const std::string& name) const {
  if (name == "O") return kOutside;
  if (name.size() < 3 || name[1] != '-') return std::nullopt;
  int t = type_index(name.substr(2));
  if (t < 0) return std::nullopt;
  switch (name[0]) {
    case 'B': return begin_label(t);
    case 'I': return inside_label(t);
    case 'E': return end_label(t);
    case 'S': return single_label(t);
    default: return std::nullopt;
  }
}

int TagSet::type_index(const std::string& type) const {
  for (int i = 0; i < type_count(); ++i) {
    if (types_[i] == type) return i;
  }
  return -1;
}

namespace {

std::string span_str(const EntitySpan& s) {
  return "(" + std::to_string(s.start) + "," + std::to_string(s.end) + "," + s.type + ")";
}

}  // namespace

void validate_document(const AnnotatedDocument& doc) {
  const int T = static_cast<int>(doc.text.size());
  int prev_end = 0;
  for (const auto& s : doc.entities) {
    if (s.start < 0 || s.start >= s.end || s.end > T) {
      throw Error(errkind::invalid_argument, "span out of bounds: " + span_str(s));
    }
    if (s.start < prev_end) {
      throw Error(errkind::invalid_argument,
                  "overlapping or unsorted span: " + span_str(s));
    }
    prev_end = s.end;
  }
}

LabelSequence labels_from_spans(const AnnotatedDocument& doc, const TagSet& tags) {
  validate_document(doc);
  LabelSequence labels(doc.text.size(), TagSet::kOutside);
  for (const auto& s : doc.entities) {
    int t = tags.type_index(s.type);
    if (t < 0) {
      throw Error(errkind::invalid_argument, "unknown entity type in span: " + span_str(s));
    }
    if (s.end - s.start == 1) {
      labels[s.start] = tags.single_label(t);
      continue;
    }
    labels[s.start] = tags.begin_label(t);
    for (int i = s.start + 1; i < s.end - 1; ++i) labels[i] = tags.inside_label(t);
    labels[s.end - 1] = tags.end_label(t);
  }
  return labels;
}

std::vector<EntitySpan> spans_from_labels(const LabelSequence& labels,
                                          const TagSet& tags) {
  const int T = static_cast<int>(labels.size());
  for (int l : labels) {
    if (l < 0 || l >= tags.label_count()) {
      throw Error(errkind::invalid_argument, "label index out of range: " + std::to_string(l));
    }
  }
  std::vector<EntitySpan> spans;
  int t = 0;
  while (t < T) {
    const int label = labels[t];
    const auto pos = tags.position_of(label);
    if (pos == LabelPosition::Single) {
      spans.push_back({t, t + 1, tags.entity_types()[tags.type_of(label)]});
      ++t;
      continue;
    }
    if (pos == LabelPosition::Begin) {
      const int type = tags.type_of(label);
      int j = t + 1;
      while (j < T && labels[j] == tags.inside_label(type)) ++j;
      if (j < T && labels[j] == tags.end_label(type)) {
        spans.push_back({t, j + 1, tags.entity_types()[type]});
        t = j + 1;
      } else {
        t = j;  // malformed run; rescan from the breaking position
      }
      continue;
    }
    ++t;  // O, or a dangling I/E fragment
  }
  return spans;
}

bool is_iobes_valid(const LabelSequence& labels, const TagSet& tags) {
  const int T = static_cast<int>(labels.size());
  int t = 0;
  while (t < T) {
    const int label = labels[t];
    const auto pos = tags.position_of(label);
    if (pos == LabelPosition::Outside || pos == LabelPosition::Single) {
      ++t;
      continue;
    }
    if (pos != LabelPosition::Begin) return false;
    const int type = tags.type_of(label);
    int j = t + 1;
    while (j < T && labels[j] == tags.inside_label(type)) ++j;
    if (j >= T || labels[j] != tags.end_label(type)) return false;
    t = j + 1;
  }
  return true;
}

}  // namespace charcrf
