#include "charcrf/convert.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "charcrf/error.hpp"
#include "charcrf/unicode.hpp"

namespace charcrf::convert {

namespace {

bool even_segment(const IndexMapping::Segment& s) {
  return s.proc_end - s.proc_start == s.raw_end - s.raw_start;
}

}  // namespace

std::pair<int, int> IndexMapping::to_raw(int proc_index) const {
  if (proc_index < 0 || proc_index >= proc_length) {
    throw Error(errkind::invalid_argument,
                "processed index out of range: " + std::to_string(proc_index));
  }
  auto it = std::upper_bound(segments.begin(), segments.end(), proc_index,
                             [](int p, const Segment& s) { return p < s.proc_end; });
  const Segment& s = *it;
  if (even_segment(s)) {
    const int r = s.raw_start + (proc_index - s.proc_start);
    return {r, r + 1};
  }
  return {s.raw_start, s.raw_end};
}

std::pair<int, int> IndexMapping::to_raw_range(int first, int last) const {
  if (first < 0 || first >= last || last > proc_length) {
    throw Error(errkind::invalid_argument,
                "processed range out of bounds: [" + std::to_string(first) + "," +
                    std::to_string(last) + ")");
  }
  return {to_raw(first).first, to_raw(last - 1).second};
}

namespace {

const std::map<std::string, char32_t>& named_entities() {
  static const std::map<std::string, char32_t> kEntities = {
      {"amp", U'&'},     {"lt", U'<'},      {"gt", U'>'},      {"quot", U'"'},
      {"apos", U'\''},   {"nbsp", U' '}, {"hellip", U'…'}, {"mdash", U'—'},
      {"ndash", U'–'}, {"lsquo", U'‘'}, {"rsquo", U'’'}, {"ldquo", U'“'},
      {"rdquo", U'”'}, {"copy", U'©'}, {"reg", U'®'},  {"trade", U'™'},
      {"deg", U'°'}, {"middot", U'·'}, {"bull", U'•'}, {"laquo", U'«'},
      {"raquo", U'»'},
  };
  return kEntities;
}

bool valid_scalar(long long v) {
  return v > 0 && v <= 0x10FFFF && !(v >= 0xD800 && v <= 0xDFFF);
}

// Parses the entity starting at raw[i] (which is '&'). On success stores the
// replacement scalar and the length consumed; malformed sequences fail and
// are passed through by the caller.
bool parse_entity(const CharSequence& raw, int i, char32_t* out, int* len) {
  const int n = static_cast<int>(raw.size());
  int j = i + 1;
  std::string body;
  while (j < n && raw[j] != U';' && j - i <= 32) {
    if (raw[j] > 0x7F) return false;
    body.push_back(static_cast<char>(raw[j]));
    ++j;
  }
  if (j >= n || raw[j] != U';' || body.empty()) return false;
  *len = j - i + 1;
  if (body[0] == '#') {
    const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
    const std::string digits = body.substr(hex ? 2 : 1);
    if (digits.empty()) return false;
    long long v = 0;
    for (char c : digits) {
      int d;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (hex && c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (hex && c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        return false;
      }
      v = v * (hex ? 16 : 10) + d;
      if (v > 0x10FFFF) return false;
    }
    if (!valid_scalar(v)) return false;
    *out = static_cast<char32_t>(v);
    return true;
  }
  auto it = named_entities().find(body);
  if (it == named_entities().end()) return false;
  *out = it->second;
  return true;
}

struct Atom {
  std::u32string proc;
  int raw_start = 0;
  int raw_end = 0;
};

}  // namespace

std::pair<CharSequence, IndexMapping> normalize_with_offsets(const CharSequence& raw) {
  const int n = static_cast<int>(raw.size());

  std::vector<Atom> atoms;
  int i = 0;
  while (i < n) {
    char32_t replacement;
    int consumed;
    if (raw[i] == U'&' && parse_entity(raw, i, &replacement, &consumed)) {
      std::u32string folded;
      nfkc_fold(replacement, folded);
      atoms.push_back({std::move(folded), i, i + consumed});
      i += consumed;
      continue;
    }
    std::u32string folded;
    nfkc_fold(raw[i], folded);
    atoms.push_back({std::move(folded), i, i + 1});
    ++i;
  }

  CharSequence proc;
  IndexMapping map;
  map.raw_length = n;
  int pending_raw = -1;  // raw start carried from erased leading atoms
  for (const auto& a : atoms) {
    const int raw_start = pending_raw >= 0 ? pending_raw : a.raw_start;
    if (a.proc.empty()) {
      // erased character: widen the previous segment, or carry it forward
      if (!map.segments.empty() && pending_raw < 0) {
        map.segments.back().raw_end = a.raw_end;
      } else {
        pending_raw = raw_start;
      }
      continue;
    }
    pending_raw = -1;
    const int proc_start = static_cast<int>(proc.size());
    proc += a.proc;
    const int proc_end = static_cast<int>(proc.size());
    const bool plain = a.proc.size() == 1 && a.raw_end - raw_start == 1;
    if (plain && !map.segments.empty()) {
      auto& last = map.segments.back();
      if (even_segment(last) && last.proc_end == proc_start && last.raw_end == raw_start) {
        last.proc_end = proc_end;
        last.raw_end = a.raw_end;
        continue;
      }
    }
    map.segments.push_back({proc_start, proc_end, raw_start, a.raw_end});
  }
  map.proc_length = static_cast<int>(proc.size());
  return {std::move(proc), map};
}

TokenTransformTable TokenTransformTable::defaults() {
  TokenTransformTable t;
  t.add("-LRB-", "(");
  t.add("-RRB-", ")");
  t.add("-LSB-", "[");
  t.add("-RSB-", "]");
  t.add("-LCB-", "{");
  t.add("-RCB-", "}");
  t.add("...", ". .");
  t.add("...", ". . .");
  t.add("...", "…");
  t.add("``", "\"");
  t.add("``", "“");
  t.add("``", "„");
  t.add("''", "\"");
  t.add("''", "”");
  t.add("`", "'");
  t.add("`", "‘");
  t.add("'", "’");
  t.add("--", "–");
  t.add("--", "—");
  return t;
}

TokenTransformTable TokenTransformTable::load(const std::string& path, bool include_defaults) {
  TokenTransformTable t = include_defaults ? defaults() : TokenTransformTable{};
  std::istringstream in(read_file(path));
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(errkind::bad_format,
                  path + ":" + std::to_string(lineno) + ": expected 'tokenized<TAB>raw'");
    }
    t.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return t;
}

void TokenTransformTable::add(const std::string& tokenized, const std::string& raw_form) {
  if (tokenized.empty() || raw_form.empty()) {
    throw Error(errkind::invalid_argument, "transform table forms must be non-empty");
  }
  auto& alts = table_[tokenized];
  if (std::find(alts.begin(), alts.end(), raw_form) == alts.end()) {
    alts.push_back(raw_form);
  }
}

const std::vector<std::string>& TokenTransformTable::alternatives(
    const std::string& tokenized) const {
  static const std::vector<std::string> kEmpty;
  auto it = table_.find(tokenized);
  return it == table_.end() ? kEmpty : it->second;
}

namespace {

struct AlignSearch {
  const CharSequence& raw;
  const std::vector<std::vector<std::u32string>>& candidates;
  bool allow_skip;
  std::vector<TokenSpan> spans;
  std::vector<std::vector<bool>> dead;  // (token, pos) states proven hopeless
  int furthest_token = 0;
  int furthest_pos = 0;

  bool skippable(char32_t c) const {
    return allow_skip || char_category(c) == CharCategory::Whitespace;
  }

  bool matches_at(const std::u32string& cand, int pos) const {
    if (pos + static_cast<int>(cand.size()) > static_cast<int>(raw.size())) return false;
    return std::equal(cand.begin(), cand.end(), raw.begin() + pos);
  }

  bool solve(int token, int pos) {
    if (dead[token][pos]) return false;
    if (token > furthest_token || (token == furthest_token && pos > furthest_pos)) {
      furthest_token = token;
      furthest_pos = pos;
    }
    const int n = static_cast<int>(raw.size());
    if (token == static_cast<int>(candidates.size())) {
      for (int i = pos; i < n; ++i) {
        if (!skippable(raw[i])) {
          dead[token][pos] = true;
          return false;
        }
      }
      return true;
    }
    int q = pos;
    while (true) {
      for (const auto& cand : candidates[token]) {
        if (!matches_at(cand, q)) continue;
        spans[token] = {q, q + static_cast<int>(cand.size())};
        if (solve(token + 1, q + static_cast<int>(cand.size()))) return true;
      }
      if (q < n && skippable(raw[q])) {
        ++q;
      } else {
        break;
      }
    }
    dead[token][pos] = true;
    return false;
  }
};

}  // namespace

std::vector<TokenSpan> align_tokens_to_raw(const CharSequence& raw,
                                           const TokenizedSentence& sentence,
                                           const TokenTransformTable& table,
                                           const AlignOptions& opts) {
  const int n_tokens = static_cast<int>(sentence.tokens.size());
  std::vector<std::vector<std::u32string>> candidates(n_tokens);
  for (int i = 0; i < n_tokens; ++i) {
    const std::string& tok = sentence.tokens[i];
    if (tok.empty()) {
      throw Error(errkind::invalid_argument, "empty token at index " + std::to_string(i));
    }
    candidates[i].push_back(decode_utf8(tok));
    for (const auto& alt : table.alternatives(tok)) {
      std::u32string u = decode_utf8(alt);
      if (std::find(candidates[i].begin(), candidates[i].end(), u) == candidates[i].end()) {
        candidates[i].push_back(std::move(u));
      }
    }
  }

  AlignSearch search{raw, candidates, opts.allow_skip, {}, {}, 0, 0};
  search.spans.resize(n_tokens);
  search.dead.assign(n_tokens + 1, std::vector<bool>(raw.size() + 1, false));
  if (!search.solve(0, 0)) {
    if (n_tokens == 0) {
      throw Error(errkind::alignment_failed,
                  "no tokens, but the raw text has unskippable characters");
    }
    const int t = std::min(search.furthest_token, n_tokens - 1);
    const int lo = std::max(0, search.furthest_pos - 5);
    const int hi = std::min<int>(raw.size(), search.furthest_pos + 15);
    const std::string context =
        encode_utf8(std::u32string_view(raw).substr(lo, hi - lo));
    throw Error(errkind::alignment_failed,
                "cannot place token " + std::to_string(t) + " ('" +
                    (t >= 0 && t < n_tokens ? sentence.tokens[t] : std::string()) +
                    "') near raw position " + std::to_string(search.furthest_pos) + ": '" +
                    context + "'");
  }
  return search.spans;
}

namespace {

struct WordLabel {
  char prefix = 'O';  // O, B, I, E, S
  std::string type;
};

WordLabel parse_word_label(const std::string& label, int token_index) {
  if (label == "O") return {};
  if (label.size() < 3 || label[1] != '-' ||
      (label[0] != 'B' && label[0] != 'I' && label[0] != 'E' && label[0] != 'S')) {
    throw Error(errkind::bad_format, "malformed label '" + label + "' at token " +
                                         std::to_string(token_index));
  }
  return {label[0], label.substr(2)};
}

[[noreturn]] void bad_run(const std::string& label, int token_index) {
  throw Error(errkind::bad_format, "malformed label run: '" + label + "' at token " +
                                       std::to_string(token_index));
}

}  // namespace

AnnotatedDocument word_labels_to_char_labels(const CharSequence& raw,
                                             const TokenizedSentence& sentence,
                                             const TokenTransformTable& table,
                                             const TagSet& tags,
                                             const AlignOptions& opts) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (static_cast<int>(sentence.labels.size()) != n) {
    throw Error(errkind::invalid_argument,
                "sentence has " + std::to_string(n) + " tokens but " +
                    std::to_string(sentence.labels.size()) + " labels");
  }
  const std::vector<TokenSpan> spans = align_tokens_to_raw(raw, sentence, table, opts);

  bool bioes = false;
  for (const auto& l : sentence.labels) {
    if (l.size() >= 2 && (l[0] == 'E' || l[0] == 'S') && l[1] == '-') bioes = true;
  }

  AnnotatedDocument doc{raw, {}};
  int run_start = -1;
  std::string run_type;
  auto close_run = [&](int last_token) {
    doc.entities.push_back(
        {spans[run_start].start, spans[last_token].end, run_type});
    run_start = -1;
    run_type.clear();
  };

  for (int i = 0; i < n; ++i) {
    const WordLabel wl = parse_word_label(sentence.labels[i], i);
    const bool open = run_start >= 0;
    switch (wl.prefix) {
      case 'O':
        if (open) {
          if (bioes) bad_run(sentence.labels[i], i);
          close_run(i - 1);
        }
        break;
      case 'B':
        if (open) {
          if (bioes) bad_run(sentence.labels[i], i);
          close_run(i - 1);
        }
        run_start = i;
        run_type = wl.type;
        break;
      case 'I':
        if (!open || run_type != wl.type) bad_run(sentence.labels[i], i);
        break;
      case 'E':
        if (!bioes || !open || run_type != wl.type) bad_run(sentence.labels[i], i);
        close_run(i);
        break;
      case 'S':
        if (open) bad_run(sentence.labels[i], i);
        doc.entities.push_back({spans[i].start, spans[i].end, wl.type});
        break;
    }
  }
  if (run_start >= 0) {
    if (bioes) bad_run(sentence.labels[n - 1], n - 1);
    close_run(n - 1);
  }

  labels_from_spans(doc, tags);  // validates types and span structure
  return doc;
}

std::vector<TokenSpan> simple_tokenize(const CharSequence& text) {
  const int n = static_cast<int>(text.size());
  std::vector<TokenSpan> out;
  int i = 0;
  while (i < n) {
    if (char_category(text[i]) == CharCategory::Whitespace) {
      ++i;
      continue;
    }
    int e = i;
    while (e < n && char_category(text[e]) != CharCategory::Whitespace) ++e;
    int a = i;
    while (a < e && char_category(text[a]) == CharCategory::Punct) ++a;
    if (a == e) {
      out.push_back({i, e});  // all punctuation
    } else {
      int b = e;
      while (b > a && char_category(text[b - 1]) == CharCategory::Punct) --b;
      if (a > i) out.push_back({i, a});
      out.push_back({a, b});
      if (b < e) out.push_back({b, e});
    }
    i = e;
  }
  return out;
}

std::vector<TokenizedSentence> load_conll(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<TokenizedSentence> sentences;
  TokenizedSentence current;
  std::string line;
  long lineno = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      sentences.push_back(std::move(current));
      current = {};
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(errkind::bad_format,
                  path + ":" + std::to_string(lineno) + ": expected 'token<TAB>label'");
    }
    current.tokens.push_back(line.substr(0, tab));
    current.labels.push_back(line.substr(tab + 1));
  }
  flush();
  return sentences;
}

std::vector<std::string> load_lines(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  return lines;
}

}  // namespace charcrf::convert
