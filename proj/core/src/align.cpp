#include "charcrf/align.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "charcrf/convert.hpp"
#include "charcrf/error.hpp"
#include "charcrf/kv.hpp"
#include "charcrf/unicode.hpp"

namespace charcrf::align {

namespace {

nn::Vec random_row(int dim, Rng& rng) {
  // word2vec-style init scale
  nn::Vec v(dim);
  const double r = 0.5 / dim;
  for (auto& x : v) x = rng.uniform(-r, r);
  return v;
}

double parse_double(const std::string& s, const std::string& where) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end != begin + s.size() || s.empty() || errno == ERANGE || !std::isfinite(v)) {
    throw Error(errkind::bad_format, where + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

EmbeddingTable::EmbeddingTable(int dimension, Rng& rng) : dim_(dimension) {
  if (dimension <= 0) {
    throw Error(errkind::invalid_argument, "embedding dimension must be positive");
  }
  unk_ = random_row(dim_, rng);
  whitespace_ = random_row(dim_, rng);
}

EmbeddingTable::EmbeddingTable(int dimension, nn::Vec unk, nn::Vec whitespace)
    : dim_(dimension), unk_(std::move(unk)), whitespace_(std::move(whitespace)) {
  if (dimension <= 0) {
    throw Error(errkind::invalid_argument, "embedding dimension must be positive");
  }
  if (static_cast<int>(unk_.size()) != dim_ || static_cast<int>(whitespace_.size()) != dim_) {
    throw Error(errkind::invalid_argument, "UNK or whitespace vector width mismatch");
  }
}

void EmbeddingTable::add(const std::string& word, nn::Vec vec) {
  if (word.empty()) {
    throw Error(errkind::invalid_argument, "empty embedding word");
  }
  if (static_cast<int>(vec.size()) != dim_) {
    throw Error(errkind::invalid_argument,
                "embedding width " + std::to_string(vec.size()) + " vs table dimension " +
                    std::to_string(dim_) + " for word '" + word + "'");
  }
  words_[word] = std::move(vec);
}

const nn::Vec& EmbeddingTable::lookup(const std::string& word) const {
  if (dim_ == 0) {
    throw Error(errkind::invalid_argument, "lookup in uninitialized embedding table");
  }
  auto it = words_.find(word);
  return it == words_.end() ? unk_ : it->second;
}

void EmbeddingTable::set_unk_vector(nn::Vec v) {
  if (static_cast<int>(v.size()) != dim_) {
    throw Error(errkind::invalid_argument, "UNK vector width mismatch");
  }
  unk_ = std::move(v);
}

void EmbeddingTable::set_whitespace_vector(nn::Vec v) {
  if (static_cast<int>(v.size()) != dim_) {
    throw Error(errkind::invalid_argument, "whitespace vector width mismatch");
  }
  whitespace_ = std::move(v);
}

EmbeddingTable EmbeddingTable::load_word2vec(const std::string& path, Rng& rng) {
  std::istringstream in(read_file(path));
  std::string header;
  if (!std::getline(in, header)) {
    throw Error(errkind::bad_format, path + ": empty embedding file");
  }
  std::istringstream hs(header);
  long count = -1;
  int dim = -1;
  if (!(hs >> count >> dim) || count < 0 || dim <= 0) {
    throw Error(errkind::bad_format, path + ": bad header '" + header + "'");
  }
  EmbeddingTable table(dim, rng);
  std::string line;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    nn::Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      std::string tok;
      if (!(ls >> tok)) {
        throw Error(errkind::bad_format,
                    path + ":" + std::to_string(lineno) + ": expected " + std::to_string(dim) +
                        " values for '" + word + "'");
      }
      v[i] = parse_double(tok, path + ":" + std::to_string(lineno));
    }
    std::string extra;
    if (ls >> extra) {
      throw Error(errkind::bad_format,
                  path + ":" + std::to_string(lineno) + ": trailing data '" + extra + "'");
    }
    table.add(word, std::move(v));
  }
  if (static_cast<long>(table.size()) != count) {
    throw Error(errkind::bad_format,
                path + ": header declares " + std::to_string(count) + " words, file has " +
                    std::to_string(table.size()));
  }
  return table;
}

void IDFDictionary::set(const std::string& word, double value) {
  if (word.empty()) {
    throw Error(errkind::invalid_argument, "empty dictionary word");
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(errkind::invalid_argument, "idf for '" + word + "' must be finite and >= 0");
  }
  entries[word] = value;
}

double IDFDictionary::idf(const std::string& word) const {
  auto it = entries.find(word);
  if (it == entries.end()) {
    throw Error(errkind::invalid_argument, "word not in dictionary: '" + word + "'");
  }
  return it->second;
}

IDFDictionary IDFDictionary::load_tsv(const std::string& path) {
  IDFDictionary dict;
  std::istringstream in(read_file(path));
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(errkind::bad_format,
                  path + ":" + std::to_string(lineno) + ": expected 'word<TAB>idf'");
    }
    const std::string word = line.substr(0, tab);
    const double v = parse_double(line.substr(tab + 1), path + ":" + std::to_string(lineno));
    if (v < 0.0) {
      throw Error(errkind::bad_format,
                  path + ":" + std::to_string(lineno) + ": negative idf");
    }
    dict.entries[word] = v;
  }
  return dict;
}

void IDFDictionary::save_tsv(const std::string& path) const {
  std::string out;
  for (const auto& [word, v] : entries) {
    out += word;
    out += '\t';
    out += format_double(v);
    out += '\n';
  }
  write_file_atomic(path, out);
}

IDFDictionary build_idf(const std::vector<std::string>& documents, int min_df,
                        const std::function<bool(const std::string&)>& keep) {
  if (documents.empty()) {
    throw Error(errkind::invalid_argument, "empty corpus");
  }
  if (min_df < 1) {
    throw Error(errkind::invalid_argument, "min_df must be >= 1");
  }
  std::map<std::string, long> df;
  for (const auto& doc : documents) {
    const CharSequence text = decode_utf8(doc, /*replace_invalid=*/true);
    std::set<std::string> seen;
    for (const auto& tok : convert::simple_tokenize(text)) {
      seen.insert(encode_utf8(
          std::u32string_view(text).substr(tok.start, tok.end - tok.start)));
    }
    for (const auto& w : seen) ++df[w];
  }
  IDFDictionary dict;
  dict.document_count = static_cast<long>(documents.size());
  const double n = static_cast<double>(dict.document_count);
  for (const auto& [word, count] : df) {
    if (count < min_df) continue;
    if (keep && !keep(word)) continue;
    dict.entries[word] = std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0;
  }
  return dict;
}

namespace {

std::u32string fold_for_matching(std::u32string_view text, bool lowercase) {
  std::u32string folded = nfkc_fold(text);
  if (lowercase) {
    for (auto& c : folded) c = to_lower(c);
  }
  return folded;
}

}  // namespace

MatchAutomaton::MatchAutomaton(const IDFDictionary& dict, bool lowercase)
    : lowercase_(lowercase) {
  nodes_.push_back(Node{});
  for (const auto& [word, idf] : dict.entries) {
    const std::u32string pattern =
        fold_for_matching(decode_utf8(word, /*replace_invalid=*/true), lowercase_);
    if (pattern.empty()) continue;  // character fully erased by folding
    int node = 0;
    for (char32_t c : pattern) {
      auto it = nodes_[node].next.find(c);
      if (it == nodes_[node].next.end()) {
        nodes_.push_back(Node{});
        nodes_.back().depth = nodes_[node].depth + 1;
        it = nodes_[node].next.emplace(c, static_cast<int>(nodes_.size()) - 1).first;
      }
      node = it->second;
    }
    nodes_[node].words.push_back(static_cast<int>(entries_.size()));
    entries_.push_back({word, idf});
  }

  // breadth-first fail and output links
  std::vector<int> queue;
  for (auto& [c, child] : nodes_[0].next) {
    nodes_[child].fail = 0;
    queue.push_back(child);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int node = queue[qi];
    for (auto& [c, child] : nodes_[node].next) {
      int f = nodes_[node].fail;
      while (f != 0 && nodes_[f].next.count(c) == 0) f = nodes_[f].fail;
      auto it = nodes_[f].next.find(c);
      nodes_[child].fail = (it != nodes_[f].next.end() && it->second != child) ? it->second : 0;
      queue.push_back(child);
    }
    const int f = nodes_[node].fail;
    nodes_[node].output = nodes_[f].words.empty() ? nodes_[f].output : f;
  }
}

std::vector<Match> MatchAutomaton::find_matches(const CharSequence& text) const {
  std::vector<Match> out;
  if (nodes_.empty() || text.empty()) return out;
  const int T = static_cast<int>(text.size());

  std::u32string stream;
  std::vector<int> bound(T + 1, 0);
  for (int i = 0; i < T; ++i) {
    bound[i] = static_cast<int>(stream.size());
    std::u32string piece;
    nfkc_fold(text[i], piece);
    if (lowercase_) {
      for (auto& c : piece) c = to_lower(c);
    }
    stream += piece;
  }
  bound[T] = static_cast<int>(stream.size());

  // start_at: original index beginning at this stream position (skipping any
  // fully erased characters); end_at: original index whose content ends here.
  std::vector<int> start_at(stream.size() + 1, -1), end_at(stream.size() + 1, -1);
  for (int i = T; i >= 0; --i) end_at[bound[i]] = i;
  for (int i = 0; i <= T; ++i) start_at[bound[i]] = i;

  int state = 0;
  for (int k = 0; k < static_cast<int>(stream.size()); ++k) {
    const char32_t c = stream[k];
    while (state != 0 && nodes_[state].next.count(c) == 0) state = nodes_[state].fail;
    auto it = nodes_[state].next.find(c);
    state = it == nodes_[state].next.end() ? 0 : it->second;

    for (int o = nodes_[state].words.empty() ? nodes_[state].output : state; o != -1;
         o = nodes_[o].output) {
      const int fs = k + 1 - nodes_[o].depth;
      const int fe = k + 1;
      if (start_at[fs] < 0 || end_at[fe] < 0) continue;
      for (int w : nodes_[o].words) {
        out.push_back({start_at[fs], end_at[fe], entries_[w].word, entries_[w].idf});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    return std::tie(a.start, a.end, a.word) < std::tie(b.start, b.end, b.word);
  });
  return out;
}

std::vector<Match> find_matches(const CharSequence& text, const IDFDictionary& dict,
                                bool lowercase) {
  return MatchAutomaton(dict, lowercase).find_matches(text);
}

Alignment select_matches(const std::vector<Match>& matches, const CharSequence& text) {
  const int T = static_cast<int>(text.size());
  for (const auto& m : matches) {
    if (m.start < 0 || m.start >= m.end || m.end > T) {
      throw Error(errkind::invalid_argument,
                  "match out of bounds: (" + std::to_string(m.start) + "," +
                      std::to_string(m.end) + ",'" + m.word + "')");
    }
  }
  std::vector<int> order(matches.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Match& x = matches[a];
    const Match& y = matches[b];
    if (x.idf != y.idf) return x.idf > y.idf;
    if (x.end - x.start != y.end - y.start) return x.end - x.start > y.end - y.start;
    if (x.start != y.start) return x.start < y.start;
    return x.word < y.word;
  });

  // parent[i] = next index >= i not yet claimed
  std::vector<int> parent(T + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };

  Alignment out(T);
  for (int mi : order) {
    const Match& m = matches[mi];
    for (int i = find(m.start); i < m.end; i = find(i + 1)) {
      out[i] = {AlignKind::Word, m.word};
      parent[i] = i + 1;
    }
  }
  for (int i = 0; i < T; ++i) {
    if (out[i].kind == AlignKind::Word) continue;
    out[i] = char_category(text[i]) == CharCategory::Whitespace
                 ? AlignEntry{AlignKind::Whitespace, ""}
                 : AlignEntry{AlignKind::Unknown, ""};
  }
  return out;
}

Alignment tokenize_align(const CharSequence& text, const std::vector<TokenSpan>& tokens,
                         const EmbeddingTable& table) {
  const int T = static_cast<int>(text.size());
  int prev_end = 0;
  for (const auto& t : tokens) {
    if (t.start < 0 || t.start >= t.end || t.end > T) {
      throw Error(errkind::invalid_argument,
                  "token out of bounds: (" + std::to_string(t.start) + "," +
                      std::to_string(t.end) + ")");
    }
    if (t.start < prev_end) {
      throw Error(errkind::invalid_argument,
                  "overlapping or unsorted token at (" + std::to_string(t.start) + "," +
                      std::to_string(t.end) + ")");
    }
    prev_end = t.end;
  }

  Alignment out(T);
  for (int i = 0; i < T; ++i) {
    out[i] = char_category(text[i]) == CharCategory::Whitespace
                 ? AlignEntry{AlignKind::Whitespace, ""}
                 : AlignEntry{AlignKind::Unknown, ""};
  }
  for (const auto& t : tokens) {
    const std::string word =
        encode_utf8(std::u32string_view(text).substr(t.start, t.end - t.start));
    const AlignEntry entry = table.contains(word) ? AlignEntry{AlignKind::Word, word}
                                                  : AlignEntry{AlignKind::Unknown, ""};
    for (int i = t.start; i < t.end; ++i) out[i] = entry;
  }
  return out;
}

nn::Matrix embed_alignment(const Alignment& a, const EmbeddingTable& table) {
  nn::Matrix m(static_cast<int>(a.size()), table.dimension());
  for (int t = 0; t < static_cast<int>(a.size()); ++t) {
    const nn::Vec* v = nullptr;
    switch (a[t].kind) {
      case AlignKind::Word: v = &table.lookup(a[t].word); break;
      case AlignKind::Whitespace: v = &table.whitespace_vector(); break;
      case AlignKind::Unknown: v = &table.unk_vector(); break;
    }
    std::copy(v->begin(), v->end(), m.row(t));
  }
  return m;
}

}  // namespace charcrf::align
