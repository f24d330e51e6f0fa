#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "charcrf/nn.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"

namespace charcrf::align {

// Word vectors plus two distinguished rows: UNK for out-of-vocabulary words
// and a shared vector for whitespace characters. Both are randomly
// initialized and frozen like the rest of the table.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(int dimension, Rng& rng);
  // Rebuild from stored vectors (no random rows drawn).
  EmbeddingTable(int dimension, nn::Vec unk, nn::Vec whitespace);

  int dimension() const { return dim_; }
  std::size_t size() const { return words_.size(); }

  void add(const std::string& word, nn::Vec vec);
  bool contains(const std::string& word) const { return words_.count(word) != 0; }
  // Falls back to the UNK vector for absent words.
  const nn::Vec& lookup(const std::string& word) const;
  const nn::Vec& unk_vector() const { return unk_; }
  const nn::Vec& whitespace_vector() const { return whitespace_; }
  const std::map<std::string, nn::Vec>& entries() const { return words_; }

  void set_unk_vector(nn::Vec v);
  void set_whitespace_vector(nn::Vec v);

  // word2vec text format: header "count dimension", then "word v1 .. v_d".
  static EmbeddingTable load_word2vec(const std::string& path, Rng& rng);

 private:
  int dim_ = 0;
  std::map<std::string, nn::Vec> words_;
  nn::Vec unk_;
  nn::Vec whitespace_;
};

// word -> inverse document frequency.
struct IDFDictionary {
  std::map<std::string, double> entries;
  long document_count = 0;

  void set(const std::string& word, double idf);
  bool contains(const std::string& word) const { return entries.count(word) != 0; }
  double idf(const std::string& word) const;  // throws when absent
  std::size_t size() const { return entries.size(); }

  // UTF-8 lines "word<TAB>idf".
  static IDFDictionary load_tsv(const std::string& path);
  void save_tsv(const std::string& path) const;
};

// idf(w) = ln((1+N)/(1+df(w))) + 1 over one-line documents; words whose
// document frequency falls below min_df are dropped. `keep` optionally
// restricts the vocabulary further.
IDFDictionary build_idf(const std::vector<std::string>& documents, int min_df = 2,
                        const std::function<bool(const std::string&)>& keep = {});

// Dictionary word occurring at [start,end) of the text.
struct Match {
  int start = 0;
  int end = 0;  // exclusive
  std::string word;
  double idf = 0.0;

  friend bool operator==(const Match&, const Match&) = default;
};

// Multi-pattern matcher over per-character NFKC-folded text, optionally
// lowercased as well. Matches are accepted only when both ends land on
// original character boundaries and are reported in original indices,
// sorted by (start, end, word).
class MatchAutomaton {
 public:
  MatchAutomaton() = default;
  explicit MatchAutomaton(const IDFDictionary& dict, bool lowercase = false);

  std::vector<Match> find_matches(const CharSequence& text) const;

 private:
  struct Node {
    std::map<char32_t, int> next;
    int fail = 0;
    int output = -1;  // nearest suffix node that ends a pattern
    int depth = 0;
    std::vector<int> words;
  };
  struct Entry {
    std::string word;
    double idf = 0.0;
  };

  std::vector<Node> nodes_;
  std::vector<Entry> entries_;
  bool lowercase_ = false;
};

// One-shot convenience around MatchAutomaton.
std::vector<Match> find_matches(const CharSequence& text, const IDFDictionary& dict,
                                bool lowercase = false);

enum class AlignKind { Word, Whitespace, Unknown };

struct AlignEntry {
  AlignKind kind = AlignKind::Unknown;
  std::string word;  // set only for Word

  friend bool operator==(const AlignEntry&, const AlignEntry&) = default;
};

// Per-character word assignment of length T.
using Alignment = std::vector<AlignEntry>;

// Assigns each character its highest-priority covering match, priority being
// (idf desc, length desc, start asc, word asc). Characters no match covers
// become Whitespace or Unknown by character class.
Alignment select_matches(const std::vector<Match>& matches, const CharSequence& text);

// Every character of a token is assigned the token's surface form (Unknown
// when the table lacks it); whitespace becomes Whitespace; anything else
// Unknown. Token offsets must be sorted, disjoint and in bounds.
Alignment tokenize_align(const CharSequence& text, const std::vector<TokenSpan>& tokens,
                         const EmbeddingTable& table);

// Row t = embedding vector for the alignment entry at t.
nn::Matrix embed_alignment(const Alignment& a, const EmbeddingTable& table);

}  // namespace charcrf::align
