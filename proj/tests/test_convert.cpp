#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "charcrf/convert.hpp"
#include "charcrf/error.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"
#include "doctest.h"

using namespace charcrf;

TEST_CASE("entity unescape tracks offsets") {
  const auto [proc, map] = convert::normalize_with_offsets(U"&amp; x");
  CHECK(proc == U"& x");
  CHECK(map.to_raw(0) == std::pair{0, 5});
  CHECK(map.to_raw(1) == std::pair{5, 6});
  CHECK(map.to_raw(2) == std::pair{6, 7});
  CHECK(map.proc_length == 3);
  CHECK(map.raw_length == 7);
  CHECK(map.to_raw_range(0, 2) == std::pair{0, 6});
}

TEST_CASE("compatibility folding tracks offsets") {
  // fullwidth N narrows 1:1; the fi ligature expands one raw char to two
  const CharSequence raw = {0xFF2E, 0xFB01};
  const auto [proc, map] = convert::normalize_with_offsets(raw);
  CHECK(proc == U"Nfi");
  CHECK(map.to_raw(0) == std::pair{0, 1});
  CHECK(map.to_raw(1) == std::pair{1, 2});
  CHECK(map.to_raw(2) == std::pair{1, 2});
}

TEST_CASE("malformed entities pass through") {
  const auto [proc, map] = convert::normalize_with_offsets(U"&zzz; &amp");
  CHECK(proc == U"&zzz; &amp");
  for (int i = 0; i < 10; ++i) CHECK(map.to_raw(i) == std::pair{i, i + 1});
}

TEST_CASE("numeric entities") {
  const auto [proc, map] = convert::normalize_with_offsets(U"&#65;&#x42;");
  CHECK(proc == U"AB");
  CHECK(map.to_raw(0) == std::pair{0, 5});
  CHECK(map.to_raw(1) == std::pair{5, 11});
}

TEST_CASE("simple tokenizer") {
  auto tokens = convert::simple_tokenize(U"Lakers-Raptors game!");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == TokenSpan{0, 14});
  CHECK(tokens[1] == TokenSpan{15, 19});
  CHECK(tokens[2] == TokenSpan{19, 20});

  tokens = convert::simple_tokenize(U"a b");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0] == TokenSpan{0, 1});
  CHECK(tokens[1] == TokenSpan{2, 3});

  CHECK(convert::simple_tokenize(U"").empty());
  CHECK(convert::simple_tokenize(U"   ").empty());

  // leading and trailing punctuation split off; inner punctuation stays
  tokens = convert::simple_tokenize(U"\"It's...\"");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == TokenSpan{0, 1});
  CHECK(tokens[1] == TokenSpan{1, 5});
  CHECK(tokens[2] == TokenSpan{5, 9});
}

TEST_CASE("token transform table") {
  const convert::TokenTransformTable t = convert::TokenTransformTable::defaults();
  const auto& lrb = t.alternatives("-LRB-");
  CHECK(std::find(lrb.begin(), lrb.end(), "(") != lrb.end());
  CHECK(t.alternatives("plainword").empty());

  const std::string path = "test_convert_transforms.tsv";
  write_file_atomic(path, "``\t\"\n''\t\"\n");
  const convert::TokenTransformTable u = convert::TokenTransformTable::load(path);
  CHECK(!u.alternatives("``").empty());
  CHECK(!u.alternatives("-LRB-").empty());  // defaults still included
  const convert::TokenTransformTable bare = convert::TokenTransformTable::load(path, false);
  CHECK(bare.alternatives("-LRB-").empty());
  std::remove(path.c_str());
}

TEST_CASE("token to raw alignment") {
  convert::TokenTransformTable table = convert::TokenTransformTable::defaults();

  auto spans = convert::align_tokens_to_raw(U"a (b)", {{"a", "-LRB-", "b", "-RRB-"}, {}}, table);
  REQUIRE(spans.size() == 4);
  CHECK(spans[0] == TokenSpan{0, 1});
  CHECK(spans[1] == TokenSpan{2, 3});
  CHECK(spans[2] == TokenSpan{3, 4});
  CHECK(spans[3] == TokenSpan{4, 5});

  spans = convert::align_tokens_to_raw(U"a  b", {{"a", "b"}, {}}, table);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == TokenSpan{0, 1});
  CHECK(spans[1] == TokenSpan{3, 4});

  spans = convert::align_tokens_to_raw(U"That's", {{"That", "'s"}, {}}, table);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == TokenSpan{0, 4});
  CHECK(spans[1] == TokenSpan{4, 6});
}

TEST_CASE("alignment backtracks over table alternatives") {
  convert::TokenTransformTable table = convert::TokenTransformTable::defaults();
  // the raw text spells & as an entity; a custom table entry explains it
  table.add("&", "&amp;");
  const auto spans = convert::align_tokens_to_raw(U"A &amp; B", {{"A", "&", "B"}, {}}, table);
  REQUIRE(spans.size() == 3);
  CHECK(spans[0] == TokenSpan{0, 1});
  CHECK(spans[1] == TokenSpan{2, 7});
  CHECK(spans[2] == TokenSpan{8, 9});

  // "..." admits ". ." and ". . ."; only the longer one leaves a clean tail
  const auto dots =
      convert::align_tokens_to_raw(U"w . . .", {{"w", "..."}, {}}, table);
  REQUIRE(dots.size() == 2);
  CHECK(dots[1] == TokenSpan{2, 7});
}

TEST_CASE("alignment failure names the token") {
  convert::TokenTransformTable table = convert::TokenTransformTable::defaults();
  try {
    convert::align_tokens_to_raw(U"a b", {{"a", "zz"}, {}}, table);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::alignment_failed);
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }

  // stray non-whitespace characters fail unless skipping is allowed
  CHECK_THROWS_AS(convert::align_tokens_to_raw(U"a * b", {{"a", "b"}, {}}, table), Error);
  convert::AlignOptions opts;
  opts.allow_skip = true;
  const auto spans = convert::align_tokens_to_raw(U"a * b", {{"a", "b"}, {}}, table, opts);
  REQUIRE(spans.size() == 2);
  CHECK(spans[1] == TokenSpan{4, 5});
}

TEST_CASE("word labels project onto raw spans") {
  const TagSet tags({"LOC", "PER"});
  convert::TokenTransformTable table = convert::TokenTransformTable::defaults();

  AnnotatedDocument doc = convert::word_labels_to_char_labels(
      U"Times Square", {{"Times", "Square"}, {"B-LOC", "E-LOC"}}, table, tags);
  REQUIRE(doc.entities.size() == 1);
  CHECK(doc.entities[0] == EntitySpan{0, 12, "LOC"});

  // BIO input: the run ends at the last I token
  doc = convert::word_labels_to_char_labels(
      U"visit Times Square today", {{"visit", "Times", "Square", "today"}, {"O", "B-LOC", "I-LOC", "O"}},
      table, tags);
  REQUIRE(doc.entities.size() == 1);
  CHECK(doc.entities[0] == EntitySpan{6, 18, "LOC"});

  // BIOES single
  doc = convert::word_labels_to_char_labels(U"Egypt now", {{"Egypt", "now"}, {"S-LOC", "O"}},
                                            table, tags);
  REQUIRE(doc.entities.size() == 1);
  CHECK(doc.entities[0] == EntitySpan{0, 5, "LOC"});

  // adjacent B in BIO closes the previous run
  doc = convert::word_labels_to_char_labels(
      U"Paris Rome", {{"Paris", "Rome"}, {"B-LOC", "B-LOC"}}, table, tags);
  REQUIRE(doc.entities.size() == 2);
  CHECK(doc.entities[0] == EntitySpan{0, 5, "LOC"});
  CHECK(doc.entities[1] == EntitySpan{6, 10, "LOC"});
}

TEST_CASE("word labels round trip through tokenization") {
  const TagSet tags({"PER", "ORG"});
  convert::TokenTransformTable table = convert::TokenTransformTable::defaults();
  Rng rng(31);
  const std::vector<std::string> words = {"alpha", "beta", "gamma", "x", "(", ")", "!"};
  for (int trial = 0; trial < 50; ++trial) {
    // build a sentence and label tokens directly so boundaries always align
    const int n = 1 + static_cast<int>(rng.below(8));
    CharSequence raw;
    std::vector<TokenSpan> spans;
    for (int i = 0; i < n; ++i) {
      if (i > 0) raw += U' ';
      const CharSequence w = decode_utf8(words[rng.below(words.size())]);
      spans.push_back({static_cast<int>(raw.size()), static_cast<int>(raw.size() + w.size())});
      raw += w;
    }
    convert::TokenizedSentence sentence;
    std::vector<EntitySpan> expect;
    int i = 0;
    while (i < n) {
      const CharSequence w(raw.begin() + spans[i].start, raw.begin() + spans[i].end);
      sentence.tokens.push_back(encode_utf8(w));
      if (rng.uniform() < 0.4) {
        const std::string type = rng.uniform() < 0.5 ? "PER" : "ORG";
        const int len = 1 + static_cast<int>(rng.below(std::min(3, n - i)));
        if (len == 1) {
          sentence.labels.push_back("S-" + type);
        } else {
          sentence.labels.push_back("B-" + type);
          for (int k = 1; k < len; ++k) {
            const CharSequence wk(raw.begin() + spans[i + k].start, raw.begin() + spans[i + k].end);
            sentence.tokens.push_back(encode_utf8(wk));
            sentence.labels.push_back(k + 1 == len ? "E-" + type : "I-" + type);
          }
        }
        expect.push_back({spans[i].start, spans[i + len - 1].end, type});
        i += len;
      } else {
        sentence.labels.push_back("O");
        ++i;
      }
    }
    const AnnotatedDocument doc =
        convert::word_labels_to_char_labels(raw, sentence, table, tags);
    CHECK(doc.entities == expect);
  }
}

TEST_CASE("conll loading") {
  const std::string path = "test_convert_conll.txt";
  write_file_atomic(path,
                    "Times\tB-LOC\n"
                    "Square\tE-LOC\n"
                    "\n"
                    "hello\tO\n");
  const auto sentences = convert::load_conll(path);
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].tokens == std::vector<std::string>{"Times", "Square"});
  CHECK(sentences[0].labels == std::vector<std::string>{"B-LOC", "E-LOC"});
  CHECK(sentences[1].tokens == std::vector<std::string>{"hello"});
  std::remove(path.c_str());
}

TEST_CASE("line loading") {
  const std::string path = "test_convert_lines.txt";
  write_file_atomic(path, "one\ntwo\n");
  const auto lines = convert::load_lines(path);
  CHECK(lines == std::vector<std::string>{"one", "two"});
  std::remove(path.c_str());
  CHECK_THROWS_AS(convert::load_lines("missing_lines.txt"), Error);
}
