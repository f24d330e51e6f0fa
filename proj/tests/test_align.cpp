#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "charcrf/align.hpp"
#include "charcrf/error.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace charcrf;

TEST_CASE("idf formula") {
  // df("b") = 3 of N = 3 documents; "a" and "c" appear once each
  const std::vector<std::string> docs = {"a b", "b c", "b"};
  const align::IDFDictionary d1 = align::build_idf(docs, 1);
  CHECK(d1.document_count == 3);
  CHECK(d1.size() == 3);
  CHECK(d1.idf("b") == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d1.idf("a") == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-12));

  const align::IDFDictionary d2 = align::build_idf(docs, 2);
  CHECK(d2.size() == 1);
  CHECK(d2.contains("b"));
  CHECK_FALSE(d2.contains("a"));
  CHECK_THROWS_AS(d2.idf("a"), Error);

  // repeats inside one document count once
  const align::IDFDictionary d3 = align::build_idf({"x x x", "y"}, 1);
  CHECK(d3.idf("x") == doctest::Approx(std::log(3.0 / 2.0) + 1.0).epsilon(1e-12));
}

TEST_CASE("idf vocabulary restriction and empty corpus") {
  const align::IDFDictionary d =
      align::build_idf({"a b", "a b"}, 1, [](const std::string& w) { return w == "a"; });
  CHECK(d.size() == 1);
  CHECK(d.contains("a"));

  try {
    align::build_idf({}, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::invalid_argument);
  }
}

TEST_CASE("idf tsv round trip") {
  align::IDFDictionary d;
  d.document_count = 5;
  d.set("alpha", std::log(2.0) + 1.0);
  d.set("beta", 1.25);
  const std::string path = "test_align_idf.tsv";
  d.save_tsv(path);
  const align::IDFDictionary back = align::IDFDictionary::load_tsv(path);
  CHECK(back.size() == 2);
  CHECK(back.idf("alpha") == d.idf("alpha"));  // exact through the text format
  CHECK(back.idf("beta") == 1.25);
  std::remove(path.c_str());

  CHECK_THROWS_AS(align::IDFDictionary::load_tsv("missing.tsv"), Error);
}

TEST_CASE("substring matches at character boundaries") {
  align::IDFDictionary d;
  d.set("NB", 1.0);
  d.set("NBA", 1.0);
  const auto ms = align::find_matches(U"NBA", d);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == align::Match{0, 2, "NB", 1.0});
  CHECK(ms[1] == align::Match{0, 3, "NBA", 1.0});

  align::IDFDictionary aa;
  aa.set("aa", 1.0);
  const auto overlapping = align::find_matches(U"aaa", aa);
  REQUIRE(overlapping.size() == 2);
  CHECK(overlapping[0].start == 0);
  CHECK(overlapping[0].end == 2);
  CHECK(overlapping[1].start == 1);
  CHECK(overlapping[1].end == 3);
}

TEST_CASE("matching folds compatibility forms") {
  align::IDFDictionary d;
  d.set("NBA", 2.0);
  // fullwidth ＮＢＡ
  const CharSequence text = {0xFF2E, 0xFF22, 0xFF21};
  const auto ms = align::find_matches(text, d);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].start == 0);
  CHECK(ms[0].end == 3);
  CHECK(ms[0].word == "NBA");

  // lowercase mode folds case as well
  CHECK(align::find_matches(U"nba", d).empty());
  const auto folded = align::find_matches(U"nba", d, true);
  REQUIRE(folded.size() == 1);
  CHECK(folded[0].word == "NBA");
}

TEST_CASE("expanded characters cannot be split by a match") {
  align::IDFDictionary d;
  d.set("f", 1.0);
  d.set("fi", 1.0);
  const CharSequence lig(1, char32_t{0xFB01});  // folds to "fi"
  const auto ms = align::find_matches(lig, d);
  // "f" ends inside the ligature's expansion, so only "fi" survives
  REQUIRE(ms.size() == 1);
  CHECK(ms[0] == align::Match{0, 1, "fi", 1.0});
}

TEST_CASE("match selection spec scenario") {
  align::IDFDictionary d;
  d.set("NBA", 2.0);
  d.set("Finals", 1.5);
  const CharSequence text = U"NBA Finals";
  const align::Alignment a = align::select_matches(align::find_matches(text, d), text);
  REQUIRE(a.size() == 10);
  for (int i = 0; i < 3; ++i) {
    CHECK(a[i].kind == align::AlignKind::Word);
    CHECK(a[i].word == "NBA");
  }
  CHECK(a[3].kind == align::AlignKind::Whitespace);
  for (int i = 4; i < 10; ++i) {
    CHECK(a[i].kind == align::AlignKind::Word);
    CHECK(a[i].word == "Finals");
  }
}

TEST_CASE("uncovered characters fall back by class") {
  const CharSequence text = U" a";
  const align::Alignment a = align::select_matches({}, text);
  REQUIRE(a.size() == 2);
  CHECK(a[0].kind == align::AlignKind::Whitespace);
  CHECK(a[1].kind == align::AlignKind::Unknown);
}

TEST_CASE("higher idf wins, then length") {
  align::IDFDictionary d;
  d.set("ab", 3.0);
  d.set("abc", 1.0);
  const CharSequence text = U"abc";
  auto a = align::select_matches(align::find_matches(text, d), text);
  CHECK(a[0].word == "ab");
  CHECK(a[1].word == "ab");
  CHECK(a[2].word == "abc");  // leftover character still claimed by the longer match

  align::IDFDictionary e;
  e.set("ab", 1.0);
  e.set("abc", 1.0);
  a = align::select_matches(align::find_matches(text, e), text);
  for (int i = 0; i < 3; ++i) CHECK(a[i].word == "abc");
}

TEST_CASE("selection equals the per-character oracle on random instances") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    align::IDFDictionary d;
    const int words = 1 + static_cast<int>(rng.below(20));
    for (int i = 0; i < words; ++i) {
      d.set(testutil::random_word(rng, 1, 4), 1.0 + rng.uniform() * 2.0);
    }
    const CharSequence text =
        testutil::random_text(rng, 1 + static_cast<int>(rng.below(60)), U"abcd ef");
    const auto ms = align::find_matches(text, d);
    CHECK(ms == testutil::naive_find_matches(text, d, false));
    CHECK(align::select_matches(ms, text) == testutil::naive_select(ms, text));
  }
}

TEST_CASE("embedding table lookups") {
  Rng rng(22);
  align::EmbeddingTable t(3, rng);
  CHECK(t.dimension() == 3);
  CHECK(t.unk_vector().size() == 3);
  CHECK(t.whitespace_vector().size() == 3);
  t.add("cat", {1, 2, 3});
  CHECK(t.contains("cat"));
  CHECK(t.lookup("cat") == nn::Vec{1, 2, 3});
  CHECK(t.lookup("dog") == t.unk_vector());
  CHECK_THROWS_AS(t.add("bad", {1, 2}), Error);
}

TEST_CASE("word2vec text loading") {
  const std::string path = "test_align_vecs.txt";
  write_file_atomic(path, "2 3\nhello 0.1 0.2 0.3\nworld 1 -1 0.5\n");
  Rng rng(23);
  const align::EmbeddingTable t = align::EmbeddingTable::load_word2vec(path, rng);
  CHECK(t.dimension() == 3);
  CHECK(t.size() == 2);
  CHECK(t.lookup("hello") == nn::Vec{0.1, 0.2, 0.3});
  CHECK(t.lookup("world")[1] == -1.0);
  std::remove(path.c_str());

  write_file_atomic(path, "1 3\nshort 0.5 0.5\n");
  CHECK_THROWS_AS(align::EmbeddingTable::load_word2vec(path, rng), Error);
  std::remove(path.c_str());
}

TEST_CASE("token alignment covers every character") {
  Rng rng(24);
  align::EmbeddingTable t(2, rng);
  t.add("a", {1, 1});
  const CharSequence text = U"a b";
  const align::Alignment a = align::tokenize_align(text, {{0, 1}, {2, 3}}, t);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == align::AlignEntry{align::AlignKind::Word, "a"});
  CHECK(a[1].kind == align::AlignKind::Whitespace);
  CHECK(a[2].kind == align::AlignKind::Unknown);  // "b" missing from the table

  CHECK_THROWS_AS(align::tokenize_align(text, {{2, 3}, {0, 1}}, t), Error);
  CHECK_THROWS_AS(align::tokenize_align(text, {{0, 9}}, t), Error);
}

TEST_CASE("alignment embedding rows") {
  Rng rng(25);
  align::EmbeddingTable t(2, rng);
  t.add("hi", {4, 5});
  const align::Alignment a = {
      {align::AlignKind::Word, "hi"},
      {align::AlignKind::Whitespace, ""},
      {align::AlignKind::Unknown, ""},
      {align::AlignKind::Word, "absent"},
  };
  const nn::Matrix m = align::embed_alignment(a, t);
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == 4.0);
  CHECK(m(0, 1) == 5.0);
  CHECK(m(1, 0) == t.whitespace_vector()[0]);
  CHECK(m(2, 0) == t.unk_vector()[0]);
  CHECK(m(3, 0) == t.unk_vector()[0]);
}
