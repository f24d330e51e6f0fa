#include <cstdio>
#include <string>
#include <vector>

#include "charcrf/error.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace charcrf;

TEST_CASE("tag set layout") {
  const TagSet tags({"LOC", "PER"});
  CHECK(tags.label_count() == 9);
  CHECK(TagSet::kOutside == 0);
  CHECK(tags.begin_label(0) == 1);
  CHECK(tags.inside_label(0) == 2);
  CHECK(tags.end_label(0) == 3);
  CHECK(tags.single_label(0) == 4);
  CHECK(tags.begin_label(1) == 5);
  CHECK(tags.type_of(0) == -1);
  CHECK(tags.type_of(4) == 0);
  CHECK(tags.type_of(5) == 1);
  CHECK(tags.position_of(0) == LabelPosition::Outside);
  CHECK(tags.position_of(1) == LabelPosition::Begin);
  CHECK(tags.position_of(2) == LabelPosition::Inside);
  CHECK(tags.position_of(3) == LabelPosition::End);
  CHECK(tags.position_of(8) == LabelPosition::Single);
  CHECK(tags.label_name(0) == "O");
  CHECK(tags.label_name(1) == "B-LOC");
  CHECK(tags.label_name(7) == "E-PER");
  CHECK(tags.label_index("O") == 0);
  CHECK(tags.label_index("S-PER") == 8);
  CHECK_FALSE(tags.label_index("B-ORG").has_value());
  CHECK(tags.type_index("PER") == 1);
  CHECK(tags.type_index("ORG") == -1);
}

TEST_CASE("span and label round trip") {
  const TagSet tags({"LOC", "PER"});
  AnnotatedDocument doc;
  doc.text = U"Rome and Jo Xi";
  doc.entities = {{0, 4, "LOC"}, {9, 11, "PER"}, {12, 14, "PER"}};
  const LabelSequence labels = labels_from_spans(doc, tags);
  REQUIRE(static_cast<int>(labels.size()) == 14);
  // Rome: B-LOC I-LOC I-LOC E-LOC
  CHECK(labels[0] == tags.begin_label(0));
  CHECK(labels[1] == tags.inside_label(0));
  CHECK(labels[3] == tags.end_label(0));
  CHECK(labels[4] == TagSet::kOutside);
  // Jo: two characters, B-PER E-PER
  CHECK(labels[9] == tags.begin_label(1));
  CHECK(labels[10] == tags.end_label(1));
  CHECK(is_iobes_valid(labels, tags));
  CHECK(spans_from_labels(labels, tags) == doc.entities);

  AnnotatedDocument single;
  single.text = U"X";
  single.entities = {{0, 1, "PER"}};
  const LabelSequence sl = labels_from_spans(single, tags);
  CHECK(sl == LabelSequence{tags.single_label(1)});
}

TEST_CASE("round trip over random documents") {
  const TagSet tags({"A", "B", "C"});
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const AnnotatedDocument doc = testutil::random_document(rng, tags.entity_types());
    const LabelSequence labels = labels_from_spans(doc, tags);
    CHECK(is_iobes_valid(labels, tags));
    CHECK(spans_from_labels(labels, tags) == doc.entities);
  }
}

TEST_CASE("strict decoding drops malformed runs") {
  const TagSet tags({"LOC", "PER"});
  const int O = 0, B = tags.begin_label(0), I = tags.inside_label(0),
            E = tags.end_label(0), S = tags.single_label(0);
  const int B2 = tags.begin_label(1), E2 = tags.end_label(1);

  // dangling B, dangling I, B closed by the wrong type
  CHECK(spans_from_labels({B, O}, tags).empty());
  CHECK(spans_from_labels({I, I, O}, tags).empty());
  CHECK(spans_from_labels({B, E2}, tags).empty());
  CHECK_FALSE(is_iobes_valid({B, O}, tags));
  CHECK_FALSE(is_iobes_valid({B, E2}, tags));

  // a valid span surrounded by junk still comes out
  const auto spans = spans_from_labels({I, O, B, I, E, O, B2}, tags);
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == EntitySpan{2, 5, "LOC"});
  // S alone is well formed
  CHECK(spans_from_labels({O, S}, tags) == std::vector<EntitySpan>{{1, 2, "LOC"}});
}

TEST_CASE("document validation") {
  CHECK_NOTHROW(validate_document({U"abcdef", {{0, 2, "X"}, {2, 3, "Y"}}}));
  CHECK_THROWS_AS(validate_document({U"abc", {{0, 4, "X"}}}), Error);
  CHECK_THROWS_AS(validate_document({U"abc", {{2, 2, "X"}}}), Error);
  CHECK_THROWS_AS(validate_document({U"abcdef", {{2, 4, "X"}, {0, 1, "Y"}}}), Error);
  CHECK_THROWS_AS(validate_document({U"abcdef", {{0, 3, "X"}, {2, 5, "Y"}}}), Error);
  try {
    validate_document({U"abc", {{-1, 2, "X"}}});
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::invalid_argument);
  }
}

TEST_CASE("jsonl line round trip") {
  AnnotatedDocument doc;
  doc.text = U"café X";
  doc.entities = {{0, 4, "LOC"}, {5, 6, "PER"}};
  const std::string line = document_to_json_line(doc);
  const AnnotatedDocument back = document_from_json_line(line);
  CHECK(back.text == doc.text);
  CHECK(back.entities == doc.entities);

  // offsets count characters, not bytes: é is one position
  const AnnotatedDocument accented =
      document_from_json_line(R"({"text":"café X","entities":[{"start":5,"end":6,"type":"PER"}]})");
  CHECK(accented.entities[0].start == 5);

  CHECK_THROWS_AS(document_from_json_line("{"), Error);
  CHECK_THROWS_AS(document_from_json_line(R"({"entities":[]})"), Error);
  CHECK_THROWS_AS(document_from_json_line(R"({"text":"ab","entities":[{"start":0}]})"), Error);
  // spans are validated on load
  CHECK_THROWS_AS(
      document_from_json_line(R"({"text":"ab","entities":[{"start":0,"end":9,"type":"X"}]})"),
      Error);
}

TEST_CASE("jsonl file round trip and missing file") {
  const std::string path = "test_text_docs.jsonl";
  std::vector<AnnotatedDocument> docs;
  docs.push_back({U"one", {}});
  docs.push_back({U"two words", {{0, 3, "A"}}});
  save_jsonl(docs, path);
  const auto back = load_jsonl(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].text == docs[0].text);
  CHECK(back[1].entities == docs[1].entities);
  std::remove(path.c_str());

  try {
    load_jsonl("no_such_file.jsonl");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::resource_not_found);
    CHECK(std::string(e.what()).find("no_such_file.jsonl") != std::string::npos);
  }

  // errors name the offending line
  write_file_atomic(path, "{\"text\":\"ok\"}\nnot json\n");
  try {
    load_jsonl(path);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("atomic write replaces contents") {
  const std::string path = "test_text_atomic.txt";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  CHECK(read_file(path) == "second");
  std::remove(path.c_str());
}
