#include <string>
#include <vector>

#include "charcrf/error.hpp"
#include "charcrf/eval.hpp"
#include "charcrf/text.hpp"
#include "doctest.h"

using namespace charcrf;

namespace {

std::vector<AnnotatedDocument> docs(std::vector<EntitySpan> spans) {
  return {{U"0123456789", std::move(spans)}};
}

}  // namespace

TEST_CASE("half right prediction") {
  const auto report =
      eval::score(docs({{0, 5, "PER"}}), docs({{0, 5, "PER"}, {7, 9, "LOC"}}));
  CHECK(report.overall.tp == 1);
  CHECK(report.overall.predicted == 2);
  CHECK(report.overall.gold == 1);
  CHECK(report.overall.precision == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(report.overall.recall == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(report.overall.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK(report.per_type.at("PER").f1 == 1.0);
  CHECK(report.per_type.at("LOC").predicted == 1);
  CHECK(report.per_type.at("LOC").gold == 0);
  CHECK(report.per_type.at("LOC").precision == 0.0);
  CHECK(report.per_type.at("LOC").f1 == 0.0);
}

TEST_CASE("perfect and empty scores") {
  const auto spans = std::vector<EntitySpan>{{1, 3, "PER"}, {4, 6, "LOC"}};
  const auto perfect = eval::score(docs(spans), docs(spans));
  CHECK(perfect.overall.f1 == 1.0);
  CHECK(perfect.overall.precision == 1.0);
  CHECK(perfect.overall.recall == 1.0);

  // nothing predicted and nothing to find counts as a perfect score
  const auto empty = eval::score(docs({}), docs({}));
  CHECK(empty.overall.f1 == 1.0);
  CHECK(empty.per_type.empty());

  // a miss with no prediction: recall 0, f1 0
  const auto miss = eval::score(docs({{0, 2, "PER"}}), docs({}));
  CHECK(miss.overall.recall == 0.0);
  CHECK(miss.overall.f1 == 0.0);
}

TEST_CASE("exact match only") {
  const auto off = eval::score(docs({{0, 5, "PER"}}), docs({{0, 4, "PER"}}));
  CHECK(off.overall.tp == 0);
  const auto wrong_type = eval::score(docs({{0, 5, "PER"}}), docs({{0, 5, "LOC"}}));
  CHECK(wrong_type.overall.tp == 0);
}

TEST_CASE("micro average pools counts across documents") {
  std::vector<AnnotatedDocument> gold = {{U"aaaa", {{0, 2, "A"}}},
                                         {U"bbbb", {{0, 2, "A"}, {2, 4, "B"}}}};
  std::vector<AnnotatedDocument> pred = {{U"aaaa", {{0, 2, "A"}}},
                                         {U"bbbb", {{1, 3, "A"}, {2, 4, "B"}}}};
  const auto report = eval::score(gold, pred);
  CHECK(report.overall.tp == 2);
  CHECK(report.overall.predicted == 3);
  CHECK(report.overall.gold == 3);
  CHECK(report.per_type.at("A").tp == 1);
  CHECK(report.per_type.at("B").tp == 1);
  CHECK(report.overall.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // permuting both lists together leaves the scores unchanged
  std::swap(gold[0], gold[1]);
  std::swap(pred[0], pred[1]);
  const auto permuted = eval::score(gold, pred);
  CHECK(permuted.overall.f1 == report.overall.f1);
  CHECK(permuted.per_type.at("A").tp == 1);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(eval::score(docs({}), {}), Error);
  try {
    eval::score({{U"abc", {}}}, {{U"abd", {}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::invalid_argument);
  }
}

TEST_CASE("report rendering") {
  const auto report =
      eval::score(docs({{0, 5, "PER"}}), docs({{0, 5, "PER"}, {7, 9, "LOC"}}));
  const std::string table = report.to_table();
  CHECK(table.find("type") != std::string::npos);
  CHECK(table.find("PER") != std::string::npos);
  CHECK(table.find("overall") != std::string::npos);
  CHECK(table.find("0.6667") != std::string::npos);  // overall f1
  CHECK(table.find("1/2/1") != std::string::npos);   // overall tp/pred/gold

  const std::string json = report.to_json();
  CHECK(json.find("\"overall\"") != std::string::npos);
  CHECK(json.find("\"LOC\"") != std::string::npos);
  CHECK(json.find("\"tp\": 1") != std::string::npos);
}
