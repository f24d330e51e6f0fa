#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "charcrf/error.hpp"
#include "charcrf/lm.hpp"
#include "charcrf/model.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "doctest.h"

using namespace charcrf;

namespace {

model::ModelConfig chars_only_config() {
  model::ModelConfig cfg;
  cfg.entity_types = {"T"};
  cfg.alignment_mode = "none";
  cfg.use_context = false;
  cfg.use_char_encoding = true;
  cfg.char_dim = 8;
  cfg.type_dim = 4;
  cfg.hidden_dim = 8;
  cfg.dropout = 0.0;
  cfg.rep_dropout = 0.0;
  cfg.lr = 0.02;
  cfg.epochs = 10;
  cfg.seed = 1;
  return cfg;
}

std::vector<AnnotatedDocument> x_corpus() {
  // the entity is any run of uppercase X against lowercase filler
  return {
      {U"aXa", {{1, 2, "T"}}},  {U"XXb", {{0, 2, "T"}}},  {U"abX", {{2, 3, "T"}}},
      {U"aaa", {}},             {U"Xab", {{0, 1, "T"}}},  {U"bXXa", {{1, 3, "T"}}},
      {U"aXXb", {{1, 3, "T"}}}, {U"bbXa", {{2, 3, "T"}}},
  };
}

model::Resources full_resources(const model::ModelConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  model::Resources res;
  align::EmbeddingTable table(cfg.word_dim, rng);
  table.add("NBA", {0.5, -0.5, 0.25, 1.0});
  table.add("game", {1.0, 0.0, -1.0, 0.5});
  res.embeddings = std::move(table);
  align::IDFDictionary idf;
  idf.set("NBA", 2.0);
  idf.set("game", 1.5);
  res.idf = std::move(idf);
  lm::CharEncoder enc =
      lm::CharEncoder::build({U"NBA game aXb", U"more text"}, 4, 3, rng);
  res.lm_forward = lm::CharLM(lm::LMDirection::Forward, enc, cfg.lm_hidden, rng);
  res.lm_backward = lm::CharLM(lm::LMDirection::Backward, enc, cfg.lm_hidden, rng);
  return res;
}

model::ModelConfig full_config() {
  model::ModelConfig cfg;
  cfg.entity_types = {"T"};
  cfg.alignment_mode = "match";
  cfg.use_context = true;
  cfg.use_char_encoding = true;
  cfg.word_dim = 4;
  cfg.lm_hidden = 5;
  cfg.proj_dim = 3;
  cfg.char_dim = 4;
  cfg.type_dim = 2;
  cfg.hidden_dim = 6;
  cfg.epochs = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config kv round trip") {
  model::ModelConfig cfg;
  cfg.entity_types = {"PER", "LOC"};
  cfg.alignment_mode = "tokenize";
  cfg.use_context = false;
  cfg.match_lowercase = true;
  cfg.word_dim = 17;
  cfg.dropout = 0.25;
  cfg.optimizer = "sgd";
  cfg.lr = 0.125;
  cfg.epochs = 7;
  cfg.seed = 99;
  cfg.train_on_dev = true;
  cfg.lm_epochs = 3;

  const KeyValueMap kv = cfg.to_kv();
  CHECK(kv.at("entity_types") == "PER,LOC");
  CHECK(kv.at("use_context") == "false");
  CHECK(kv.at("lr") == "0.125");

  const model::ModelConfig back = model::ModelConfig::from_kv(kv);
  CHECK(back.to_kv() == kv);
  CHECK(back.entity_types == cfg.entity_types);
  CHECK(back.match_lowercase);
  CHECK(back.seed == 99);
  CHECK(back.train_on_dev);
}

TEST_CASE("config parsing rejects junk") {
  CHECK_THROWS_AS(model::ModelConfig::from_kv({{"learning_rate", "0.1"}}), Error);
  try {
    model::ModelConfig::from_kv({{"epochs", "three"}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("epochs") != std::string::npos);
  }
  CHECK_THROWS_AS(model::ModelConfig::from_kv({{"lr", "fast"}}), Error);
  CHECK_THROWS_AS(model::ModelConfig::from_kv({{"use_context", "maybe"}}), Error);
  CHECK_THROWS_AS(model::ModelConfig::from_kv({{"seed", "-1"}}), Error);
}

TEST_CASE("config validation") {
  model::ModelConfig cfg = chars_only_config();
  CHECK_NOTHROW(cfg.validate());

  model::ModelConfig bad = cfg;
  bad.alignment_mode = "magic";
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.use_char_encoding = false;  // nothing left
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.dropout = 1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.dropout = -0.1;
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.hidden_dim = 0;
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.optimizer = "rmsprop";
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.epochs = 0;
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.anneal_factor = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);

  bad = cfg;
  bad.patience = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("create checks resources against the configuration") {
  const auto docs = x_corpus();

  model::ModelConfig cfg = full_config();
  // missing everything
  CHECK_THROWS_AS(model::Model::create(cfg, {}, docs), Error);

  // embeddings of the wrong width
  {
    model::Resources res = full_resources(cfg, 5);
    Rng rng(6);
    res.embeddings = align::EmbeddingTable(cfg.word_dim + 1, rng);
    try {
      model::Model::create(cfg, std::move(res), docs);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("word_dim") != std::string::npos);
    }
  }

  // match mode without a dictionary
  {
    model::Resources res = full_resources(cfg, 5);
    res.idf.reset();
    CHECK_THROWS_AS(model::Model::create(cfg, std::move(res), docs), Error);
  }

  // swapped language model directions
  {
    model::Resources res = full_resources(cfg, 5);
    std::swap(res.lm_forward, res.lm_backward);
    try {
      model::Model::create(cfg, std::move(res), docs);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("direction") != std::string::npos);
    }
  }

  // language model width mismatch
  {
    model::ModelConfig wide = cfg;
    wide.lm_hidden = 9;
    wide.proj_dim = 3;
    model::Resources res = full_resources(cfg, 5);  // still built at lm_hidden 5
    CHECK_THROWS_AS(model::Model::create(wide, std::move(res), docs), Error);
  }
}

TEST_CASE("entity types are inferred when the config leaves them empty") {
  model::ModelConfig cfg = chars_only_config();
  cfg.entity_types.clear();
  std::vector<AnnotatedDocument> docs = {{U"ab", {{0, 1, "PER"}}},
                                         {U"cd", {{1, 2, "LOC"}}}};
  const model::Model m = model::Model::create(cfg, {}, docs);
  CHECK(m.config.entity_types == std::vector<std::string>{"LOC", "PER"});  // sorted
  CHECK(m.tags.label_count() == 9);

  CHECK_THROWS_AS(model::Model::create(cfg, {}, {{U"ab", {}}}), Error);
}

TEST_CASE("representation width follows the enabled modules") {
  const auto docs = x_corpus();

  model::Model chars = model::Model::create(chars_only_config(), {}, docs);
  CHECK(chars.modules == std::vector<std::string>{"chars"});
  CHECK(chars.representation_dim() == 8 + 4);

  model::ModelConfig cfg = full_config();
  model::Model full = model::Model::create(cfg, full_resources(cfg, 5), docs);
  CHECK(full.modules == std::vector<std::string>{"alignment", "context", "chars"});
  CHECK(full.representation_dim() == 4 + 3 + (4 + 2));

  const model::FrozenRep rep = full.freeze(U"NBA game");
  CHECK(rep.chars.size() == 8);
  CHECK(rep.word_rows.size() == 8);
  CHECK(rep.lm_fwd_states.size() == 8);
  CHECK(rep.lm_bwd_states.size() == 8);

  const crf::EmissionScores em = full.forward(rep);
  CHECK(em.rows() == 8);
  CHECK(em.cols() == full.tags.label_count());

  CHECK(full.predict(U"").empty());
}

TEST_CASE("training learns a separable toy task") {
  const auto docs = x_corpus();
  model::ModelConfig cfg = chars_only_config();
  cfg.epochs = 80;
  model::Model m = model::Model::create(cfg, {}, docs);

  std::ostringstream log;
  const model::TrainResult result =
      model::train(m, docs, docs, &log, [](const model::EpochLog& e) {
        return e.dev_f1 < 1.0;  // stop once the training set is perfectly recovered
      });

  CHECK(result.best_f1 == 1.0);
  CHECK(result.best_epoch >= 1);
  CHECK(result.epochs.size() < 80);  // converged before the cap
  CHECK(result.epochs.front().mean_loss > result.epochs.back().mean_loss);

  // log format: epoch, loss, dev f1, lr on every line
  std::istringstream lines(log.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(line.find("epoch=") == 0);
    CHECK(line.find(" loss=") != std::string::npos);
    CHECK(line.find(" dev_f1=") != std::string::npos);
    CHECK(line.find(" lr=") != std::string::npos);
  }
  CHECK(count == static_cast<int>(result.epochs.size()));

  // the selected model reproduces the annotations, including unseen filler
  for (const AnnotatedDocument& d : docs) {
    CHECK(m.predict(d.text) == d.entities);
  }
  const auto spans = m.predict(U"qXq");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == EntitySpan{1, 2, "T"});
}

TEST_CASE("training is deterministic") {
  const auto docs = x_corpus();
  auto run = [&] {
    model::ModelConfig cfg = chars_only_config();
    cfg.epochs = 5;
    model::Model m = model::Model::create(cfg, {}, docs);
    std::ostringstream log;
    model::train(m, docs, {}, &log);
    return log.str();
  };
  const std::string a = run();
  const std::string b = run();
  CHECK(a == b);
  CHECK(a.find("dev_f1") == std::string::npos);  // no dev set, no dev column
}

TEST_CASE("epoch hook stops training") {
  const auto docs = x_corpus();
  model::ModelConfig cfg = chars_only_config();
  cfg.epochs = 50;
  model::Model m = model::Model::create(cfg, {}, docs);
  const model::TrainResult result = model::train(
      m, docs, {}, nullptr, [](const model::EpochLog& e) { return e.epoch < 3; });
  CHECK(result.epochs.size() == 3);
}

TEST_CASE("training on dev keeps the final epoch") {
  const auto docs = x_corpus();
  std::vector<AnnotatedDocument> dev = {docs[0], docs[1]};
  model::ModelConfig cfg = chars_only_config();
  cfg.epochs = 4;
  cfg.train_on_dev = true;
  model::Model m = model::Model::create(cfg, {}, docs);
  std::ostringstream log;
  const model::TrainResult result = model::train(m, docs, dev, &log);
  CHECK(result.epochs.size() == 4);
  CHECK(result.best_epoch == 4);  // no snapshot selection
  CHECK(log.str().find("dev_f1") != std::string::npos);  // still reported
}

TEST_CASE("empty training input is rejected") {
  model::ModelConfig cfg = chars_only_config();
  model::Model m = model::Model::create(cfg, {}, x_corpus());
  CHECK_THROWS_AS(model::train(m, {}, {}), Error);
  CHECK_THROWS_AS(model::train(m, {{U"", {}}}, {}), Error);
}

TEST_CASE("model file round trip") {
  const std::string path = "test_model_file.json";
  const auto docs = x_corpus();
  model::ModelConfig cfg = full_config();
  model::Model m = model::Model::create(cfg, full_resources(cfg, 5), docs);
  model::train(m, docs, {});
  m.save(path);

  const model::Model back = model::Model::load(path);
  CHECK(back.config.to_kv() == m.config.to_kv());
  CHECK(back.modules == m.modules);
  CHECK(back.representation_dim() == m.representation_dim());

  const CharSequence probes[] = {U"NBA game aXb", U"XX", U"plain words"};
  for (const CharSequence& text : probes) {
    CHECK(back.predict(text) == m.predict(text));
    const nn::Matrix a = m.forward(m.freeze(text));
    const nn::Matrix b = back.forward(back.freeze(text));
    CHECK(a == b);  // bitwise
  }

  // saving the loaded model reproduces the file byte for byte
  const std::string again = path + ".resave";
  back.save(again);
  CHECK(read_file(again) == read_file(path));
  std::remove(again.c_str());
  std::remove(path.c_str());
}

TEST_CASE("model load failure modes") {
  const std::string path = "test_model_bad.json";
  const auto docs = x_corpus();
  model::Model m = model::Model::create(chars_only_config(), {}, docs);
  m.save(path);
  const std::string good = read_file(path);

  auto expect_load_error = [&](const std::string& contents, const std::string& needle) {
    write_file_atomic(path, contents);
    try {
      model::Model::load(path);
      FAIL("expected an error, wanted message containing " << needle);
    } catch (const Error& e) {
      CHECK(e.kind() == errkind::bad_format);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  {
    std::string s = good;
    const auto at = s.find("charcrf-model");
    s.replace(at, std::string("charcrf-model").size(), "something-else");
    expect_load_error(s, "not a model file");
  }
  {
    std::string s = good;
    const auto at = s.find("\"version\":1");
    s.replace(at, std::string("\"version\":1").size(), "\"version\":2");
    expect_load_error(s, "version 2");
  }
  {
    std::string s = good;
    const auto at = s.find("\"modules\":[\"chars\"]");
    REQUIRE(at != std::string::npos);
    s.replace(at, std::string("\"modules\":[\"chars\"]").size(), "\"modules\":[\"context\"]");
    expect_load_error(s, "module order");
  }
  expect_load_error(good.substr(0, good.size() / 2), "");

  std::remove(path.c_str());
  CHECK_THROWS_AS(model::Model::load("missing_model.json"), Error);
}
