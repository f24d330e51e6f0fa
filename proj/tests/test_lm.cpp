#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "charcrf/error.hpp"
#include "charcrf/lm.hpp"
#include "charcrf/nn.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "doctest.h"

using namespace charcrf;

namespace {

lm::CharLM tiny_lm(lm::LMDirection dir, std::uint64_t seed, int hidden = 6) {
  Rng rng(seed);
  lm::CharEncoder enc = lm::CharEncoder::build({U"abcab", U"cabx"}, 4, 3, rng);
  return lm::CharLM(dir, std::move(enc), hidden, rng);
}

}  // namespace

TEST_CASE("encoder vocabulary and dimensions") {
  Rng rng(1);
  lm::CharEncoder enc = lm::CharEncoder::build({U"banana", U"bx"}, 4, 3, rng);
  CHECK(enc.vocab == std::vector<char32_t>{U'a', U'b', U'n', U'x'});
  CHECK(enc.vocab_size() == 4);
  CHECK(enc.unseen_index() == 4);
  CHECK(enc.char_dim() == 4);
  CHECK(enc.type_dim() == 3);
  CHECK(enc.encoding_dim() == 7);
  CHECK(enc.char_table.value.rows() == 5);
  CHECK(enc.type_table.value.rows() == kCharCategoryCount);
  CHECK(enc.index_of(U'b') == 1);
  CHECK(enc.index_of(U'z') == enc.unseen_index());

  const nn::Vec e = enc.encode(U'a');
  REQUIRE(e.size() == 7);
  for (int i = 0; i < 4; ++i) CHECK(e[i] == enc.char_table.value(0, i));
  const int lower_row = static_cast<int>(CharCategory::Lower);
  for (int i = 0; i < 3; ++i) CHECK(e[4 + i] == enc.type_table.value(lower_row, i));

  // unseen characters share the trailing row but keep their own category
  const nn::Vec u = enc.encode(U'Z');
  for (int i = 0; i < 4; ++i) CHECK(u[i] == enc.char_table.value(4, i));
  const int upper_row = static_cast<int>(CharCategory::Upper);
  for (int i = 0; i < 3; ++i) CHECK(u[4 + i] == enc.type_table.value(upper_row, i));
}

TEST_CASE("encoder backward accumulates into the right rows") {
  Rng rng(2);
  lm::CharEncoder enc = lm::CharEncoder::build({U"ab"}, 2, 2, rng);
  enc.encode_backward(U'b', {1.0, 2.0, 3.0, 4.0});
  CHECK(enc.char_table.grad(1, 0) == 1.0);
  CHECK(enc.char_table.grad(1, 1) == 2.0);
  CHECK(enc.char_table.grad(0, 0) == 0.0);
  const int lower_row = static_cast<int>(CharCategory::Lower);
  CHECK(enc.type_table.grad(lower_row, 0) == 3.0);
  CHECK(enc.type_table.grad(lower_row, 1) == 4.0);
  enc.encode_backward(U'b', {1.0, 0.0, 0.0, 0.0});
  CHECK(enc.char_table.grad(1, 0) == 2.0);
  CHECK_THROWS_AS(enc.encode_backward(U'b', {1.0}), Error);
}

TEST_CASE("zero logits price every character at log vocab size") {
  lm::CharLM net = tiny_lm(lm::LMDirection::Forward, 3);
  net.proj.weight.value.fill(0.0);
  net.proj.bias.value.fill(0.0);
  const int classes = net.encoder.vocab_size() + 1;
  const CharSequence text = U"abcx";
  CHECK(net.nll(text) ==
        doctest::Approx(4.0 * std::log(classes)).epsilon(1e-12));
  const double mean = lm::lm_corpus_nll(net, {text, U"ab"});
  CHECK(std::exp(mean) == doctest::Approx(static_cast<double>(classes)).epsilon(1e-12));
}

TEST_CASE("hidden states are causal") {
  lm::CharLM fwd = tiny_lm(lm::LMDirection::Forward, 4);
  const auto states = fwd.hidden_states(U"abca");
  REQUIRE(states.size() == 4);
  CHECK(states[0].size() == static_cast<std::size_t>(fwd.hidden_dim()));

  // a forward state at t depends only on the prefix through t
  const auto changed = fwd.hidden_states(U"abcx");
  for (int t = 0; t < 3; ++t) CHECK(states[t] == changed[t]);
  CHECK(states[3] != changed[3]);

  // a backward state at t depends only on the suffix from t
  lm::CharLM bwd = tiny_lm(lm::LMDirection::Backward, 4);
  const auto bstates = bwd.hidden_states(U"abca");
  const auto bchanged = bwd.hidden_states(U"xbca");
  for (int t = 1; t < 4; ++t) CHECK(bstates[t] == bchanged[t]);
  CHECK(bstates[0] != bchanged[0]);
}

TEST_CASE("backward model mirrors the forward construction") {
  // same seed, same vocabulary: identical tensors, so a backward model on a
  // text behaves exactly like a forward model on the reversed text
  lm::CharLM fwd = tiny_lm(lm::LMDirection::Forward, 5);
  lm::CharLM bwd = tiny_lm(lm::LMDirection::Backward, 5);
  const CharSequence text = U"abcxa";
  CharSequence rev(text.rbegin(), text.rend());
  CHECK(bwd.nll(text) == fwd.nll(rev));

  const auto bs = bwd.hidden_states(text);
  const auto fs = fwd.hidden_states(rev);
  for (std::size_t t = 0; t < text.size(); ++t) {
    CHECK(bs[t] == fs[text.size() - 1 - t]);
  }
}

TEST_CASE("language model learns a repetitive corpus") {
  lm::CharLM net = tiny_lm(lm::LMDirection::Forward, 6, 8);
  std::vector<CharSequence> corpus(20, U"abcabcabc");
  nn::Optimizer opt(nn::OptimizerKind::Adam, 0.01);
  const double before = lm::lm_corpus_nll(net, corpus);
  double epoch_mean = 0.0;
  for (int epoch = 1; epoch <= 5; ++epoch) {
    epoch_mean = lm::lm_train_epoch(net, corpus, opt, 0.0, 5.0, derive_seed(6, 200 + epoch));
  }
  const double after = lm::lm_corpus_nll(net, corpus);
  CHECK(after < before);
  CHECK(epoch_mean < before);
  CHECK(after < 1.0);  // near-deterministic continuation

  CHECK_THROWS_AS(net.nll(U""), Error);
}

TEST_CASE("training steps are deterministic") {
  auto run = [] {
    lm::CharLM net = tiny_lm(lm::LMDirection::Forward, 7);
    std::vector<CharSequence> corpus = {U"abca", U"bxac", U"ccab"};
    nn::Optimizer opt(nn::OptimizerKind::Adam, 0.005);
    double last = 0.0;
    for (int epoch = 1; epoch <= 3; ++epoch) {
      last = lm::lm_train_epoch(net, corpus, opt, 0.01, 5.0, derive_seed(7, 200 + epoch));
    }
    return std::pair{last, lm::lm_corpus_nll(net, corpus)};
  };
  const auto a = run();
  const auto b = run();
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("context projection shape and gradient") {
  Rng rng(8);
  CHECK_THROWS_AS(lm::ContextProjection(8, 4, rng), Error);  // 8 >= 2*4

  lm::ContextProjection ctx(3, 4, rng);
  CHECK(ctx.out_dim() == 3);
  std::vector<nn::Vec> fwd(2, nn::Vec(4)), bwd(2, nn::Vec(4));
  for (auto& v : fwd) {
    for (auto& x : v) x = rng.uniform(-1, 1);
  }
  for (auto& v : bwd) {
    for (auto& x : v) x = rng.uniform(-1, 1);
  }
  const auto out = ctx.forward(fwd, bwd);
  REQUIRE(out.size() == 2);
  CHECK(out[0].size() == 3);

  auto loss = [&](bool accumulate) {
    const auto ys = ctx.forward(fwd, bwd);
    double s = 0.0;
    for (const auto& y : ys) {
      for (double v : y) s += v * v;
    }
    if (accumulate) {
      std::vector<nn::Vec> dy(ys.size());
      for (std::size_t t = 0; t < ys.size(); ++t) {
        dy[t].resize(ys[t].size());
        for (std::size_t i = 0; i < ys[t].size(); ++i) dy[t][i] = 2.0 * ys[t][i];
      }
      ctx.backward(fwd, bwd, dy);
    }
    return s;
  };
  auto params = ctx.parameters();
  CHECK(nn::grad_check(params, loss) < 1e-6);
}

TEST_CASE("representation concatenation") {
  std::vector<nn::Vec> a = {{1, 2}, {3, 4}};
  std::vector<nn::Vec> b = {{5}, {6}};
  const auto cat = lm::concat_representations({a, b});
  REQUIRE(cat.size() == 2);
  CHECK(cat[0] == nn::Vec{1, 2, 5});
  CHECK(cat[1] == nn::Vec{3, 4, 6});
  CHECK_THROWS_AS(lm::concat_representations({a, {{7}}}), Error);
}

TEST_CASE("language model file round trip") {
  const std::string path = "test_lm_model.json";
  lm::CharLM net = tiny_lm(lm::LMDirection::Backward, 9);
  lm::save_lm(net, path);
  const lm::CharLM back = lm::load_lm(path);
  CHECK(back.direction == lm::LMDirection::Backward);
  CHECK(back.encoder.vocab == net.encoder.vocab);
  CHECK(back.bos.value == net.bos.value);
  CHECK(back.lstm.w_input.value == net.lstm.w_input.value);
  CHECK(back.proj.weight.value == net.proj.weight.value);
  CHECK(back.nll(U"abcx") == net.nll(U"abcx"));  // bitwise

  // names must be reconstructed for optimizer diagnostics
  CHECK(back.bos.name == net.bos.name);
  CHECK(back.lstm.w_input.name == net.lstm.w_input.name);
  std::remove(path.c_str());
}

TEST_CASE("language model checkpoint state round trip") {
  const std::string path = "test_lm_ckpt.json";
  lm::CharLM net = tiny_lm(lm::LMDirection::Forward, 10);
  std::vector<CharSequence> corpus = {U"abca", U"bxac"};
  nn::Optimizer opt(nn::OptimizerKind::Adam, 0.005);
  lm::lm_train_epoch(net, corpus, opt, 0.0, 5.0, derive_seed(10, 201));
  lm::LMTrainState state{2, opt.state()};
  lm::save_lm(net, path, &state);

  std::optional<lm::LMTrainState> loaded;
  const lm::CharLM back = lm::load_lm(path, &loaded);
  REQUIRE(loaded.has_value());
  CHECK(loaded->next_epoch == 2);
  CHECK(loaded->optimizer.step_count == opt.state().step_count);
  REQUIRE(loaded->optimizer.m.size() == opt.state().m.size());
  for (std::size_t i = 0; i < loaded->optimizer.m.size(); ++i) {
    CHECK(loaded->optimizer.m[i] == opt.state().m[i]);
    CHECK(loaded->optimizer.v[i] == opt.state().v[i]);
  }

  // a file saved without state reports none
  lm::save_lm(back, path);
  std::optional<lm::LMTrainState> none;
  lm::load_lm(path, &none);
  CHECK_FALSE(none.has_value());
  std::remove(path.c_str());
}

TEST_CASE("language model load rejects bad files") {
  const std::string path = "test_lm_bad.json";

  write_file_atomic(path, "{\"format\":\"something-else\",\"version\":1}");
  try {
    lm::load_lm(path);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::bad_format);
  }

  write_file_atomic(path, "{\"format\":\"charcrf-lm\",\"version\":2}");
  CHECK_THROWS_AS(lm::load_lm(path), Error);

  lm::CharLM net = tiny_lm(lm::LMDirection::Forward, 11);
  lm::save_lm(net, path);
  const std::string full = read_file(path);
  write_file_atomic(path, full.substr(0, full.size() / 2));
  try {
    lm::load_lm(path);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::bad_format);
  }
  std::remove(path.c_str());

  CHECK_THROWS_AS(lm::load_lm("missing_lm.json"), Error);
}

TEST_CASE("direction strings") {
  CHECK(lm::lm_direction_from_string("forward") == lm::LMDirection::Forward);
  CHECK(lm::lm_direction_from_string("backward") == lm::LMDirection::Backward);
  CHECK(lm::to_string(lm::LMDirection::Backward) == "backward");
  CHECK_THROWS_AS(lm::lm_direction_from_string("sideways"), Error);
}
