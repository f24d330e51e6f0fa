#include "charcrf/lm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "charcrf/error.hpp"
#include "json_io.hpp"

namespace charcrf::lm {

CharEncoder::CharEncoder(std::vector<char32_t> vocab_chars, int char_dim, int type_dim,
                         Rng& rng)
    : vocab(std::move(vocab_chars)) {
  if (char_dim <= 0 || type_dim <= 0) {
    throw Error(errkind::invalid_argument, "encoder dimensions must be positive");
  }
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  char_table = nn::Parameter(vocab_size() + 1, char_dim, "encoder.chars");
  type_table = nn::Parameter(kCharCategoryCount, type_dim, "encoder.types");
  nn::xavier_init(char_table.value, rng);
  nn::xavier_init(type_table.value, rng);
}

CharEncoder CharEncoder::build(const std::vector<CharSequence>& corpus, int char_dim,
                               int type_dim, Rng& rng) {
  std::set<char32_t> seen;
  for (const auto& line : corpus) seen.insert(line.begin(), line.end());
  return CharEncoder(std::vector<char32_t>(seen.begin(), seen.end()), char_dim,
                     type_dim, rng);
}

int CharEncoder::index_of(char32_t c) const {
  auto it = std::lower_bound(vocab.begin(), vocab.end(), c);
  if (it == vocab.end() || *it != c) return unseen_index();
  return static_cast<int>(it - vocab.begin());
}

nn::Vec CharEncoder::encode(char32_t c) const {
  nn::Vec out(encoding_dim());
  const double* cv = char_table.value.row(index_of(c));
  const double* tv = type_table.value.row(static_cast<int>(char_category(c)));
  std::copy(cv, cv + char_dim(), out.begin());
  std::copy(tv, tv + type_dim(), out.begin() + char_dim());
  return out;
}

void CharEncoder::encode_backward(char32_t c, const nn::Vec& d) {
  if (static_cast<int>(d.size()) != encoding_dim()) {
    throw Error(errkind::invalid_argument, "encoder gradient width mismatch");
  }
  double* cg = char_table.grad.row(index_of(c));
  double* tg = type_table.grad.row(static_cast<int>(char_category(c)));
  for (int i = 0; i < char_dim(); ++i) cg[i] += d[i];
  for (int i = 0; i < type_dim(); ++i) tg[i] += d[char_dim() + i];
}

LMDirection lm_direction_from_string(const std::string& s) {
  if (s == "forward") return LMDirection::Forward;
  if (s == "backward") return LMDirection::Backward;
  throw Error(errkind::invalid_argument, "direction must be forward or backward, got '" + s + "'");
}

std::string to_string(LMDirection d) {
  return d == LMDirection::Forward ? "forward" : "backward";
}

CharLM::CharLM(LMDirection dir, CharEncoder enc, int hidden, Rng& rng)
    : direction(dir), encoder(std::move(enc)) {
  if (hidden <= 0) {
    throw Error(errkind::invalid_argument, "lm hidden width must be positive");
  }
  bos = nn::Parameter(1, encoder.encoding_dim(), "lm.bos");
  nn::xavier_init(bos.value, rng);
  lstm = nn::LSTMParams(hidden, encoder.encoding_dim(), rng, "lm.lstm");
  proj = nn::Linear(encoder.vocab_size() + 1, hidden, rng, "lm.proj");
}

namespace {

// Characters in consumption order (reversed for the backward direction).
std::vector<char32_t> consumption_order(const CharSequence& text, LMDirection dir) {
  std::vector<char32_t> chars(text.begin(), text.end());
  if (dir == LMDirection::Backward) std::reverse(chars.begin(), chars.end());
  return chars;
}

void require_text(const CharSequence& text) {
  if (text.empty()) {
    throw Error(errkind::invalid_argument, "language model input is empty");
  }
}

}  // namespace

double CharLM::nll(const CharSequence& text) const {
  require_text(text);
  const auto chars = consumption_order(text, direction);
  const int T = static_cast<int>(chars.size());
  nn::LSTMState state = nn::lstm_zero_state(lstm.hidden);
  nn::Vec input(bos.value.row(0), bos.value.row(0) + bos.value.cols());
  double loss = 0.0;
  for (int k = 0; k < T; ++k) {
    state = nn::lstm_step(lstm, input, state);
    const nn::Vec logits = proj.forward(state.h);
    const int target = encoder.index_of(chars[k]);
    loss += nn::log_sum_exp(logits.data(), static_cast<int>(logits.size())) - logits[target];
    input = encoder.encode(chars[k]);
  }
  return loss;
}

std::vector<nn::Vec> CharLM::hidden_states(const CharSequence& text) const {
  require_text(text);
  const auto chars = consumption_order(text, direction);
  const int T = static_cast<int>(chars.size());
  nn::LSTMState state = nn::lstm_zero_state(lstm.hidden);
  nn::Vec input(bos.value.row(0), bos.value.row(0) + bos.value.cols());
  state = nn::lstm_step(lstm, input, state);
  std::vector<nn::Vec> states;
  states.reserve(T);
  for (int k = 0; k < T; ++k) {
    state = nn::lstm_step(lstm, encoder.encode(chars[k]), state);
    states.push_back(state.h);
  }
  if (direction == LMDirection::Backward) std::reverse(states.begin(), states.end());
  return states;
}

double CharLM::train_step(const CharSequence& text, double dropout, Rng& rng) {
  require_text(text);
  const auto chars = consumption_order(text, direction);
  const int T = static_cast<int>(chars.size());

  std::vector<nn::LSTMCache> caches(T);
  std::vector<nn::Vec> dropped(T), masks(T), probs(T);
  std::vector<int> targets(T);
  nn::LSTMState state = nn::lstm_zero_state(lstm.hidden);
  nn::Vec input(bos.value.row(0), bos.value.row(0) + bos.value.cols());
  double loss = 0.0;
  for (int k = 0; k < T; ++k) {
    state = nn::lstm_step(lstm, input, state, &caches[k]);
    masks[k] = dropout > 0.0 ? nn::dropout_mask(dropout, state.h.size(), rng)
                             : nn::Vec(state.h.size(), 1.0);
    dropped[k] = state.h;
    for (std::size_t i = 0; i < dropped[k].size(); ++i) dropped[k][i] *= masks[k][i];
    nn::Vec logits = proj.forward(dropped[k]);
    const double lse = nn::log_sum_exp(logits.data(), static_cast<int>(logits.size()));
    targets[k] = encoder.index_of(chars[k]);
    loss += lse - logits[targets[k]];
    probs[k] = std::move(logits);
    for (auto& p : probs[k]) p = std::exp(p - lse);
    input = encoder.encode(chars[k]);
  }

  nn::Vec dh(lstm.hidden, 0.0), dc(lstm.hidden, 0.0);
  for (int k = T - 1; k >= 0; --k) {
    nn::Vec d_logits = probs[k];
    d_logits[targets[k]] -= 1.0;
    const nn::Vec dx = proj.backward(dropped[k], d_logits);
    for (int i = 0; i < lstm.hidden; ++i) dh[i] += dx[i] * masks[k][i];
    const nn::LSTMGrad g = nn::lstm_step_backward(lstm, caches[k], dh, dc);
    dh = g.dh_prev;
    dc = g.dc_prev;
    if (k == 0) {
      double* bg = bos.grad.row(0);
      for (std::size_t i = 0; i < g.dx.size(); ++i) bg[i] += g.dx[i];
    } else {
      encoder.encode_backward(chars[k - 1], g.dx);
    }
  }
  return loss;
}

nn::ParamRefs CharLM::parameters() {
  nn::ParamRefs out = {&bos};
  for (auto* p : lstm.parameters()) out.push_back(p);
  for (auto* p : proj.parameters()) out.push_back(p);
  for (auto* p : encoder.parameters()) out.push_back(p);
  return out;
}

double lm_train_epoch(CharLM& lm, const std::vector<CharSequence>& corpus,
                      nn::Optimizer& opt, double dropout, double clip_norm,
                      std::uint64_t epoch_seed) {
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
    if (!corpus[i].empty()) order.push_back(i);
  }
  if (order.empty()) {
    throw Error(errkind::invalid_argument, "corpus has no non-empty lines");
  }
  Rng rng(epoch_seed);
  shuffle(order, rng);
  const nn::ParamRefs params = lm.parameters();
  double total = 0.0;
  long chars = 0;
  for (int i : order) {
    total += lm.train_step(corpus[i], dropout, rng);
    chars += static_cast<long>(corpus[i].size());
    if (clip_norm > 0.0) nn::clip_gradients(params, clip_norm);
    opt.step(params);
  }
  return total / static_cast<double>(chars);
}

double lm_corpus_nll(const CharLM& lm, const std::vector<CharSequence>& corpus) {
  double total = 0.0;
  long chars = 0;
  for (const auto& line : corpus) {
    if (line.empty()) continue;
    total += lm.nll(line);
    chars += static_cast<long>(line.size());
  }
  if (chars == 0) {
    throw Error(errkind::invalid_argument, "corpus has no non-empty lines");
  }
  return total / static_cast<double>(chars);
}

ContextProjection::ContextProjection(int proj_dim, int lm_hidden, Rng& rng) {
  if (proj_dim <= 0 || proj_dim >= 2 * lm_hidden) {
    throw Error(errkind::invalid_argument,
                "projection width must be in (0, 2 x lm hidden); got " +
                    std::to_string(proj_dim) + " for lm hidden " + std::to_string(lm_hidden));
  }
  proj = nn::Linear(proj_dim, 2 * lm_hidden, rng, "context.proj");
}

namespace {

nn::Vec concat_pair(const nn::Vec& a, const nn::Vec& b) {
  nn::Vec out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_state_pair(const std::vector<nn::Vec>& fwd, const std::vector<nn::Vec>& bwd,
                      int in_dim) {
  if (fwd.size() != bwd.size()) {
    throw Error(errkind::invalid_argument,
                "state sequences differ in length: " + std::to_string(fwd.size()) + " vs " +
                    std::to_string(bwd.size()));
  }
  for (std::size_t t = 0; t < fwd.size(); ++t) {
    if (static_cast<int>(fwd[t].size() + bwd[t].size()) != in_dim) {
      throw Error(errkind::invalid_argument, "state width mismatch at position " +
                                                 std::to_string(t));
    }
  }
}

}  // namespace

std::vector<nn::Vec> ContextProjection::forward(const std::vector<nn::Vec>& fwd_states,
                                                const std::vector<nn::Vec>& bwd_states) const {
  check_state_pair(fwd_states, bwd_states, proj.in_dim());
  std::vector<nn::Vec> out;
  out.reserve(fwd_states.size());
  for (std::size_t t = 0; t < fwd_states.size(); ++t) {
    out.push_back(proj.forward(concat_pair(fwd_states[t], bwd_states[t])));
  }
  return out;
}

void ContextProjection::backward(const std::vector<nn::Vec>& fwd_states,
                                 const std::vector<nn::Vec>& bwd_states,
                                 const std::vector<nn::Vec>& d_out) {
  check_state_pair(fwd_states, bwd_states, proj.in_dim());
  if (d_out.size() != fwd_states.size()) {
    throw Error(errkind::invalid_argument, "gradient sequence length mismatch");
  }
  for (std::size_t t = 0; t < fwd_states.size(); ++t) {
    proj.backward(concat_pair(fwd_states[t], bwd_states[t]), d_out[t]);
  }
}

void save_lm(const CharLM& lm, const std::string& path, const LMTrainState* train_state) {
  detail::Json j{{"format", "charcrf-lm"}, {"version", 1}, {"lm", detail::to_json(lm)}};
  if (train_state != nullptr) {
    j["train_state"] = detail::Json{{"next_epoch", train_state->next_epoch},
                                    {"optimizer", detail::to_json(train_state->optimizer)}};
  }
  write_file_atomic(path, j.dump());
}

CharLM load_lm(const std::string& path, std::optional<LMTrainState>* train_state) {
  const detail::Json j = detail::parse_json_file(path);
  if (!j.is_object() || detail::need(j, "format", path).get<std::string>() != "charcrf-lm") {
    throw Error(errkind::bad_format, path + ": not a language model file");
  }
  const int version = detail::need(j, "version", path).get<int>();
  if (version != 1) {
    throw Error(errkind::bad_format, path + ": file version " + std::to_string(version) +
                                         "; this build reads version 1");
  }
  CharLM lm;
  try {
    lm = detail::lm_from_json(detail::need(j, "lm", path), path);
    if (train_state != nullptr && j.contains("train_state")) {
      const detail::Json& ts = j.at("train_state");
      LMTrainState out;
      out.next_epoch = detail::need(ts, "next_epoch", path + ".train_state").get<int>();
      out.optimizer = detail::optimizer_state_from_json(
          detail::need(ts, "optimizer", path + ".train_state"), path + ".train_state");
      *train_state = std::move(out);
    }
  } catch (const detail::Json::exception& e) {
    throw Error(errkind::bad_format, path + ": " + e.what());
  }
  return lm;
}

std::vector<nn::Vec> concat_representations(const std::vector<std::vector<nn::Vec>>& parts) {
  if (parts.empty()) {
    throw Error(errkind::invalid_argument, "no representation modules to concatenate");
  }
  const std::size_t T = parts[0].size();
  for (const auto& p : parts) {
    if (p.size() != T) {
      throw Error(errkind::invalid_argument,
                  "representation length mismatch: " + std::to_string(p.size()) + " vs " +
                      std::to_string(T));
    }
  }
  std::vector<nn::Vec> out(T);
  for (std::size_t t = 0; t < T; ++t) {
    std::size_t width = 0;
    for (const auto& p : parts) width += p[t].size();
    out[t].reserve(width);
    for (const auto& p : parts) out[t].insert(out[t].end(), p[t].begin(), p[t].end());
  }
  return out;
}

}  // namespace charcrf::lm
