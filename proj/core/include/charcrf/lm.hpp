#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charcrf/nn.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"

namespace charcrf::lm {

// Two-level character encoding: a vocabulary index with a trailing
// unseen-character slot, plus the six-way character category. A character's
// encoding is its char vector concatenated with its type vector.
struct CharEncoder {
  std::vector<char32_t> vocab;  // sorted, unique
  nn::Parameter char_table;     // (V+1) × char_dim, last row = unseen
  nn::Parameter type_table;     // category count × type_dim

  CharEncoder() = default;
  CharEncoder(std::vector<char32_t> vocab, int char_dim, int type_dim, Rng& rng);

  // Vocabulary = every character occurring in the corpus.
  static CharEncoder build(const std::vector<CharSequence>& corpus, int char_dim,
                           int type_dim, Rng& rng);

  int vocab_size() const { return static_cast<int>(vocab.size()); }
  int unseen_index() const { return vocab_size(); }
  int char_dim() const { return char_table.value.cols(); }
  int type_dim() const { return type_table.value.cols(); }
  int encoding_dim() const { return char_dim() + type_dim(); }

  int index_of(char32_t c) const;
  nn::Vec encode(char32_t c) const;
  // Accumulates d into the char and type rows behind encode(c).
  void encode_backward(char32_t c, const nn::Vec& d);
  nn::ParamRefs parameters() { return {&char_table, &type_table}; }
};

enum class LMDirection { Forward, Backward };

LMDirection lm_direction_from_string(const std::string& s);
std::string to_string(LMDirection d);

// Character-level recurrent language model. The forward model consumes text
// left to right after a begin-of-sequence vector; its state after consuming
// x_t is the contextual state for position t. The backward model mirrors the
// construction from the right. Output logits cover the vocabulary plus the
// unseen slot.
struct CharLM {
  LMDirection direction = LMDirection::Forward;
  CharEncoder encoder;
  nn::Parameter bos;  // 1 × encoding_dim
  nn::LSTMParams lstm;
  nn::Linear proj;  // (V+1) × hidden

  CharLM() = default;
  CharLM(LMDirection direction, CharEncoder encoder, int hidden, Rng& rng);

  int hidden_dim() const { return lstm.hidden; }
  bool empty() const { return lstm.hidden == 0; }

  // -Σ_t log p(x_t | context), natural log. Rejects empty text.
  double nll(const CharSequence& text) const;
  // Post-consumption hidden state per position, indexed by text position.
  std::vector<nn::Vec> hidden_states(const CharSequence& text) const;
  // Accumulates gradients for one text; returns its summed NLL. Dropout is
  // applied to the recurrent states feeding the output projection.
  double train_step(const CharSequence& text, double dropout, Rng& rng);
  nn::ParamRefs parameters();
};

// One seeded-shuffle pass over the corpus with one optimizer step per line.
// Returns mean per-character NLL across the epoch.
double lm_train_epoch(CharLM& lm, const std::vector<CharSequence>& corpus,
                      nn::Optimizer& opt, double dropout, double clip_norm,
                      std::uint64_t epoch_seed);

// Mean per-character NLL without gradient work; perplexity = exp of this.
double lm_corpus_nll(const CharLM& lm, const std::vector<CharSequence>& corpus);

// Optimizer checkpoint stored alongside a language model so a training
// schedule can resume where it stopped.
struct LMTrainState {
  int next_epoch = 0;
  nn::Optimizer::State optimizer;
};

void save_lm(const CharLM& lm, const std::string& path,
             const LMTrainState* train_state = nullptr);
// Fills *train_state when the file carries a checkpoint and the caller asked
// for one.
CharLM load_lm(const std::string& path,
               std::optional<LMTrainState>* train_state = nullptr);

// r_t = W_cr · [h_t ; h_t_rev] + b_cr, projecting the two frozen LM states
// down to proj_dim (< 2 · lm hidden width).
struct ContextProjection {
  nn::Linear proj;

  ContextProjection() = default;
  ContextProjection(int proj_dim, int lm_hidden, Rng& rng);

  int out_dim() const { return proj.out_dim(); }

  std::vector<nn::Vec> forward(const std::vector<nn::Vec>& fwd_states,
                               const std::vector<nn::Vec>& bwd_states) const;
  // Accumulates projection gradients only; the LM states are frozen inputs.
  void backward(const std::vector<nn::Vec>& fwd_states,
                const std::vector<nn::Vec>& bwd_states,
                const std::vector<nn::Vec>& d_out);
  nn::ParamRefs parameters() { return proj.parameters(); }
};

// [f_1t ; f_2t ; ...] per position; all parts must share one length.
std::vector<nn::Vec> concat_representations(const std::vector<std::vector<nn::Vec>>& parts);

}  // namespace charcrf::lm
