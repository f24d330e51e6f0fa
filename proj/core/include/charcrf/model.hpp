#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "charcrf/align.hpp"
#include "charcrf/crf.hpp"
#include "charcrf/kv.hpp"
#include "charcrf/lm.hpp"
#include "charcrf/nn.hpp"
#include "charcrf/text.hpp"

namespace charcrf::model {

// Mirrors the flat key-value configuration file one to one.
struct ModelConfig {
  std::vector<std::string> entity_types;  // empty: inferred from training data
  std::string alignment_mode = "match";   // match | tokenize | none
  bool use_context = true;
  bool use_char_encoding = true;
  bool match_lowercase = false;

  int word_dim = 50;
  int lm_hidden = 64;
  int proj_dim = 32;
  int char_dim = 24;
  int type_dim = 8;
  int hidden_dim = 64;  // BiLSTM width per direction

  double dropout = 0.5;      // on BiLSTM outputs
  double rep_dropout = 0.1;  // on the concatenated representation
  std::string optimizer = "adam";
  double lr = 0.005;
  double clip_norm = 1.0;
  int epochs = 50;
  double anneal_factor = 0.1;
  int patience = 3;
  std::uint64_t seed = 1;
  bool train_on_dev = false;

  double lm_lr = 0.002;
  double lm_dropout = 0.01;
  double lm_clip_norm = 5.0;
  int lm_epochs = 10;

  // Rejects unknown keys and unparseable values.
  static ModelConfig from_kv(const KeyValueMap& kv);
  KeyValueMap to_kv() const;
  void validate() const;
};

// Frozen inputs assembled outside the model: pretrained word vectors, the
// match dictionary, pretrained language models. Only the parts the enabled
// modules need have to be present.
struct Resources {
  std::optional<align::EmbeddingTable> embeddings;
  std::optional<align::IDFDictionary> idf;
  std::optional<lm::CharLM> lm_forward;
  std::optional<lm::CharLM> lm_backward;
};

// Per-document values that never change during training: alignment embedding
// rows and frozen LM states.
struct FrozenRep {
  CharSequence chars;
  std::vector<nn::Vec> word_rows;      // empty when alignment off
  std::vector<nn::Vec> lm_fwd_states;  // empty when context off
  std::vector<nn::Vec> lm_bwd_states;
};

// Activations the forward pass records for backward.
struct ForwardCache {
  std::vector<nn::Vec> f;         // concatenated representation
  std::vector<nn::Vec> rep_mask;  // empty when that dropout is off
  std::vector<nn::Vec> f_in;      // BiLSTM input after representation dropout
  nn::BiLSTMCache bilstm;
  std::vector<nn::Vec> bi_out;
  std::vector<nn::Vec> out_mask;  // empty when layer dropout is off
  std::vector<nn::Vec> z;         // CRF emission inputs
};

// Character representations feeding a BiLSTM feeding a linear-chain CRF.
struct Model {
  ModelConfig config;
  TagSet tags;
  std::vector<std::string> modules;  // representation concatenation order
  align::EmbeddingTable embeddings;
  align::IDFDictionary idf;
  align::MatchAutomaton matcher;  // rebuilt from idf, never serialized
  lm::CharLM lm_forward;
  lm::CharLM lm_backward;
  lm::ContextProjection context;
  lm::CharEncoder encoder;  // trainable, separate from the LM encoders
  nn::BiLSTM bilstm;
  crf::Params crf_params;
  crf::TransitionMask transition_mask;

  Model(ModelConfig config, TagSet tags);

  // Validates the configuration against the resources, infers entity types
  // from the training set when the config leaves them empty, and initializes
  // all trainable tensors from the config seed.
  static Model create(ModelConfig config, Resources res,
                      const std::vector<AnnotatedDocument>& train_docs);

  int representation_dim() const;
  FrozenRep freeze(const CharSequence& text) const;
  // training=true applies dropout (needs rng) and fills the cache.
  crf::EmissionScores forward(const FrozenRep& rep, bool training = false,
                              Rng* rng = nullptr, ForwardCache* cache = nullptr) const;
  void backward(const FrozenRep& rep, const ForwardCache& cache,
                const nn::Matrix& d_emissions);

  // Masked Viterbi plus strict span decoding; empty text gives no spans.
  std::vector<EntitySpan> predict(const CharSequence& text) const;

  // BiLSTM, CRF, context projection and encoder tables, in that fixed order.
  nn::ParamRefs trainable_parameters();

  void save(const std::string& path) const;
  static Model load(const std::string& path);
};

struct EpochLog {
  int epoch = 0;
  double mean_loss = 0.0;
  double dev_f1 = -1.0;  // -1 when no dev set
  double lr = 0.0;
};

struct TrainResult {
  std::vector<EpochLog> epochs;
  int best_epoch = -1;
  double best_f1 = -1.0;
};

// Returning false stops training after the current epoch.
using EpochHook = std::function<bool(const EpochLog&)>;

// Seeded per-epoch shuffling, clipping, lr annealing after `patience` epochs
// without dev improvement, and best-dev-F1 snapshot selection (final epoch
// when there is no dev set or train_on_dev is set). Writes one deterministic
// log line per epoch when given a stream.
TrainResult train(Model& model, std::vector<AnnotatedDocument> train_docs,
                  const std::vector<AnnotatedDocument>& dev_docs,
                  std::ostream* log = nullptr, const EpochHook& hook = {});

}  // namespace charcrf::model
