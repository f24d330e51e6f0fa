#include "charcrf/model.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <utility>

#include "charcrf/convert.hpp"
#include "charcrf/error.hpp"
#include "charcrf/eval.hpp"
#include "json_io.hpp"

namespace charcrf::model {

namespace {

long parse_long(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno == ERANGE) {
    throw Error(errkind::invalid_argument, "config key " + key + ": bad integer '" + v + "'");
  }
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  return static_cast<int>(parse_long(key, v));
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno == ERANGE || v[0] == '-') {
    throw Error(errkind::invalid_argument, "config key " + key + ": bad integer '" + v + "'");
  }
  return static_cast<std::uint64_t>(x);
}

double parse_double(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(x)) {
    throw Error(errkind::invalid_argument, "config key " + key + ": bad number '" + v + "'");
  }
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error(errkind::invalid_argument,
              "config key " + key + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> parse_list(const std::string& v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    std::size_t comma = v.find(',', start);
    if (comma == std::string::npos) comma = v.size();
    std::size_t b = start;
    std::size_t e = comma;
    while (b < e && (v[b] == ' ' || v[b] == '\t')) ++b;
    while (e > b && (v[e - 1] == ' ' || v[e - 1] == '\t')) --e;
    if (e > b) out.push_back(v.substr(b, e - b));
    start = comma + 1;
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += items[i];
  }
  return out;
}

void check_unit_interval(const std::string& key, double v) {
  if (v < 0.0 || v >= 1.0) {
    throw Error(errkind::invalid_argument,
                "config key " + key + " must lie in [0, 1), got " + format_double(v));
  }
}

void check_positive(const std::string& key, double v) {
  if (v <= 0.0) {
    throw Error(errkind::invalid_argument, "config key " + key + " must be positive");
  }
}

}  // namespace

ModelConfig ModelConfig::from_kv(const KeyValueMap& kv) {
  ModelConfig c;
  for (const auto& [key, value] : kv) {
    if (key == "entity_types") {
      c.entity_types = parse_list(value);
    } else if (key == "alignment_mode") {
      c.alignment_mode = value;
    } else if (key == "use_context") {
      c.use_context = parse_bool(key, value);
    } else if (key == "use_char_encoding") {
      c.use_char_encoding = parse_bool(key, value);
    } else if (key == "match_lowercase") {
      c.match_lowercase = parse_bool(key, value);
    } else if (key == "word_dim") {
      c.word_dim = parse_int(key, value);
    } else if (key == "lm_hidden") {
      c.lm_hidden = parse_int(key, value);
    } else if (key == "proj_dim") {
      c.proj_dim = parse_int(key, value);
    } else if (key == "char_dim") {
      c.char_dim = parse_int(key, value);
    } else if (key == "type_dim") {
      c.type_dim = parse_int(key, value);
    } else if (key == "hidden_dim") {
      c.hidden_dim = parse_int(key, value);
    } else if (key == "dropout") {
      c.dropout = parse_double(key, value);
    } else if (key == "rep_dropout") {
      c.rep_dropout = parse_double(key, value);
    } else if (key == "optimizer") {
      c.optimizer = value;
    } else if (key == "lr") {
      c.lr = parse_double(key, value);
    } else if (key == "clip_norm") {
      c.clip_norm = parse_double(key, value);
    } else if (key == "epochs") {
      c.epochs = parse_int(key, value);
    } else if (key == "anneal_factor") {
      c.anneal_factor = parse_double(key, value);
    } else if (key == "patience") {
      c.patience = parse_int(key, value);
    } else if (key == "seed") {
      c.seed = parse_u64(key, value);
    } else if (key == "train_on_dev") {
      c.train_on_dev = parse_bool(key, value);
    } else if (key == "lm_lr") {
      c.lm_lr = parse_double(key, value);
    } else if (key == "lm_dropout") {
      c.lm_dropout = parse_double(key, value);
    } else if (key == "lm_clip_norm") {
      c.lm_clip_norm = parse_double(key, value);
    } else if (key == "lm_epochs") {
      c.lm_epochs = parse_int(key, value);
    } else {
      throw Error(errkind::invalid_argument, "unknown config key '" + key + "'");
    }
  }
  return c;
}

KeyValueMap ModelConfig::to_kv() const {
  KeyValueMap kv;
  kv["entity_types"] = join_list(entity_types);
  kv["alignment_mode"] = alignment_mode;
  kv["use_context"] = use_context ? "true" : "false";
  kv["use_char_encoding"] = use_char_encoding ? "true" : "false";
  kv["match_lowercase"] = match_lowercase ? "true" : "false";
  kv["word_dim"] = std::to_string(word_dim);
  kv["lm_hidden"] = std::to_string(lm_hidden);
  kv["proj_dim"] = std::to_string(proj_dim);
  kv["char_dim"] = std::to_string(char_dim);
  kv["type_dim"] = std::to_string(type_dim);
  kv["hidden_dim"] = std::to_string(hidden_dim);
  kv["dropout"] = format_double(dropout);
  kv["rep_dropout"] = format_double(rep_dropout);
  kv["optimizer"] = optimizer;
  kv["lr"] = format_double(lr);
  kv["clip_norm"] = format_double(clip_norm);
  kv["epochs"] = std::to_string(epochs);
  kv["anneal_factor"] = format_double(anneal_factor);
  kv["patience"] = std::to_string(patience);
  kv["seed"] = std::to_string(seed);
  kv["train_on_dev"] = train_on_dev ? "true" : "false";
  kv["lm_lr"] = format_double(lm_lr);
  kv["lm_dropout"] = format_double(lm_dropout);
  kv["lm_clip_norm"] = format_double(lm_clip_norm);
  kv["lm_epochs"] = std::to_string(lm_epochs);
  return kv;
}

void ModelConfig::validate() const {
  if (alignment_mode != "match" && alignment_mode != "tokenize" && alignment_mode != "none") {
    throw Error(errkind::invalid_argument,
                "alignment_mode must be match, tokenize or none, got '" + alignment_mode + "'");
  }
  if (alignment_mode == "none" && !use_context && !use_char_encoding) {
    throw Error(errkind::invalid_argument, "all representation modules are disabled");
  }
  if (!entity_types.empty()) {
    TagSet check(entity_types);  // rejects empty names and duplicates
    (void)check;
  }
  if (word_dim <= 0 || lm_hidden <= 0 || proj_dim <= 0 || char_dim <= 0 || type_dim <= 0 ||
      hidden_dim <= 0) {
    throw Error(errkind::invalid_argument, "all layer widths must be positive");
  }
  if (proj_dim >= 2 * lm_hidden) {
    throw Error(errkind::invalid_argument,
                "proj_dim must be smaller than the two stacked language model states (" +
                    std::to_string(2 * lm_hidden) + ")");
  }
  check_unit_interval("dropout", dropout);
  check_unit_interval("rep_dropout", rep_dropout);
  check_unit_interval("lm_dropout", lm_dropout);
  (void)nn::optimizer_kind_from_string(optimizer);
  check_positive("lr", lr);
  check_positive("lm_lr", lm_lr);
  if (clip_norm < 0.0 || lm_clip_norm < 0.0) {
    throw Error(errkind::invalid_argument, "clip norms must be non-negative (0 disables)");
  }
  if (epochs < 1 || lm_epochs < 1) {
    throw Error(errkind::invalid_argument, "epoch counts must be at least 1");
  }
  if (anneal_factor <= 0.0 || anneal_factor > 1.0) {
    throw Error(errkind::invalid_argument, "anneal_factor must lie in (0, 1]");
  }
  if (patience < 1) {
    throw Error(errkind::invalid_argument, "patience must be at least 1");
  }
}

Model::Model(ModelConfig config_in, TagSet tags_in)
    : config(std::move(config_in)),
      tags(std::move(tags_in)),
      transition_mask(crf::build_iobes_mask(tags)) {}

Model Model::create(ModelConfig config, Resources res,
                    const std::vector<AnnotatedDocument>& train_docs) {
  config.validate();
  if (config.entity_types.empty()) {
    std::set<std::string> types;
    for (const AnnotatedDocument& d : train_docs) {
      for (const EntitySpan& e : d.entities) types.insert(e.type);
    }
    if (types.empty()) {
      throw Error(errkind::invalid_argument,
                  "no entity types configured and none found in the training data");
    }
    config.entity_types.assign(types.begin(), types.end());
  }
  TagSet tags(config.entity_types);
  Model m(std::move(config), std::move(tags));
  const ModelConfig& cfg = m.config;

  Rng rng(derive_seed(cfg.seed, 1));
  int width = 0;
  if (cfg.alignment_mode != "none") {
    if (!res.embeddings) {
      throw Error(errkind::invalid_argument,
                  "alignment is enabled but no embedding table was provided");
    }
    if (res.embeddings->dimension() != cfg.word_dim) {
      throw Error(errkind::invalid_argument,
                  "embedding table dimension " + std::to_string(res.embeddings->dimension()) +
                      " does not match word_dim " + std::to_string(cfg.word_dim));
    }
    m.embeddings = std::move(*res.embeddings);
    if (cfg.alignment_mode == "match") {
      if (!res.idf) {
        throw Error(errkind::invalid_argument,
                    "match alignment is enabled but no idf dictionary was provided");
      }
      m.idf = std::move(*res.idf);
      m.matcher = align::MatchAutomaton(m.idf, cfg.match_lowercase);
    }
    m.modules.push_back("alignment");
    width += m.embeddings.dimension();
  }
  if (cfg.use_context) {
    if (!res.lm_forward || !res.lm_backward) {
      throw Error(errkind::invalid_argument,
                  "contextual representation needs both language models");
    }
    if (res.lm_forward->direction != lm::LMDirection::Forward ||
        res.lm_backward->direction != lm::LMDirection::Backward) {
      throw Error(errkind::invalid_argument,
                  "language models passed with swapped or wrong directions");
    }
    if (res.lm_forward->hidden_dim() != cfg.lm_hidden ||
        res.lm_backward->hidden_dim() != cfg.lm_hidden) {
      throw Error(errkind::invalid_argument,
                  "language model hidden width does not match lm_hidden " +
                      std::to_string(cfg.lm_hidden));
    }
    m.lm_forward = std::move(*res.lm_forward);
    m.lm_backward = std::move(*res.lm_backward);
    m.context = lm::ContextProjection(cfg.proj_dim, cfg.lm_hidden, rng);
    m.modules.push_back("context");
    width += cfg.proj_dim;
  }
  if (cfg.use_char_encoding) {
    std::vector<CharSequence> corpus;
    corpus.reserve(train_docs.size());
    for (const AnnotatedDocument& d : train_docs) corpus.push_back(d.text);
    m.encoder = lm::CharEncoder::build(corpus, cfg.char_dim, cfg.type_dim, rng);
    m.modules.push_back("chars");
    width += m.encoder.encoding_dim();
  }
  m.bilstm = nn::BiLSTM(cfg.hidden_dim, width, rng, "bilstm");
  m.crf_params = crf::Params(m.tags.label_count(), m.bilstm.out_dim(), rng);
  return m;
}

int Model::representation_dim() const {
  int width = 0;
  for (const std::string& mod : modules) {
    if (mod == "alignment") {
      width += embeddings.dimension();
    } else if (mod == "context") {
      width += context.out_dim();
    } else {
      width += encoder.encoding_dim();
    }
  }
  return width;
}

FrozenRep Model::freeze(const CharSequence& text) const {
  FrozenRep rep;
  rep.chars = text;
  if (text.empty()) return rep;
  if (config.alignment_mode != "none") {
    align::Alignment a;
    if (config.alignment_mode == "match") {
      a = align::select_matches(matcher.find_matches(text), text);
    } else {
      a = align::tokenize_align(text, convert::simple_tokenize(text), embeddings);
    }
    const nn::Matrix rows = align::embed_alignment(a, embeddings);
    rep.word_rows.reserve(text.size());
    for (int t = 0; t < rows.rows(); ++t) {
      rep.word_rows.emplace_back(rows.row(t), rows.row(t) + rows.cols());
    }
  }
  if (config.use_context) {
    rep.lm_fwd_states = lm_forward.hidden_states(text);
    rep.lm_bwd_states = lm_backward.hidden_states(text);
  }
  return rep;
}

crf::EmissionScores Model::forward(const FrozenRep& rep, bool training, Rng* rng,
                                   ForwardCache* cache) const {
  const std::size_t T = rep.chars.size();
  if (T == 0) {
    throw Error(errkind::invalid_argument, "forward pass over empty text");
  }
  std::vector<std::vector<nn::Vec>> parts;
  parts.reserve(modules.size());
  for (const std::string& mod : modules) {
    if (mod == "alignment") {
      if (rep.word_rows.size() != T) {
        throw Error(errkind::invalid_argument,
                    "frozen alignment rows do not match the text length");
      }
      parts.push_back(rep.word_rows);
    } else if (mod == "context") {
      if (rep.lm_fwd_states.size() != T || rep.lm_bwd_states.size() != T) {
        throw Error(errkind::invalid_argument,
                    "frozen language model states do not match the text length");
      }
      parts.push_back(context.forward(rep.lm_fwd_states, rep.lm_bwd_states));
    } else {
      std::vector<nn::Vec> enc;
      enc.reserve(T);
      for (char32_t c : rep.chars) enc.push_back(encoder.encode(c));
      parts.push_back(std::move(enc));
    }
  }
  std::vector<nn::Vec> f = lm::concat_representations(parts);

  const bool want_rep_mask = training && config.rep_dropout > 0.0;
  const bool want_out_mask = training && config.dropout > 0.0;
  if ((want_rep_mask || want_out_mask) && rng == nullptr) {
    throw Error(errkind::invalid_argument, "training forward pass needs an rng for dropout");
  }

  std::vector<nn::Vec> rep_mask;
  std::vector<nn::Vec> f_in = f;
  if (want_rep_mask) {
    rep_mask.reserve(T);
    for (std::size_t t = 0; t < T; ++t) {
      nn::Vec mask = nn::dropout_mask(config.rep_dropout, f[t].size(), *rng);
      for (std::size_t i = 0; i < mask.size(); ++i) f_in[t][i] *= mask[i];
      rep_mask.push_back(std::move(mask));
    }
  }

  std::vector<nn::Vec> bi_out = bilstm.forward(f_in, cache != nullptr ? &cache->bilstm : nullptr);

  std::vector<nn::Vec> out_mask;
  std::vector<nn::Vec> z = bi_out;
  if (want_out_mask) {
    out_mask.reserve(T);
    for (std::size_t t = 0; t < T; ++t) {
      nn::Vec mask = nn::dropout_mask(config.dropout, z[t].size(), *rng);
      for (std::size_t i = 0; i < mask.size(); ++i) z[t][i] *= mask[i];
      out_mask.push_back(std::move(mask));
    }
  }

  crf::EmissionScores em = crf::score_emissions(crf_params, z);
  if (cache != nullptr) {
    cache->f = std::move(f);
    cache->rep_mask = std::move(rep_mask);
    cache->f_in = std::move(f_in);
    cache->bi_out = std::move(bi_out);
    cache->out_mask = std::move(out_mask);
    cache->z = std::move(z);
  }
  return em;
}

void Model::backward(const FrozenRep& rep, const ForwardCache& cache,
                     const nn::Matrix& d_emissions) {
  const std::size_t T = cache.z.size();
  std::vector<nn::Vec> dz = crf::score_emissions_backward(crf_params, cache.z, d_emissions);
  if (!cache.out_mask.empty()) {
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t i = 0; i < dz[t].size(); ++i) dz[t][i] *= cache.out_mask[t][i];
    }
  }
  std::vector<nn::Vec> d_f = bilstm.backward(cache.bilstm, dz);
  if (!cache.rep_mask.empty()) {
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t i = 0; i < d_f[t].size(); ++i) d_f[t][i] *= cache.rep_mask[t][i];
    }
  }
  std::size_t offset = 0;
  for (const std::string& mod : modules) {
    if (mod == "alignment") {
      offset += embeddings.dimension();  // frozen rows, no gradient
    } else if (mod == "context") {
      const std::size_t w = context.out_dim();
      std::vector<nn::Vec> slices(T);
      for (std::size_t t = 0; t < T; ++t) {
        slices[t].assign(d_f[t].begin() + offset, d_f[t].begin() + offset + w);
      }
      context.backward(rep.lm_fwd_states, rep.lm_bwd_states, slices);
      offset += w;
    } else {
      const std::size_t w = encoder.encoding_dim();
      nn::Vec slice(w);
      for (std::size_t t = 0; t < T; ++t) {
        slice.assign(d_f[t].begin() + offset, d_f[t].begin() + offset + w);
        encoder.encode_backward(rep.chars[t], slice);
      }
      offset += w;
    }
  }
}

std::vector<EntitySpan> Model::predict(const CharSequence& text) const {
  if (text.empty()) return {};
  const FrozenRep rep = freeze(text);
  const crf::EmissionScores em = forward(rep);
  const auto [labels, score] = crf::viterbi(em, crf_params, &transition_mask);
  (void)score;
  return spans_from_labels(labels, tags);
}

nn::ParamRefs Model::trainable_parameters() {
  nn::ParamRefs out = bilstm.parameters();
  for (nn::Parameter* p : crf_params.parameters()) out.push_back(p);
  if (config.use_context) {
    for (nn::Parameter* p : context.parameters()) out.push_back(p);
  }
  if (config.use_char_encoding) {
    for (nn::Parameter* p : encoder.parameters()) out.push_back(p);
  }
  return out;
}

void Model::save(const std::string& path) const {
  detail::Json j{{"format", "charcrf-model"}, {"version", 1}};
  j["config"] = detail::Json(config.to_kv());
  j["modules"] = modules;
  if (config.alignment_mode != "none") {
    j["embeddings"] = detail::to_json(embeddings);
    if (config.alignment_mode == "match") j["idf"] = detail::to_json(idf);
  }
  if (config.use_context) {
    j["lm_forward"] = detail::to_json(lm_forward);
    j["lm_backward"] = detail::to_json(lm_backward);
    j["context"] = detail::to_json(context.proj);
  }
  if (config.use_char_encoding) {
    j["encoder"] = detail::to_json(encoder);
  }
  j["bilstm"] = detail::to_json(bilstm);
  j["crf"] = detail::Json{{"num_labels", crf_params.num_labels},
                          {"input_dim", crf_params.input_dim},
                          {"emission", detail::to_json(crf_params.emission.value)},
                          {"transition", detail::to_json(crf_params.transition.value)}};
  write_file_atomic(path, j.dump());
}

Model Model::load(const std::string& path) {
  const detail::Json j = detail::parse_json_file(path);
  if (!j.is_object() || detail::need(j, "format", path).get<std::string>() != "charcrf-model") {
    throw Error(errkind::bad_format, path + ": not a model file");
  }
  const int version = detail::need(j, "version", path).get<int>();
  if (version != 1) {
    throw Error(errkind::bad_format, path + ": file version " + std::to_string(version) +
                                         "; this build reads version 1");
  }
  try {
    KeyValueMap kv;
    const detail::Json& cj = detail::need(j, "config", path);
    if (!cj.is_object()) {
      throw Error(errkind::bad_format, path + ": config must be an object");
    }
    for (const auto& [key, value] : cj.items()) {
      if (!value.is_string()) {
        throw Error(errkind::bad_format, path + ": config value for '" + key + "' not a string");
      }
      kv[key] = value.get<std::string>();
    }
    ModelConfig config = ModelConfig::from_kv(kv);
    config.validate();
    if (config.entity_types.empty()) {
      throw Error(errkind::bad_format, path + ": stored config carries no entity types");
    }
    TagSet tags(config.entity_types);
    Model m(std::move(config), std::move(tags));
    const ModelConfig& cfg = m.config;

    std::vector<std::string> expected;
    if (cfg.alignment_mode != "none") expected.push_back("alignment");
    if (cfg.use_context) expected.push_back("context");
    if (cfg.use_char_encoding) expected.push_back("chars");
    auto mods = detail::need(j, "modules", path).get<std::vector<std::string>>();
    if (mods != expected) {
      throw Error(errkind::bad_format,
                  path + ": stored module order does not match the configuration");
    }
    m.modules = std::move(mods);

    if (cfg.alignment_mode != "none") {
      m.embeddings =
          detail::embeddings_from_json(detail::need(j, "embeddings", path), path + ".embeddings");
      if (m.embeddings.dimension() != cfg.word_dim) {
        throw Error(errkind::bad_format,
                    path + ": embedding dimension " + std::to_string(m.embeddings.dimension()) +
                        " does not match word_dim " + std::to_string(cfg.word_dim));
      }
      if (cfg.alignment_mode == "match") {
        m.idf = detail::idf_from_json(detail::need(j, "idf", path), path + ".idf");
        m.matcher = align::MatchAutomaton(m.idf, cfg.match_lowercase);
      }
    }
    if (cfg.use_context) {
      m.lm_forward =
          detail::lm_from_json(detail::need(j, "lm_forward", path), path + ".lm_forward");
      m.lm_backward =
          detail::lm_from_json(detail::need(j, "lm_backward", path), path + ".lm_backward");
      if (m.lm_forward.direction != lm::LMDirection::Forward ||
          m.lm_backward.direction != lm::LMDirection::Backward) {
        throw Error(errkind::bad_format, path + ": stored language model directions are wrong");
      }
      if (m.lm_forward.hidden_dim() != cfg.lm_hidden ||
          m.lm_backward.hidden_dim() != cfg.lm_hidden) {
        throw Error(errkind::bad_format,
                    path + ": language model hidden width does not match lm_hidden " +
                        std::to_string(cfg.lm_hidden));
      }
      m.context.proj =
          detail::linear_from_json(detail::need(j, "context", path), path + ".context",
                                   "context.proj");
      if (m.context.proj.in_dim() != 2 * cfg.lm_hidden || m.context.out_dim() != cfg.proj_dim) {
        throw Error(errkind::bad_format, path + ": context projection shape mismatch");
      }
    }
    if (cfg.use_char_encoding) {
      m.encoder = detail::encoder_from_json(detail::need(j, "encoder", path), path + ".encoder");
      if (m.encoder.char_dim() != cfg.char_dim || m.encoder.type_dim() != cfg.type_dim) {
        throw Error(errkind::bad_format, path + ": encoder widths do not match the config");
      }
    }
    m.bilstm = detail::bilstm_from_json(detail::need(j, "bilstm", path), path + ".bilstm",
                                        "bilstm");
    if (m.bilstm.fwd.hidden != cfg.hidden_dim) {
      throw Error(errkind::bad_format,
                  path + ": recurrent width " + std::to_string(m.bilstm.fwd.hidden) +
                      " does not match hidden_dim " + std::to_string(cfg.hidden_dim));
    }
    if (m.bilstm.fwd.input != m.representation_dim()) {
      throw Error(errkind::bad_format,
                  path + ": recurrent input width " + std::to_string(m.bilstm.fwd.input) +
                      " does not match the representation width " +
                      std::to_string(m.representation_dim()));
    }

    const detail::Json& c = detail::need(j, "crf", path);
    m.crf_params.num_labels = detail::need(c, "num_labels", path + ".crf").get<int>();
    m.crf_params.input_dim = detail::need(c, "input_dim", path + ".crf").get<int>();
    if (m.crf_params.num_labels != m.tags.label_count()) {
      throw Error(errkind::bad_format,
                  path + ": stored label count " + std::to_string(m.crf_params.num_labels) +
                      " does not match the tag set (" + std::to_string(m.tags.label_count()) +
                      ")");
    }
    if (m.crf_params.input_dim != m.bilstm.out_dim()) {
      throw Error(errkind::bad_format,
                  path + ": emission input width does not match the recurrent output");
    }
    m.crf_params.emission.value =
        detail::matrix_from_json(detail::need(c, "emission", path + ".crf"), path + ".crf");
    m.crf_params.transition.value =
        detail::matrix_from_json(detail::need(c, "transition", path + ".crf"), path + ".crf");
    const int L = m.crf_params.num_labels;
    if (m.crf_params.emission.value.rows() != L ||
        m.crf_params.emission.value.cols() != m.crf_params.input_dim ||
        m.crf_params.transition.value.rows() != L + 1 ||
        m.crf_params.transition.value.cols() != L + 1) {
      throw Error(errkind::bad_format, path + ": stored emission or transition tensor shape");
    }
    m.crf_params.emission.grad = nn::Matrix(L, m.crf_params.input_dim);
    m.crf_params.emission.name = "crf.emission";
    m.crf_params.transition.grad = nn::Matrix(L + 1, L + 1);
    m.crf_params.transition.name = "crf.transition";
    return m;
  } catch (const detail::Json::exception& e) {
    throw Error(errkind::bad_format, path + ": " + e.what());
  }
}

TrainResult train(Model& model, std::vector<AnnotatedDocument> train_docs,
                  const std::vector<AnnotatedDocument>& dev_docs, std::ostream* log,
                  const EpochHook& hook) {
  const ModelConfig& cfg = model.config;
  if (cfg.train_on_dev) {
    train_docs.insert(train_docs.end(), dev_docs.begin(), dev_docs.end());
  }
  if (train_docs.empty()) {
    throw Error(errkind::invalid_argument, "empty training set");
  }

  std::vector<LabelSequence> labels;
  std::vector<FrozenRep> frozen;
  labels.reserve(train_docs.size());
  frozen.reserve(train_docs.size());
  for (std::size_t i = 0; i < train_docs.size(); ++i) {
    const AnnotatedDocument& doc = train_docs[i];
    if (doc.text.empty()) {
      throw Error(errkind::invalid_argument,
                  "training document " + std::to_string(i) + " has empty text");
    }
    labels.push_back(labels_from_spans(doc, model.tags));
    frozen.push_back(model.freeze(doc.text));
  }

  nn::ParamRefs params = model.trainable_parameters();
  nn::Optimizer opt(nn::optimizer_kind_from_string(cfg.optimizer), cfg.lr);
  const bool use_dev = !dev_docs.empty();
  const bool select_on_dev = use_dev && !cfg.train_on_dev;

  TrainResult result;
  std::optional<Model> best;
  double best_f1 = -1.0;
  int stale = 0;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    Rng erng(derive_seed(cfg.seed, 100 + static_cast<std::uint64_t>(epoch)));
    std::vector<std::size_t> order(train_docs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(order, erng);

    double total = 0.0;
    for (std::size_t idx : order) {
      ForwardCache cache;
      const crf::EmissionScores em = model.forward(frozen[idx], true, &erng, &cache);
      crf::NllResult res = crf::nll(em, model.crf_params, labels[idx]);
      if (!std::isfinite(res.loss)) {
        throw Error(errkind::train_failed, "non-finite loss at epoch " + std::to_string(epoch) +
                                               ", document " + std::to_string(idx));
      }
      total += res.loss;
      model.backward(frozen[idx], cache, res.d_emissions);
      for (std::size_t i = 0; i < res.d_transitions.size(); ++i) {
        model.crf_params.transition.grad.data()[i] += res.d_transitions.data()[i];
      }
      if (cfg.clip_norm > 0.0) nn::clip_gradients(params, cfg.clip_norm);
      opt.step(params);
    }

    EpochLog entry;
    entry.epoch = epoch;
    entry.mean_loss = total / static_cast<double>(train_docs.size());
    entry.lr = opt.lr();
    if (use_dev) {
      std::vector<AnnotatedDocument> pred;
      pred.reserve(dev_docs.size());
      for (const AnnotatedDocument& d : dev_docs) {
        pred.push_back({d.text, model.predict(d.text)});
      }
      entry.dev_f1 = eval::score(dev_docs, pred).overall.f1;
    }
    if (log != nullptr) {
      *log << "epoch=" << entry.epoch << " loss=" << format_double(entry.mean_loss);
      if (use_dev) *log << " dev_f1=" << format_double(entry.dev_f1);
      *log << " lr=" << format_double(entry.lr) << "\n";
    }
    result.epochs.push_back(entry);

    if (use_dev) {
      if (entry.dev_f1 > best_f1) {
        best_f1 = entry.dev_f1;
        stale = 0;
        if (select_on_dev) {
          best = model;
          result.best_epoch = epoch;
          result.best_f1 = best_f1;
        }
      } else {
        ++stale;
        if (stale >= cfg.patience) {
          opt.set_lr(opt.lr() * cfg.anneal_factor);
          stale = 0;
        }
      }
      if (!select_on_dev) {
        result.best_epoch = epoch;
        result.best_f1 = entry.dev_f1;
      }
    } else {
      result.best_epoch = epoch;
    }

    if (hook && !hook(entry)) break;
  }

  if (select_on_dev && best.has_value()) model = std::move(*best);
  return result;
}

}  // namespace charcrf::model
