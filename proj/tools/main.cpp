// Command-line front end: dictionary building, language model pretraining,
// NER training, tagging, dataset conversion, evaluation, and an alignment
// debugging view.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charcrf/align.hpp"
#include "charcrf/convert.hpp"
#include "charcrf/error.hpp"
#include "charcrf/eval.hpp"
#include "charcrf/kv.hpp"
#include "charcrf/lm.hpp"
#include "charcrf/model.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"

namespace {

using namespace charcrf;

// Seed sub-streams. NER init uses 1, LM init 2 (both directions, so a
// backward model on reversed text mirrors a forward one exactly),
// embedding-load UNK rows 10; per-epoch shuffles live at 100+ (NER, inside
// model::train) and 200+ (LM).
constexpr std::uint64_t kLmStream = 2;
constexpr std::uint64_t kEmbeddingStream = 10;
constexpr std::uint64_t kLmEpochBase = 200;

struct GlobalOpts {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  std::vector<std::string> sets;
};

model::ModelConfig make_config(const GlobalOpts& g) {
  KeyValueMap kv;
  if (!g.config_path.empty()) kv = load_kv_file(g.config_path);
  for (const std::string& s : g.sets) {
    KeyValueMap one;
    try {
      one = parse_kv(s);
    } catch (const Error&) {
      one.clear();
    }
    if (one.size() != 1) {
      throw Error(errkind::bad_arguments, "--set expects KEY=VALUE, got '" + s + "'");
    }
    kv[one.begin()->first] = one.begin()->second;
  }
  if (g.seed.has_value()) kv["seed"] = std::to_string(*g.seed);
  model::ModelConfig c = model::ModelConfig::from_kv(kv);
  c.validate();
  return c;
}

std::vector<CharSequence> decode_corpus(const std::vector<std::string>& lines) {
  std::vector<CharSequence> out;
  out.reserve(lines.size());
  for (const std::string& line : lines) out.push_back(decode_utf8(line, true));
  return out;
}

void cmd_build_dict(const GlobalOpts& g, const std::string& corpus_path,
                    const std::string& embeddings_path, int min_df,
                    const std::string& out_path) {
  const std::vector<std::string> lines = convert::load_lines(corpus_path);
  std::function<bool(const std::string&)> keep;
  align::EmbeddingTable table;
  if (!embeddings_path.empty()) {
    model::ModelConfig cfg = make_config(g);
    Rng rng(derive_seed(cfg.seed, kEmbeddingStream));
    table = align::EmbeddingTable::load_word2vec(embeddings_path, rng);
    keep = [&table](const std::string& w) { return table.contains(w); };
  }
  const align::IDFDictionary dict = align::build_idf(lines, min_df, keep);
  dict.save_tsv(out_path);
  if (!g.quiet) {
    std::cout << "wrote " << dict.size() << " words to " << out_path << "\n";
  }
}

void cmd_lm_train(const GlobalOpts& g, const std::string& corpus_path,
                  const std::string& direction, const std::string& out_path, bool resume) {
  const model::ModelConfig cfg = make_config(g);
  const lm::LMDirection dir = lm::lm_direction_from_string(direction);
  const std::vector<CharSequence> corpus = decode_corpus(convert::load_lines(corpus_path));

  lm::CharLM net;
  nn::Optimizer opt(nn::optimizer_kind_from_string(cfg.optimizer), cfg.lm_lr);
  int start_epoch = 1;
  if (resume) {
    std::optional<lm::LMTrainState> state;
    net = lm::load_lm(out_path, &state);
    if (net.direction != dir) {
      throw Error(errkind::invalid_argument,
                  "checkpoint direction " + to_string(net.direction) +
                      " does not match --direction " + direction);
    }
    if (state.has_value()) {
      start_epoch = state->next_epoch;
      opt.restore(std::move(state->optimizer));
    }
  } else {
    Rng rng(derive_seed(cfg.seed, kLmStream));
    lm::CharEncoder enc = lm::CharEncoder::build(corpus, cfg.char_dim, cfg.type_dim, rng);
    net = lm::CharLM(dir, std::move(enc), cfg.lm_hidden, rng);
  }

  for (int epoch = start_epoch; epoch <= cfg.lm_epochs; ++epoch) {
    const double mean =
        lm::lm_train_epoch(net, corpus, opt, cfg.lm_dropout, cfg.lm_clip_norm,
                           derive_seed(cfg.seed, kLmEpochBase + static_cast<std::uint64_t>(epoch)));
    if (!g.quiet) {
      std::cout << "epoch=" << epoch << " loss=" << format_double(mean)
                << " ppl=" << format_double(std::exp(mean)) << "\n";
    }
    lm::LMTrainState state{epoch + 1, opt.state()};
    lm::save_lm(net, out_path, &state);
  }
}

void cmd_train(const GlobalOpts& g, const std::string& train_path, const std::string& dev_path,
               const std::string& embeddings_path, const std::string& idf_path,
               const std::string& lm_fwd_path, const std::string& lm_bwd_path,
               const std::string& out_path) {
  const model::ModelConfig cfg = make_config(g);
  const std::vector<AnnotatedDocument> train_docs = load_jsonl(train_path);
  std::vector<AnnotatedDocument> dev_docs;
  if (!dev_path.empty()) dev_docs = load_jsonl(dev_path);

  model::Resources res;
  if (cfg.alignment_mode != "none") {
    if (embeddings_path.empty()) {
      throw Error(errkind::bad_arguments, "alignment is enabled; pass --embeddings");
    }
    Rng rng(derive_seed(cfg.seed, kEmbeddingStream));
    res.embeddings = align::EmbeddingTable::load_word2vec(embeddings_path, rng);
    if (cfg.alignment_mode == "match") {
      if (idf_path.empty()) {
        throw Error(errkind::bad_arguments, "match alignment needs --idf");
      }
      res.idf = align::IDFDictionary::load_tsv(idf_path);
    }
  }
  if (cfg.use_context) {
    if (lm_fwd_path.empty() || lm_bwd_path.empty()) {
      throw Error(errkind::bad_arguments,
                  "contextual representation needs --lm-forward and --lm-backward");
    }
    res.lm_forward = lm::load_lm(lm_fwd_path);
    res.lm_backward = lm::load_lm(lm_bwd_path);
  }

  model::Model m = model::Model::create(cfg, std::move(res), train_docs);
  model::train(m, train_docs, dev_docs, g.quiet ? nullptr : &std::cout);
  m.save(out_path);
}

void cmd_tag(const GlobalOpts& g, const std::string& model_path, const std::string& input_path,
             bool jsonl_input, const std::string& out_path) {
  (void)g;
  const model::Model m = model::Model::load(model_path);
  std::vector<AnnotatedDocument> docs;
  if (jsonl_input) {
    docs = load_jsonl(input_path);
    for (AnnotatedDocument& d : docs) d.entities = m.predict(d.text);
  } else {
    for (const std::string& line : convert::load_lines(input_path)) {
      const CharSequence text = decode_utf8(line, true);
      docs.push_back({text, m.predict(text)});
    }
  }
  save_jsonl(docs, out_path);
}

void cmd_eval(const GlobalOpts& g, const std::string& gold_path, const std::string& pred_path,
              const std::string& json_path) {
  const std::vector<AnnotatedDocument> gold = load_jsonl(gold_path);
  const std::vector<AnnotatedDocument> pred = load_jsonl(pred_path);
  const eval::EvalReport report = eval::score(gold, pred);
  if (!g.quiet) std::cout << report.to_table();
  if (!json_path.empty()) write_file_atomic(json_path, report.to_json());
}

void cmd_convert(const GlobalOpts& g, const std::string& conll_path, const std::string& raw_path,
                 const std::string& transforms_path, bool allow_skip,
                 const std::string& out_path) {
  const std::vector<convert::TokenizedSentence> sentences = convert::load_conll(conll_path);
  const std::vector<std::string> raw_lines = convert::load_lines(raw_path);
  if (sentences.size() != raw_lines.size()) {
    throw Error(errkind::bad_format,
                "got " + std::to_string(sentences.size()) + " sentences but " +
                    std::to_string(raw_lines.size()) + " raw lines");
  }
  const convert::TokenTransformTable table = transforms_path.empty()
                                                 ? convert::TokenTransformTable::defaults()
                                                 : convert::TokenTransformTable::load(transforms_path);

  std::set<std::string> types;
  for (const convert::TokenizedSentence& s : sentences) {
    for (const std::string& label : s.labels) {
      if (label.size() > 2 && label[1] == '-') types.insert(label.substr(2));
    }
  }
  // The tag set only matters for sentences that carry entities, but it must
  // be non-empty; fall back to a placeholder for all-O corpora.
  if (types.empty()) types.insert("MISC");
  const TagSet tags(std::vector<std::string>(types.begin(), types.end()));

  convert::AlignOptions opts;
  opts.allow_skip = allow_skip;
  std::vector<AnnotatedDocument> docs;
  docs.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      const CharSequence raw = decode_utf8(raw_lines[i]);
      docs.push_back(convert::word_labels_to_char_labels(raw, sentences[i], table, tags, opts));
    } catch (const Error& e) {
      throw Error(e.kind(), "sentence " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  save_jsonl(docs, out_path);
  if (!g.quiet) {
    std::cout << "converted " << docs.size() << " sentences to " << out_path << "\n";
  }
}

void cmd_align(const GlobalOpts& g, const std::string& text_arg, std::string mode,
               const std::string& embeddings_path, const std::string& idf_path) {
  const model::ModelConfig cfg = make_config(g);
  if (mode.empty()) mode = cfg.alignment_mode;
  const CharSequence text = decode_utf8(text_arg);

  align::Alignment alignment;
  if (mode == "match") {
    if (idf_path.empty()) {
      throw Error(errkind::bad_arguments, "match mode needs --idf");
    }
    const align::IDFDictionary dict = align::IDFDictionary::load_tsv(idf_path);
    alignment = align::select_matches(align::find_matches(text, dict, cfg.match_lowercase), text);
  } else if (mode == "tokenize") {
    if (embeddings_path.empty()) {
      throw Error(errkind::bad_arguments, "tokenize mode needs --embeddings");
    }
    Rng rng(derive_seed(cfg.seed, kEmbeddingStream));
    const align::EmbeddingTable table =
        align::EmbeddingTable::load_word2vec(embeddings_path, rng);
    alignment = align::tokenize_align(text, convert::simple_tokenize(text), table);
  } else {
    throw Error(errkind::bad_arguments, "--mode must be match or tokenize, got '" + mode + "'");
  }

  for (std::size_t t = 0; t < alignment.size(); ++t) {
    std::cout << t << "\t" << encode_utf8(text[t]) << "\t";
    switch (alignment[t].kind) {
      case align::AlignKind::Word:
        std::cout << "word\t" << alignment[t].word;
        break;
      case align::AlignKind::Whitespace:
        std::cout << "ws";
        break;
      case align::AlignKind::Unknown:
        std::cout << "unk";
        break;
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character-level named entity tagger"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "key-value configuration file");
  app.add_option("--seed", g.seed, "random seed (overrides the config file)");
  app.add_flag("--quiet", g.quiet, "suppress progress output");
  app.add_option("--set", g.sets, "override one config key, KEY=VALUE (repeatable)");

  std::string corpus_path, embeddings_path, idf_path, out_path;
  std::string direction, train_path, dev_path, lm_fwd_path, lm_bwd_path;
  std::string model_path, input_path, gold_path, pred_path, json_path;
  std::string conll_path, raw_path, transforms_path, text_arg, mode;
  int min_df = 2;
  bool resume = false, jsonl_input = false, allow_skip = false;

  CLI::App* build_dict = app.add_subcommand("build-dict", "build an idf dictionary from text");
  build_dict->fallthrough();
  build_dict->add_option("--corpus", corpus_path, "one document per line")->required();
  build_dict->add_option("--embeddings", embeddings_path,
                         "restrict the dictionary to this vocabulary");
  build_dict->add_option("--min-df", min_df, "minimum document frequency");
  build_dict->add_option("--out", out_path, "output TSV path")->required();

  CLI::App* lm_train = app.add_subcommand("lm-train", "pretrain a character language model");
  lm_train->fallthrough();
  lm_train->add_option("--corpus", corpus_path, "one text per line")->required();
  lm_train->add_option("--direction", direction, "forward or backward")->required();
  lm_train->add_option("--out", out_path, "model output path")->required();
  lm_train->add_flag("--resume", resume, "continue from the checkpoint at --out");

  CLI::App* train = app.add_subcommand("train", "train a tagger");
  train->fallthrough();
  train->add_option("--train", train_path, "training documents (jsonl)")->required();
  train->add_option("--dev", dev_path, "development documents (jsonl)");
  train->add_option("--embeddings", embeddings_path, "word2vec text file");
  train->add_option("--idf", idf_path, "idf dictionary TSV");
  train->add_option("--lm-forward", lm_fwd_path, "forward language model");
  train->add_option("--lm-backward", lm_bwd_path, "backward language model");
  train->add_option("--out", out_path, "model output path")->required();

  CLI::App* tag = app.add_subcommand("tag", "tag text with a trained model");
  tag->fallthrough();
  tag->add_option("--model", model_path, "trained model path")->required();
  tag->add_option("--input", input_path, "input file")->required();
  tag->add_flag("--jsonl", jsonl_input, "input is jsonl documents instead of raw lines");
  tag->add_option("--out", out_path, "output jsonl path")->required();

  CLI::App* eval_cmd = app.add_subcommand("eval", "score predictions against gold");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--gold", gold_path, "gold documents (jsonl)")->required();
  eval_cmd->add_option("--pred", pred_path, "predicted documents (jsonl)")->required();
  eval_cmd->add_option("--json", json_path, "also write the report as JSON here");

  CLI::App* convert_cmd = app.add_subcommand("convert", "convert word annotations to raw text");
  convert_cmd->fallthrough();
  convert_cmd->add_option("--conll", conll_path, "token<TAB>label sentences")->required();
  convert_cmd->add_option("--raw", raw_path, "raw text, one line per sentence")->required();
  convert_cmd->add_option("--transforms", transforms_path, "extra token transform table");
  convert_cmd->add_flag("--allow-skip", allow_skip,
                        "let alignment skip unmatched non-whitespace characters");
  convert_cmd->add_option("--out", out_path, "output jsonl path")->required();

  CLI::App* align_cmd = app.add_subcommand("align", "dump the per-character alignment");
  align_cmd->fallthrough();
  align_cmd->add_option("--text", text_arg, "text to align")->required();
  align_cmd->add_option("--mode", mode, "match or tokenize (default: config alignment_mode)");
  align_cmd->add_option("--embeddings", embeddings_path, "word2vec text file");
  align_cmd->add_option("--idf", idf_path, "idf dictionary TSV");

  try {
    app.parse(argc, argv);
    if (build_dict->parsed()) {
      cmd_build_dict(g, corpus_path, embeddings_path, min_df, out_path);
    } else if (lm_train->parsed()) {
      cmd_lm_train(g, corpus_path, direction, out_path, resume);
    } else if (train->parsed()) {
      cmd_train(g, train_path, dev_path, embeddings_path, idf_path, lm_fwd_path, lm_bwd_path,
                out_path);
    } else if (tag->parsed()) {
      cmd_tag(g, model_path, input_path, jsonl_input, out_path);
    } else if (eval_cmd->parsed()) {
      cmd_eval(g, gold_path, pred_path, json_path);
    } else if (convert_cmd->parsed()) {
      cmd_convert(g, conll_path, raw_path, transforms_path, allow_skip, out_path);
    } else if (align_cmd->parsed()) {
      cmd_align(g, text_arg, mode, embeddings_path, idf_path);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: bad-arguments: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
