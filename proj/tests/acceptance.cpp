// Integration gate: eight numbered end-to-end checks plus a determinism
// check that reruns the first eight and compares logs and artifacts byte for
// byte. Prints one line per criterion and exits nonzero on any failure.
//
// Everything written to the determinism log must be a pure function of the
// hard-coded seeds: counts, hashes and formatted numbers, never wall time.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "charcrf/align.hpp"
#include "charcrf/convert.hpp"
#include "charcrf/crf.hpp"
#include "charcrf/eval.hpp"
#include "charcrf/kv.hpp"
#include "charcrf/lm.hpp"
#include "charcrf/model.hpp"
#include "charcrf/nn.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;
using namespace charcrf;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Hash {
  std::uint64_t h = 1469598103934665603ull;

  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  }
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  void add(double v) { add(format_double(v)); }
  void add(const std::vector<int>& v) {
    for (int x : v) add(static_cast<std::uint64_t>(x));
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CriterionResult> results;
  std::string det;  // determinism log, compared across runs
  std::vector<std::pair<std::string, std::string>> artifacts;  // name -> bytes
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

// ---- criterion 1: CRF equivalence against exhaustive enumeration ----

CriterionResult criterion1(std::ostream& det) {
  const auto start = Clock::now();
  Rng rng(101);
  Hash hash;
  int instances = 0;
  double worst_gap = 0.0;
  int viterbi_mismatches = 0;
  for (int T = 1; T <= 6; ++T) {
    for (int L = 2; L <= 5; ++L) {
      for (int i = 0; i < 100; ++i) {
        nn::Matrix em;
        const crf::Params p = testutil::random_crf(L, T, em, rng, i % 4 == 0);
        const testutil::BruteForce bf = testutil::brute_force(em, p);
        const double lp = crf::log_partition(em, p);
        worst_gap = std::max(worst_gap, std::abs(lp - bf.log_partition));
        const auto [seq, score] = crf::viterbi(em, p);
        if (seq != bf.best) ++viterbi_mismatches;
        hash.add(lp);
        hash.add(seq);
        ++instances;
      }
    }
  }
  const double elapsed = seconds_since(start);
  det << "c1 instances=" << instances << " worst_gap=" << format_double(worst_gap)
      << " viterbi_mismatches=" << viterbi_mismatches << " hash=" << hash.hex() << "\n";

  CriterionResult r;
  r.pass = worst_gap <= 1e-10 && viterbi_mismatches == 0 && elapsed < 10.0;
  std::ostringstream d;
  d << instances << " instances, worst log-partition gap " << format_double(worst_gap)
    << ", " << viterbi_mismatches << " decode mismatches, " << fmt_seconds(elapsed);
  r.detail = d.str();
  return r;
}

// ---- criterion 2: finite-difference gradient suite ----

double grad_check_linear(std::uint64_t seed) {
  Rng rng(seed);
  nn::Linear lin(4, 3, rng);
  nn::Vec x = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  auto loss = [&](bool acc) {
    const nn::Vec y = lin.forward(x);
    double s = 0.0;
    for (double v : y) s += v * v;
    if (acc) {
      nn::Vec dy(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) dy[i] = 2.0 * y[i];
      lin.backward(x, dy);
    }
    return s;
  };
  auto params = lin.parameters();
  return nn::grad_check(params, loss);
}

double grad_check_lstm(std::uint64_t seed) {
  Rng rng(seed);
  nn::LSTMParams p(3, 2, rng);
  const nn::Vec x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  nn::LSTMState prev;
  prev.h = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  prev.c = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  auto loss = [&](bool acc) {
    nn::LSTMCache cache;
    const nn::LSTMState st = nn::lstm_step(p, x, prev, &cache);
    double s = 0.0;
    for (double v : st.h) s += v * v;
    for (double v : st.c) s += 0.5 * v * v;
    if (acc) {
      nn::Vec dh(st.h.size()), dc(st.c.size());
      for (std::size_t i = 0; i < st.h.size(); ++i) {
        dh[i] = 2.0 * st.h[i];
        dc[i] = st.c[i];
      }
      nn::lstm_step_backward(p, cache, dh, dc);
    }
    return s;
  };
  auto params = p.parameters();
  return nn::grad_check(params, loss);
}

double grad_check_projection(std::uint64_t seed) {
  Rng rng(seed);
  lm::ContextProjection ctx(3, 4, rng);
  std::vector<nn::Vec> fwd(3, nn::Vec(4)), bwd(3, nn::Vec(4));
  for (auto* side : {&fwd, &bwd}) {
    for (auto& v : *side) {
      for (auto& e : v) e = rng.uniform(-1, 1);
    }
  }
  auto loss = [&](bool acc) {
    const auto ys = ctx.forward(fwd, bwd);
    double s = 0.0;
    for (const auto& y : ys) {
      for (double v : y) s += v * v;
    }
    if (acc) {
      std::vector<nn::Vec> dy(ys.size());
      for (std::size_t t = 0; t < ys.size(); ++t) {
        dy[t].assign(ys[t].size(), 0.0);
        for (std::size_t i = 0; i < ys[t].size(); ++i) dy[t][i] = 2.0 * ys[t][i];
      }
      ctx.backward(fwd, bwd, dy);
    }
    return s;
  };
  auto params = ctx.parameters();
  return nn::grad_check(params, loss);
}

double grad_check_crf(std::uint64_t seed) {
  Rng rng(seed);
  const int L = 2 + static_cast<int>(rng.below(3));
  const int T = 1 + static_cast<int>(rng.below(4));
  crf::Params p(L, 2, rng);
  std::vector<nn::Vec> z(T);
  for (auto& v : z) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  LabelSequence labels(T);
  for (int t = 0; t < T; ++t) labels[t] = static_cast<int>(rng.below(L));
  auto loss = [&](bool acc) {
    const nn::Matrix em = crf::score_emissions(p, z);
    const crf::NllResult res = crf::nll(em, p, labels);
    if (acc) {
      crf::score_emissions_backward(p, z, res.d_emissions);
      for (std::size_t i = 0; i < p.transition.grad.size(); ++i) {
        p.transition.grad.data()[i] += res.d_transitions.data()[i];
      }
    }
    return res.loss;
  };
  auto params = p.parameters();
  return nn::grad_check(params, loss);
}

double grad_check_full_model(std::uint64_t seed) {
  model::ModelConfig cfg;
  cfg.entity_types = {"T"};
  cfg.alignment_mode = "match";
  cfg.use_context = true;
  cfg.use_char_encoding = true;
  cfg.word_dim = 3;
  cfg.lm_hidden = 3;
  cfg.proj_dim = 2;
  cfg.char_dim = 3;
  cfg.type_dim = 2;
  cfg.hidden_dim = 2;
  cfg.dropout = 0.0;
  cfg.rep_dropout = 0.0;
  cfg.seed = seed;

  // The instance keeps every used gradient entry well above the finite
  // difference noise floor at step 1e-5 so the elementwise relative error
  // stays meaningful; a tiny true gradient would drown in roundoff.
  Rng rng(seed + 3000);
  model::Resources res;
  align::EmbeddingTable table(3, rng);
  table.add("NBA", {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
  res.embeddings = std::move(table);
  align::IDFDictionary idf;
  idf.set("NBA", 2.0);
  res.idf = std::move(idf);
  const std::vector<CharSequence> lm_corpus = {U"NBA ab.", U"ba NBA"};
  lm::CharEncoder enc = lm::CharEncoder::build(lm_corpus, 3, 2, rng);
  res.lm_forward = lm::CharLM(lm::LMDirection::Forward, enc, 3, rng);
  res.lm_backward = lm::CharLM(lm::LMDirection::Backward, enc, 3, rng);

  const std::vector<AnnotatedDocument> docs = {{U"bNBA", {{1, 4, "T"}}}};
  model::Model m = model::Model::create(cfg, std::move(res), docs);
  const model::FrozenRep frozen = m.freeze(docs[0].text);
  const LabelSequence labels = labels_from_spans(docs[0], m.tags);

  auto loss = [&](bool acc) {
    model::ForwardCache cache;
    const crf::EmissionScores em = m.forward(frozen, false, nullptr, acc ? &cache : nullptr);
    const crf::NllResult res2 = crf::nll(em, m.crf_params, labels);
    if (acc) {
      m.backward(frozen, cache, res2.d_emissions);
      for (std::size_t i = 0; i < m.crf_params.transition.grad.size(); ++i) {
        m.crf_params.transition.grad.data()[i] += res2.d_transitions.data()[i];
      }
    }
    return res2.loss;
  };
  auto params = m.trainable_parameters();
  return nn::grad_check(params, loss);
}

CriterionResult criterion2(std::ostream& det) {
  const auto start = Clock::now();
  struct Family {
    const char* name;
    double (*run)(std::uint64_t);
  };
  const Family families[] = {
      {"linear", grad_check_linear},   {"lstm", grad_check_lstm},
      {"projection", grad_check_projection}, {"crf", grad_check_crf},
      {"full_model", grad_check_full_model},
  };
  double worst = 0.0;
  det << "c2";
  std::ostringstream d;
  for (const Family& f : families) {
    double fam_worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      fam_worst = std::max(fam_worst, f.run(seed));
    }
    det << " " << f.name << "=" << format_double(fam_worst);
    d << f.name << " " << format_double(fam_worst) << ", ";
    worst = std::max(worst, fam_worst);
  }
  det << "\n";
  const double elapsed = seconds_since(start);

  CriterionResult r;
  r.pass = worst < 1e-4 && elapsed < 60.0;
  r.detail = "max relative error per family: " + d.str() + fmt_seconds(elapsed);
  return r;
}

// ---- criterion 3: match selection equals the naive argmax oracle ----

CriterionResult criterion3(std::ostream& det) {
  const auto start = Clock::now();
  Rng rng(303);
  Hash hash;
  int instances = 0;
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    align::IDFDictionary dict;
    const int n_words = 1 + static_cast<int>(rng.below(100));
    for (int w = 0; w < n_words; ++w) {
      std::string word;
      const int len = 1 + static_cast<int>(rng.below(5));
      for (int c = 0; c < len; ++c) word.push_back("abc"[rng.below(3)]);
      // quantized idf values manufacture priority ties
      const double idf = 1.0 + 0.5 * static_cast<double>(rng.below(6));
      dict.set(word, idf);
    }
    const int text_len = 1 + static_cast<int>(rng.below(500));
    const CharSequence text = testutil::random_text(rng, text_len, U"abc abc.");
    const std::vector<align::Match> matches = align::find_matches(text, dict);
    const align::Alignment got = align::select_matches(matches, text);
    const align::Alignment want = testutil::naive_select(matches, text);
    if (got != want) ++mismatches;
    for (const align::AlignEntry& e : got) {
      hash.add(static_cast<std::uint64_t>(e.kind));
      hash.add(e.word);
    }
    ++instances;
  }
  const double elapsed = seconds_since(start);
  det << "c3 instances=" << instances << " mismatches=" << mismatches
      << " hash=" << hash.hex() << "\n";

  CriterionResult r;
  r.pass = mismatches == 0;
  std::ostringstream d;
  d << instances << " instances, " << mismatches << " mismatches, " << fmt_seconds(elapsed);
  r.detail = d.str();
  return r;
}

// ---- criterion 4: near-linear selection scaling ----

CriterionResult criterion4(std::ostream& det) {
  Rng rng(404);
  align::IDFDictionary dict;
  for (int w = 0; w < 50; ++w) {
    std::string word;
    const int len = 2 + static_cast<int>(rng.below(4));
    for (int c = 0; c < len; ++c) word.push_back("abc"[rng.below(3)]);
    dict.set(word, 1.0 + rng.uniform());
  }
  const align::MatchAutomaton automaton(dict);

  const int base_len = 120000;
  double time_small = 0.0, time_large = 0.0;
  std::size_t matches_small = 0, matches_large = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const CharSequence small = testutil::random_text(rng, base_len, U"abc abc");
    const CharSequence large = testutil::random_text(rng, 2 * base_len, U"abc abc");
    const auto ms = automaton.find_matches(small);
    const auto ml = automaton.find_matches(large);
    matches_small += ms.size();
    matches_large += ml.size();

    auto t0 = Clock::now();
    const align::Alignment as = align::select_matches(ms, small);
    time_small += seconds_since(t0);
    t0 = Clock::now();
    const align::Alignment al = align::select_matches(ml, large);
    time_large += seconds_since(t0);
    if (as.size() != small.size() || al.size() != large.size()) {
      return {false, "alignment length mismatch"};
    }
  }
  const double ratio = time_large / time_small;
  det << "c4 matches_small=" << matches_small << " matches_large=" << matches_large << "\n";

  CriterionResult r;
  r.pass = ratio <= 3.0;
  std::ostringstream d;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", ratio);
  d << "2x text -> time ratio " << buf << " over 10 trials (" << matches_large
    << " matches at 240k chars)";
  r.detail = d.str();
  return r;
}

// ---- criterion 5: conversion round trip ----

CriterionResult criterion5(std::ostream& det) {
  const auto start = Clock::now();
  Rng rng(505);
  Hash hash;
  const convert::TokenTransformTable table = convert::TokenTransformTable::defaults();
  const TagSet tags({"LOC", "PER"});

  struct Piece {
    const char32_t* raw;
    const char* token;
  };
  const Piece pieces[] = {
      {U"alpha", "alpha"}, {U"beta", "beta"},   {U"gamma", "gamma"}, {U"delta", "delta"},
      {U"kilo", "kilo"},   {U"zebra", "zebra"}, {U"(", "-LRB-"},     {U")", "-RRB-"},
      {U"[", "-LSB-"},     {U"]", "-RSB-"},     {U"…", "..."},  {U". . .", "..."},
  };
  const int n_pieces = static_cast<int>(std::size(pieces));

  int recovered = 0;
  const int total = 100;
  for (int trial = 0; trial < total; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    CharSequence raw;
    std::vector<TokenSpan> extents;
    convert::TokenizedSentence sentence;
    for (int i = 0; i < n; ++i) {
      if (i > 0) raw.append(rng.uniform() < 0.15 ? U"  " : U" ");
      const Piece& p = pieces[rng.below(n_pieces)];
      const CharSequence rp(p.raw);
      extents.push_back({static_cast<int>(raw.size()), static_cast<int>(raw.size() + rp.size())});
      raw += rp;
      sentence.tokens.push_back(p.token);
    }
    std::vector<EntitySpan> expected;
    int i = 0;
    while (i < n) {
      if (rng.uniform() < 0.4) {
        const std::string type = rng.uniform() < 0.5 ? "LOC" : "PER";
        const int len = 1 + static_cast<int>(rng.below(std::min(3, n - i)));
        if (len == 1) {
          sentence.labels.push_back("S-" + type);
        } else {
          sentence.labels.push_back("B-" + type);
          for (int k = 1; k + 1 < len; ++k) sentence.labels.push_back("I-" + type);
          sentence.labels.push_back("E-" + type);
        }
        expected.push_back({extents[i].start, extents[i + len - 1].end, type});
        i += len;
      } else {
        sentence.labels.push_back("O");
        ++i;
      }
    }

    const AnnotatedDocument doc =
        convert::word_labels_to_char_labels(raw, sentence, table, tags);
    if (doc.entities == expected) ++recovered;
    for (const EntitySpan& e : doc.entities) {
      hash.add(static_cast<std::uint64_t>(e.start));
      hash.add(static_cast<std::uint64_t>(e.end));
      hash.add(e.type);
    }
  }
  const double elapsed = seconds_since(start);
  det << "c5 recovered=" << recovered << "/" << total << " hash=" << hash.hex() << "\n";

  CriterionResult r;
  r.pass = recovered == total;
  std::ostringstream d;
  d << recovered << "/" << total << " span sets recovered exactly, " << fmt_seconds(elapsed);
  r.detail = d.str();
  return r;
}

// ---- criterion 6: constrained decoding always yields valid spans ----

CriterionResult criterion6(std::ostream& det) {
  const auto start = Clock::now();
  Rng rng(606);
  Hash hash;
  const std::vector<std::string> all_types = {"T0", "T1", "T2"};
  int invalid = 0;
  long dropped = 0;
  long spans_total = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n_types = 1 + static_cast<int>(rng.below(3));
    const TagSet tags(std::vector<std::string>(all_types.begin(), all_types.begin() + n_types));
    const crf::TransitionMask mask = crf::build_iobes_mask(tags);
    const int T = 1 + static_cast<int>(rng.below(30));
    nn::Matrix em;
    const crf::Params p = testutil::random_crf(tags.label_count(), T, em, rng, trial % 5 == 0);
    const auto [labels, score] = crf::viterbi(em, p, &mask);
    if (!is_iobes_valid(labels, tags)) ++invalid;
    const std::vector<EntitySpan> spans = spans_from_labels(labels, tags);
    long covered = 0;
    for (const EntitySpan& s : spans) covered += s.end - s.start;
    long non_outside = 0;
    for (int l : labels) non_outside += l != TagSet::kOutside ? 1 : 0;
    dropped += non_outside - covered;
    spans_total += static_cast<long>(spans.size());
    hash.add(labels);
  }
  const double elapsed = seconds_since(start);
  det << "c6 invalid=" << invalid << " dropped=" << dropped << " spans=" << spans_total
      << " hash=" << hash.hex() << "\n";

  CriterionResult r;
  r.pass = invalid == 0 && dropped == 0;
  std::ostringstream d;
  d << "1000 decodes, " << invalid << " invalid sequences, " << dropped
    << " dropped fragments, " << spans_total << " spans, " << fmt_seconds(elapsed);
  r.detail = d.str();
  return r;
}

// ---- criterion 7: end-to-end overfit and the string-match ablation ----

struct ToyData {
  std::vector<AnnotatedDocument> docs;
  align::EmbeddingTable embeddings;
  align::IDFDictionary idf;
  std::vector<CharSequence> texts;
};

std::string random_letters(Rng& rng, int min_len, int max_len) {
  return testutil::random_word(rng, min_len, max_len);
}

// 50 sentences of carrier words with annotated gazetteer mentions; every word
// has an embedding, gazetteer words are the dictionary.
ToyData make_base_corpus(std::uint64_t seed) {
  Rng rng(seed);
  ToyData data;
  const int word_dim = 8;

  std::vector<std::string> gazetteer, carriers;
  auto is_substring_clash = [&](const std::string& w) {
    for (const std::string& g : gazetteer) {
      if (w.find(g) != std::string::npos || g.find(w) != std::string::npos) return true;
    }
    return false;
  };
  while (static_cast<int>(gazetteer.size()) < 20) {
    const std::string w = random_letters(rng, 4, 7);
    if (!is_substring_clash(w)) gazetteer.push_back(w);
  }
  while (static_cast<int>(carriers.size()) < 30) {
    const std::string w = random_letters(rng, 3, 7);
    if (!is_substring_clash(w) &&
        std::find(carriers.begin(), carriers.end(), w) == carriers.end()) {
      carriers.push_back(w);
    }
  }

  data.embeddings = align::EmbeddingTable(word_dim, rng);
  auto random_vec = [&] {
    nn::Vec v(word_dim);
    for (double& x : v) x = rng.uniform(-1, 1);
    return v;
  };
  for (const std::string& w : gazetteer) data.embeddings.add(w, random_vec());
  for (const std::string& w : carriers) data.embeddings.add(w, random_vec());
  for (std::size_t i = 0; i < gazetteer.size(); ++i) {
    data.idf.set(gazetteer[i], 2.0 + rng.uniform());
  }

  for (int s = 0; s < 50; ++s) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const int mention_slot = static_cast<int>(rng.below(n));
    AnnotatedDocument doc;
    for (int i = 0; i < n; ++i) {
      if (i > 0) doc.text += U' ';
      const bool mention = i == mention_slot || rng.uniform() < 0.15;
      const std::size_t pick = rng.below(mention ? gazetteer.size() : carriers.size());
      const std::string& w = mention ? gazetteer[pick] : carriers[pick];
      const int start = static_cast<int>(doc.text.size());
      doc.text += decode_utf8(w);
      if (mention) {
        doc.entities.push_back(
            {start, static_cast<int>(doc.text.size()), pick % 2 == 0 ? "ORG" : "PER"});
      }
    }
    data.texts.push_back(doc.text);
    data.docs.push_back(std::move(doc));
  }
  return data;
}

// Harder variant: every word is a 6-character binary-alphabet string; each
// gazetteer word has a carrier twin sharing its 5-character prefix, and which
// twin is the entity varies per prefix, so characters alone identify nothing
// that a model could read off cheaply. The dictionary holds the answer.
ToyData make_hard_corpus(std::uint64_t seed) {
  Rng rng(seed);
  ToyData data;
  const int word_dim = 8;

  std::vector<std::string> prefixes;
  while (static_cast<int>(prefixes.size()) < 20) {
    std::string p;
    for (int i = 0; i < 5; ++i) p.push_back("ab"[rng.below(2)]);
    if (std::find(prefixes.begin(), prefixes.end(), p) == prefixes.end()) {
      prefixes.push_back(p);
    }
  }
  std::vector<std::string> gazetteer, carriers;
  for (const std::string& p : prefixes) {
    const bool entity_ends_a = rng.below(2) == 0;
    gazetteer.push_back(p + (entity_ends_a ? "a" : "b"));
    carriers.push_back(p + (entity_ends_a ? "b" : "a"));
  }

  data.embeddings = align::EmbeddingTable(word_dim, rng);
  for (std::size_t i = 0; i < gazetteer.size(); ++i) {
    nn::Vec v(word_dim);
    v[0] = i % 2 == 0 ? 1.0 : -1.0;  // type-correlated coordinate
    for (int k = 1; k < word_dim; ++k) v[k] = rng.uniform(-1, 1);
    data.embeddings.add(gazetteer[i], std::move(v));
    data.idf.set(gazetteer[i], 2.0 + rng.uniform());
  }

  for (int s = 0; s < 50; ++s) {
    const int n = 5 + static_cast<int>(rng.below(4));
    const int mention_slot = static_cast<int>(rng.below(n));
    AnnotatedDocument doc;
    for (int i = 0; i < n; ++i) {
      if (i > 0) doc.text += U' ';
      const std::size_t pick =
          rng.below(i == mention_slot ? gazetteer.size() : carriers.size());
      const std::string& w = i == mention_slot ? gazetteer[pick] : carriers[pick];
      const int start = static_cast<int>(doc.text.size());
      doc.text += decode_utf8(w);
      if (i == mention_slot) {
        doc.entities.push_back(
            {start, static_cast<int>(doc.text.size()), pick % 2 == 0 ? "ORG" : "PER"});
      }
    }
    data.texts.push_back(doc.text);
    data.docs.push_back(std::move(doc));
  }
  return data;
}

void pretrain_lms(const std::vector<CharSequence>& texts, int hidden, std::uint64_t seed,
                  lm::CharLM* fwd, lm::CharLM* bwd) {
  Rng rng(derive_seed(seed, 2));
  lm::CharEncoder enc = lm::CharEncoder::build(texts, 8, 4, rng);
  *fwd = lm::CharLM(lm::LMDirection::Forward, enc, hidden, rng);
  *bwd = lm::CharLM(lm::LMDirection::Backward, enc, hidden, rng);
  for (lm::CharLM* net : {fwd, bwd}) {
    nn::Optimizer opt(nn::OptimizerKind::Adam, 0.005);
    for (int epoch = 1; epoch <= 2; ++epoch) {
      lm::lm_train_epoch(*net, texts, opt, 0.0, 5.0, derive_seed(seed, 200 + epoch));
    }
  }
}

model::ModelConfig toy_config(bool full, int epochs, std::uint64_t seed) {
  model::ModelConfig cfg;
  cfg.entity_types = {"ORG", "PER"};
  cfg.alignment_mode = full ? "match" : "none";
  cfg.use_context = full;
  cfg.use_char_encoding = true;
  cfg.word_dim = 8;
  cfg.lm_hidden = 8;
  cfg.proj_dim = 4;
  cfg.char_dim = 8;
  cfg.type_dim = 4;
  cfg.hidden_dim = 12;
  cfg.dropout = 0.0;
  cfg.rep_dropout = 0.0;
  cfg.optimizer = "adam";
  cfg.lr = 0.01;
  cfg.clip_norm = 5.0;
  cfg.epochs = epochs;
  cfg.seed = seed;
  return cfg;
}

CriterionResult criterion7(std::ostream& det, const fs::path& dir,
                           std::vector<std::pair<std::string, std::string>>* artifacts) {
  const auto start = Clock::now();

  // full model overfits the base corpus
  const ToyData base = make_base_corpus(700);
  lm::CharLM base_fwd, base_bwd;
  pretrain_lms(base.texts, 8, 701, &base_fwd, &base_bwd);

  model::Resources res;
  res.embeddings = base.embeddings;
  res.idf = base.idf;
  res.lm_forward = base_fwd;
  res.lm_backward = base_bwd;
  model::Model full = model::Model::create(toy_config(true, 300, 7), std::move(res), base.docs);

  std::ostringstream log;
  const model::TrainResult base_result =
      model::train(full, base.docs, base.docs, &log,
                   [](const model::EpochLog& e) { return e.dev_f1 < 0.99; });
  det << "c7 base training\n" << log.str();
  det << "c7 base best_f1=" << format_double(base_result.best_f1)
      << " best_epoch=" << base_result.best_epoch << "\n";

  const std::string model_path = (dir / "overfit_model.json").string();
  full.save(model_path);
  artifacts->push_back({"c7_model", read_file(model_path)});

  const double base_elapsed = seconds_since(start);
  const bool base_ok = base_result.best_f1 >= 0.99 && base_elapsed < 300.0;

  // ablation ordering on the harder corpus at epoch 50
  const ToyData hard = make_hard_corpus(710);
  lm::CharLM hard_fwd, hard_bwd;
  pretrain_lms(hard.texts, 8, 711, &hard_fwd, &hard_bwd);

  model::Resources hres;
  hres.embeddings = hard.embeddings;
  hres.idf = hard.idf;
  hres.lm_forward = hard_fwd;
  hres.lm_backward = hard_bwd;
  model::Model hard_full =
      model::Model::create(toy_config(true, 50, 7), std::move(hres), hard.docs);
  std::ostringstream hlog;
  const model::TrainResult full_result = model::train(hard_full, hard.docs, hard.docs, &hlog);
  const double f1_full = full_result.epochs.back().dev_f1;

  model::Model hard_chars = model::Model::create(toy_config(false, 50, 7), {}, hard.docs);
  std::ostringstream clog;
  const model::TrainResult char_result = model::train(hard_chars, hard.docs, hard.docs, &clog);
  const double f1_chars = char_result.epochs.back().dev_f1;

  det << "c7 hard full\n" << hlog.str();
  det << "c7 hard chars\n" << clog.str();
  det << "c7 f1_full=" << format_double(f1_full) << " f1_chars=" << format_double(f1_chars)
      << "\n";

  const double elapsed = seconds_since(start);
  CriterionResult r;
  r.pass = base_ok && f1_full > f1_chars;
  std::ostringstream d;
  d << "base train F1 " << format_double(base_result.best_f1) << " at epoch "
    << base_result.best_epoch << "; hard variant at epoch 50: full "
    << format_double(f1_full) << " vs char-only " << format_double(f1_chars) << ", "
    << fmt_seconds(elapsed);
  r.detail = d.str();
  return r;
}

// ---- criterion 8: language model sanity on a periodic corpus ----

CriterionResult criterion8(std::ostream& det, const fs::path& dir,
                           std::vector<std::pair<std::string, std::string>>* artifacts) {
  const auto start = Clock::now();
  const CharSequence line = U"abcdefghijabcdefghij";  // 20 chars, period 10
  const std::vector<CharSequence> corpus(10000, line);

  Rng rng(derive_seed(808, 2));
  lm::CharEncoder enc = lm::CharEncoder::build(corpus, 8, 4, rng);
  const int classes = enc.vocab_size() + 1;

  lm::CharLM baseline(lm::LMDirection::Forward, enc, 16, rng);
  baseline.proj.weight.value.fill(0.0);
  baseline.proj.bias.value.fill(0.0);
  const double base_ppl = std::exp(baseline.nll(line) / static_cast<double>(line.size()));
  const bool baseline_ok = std::abs(base_ppl - static_cast<double>(classes)) < 1e-9;

  lm::CharLM net(lm::LMDirection::Forward, enc, 16, rng);
  nn::Optimizer opt(nn::OptimizerKind::Adam, 0.005);
  double ppl = 0.0;
  int epochs_used = 0;
  for (int epoch = 1; epoch <= 12; ++epoch) {
    const double mean =
        lm::lm_train_epoch(net, corpus, opt, 0.0, 5.0, derive_seed(808, 200 + epoch));
    ppl = std::exp(net.nll(line) / static_cast<double>(line.size()));
    epochs_used = epoch;
    det << "c8 epoch=" << epoch << " train_nll=" << format_double(mean)
        << " ppl=" << format_double(ppl) << "\n";
    if (ppl < 1.2) break;
  }
  const double corpus_ppl = std::exp(lm::lm_corpus_nll(net, corpus));
  det << "c8 corpus_ppl=" << format_double(corpus_ppl)
      << " baseline_ppl=" << format_double(base_ppl) << " classes=" << classes << "\n";

  const std::string lm_path = (dir / "periodic_lm.json").string();
  lm::save_lm(net, lm_path);
  artifacts->push_back({"c8_lm", read_file(lm_path)});

  const double elapsed = seconds_since(start);
  CriterionResult r;
  r.pass = corpus_ppl < 1.2 && baseline_ok && elapsed < 300.0;
  std::ostringstream d;
  d << "perplexity " << format_double(corpus_ppl) << " after " << epochs_used
    << " epochs; uniform baseline " << format_double(base_ppl) << " (classes " << classes
    << "), " << fmt_seconds(elapsed);
  r.detail = d.str();
  return r;
}

Report run_all(const fs::path& dir, std::ostream* progress) {
  fs::create_directories(dir);
  Report report;
  std::ostringstream det;

  struct Step {
    int number;
    std::function<CriterionResult()> run;
  };
  const Step steps[] = {
      {1, [&] { return criterion1(det); }},
      {2, [&] { return criterion2(det); }},
      {3, [&] { return criterion3(det); }},
      {4, [&] { return criterion4(det); }},
      {5, [&] { return criterion5(det); }},
      {6, [&] { return criterion6(det); }},
      {7, [&] { return criterion7(det, dir, &report.artifacts); }},
      {8, [&] { return criterion8(det, dir, &report.artifacts); }},
  };
  for (const Step& step : steps) {
    CriterionResult res = step.run();
    if (progress != nullptr) {
      *progress << "criterion " << step.number << ": " << (res.pass ? "PASS" : "FAIL")
                << " - " << res.detail << "\n";
      progress->flush();
    }
    report.results.push_back(std::move(res));
  }
  report.det = det.str();
  return report;
}

}  // namespace

int main() {
  const fs::path root =
      fs::temp_directory_path() / ("charcrf_acceptance_" + std::to_string(::getpid()));

  Report first = run_all(root / "run1", &std::cout);
  Report second = run_all(root / "run2", nullptr);

  const bool logs_match = first.det == second.det;
  bool artifacts_match = first.artifacts.size() == second.artifacts.size();
  std::string artifact_note;
  if (artifacts_match) {
    for (std::size_t i = 0; i < first.artifacts.size(); ++i) {
      if (first.artifacts[i] != second.artifacts[i]) {
        artifacts_match = false;
        artifact_note = first.artifacts[i].first + " differs";
        break;
      }
    }
  } else {
    artifact_note = "artifact count differs";
  }

  CriterionResult det_result;
  det_result.pass = logs_match && artifacts_match;
  std::ostringstream d;
  if (det_result.pass) {
    d << "rerun reproduced " << first.det.size() << " log bytes and "
      << first.artifacts.size() << " artifacts bitwise";
  } else {
    d << (logs_match ? "" : "determinism logs differ; ") << artifact_note;
  }
  det_result.detail = d.str();
  std::cout << "criterion 9: " << (det_result.pass ? "PASS" : "FAIL") << " - "
            << det_result.detail << "\n";

  std::error_code ec;
  fs::remove_all(root, ec);

  int failures = det_result.pass ? 0 : 1;
  for (const CriterionResult& r : first.results) failures += r.pass ? 0 : 1;
  return failures == 0 ? 0 : 1;
}
