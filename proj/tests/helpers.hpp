#pragma once

// Shared test oracles: deliberately naive second implementations that the
// optimized library code is checked against, plus random instance generators.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "charcrf/align.hpp"
#include "charcrf/crf.hpp"
#include "charcrf/nn.hpp"
#include "charcrf/rng.hpp"
#include "charcrf/text.hpp"
#include "charcrf/unicode.hpp"

namespace testutil {

using namespace charcrf;

// ---- CRF brute force ----

inline double seq_score(const nn::Matrix& em, const crf::Params& p,
                        const std::vector<int>& seq) {
  const int T = em.rows();
  const int B = p.boundary_index();
  double s = 0.0;
  int prev = B;
  for (int t = 0; t < T; ++t) {
    s += p.transition.value(prev, seq[t]) + em(t, seq[t]);
    prev = seq[t];
  }
  return s + p.transition.value(prev, B);
}

inline bool mask_allows(const crf::TransitionMask* mask, const std::vector<int>& seq, int B) {
  if (mask == nullptr) return true;
  int prev = B;
  for (int y : seq) {
    if (!mask->allows(prev, y)) return false;
    prev = y;
  }
  return mask->allows(prev, B);
}

// Compares y_T first, then y_{T-1}, ...: the order the backward traceback
// with lowest-index tie-breaks induces.
inline bool reversed_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct BruteForce {
  double log_partition = 0.0;
  std::vector<int> best;
  double best_score = 0.0;
};

inline BruteForce brute_force(const nn::Matrix& em, const crf::Params& p,
                              const crf::TransitionMask* mask = nullptr) {
  const int T = em.rows();
  const int L = em.cols();
  const int B = p.boundary_index();
  BruteForce out;
  std::vector<double> scores;
  std::vector<int> seq(T, 0);
  bool have_best = false;
  while (true) {
    if (mask_allows(mask, seq, B)) {
      const double s = seq_score(em, p, seq);
      scores.push_back(s);
      if (!have_best || s > out.best_score ||
          (s == out.best_score && reversed_less(seq, out.best))) {
        out.best = seq;
        out.best_score = s;
        have_best = true;
      }
    }
    int t = T - 1;
    while (t >= 0 && seq[t] == L - 1) seq[t--] = 0;
    if (t < 0) break;
    ++seq[t];
  }
  out.log_partition = nn::log_sum_exp(scores.data(), static_cast<int>(scores.size()));
  return out;
}

inline nn::Matrix random_matrix(int rows, int cols, Rng& rng, double lo = -1.0,
                                double hi = 1.0) {
  nn::Matrix m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(lo, hi);
  return m;
}

// Random CRF instance; quantize to multiples of 0.25 to manufacture exact
// score ties.
inline crf::Params random_crf(int num_labels, int T, nn::Matrix& emissions, Rng& rng,
                              bool quantized = false) {
  crf::Params p;
  p.num_labels = num_labels;
  p.input_dim = 1;
  p.emission = nn::Parameter(num_labels, 1, "crf.emission");
  p.transition = nn::Parameter(num_labels + 1, num_labels + 1, "crf.transition");
  emissions = random_matrix(T, num_labels, rng);
  for (std::size_t i = 0; i < p.transition.value.size(); ++i) {
    p.transition.value.data()[i] = rng.uniform(-1.0, 1.0);
  }
  if (quantized) {
    auto q = [](double v) { return std::round(v * 4.0) / 4.0; };
    for (std::size_t i = 0; i < emissions.size(); ++i) emissions.data()[i] = q(emissions.data()[i]);
    for (std::size_t i = 0; i < p.transition.value.size(); ++i) {
      p.transition.value.data()[i] = q(p.transition.value.data()[i]);
    }
  }
  return p;
}

// ---- alignment oracles ----

// O(T^2 * dict) substring scan under the same per-character normalization.
inline std::vector<align::Match> naive_find_matches(const CharSequence& text,
                                                    const align::IDFDictionary& dict,
                                                    bool lowercase) {
  auto fold = [&](const CharSequence& s) {
    std::u32string f = nfkc_fold(s);
    if (lowercase) {
      for (char32_t& c : f) c = to_lower(c);
    }
    return f;
  };
  std::vector<align::Match> out;
  const int T = static_cast<int>(text.size());
  for (const auto& [word, idf] : dict.entries) {
    const std::u32string w = fold(decode_utf8(word));
    if (w.empty()) continue;
    for (int s = 0; s < T; ++s) {
      for (int e = s + 1; e <= T; ++e) {
        if (fold(text.substr(s, e - s)) == w) {
          out.push_back({s, e, word, idf});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const align::Match& a, const align::Match& b) {
    return std::tie(a.start, a.end, a.word) < std::tie(b.start, b.end, b.word);
  });
  return out;
}

// The match priority order: higher idf, then longer, then earlier, then
// lexicographically smaller word.
inline bool higher_priority(const align::Match& a, const align::Match& b) {
  if (a.idf != b.idf) return a.idf > b.idf;
  const int la = a.end - a.start;
  const int lb = b.end - b.start;
  if (la != lb) return la > lb;
  if (a.start != b.start) return a.start < b.start;
  return a.word < b.word;
}

// Per-character argmax over covering matches; the definitional form of match
// selection.
inline align::Alignment naive_select(const std::vector<align::Match>& matches,
                                     const CharSequence& text) {
  align::Alignment out(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    const align::Match* best = nullptr;
    for (const align::Match& m : matches) {
      if (m.start <= static_cast<int>(t) && static_cast<int>(t) < m.end) {
        if (best == nullptr || higher_priority(m, *best)) best = &m;
      }
    }
    if (best != nullptr) {
      out[t] = {align::AlignKind::Word, best->word};
    } else if (is_whitespace(text[t])) {
      out[t] = {align::AlignKind::Whitespace, ""};
    } else {
      out[t] = {align::AlignKind::Unknown, ""};
    }
  }
  return out;
}

// ---- generators ----

inline CharSequence random_text(Rng& rng, int len, const std::u32string& alphabet) {
  CharSequence out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) out.push_back(alphabet[rng.below(alphabet.size())]);
  return out;
}

inline std::string random_word(Rng& rng, int min_len, int max_len) {
  static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  const int len = min_len + static_cast<int>(rng.below(max_len - min_len + 1));
  std::string w;
  for (int i = 0; i < len; ++i) w.push_back(letters[rng.below(letters.size())]);
  return w;
}

// Random document over a small alphabet with non-overlapping sorted spans.
inline AnnotatedDocument random_document(Rng& rng, const std::vector<std::string>& types) {
  const int T = 1 + static_cast<int>(rng.below(40));
  AnnotatedDocument doc;
  doc.text = random_text(rng, T, U"ab c.X9");
  int pos = 0;
  while (pos < T) {
    if (rng.uniform() < 0.3) {
      const int len = 1 + static_cast<int>(rng.below(4));
      const int end = std::min(T, pos + len);
      doc.entities.push_back({pos, end, types[rng.below(types.size())]});
      pos = end + 1;
    } else {
      ++pos;
    }
  }
  return doc;
}

}  // namespace testutil
