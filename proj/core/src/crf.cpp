#include "charcrf/crf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "charcrf/error.hpp"

namespace charcrf::crf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(errkind::invalid_argument, msg);
}

using nn::log_sum_exp;

}  // namespace

Params::Params(int num_labels, int input_dim, Rng& rng)
    : emission(num_labels, input_dim, "crf.emission"),
      transition(num_labels + 1, num_labels + 1, "crf.transition"),
      num_labels(num_labels),
      input_dim(input_dim) {
  nn::xavier_init(emission.value, rng);
}

EmissionScores score_emissions(const Params& params, const std::vector<nn::Vec>& z) {
  const int T = static_cast<int>(z.size());
  const int L = params.num_labels;
  EmissionScores scores(T, L);
  for (int t = 0; t < T; ++t) {
    require(static_cast<int>(z[t].size()) == params.input_dim,
            "emission input width " + std::to_string(z[t].size()) + " vs expected " +
                std::to_string(params.input_dim));
    for (int y = 0; y < L; ++y) {
      const double* w = params.emission.value.row(y);
      double acc = 0.0;
      for (int c = 0; c < params.input_dim; ++c) acc += w[c] * z[t][c];
      scores(t, y) = acc;
    }
  }
  return scores;
}

std::vector<nn::Vec> score_emissions_backward(Params& params,
                                              const std::vector<nn::Vec>& z,
                                              const nn::Matrix& d_emissions) {
  const int T = static_cast<int>(z.size());
  const int L = params.num_labels;
  require(d_emissions.rows() == T && d_emissions.cols() == L,
          "emission gradient shape mismatch");
  std::vector<nn::Vec> dz(T, nn::Vec(params.input_dim, 0.0));
  for (int t = 0; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      const double g = d_emissions(t, y);
      if (g == 0.0) continue;
      double* wg = params.emission.grad.row(y);
      const double* w = params.emission.value.row(y);
      for (int c = 0; c < params.input_dim; ++c) {
        wg[c] += g * z[t][c];
        dz[t][c] += g * w[c];
      }
    }
  }
  return dz;
}

TransitionMask build_iobes_mask(const TagSet& tags) {
  const int L = tags.label_count();
  const int B = L;  // boundary index: START as row, END as column
  TransitionMask mask;
  mask.num_labels = L;
  mask.allowed.assign(static_cast<std::size_t>(L + 1) * (L + 1), 0);

  auto opener = [&](int y) {
    const auto p = tags.position_of(y);
    return p == LabelPosition::Outside || p == LabelPosition::Begin ||
           p == LabelPosition::Single;
  };
  auto closer = [&](int y) {
    const auto p = tags.position_of(y);
    return p == LabelPosition::Outside || p == LabelPosition::End ||
           p == LabelPosition::Single;
  };

  for (int y = 0; y < L; ++y) {
    if (opener(y)) mask.set(B, y, true);
    if (closer(y)) mask.set(y, B, true);
  }
  for (int from = 0; from < L; ++from) {
    const auto pf = tags.position_of(from);
    const int tf = tags.type_of(from);
    for (int to = 0; to < L; ++to) {
      if (pf == LabelPosition::Begin || pf == LabelPosition::Inside) {
        // Mid-entity: only continue or close the same type.
        if (to == tags.inside_label(tf) || to == tags.end_label(tf)) {
          mask.set(from, to, true);
        }
      } else {
        if (opener(to)) mask.set(from, to, true);
      }
    }
  }
  return mask;
}

double log_partition(const EmissionScores& emissions, const Params& params) {
  const int T = emissions.rows();
  const int L = params.num_labels;
  require(T >= 1, "log_partition: empty sequence");
  require(emissions.cols() == L, "emission width vs label count mismatch");
  const int B = params.boundary_index();
  const auto& b = params.transition.value;

  nn::Vec alpha(L), next(L), work(L);
  for (int y = 0; y < L; ++y) alpha[y] = b(B, y) + emissions(0, y);
  for (int t = 1; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      for (int yp = 0; yp < L; ++yp) work[yp] = alpha[yp] + b(yp, y);
      next[y] = log_sum_exp(work.data(), L) + emissions(t, y);
    }
    std::swap(alpha, next);
  }
  for (int y = 0; y < L; ++y) alpha[y] += b(y, B);
  return log_sum_exp(alpha.data(), L);
}

double sequence_score(const EmissionScores& emissions, const Params& params,
                      const LabelSequence& labels) {
  const int T = emissions.rows();
  const int L = params.num_labels;
  require(static_cast<int>(labels.size()) == T,
          "label sequence length " + std::to_string(labels.size()) +
              " vs emissions rows " + std::to_string(T));
  const int B = params.boundary_index();
  const auto& b = params.transition.value;

  double score = 0.0;
  int prev = B;
  for (int t = 0; t < T; ++t) {
    const int y = labels[t];
    require(y >= 0 && y < L, "label index out of range");
    score += b(prev, y) + emissions(t, y);
    prev = y;
  }
  score += b(prev, B);
  return score;
}

namespace {

// Shared forward-backward tables in log space.
struct ForwardBackward {
  nn::Matrix alpha;  // T × L, includes emissions
  nn::Matrix beta;   // T × L, includes the END transition
  double log_z = 0.0;
};

ForwardBackward run_forward_backward(const EmissionScores& emissions,
                                     const Params& params) {
  const int T = emissions.rows();
  const int L = params.num_labels;
  const int B = params.boundary_index();
  const auto& b = params.transition.value;

  ForwardBackward fb{nn::Matrix(T, L), nn::Matrix(T, L), 0.0};
  nn::Vec work(L);

  for (int y = 0; y < L; ++y) fb.alpha(0, y) = b(B, y) + emissions(0, y);
  for (int t = 1; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      for (int yp = 0; yp < L; ++yp) work[yp] = fb.alpha(t - 1, yp) + b(yp, y);
      fb.alpha(t, y) = log_sum_exp(work.data(), L) + emissions(t, y);
    }
  }

  for (int y = 0; y < L; ++y) fb.beta(T - 1, y) = b(y, B);
  for (int t = T - 2; t >= 0; --t) {
    for (int y = 0; y < L; ++y) {
      for (int yn = 0; yn < L; ++yn) {
        work[yn] = b(y, yn) + emissions(t + 1, yn) + fb.beta(t + 1, yn);
      }
      fb.beta(t, y) = log_sum_exp(work.data(), L);
    }
  }

  for (int y = 0; y < L; ++y) work[y] = fb.alpha(T - 1, y) + b(y, B);
  fb.log_z = log_sum_exp(work.data(), L);
  return fb;
}

}  // namespace

nn::Matrix label_marginals(const EmissionScores& emissions, const Params& params) {
  require(emissions.rows() >= 1, "label_marginals: empty sequence");
  const ForwardBackward fb = run_forward_backward(emissions, params);
  const int T = emissions.rows();
  const int L = params.num_labels;
  nn::Matrix marg(T, L);
  for (int t = 0; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      marg(t, y) = std::exp(fb.alpha(t, y) + fb.beta(t, y) - fb.log_z);
    }
  }
  return marg;
}

NllResult nll(const EmissionScores& emissions, const Params& params,
              const LabelSequence& labels) {
  const int T = emissions.rows();
  const int L = params.num_labels;
  require(T >= 1, "nll: empty sequence");
  require(static_cast<int>(labels.size()) == T,
          "label sequence length " + std::to_string(labels.size()) +
              " vs emissions rows " + std::to_string(T));
  const int B = params.boundary_index();
  const auto& b = params.transition.value;

  const ForwardBackward fb = run_forward_backward(emissions, params);
  NllResult out;
  out.loss = fb.log_z - sequence_score(emissions, params, labels);
  out.d_emissions = nn::Matrix(T, L);
  out.d_transitions = nn::Matrix(L + 1, L + 1);

  for (int t = 0; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      const double marg = std::exp(fb.alpha(t, y) + fb.beta(t, y) - fb.log_z);
      out.d_emissions(t, y) = marg - (labels[t] == y ? 1.0 : 0.0);
    }
  }

  // START and END rows from unary marginals.
  for (int y = 0; y < L; ++y) {
    const double m_first = std::exp(fb.alpha(0, y) + fb.beta(0, y) - fb.log_z);
    out.d_transitions(B, y) = m_first - (labels[0] == y ? 1.0 : 0.0);
    const double m_last = std::exp(fb.alpha(T - 1, y) + fb.beta(T - 1, y) - fb.log_z);
    out.d_transitions(y, B) = m_last - (labels[T - 1] == y ? 1.0 : 0.0);
  }
  // Interior pairwise marginals.
  for (int t = 1; t < T; ++t) {
    for (int yp = 0; yp < L; ++yp) {
      for (int y = 0; y < L; ++y) {
        const double pair = std::exp(fb.alpha(t - 1, yp) + b(yp, y) +
                                     emissions(t, y) + fb.beta(t, y) - fb.log_z);
        const double ind = (labels[t - 1] == yp && labels[t] == y) ? 1.0 : 0.0;
        out.d_transitions(yp, y) += pair - ind;
      }
    }
  }
  return out;
}

std::pair<LabelSequence, double> viterbi(const EmissionScores& emissions,
                                         const Params& params,
                                         const TransitionMask* mask) {
  const int T = emissions.rows();
  const int L = params.num_labels;
  require(T >= 1, "viterbi: empty sequence");
  require(emissions.cols() == L, "emission width vs label count mismatch");
  const int B = params.boundary_index();
  const auto& b = params.transition.value;
  auto allowed = [&](int from, int to) { return !mask || mask->allows(from, to); };

  nn::Vec delta(L), next(L);
  nn::Matrix backptr(T, L);
  for (int y = 0; y < L; ++y) {
    delta[y] = allowed(B, y) ? b(B, y) + emissions(0, y) : kNegInf;
  }
  for (int t = 1; t < T; ++t) {
    for (int y = 0; y < L; ++y) {
      double best = kNegInf;
      int best_prev = -1;
      for (int yp = 0; yp < L; ++yp) {
        if (!allowed(yp, y) || delta[yp] == kNegInf) continue;
        const double s = delta[yp] + b(yp, y);
        if (s > best) {  // strict: first (lowest) index wins ties
          best = s;
          best_prev = yp;
        }
      }
      next[y] = best == kNegInf ? kNegInf : best + emissions(t, y);
      backptr(t, y) = best_prev;
    }
    std::swap(delta, next);
  }

  double best = kNegInf;
  int best_last = -1;
  for (int y = 0; y < L; ++y) {
    if (!allowed(y, B) || delta[y] == kNegInf) continue;
    const double s = delta[y] + b(y, B);
    if (s > best) {
      best = s;
      best_last = y;
    }
  }
  require(best_last >= 0, "viterbi: no path satisfies the transition mask");

  LabelSequence labels(T);
  labels[T - 1] = best_last;
  for (int t = T - 1; t > 0; --t) {
    labels[t - 1] = static_cast<int>(backptr(t, labels[t]));
  }
  return {labels, best};
}

}  // namespace charcrf::crf
