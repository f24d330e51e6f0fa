#pragma once

#include <utility>
#include <vector>

#include "charcrf/nn.hpp"
#include "charcrf/text.hpp"

namespace charcrf::crf {

// Emission weights W (row y scores label y against z_t) and transition
// biases b over the label set augmented with one extra index that acts as
// START when read as a predecessor and END when read as a successor.
// b[*][start_index] and b[end_index][*] are never read.
struct Params {
  nn::Parameter emission;    // L × input_dim
  nn::Parameter transition;  // (L+1) × (L+1)
  int num_labels = 0;
  int input_dim = 0;

  Params() = default;
  Params(int num_labels, int input_dim, Rng& rng);

  int boundary_index() const { return num_labels; }
  nn::ParamRefs parameters() { return {&emission, &transition}; }
};

// T × L matrix of W_y · z_t scores.
using EmissionScores = nn::Matrix;

EmissionScores score_emissions(const Params& params, const std::vector<nn::Vec>& z);
// Accumulates emission-weight gradients and returns dL/dz.
std::vector<nn::Vec> score_emissions_backward(Params& params,
                                              const std::vector<nn::Vec>& z,
                                              const nn::Matrix& d_emissions);

// Allowed-transition matrix over the augmented label set.
struct TransitionMask {
  int num_labels = 0;
  std::vector<std::uint8_t> allowed;  // (L+1)²

  bool allows(int from, int to) const {
    return allowed[static_cast<std::size_t>(from) * (num_labels + 1) + to] != 0;
  }
  void set(int from, int to, bool v) {
    allowed[static_cast<std::size_t>(from) * (num_labels + 1) + to] = v ? 1 : 0;
  }
};

// Encodes the IOBES grammar: START can open with B-*, S-* or O; B-k and I-k
// continue only into I-k or E-k; E-*, S-* and O connect to any opener or END.
TransitionMask build_iobes_mask(const TagSet& tags);

// log Σ_Y exp(score(Y)) over all L^T label sequences, by the forward
// algorithm in log space. O(T·L²).
double log_partition(const EmissionScores& emissions, const Params& params);

// Σ_t emissions(t, y_t) + b[y_{t-1}][y_t] with START at y_0, plus the END
// transition from y_T.
double sequence_score(const EmissionScores& emissions, const Params& params,
                      const LabelSequence& labels);

struct NllResult {
  double loss = 0.0;            // log_partition - sequence_score, >= 0
  nn::Matrix d_emissions;       // T × L: marginal - indicator
  nn::Matrix d_transitions;     // (L+1)²: pairwise marginal - indicator
};

// Exact negative log-likelihood and its gradients via forward-backward.
NllResult nll(const EmissionScores& emissions, const Params& params,
              const LabelSequence& labels);

// Per-position label marginals (T × L rows summing to 1), for diagnostics
// and tests.
nn::Matrix label_marginals(const EmissionScores& emissions, const Params& params);

// Max-scoring sequence (restricted to the mask when given) and its score.
// Score ties break toward the lower label index at every backpointer
// decision, including the final one.
std::pair<LabelSequence, double> viterbi(const EmissionScores& emissions,
                                         const Params& params,
                                         const TransitionMask* mask = nullptr);

}  // namespace charcrf::crf
