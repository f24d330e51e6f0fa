#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "charcrf/rng.hpp"

namespace charcrf::nn {

using Vec = std::vector<double>;

// Row-major dense matrix of 64-bit floats. All training math is double
// precision so finite-difference checks at 1e-4 tolerance are meaningful.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// A value matrix with an accumulated gradient of identical shape. The name
// only feeds diagnostics.
struct Parameter {
  Matrix value;
  Matrix grad;
  std::string name;

  Parameter() = default;
  Parameter(int rows, int cols, std::string name = "")
      : value(rows, cols), grad(rows, cols), name(std::move(name)) {}

  void zero_grad() { grad.fill(0.0); }
};

using ParamRefs = std::vector<Parameter*>;

// Xavier-uniform over [-sqrt(6/(fan_in+fan_out)), +...]; fan counts taken
// from the matrix shape as (cols, rows).
void xavier_init(Matrix& m, Rng& rng);

// y = W x + b with W out×in, b out×1.
struct Linear {
  Parameter weight;
  Parameter bias;

  Linear() = default;
  Linear(int out, int in, Rng& rng, const std::string& name = "linear");

  int in_dim() const { return weight.value.cols(); }
  int out_dim() const { return weight.value.rows(); }

  Vec forward(const Vec& x) const;
  // Accumulates weight/bias gradients and returns dL/dx.
  Vec backward(const Vec& x, const Vec& dy);
  ParamRefs parameters();
};

// One-layer LSTM cell. Gates are stacked in the 4h dimension in the fixed
// order i, f, g, o; the forget-gate bias slice is initialized to 1.
struct LSTMParams {
  Parameter w_input;   // 4h × d
  Parameter w_hidden;  // 4h × h
  Parameter bias;      // 4h × 1
  int hidden = 0;
  int input = 0;

  LSTMParams() = default;
  LSTMParams(int hidden, int input, Rng& rng, const std::string& name = "lstm");
  ParamRefs parameters();
};

struct LSTMState {
  Vec h;
  Vec c;
};

LSTMState lstm_zero_state(int hidden);

// Activations cached by the forward step for the backward step.
struct LSTMCache {
  Vec x, h_prev, c_prev;
  Vec i, f, g, o;  // post-activation gates
  Vec c, tanh_c;
};

struct LSTMGrad {
  Vec dx, dh_prev, dc_prev;
};

// h_t entries are in (-1, 1); all shapes are validated.
LSTMState lstm_step(const LSTMParams& params, const Vec& x, const LSTMState& prev,
                    LSTMCache* cache = nullptr);
LSTMGrad lstm_step_backward(LSTMParams& params, const LSTMCache& cache,
                            const Vec& dh, const Vec& dc);

struct BiLSTMCache {
  std::vector<LSTMCache> fwd;
  std::vector<LSTMCache> bwd;
};

// Independent left-to-right and right-to-left passes; output t is
// [h_fwd_t ; h_bwd_t] of width 2h. Rejects empty input.
struct BiLSTM {
  LSTMParams fwd;
  LSTMParams bwd;

  BiLSTM() = default;
  BiLSTM(int hidden, int input, Rng& rng, const std::string& name = "bilstm");

  int out_dim() const { return 2 * fwd.hidden; }
  std::vector<Vec> forward(const std::vector<Vec>& inputs, BiLSTMCache* cache = nullptr) const;
  std::vector<Vec> backward(const BiLSTMCache& cache, const std::vector<Vec>& d_out);
  ParamRefs parameters();
};

// Max-shifted log Σ exp over a contiguous range; -inf for empty input.
double log_sum_exp(const double* v, int n);

// Inverted dropout: entries are 0 with probability p, else 1/(1-p).
Vec dropout_mask(double p, std::size_t len, Rng& rng);

// Global-norm clipping: rescales all gradients when the joint norm exceeds
// max_norm, otherwise leaves them untouched.
double global_grad_norm(std::span<Parameter* const> params);
void clip_gradients(std::span<Parameter* const> params, double max_norm);

enum class OptimizerKind { SGD, Adam };

OptimizerKind optimizer_kind_from_string(const std::string& s);
std::string to_string(OptimizerKind k);

// SGD or Adam (beta1 0.9, beta2 0.999, eps 1e-8, bias-corrected) over a fixed
// parameter list. step() applies the update and zeroes gradients; a non-finite
// gradient is rejected naming the parameter.
class Optimizer {
 public:
  Optimizer(OptimizerKind kind, double lr);

  void step(std::span<Parameter* const> params);
  double lr() const { return lr_; }
  void set_lr(double lr) { lr_ = lr; }
  OptimizerKind kind() const { return kind_; }
  long step_count() const { return step_count_; }

  // Checkpoint support: moments keyed by position in the parameter list.
  struct State {
    long step_count = 0;
    std::vector<Matrix> m;
    std::vector<Matrix> v;
  };
  State state() const {
    State s = state_;
    s.step_count = step_count_;
    return s;
  }
  void restore(State state);

 private:
  OptimizerKind kind_;
  double lr_;
  long step_count_ = 0;
  State state_;
};

// Central finite differences (default step 1e-5) against the gradients the
// callback accumulates. `loss(true)` must populate grads for the current
// values; `loss(false)` must only evaluate. Returns
// max |analytic - numeric| / max(|analytic|, |numeric|, 1e-8).
double grad_check(std::span<Parameter* const> params,
                  const std::function<double(bool)>& loss, double step = 1e-5);

}  // namespace charcrf::nn
