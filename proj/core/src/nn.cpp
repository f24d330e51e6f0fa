#include "charcrf/nn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charcrf/error.hpp"

namespace charcrf::nn {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(errkind::invalid_argument, msg);
}

std::string shape_str(int r, int c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

void xavier_init(Matrix& m, Rng& rng) {
  const double limit = std::sqrt(6.0 / (m.rows() + m.cols()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    m.data()[i] = rng.uniform(-limit, limit);
  }
}

Linear::Linear(int out, int in, Rng& rng, const std::string& name)
    : weight(out, in, name + ".weight"), bias(out, 1, name + ".bias") {
  xavier_init(weight.value, rng);
}

Vec Linear::forward(const Vec& x) const {
  require(static_cast<int>(x.size()) == in_dim(),
          "linear " + weight.name + ": input size " + std::to_string(x.size()) +
              " vs weight " + shape_str(out_dim(), in_dim()));
  Vec y(out_dim());
  for (int r = 0; r < out_dim(); ++r) {
    const double* w = weight.value.row(r);
    double acc = bias.value(r, 0);
    for (int c = 0; c < in_dim(); ++c) acc += w[c] * x[c];
    y[r] = acc;
  }
  return y;
}

Vec Linear::backward(const Vec& x, const Vec& dy) {
  require(static_cast<int>(dy.size()) == out_dim(),
          "linear " + weight.name + ": output grad size " + std::to_string(dy.size()) +
              " vs weight " + shape_str(out_dim(), in_dim()));
  Vec dx(in_dim(), 0.0);
  for (int r = 0; r < out_dim(); ++r) {
    const double g = dy[r];
    bias.grad(r, 0) += g;
    double* wg = weight.grad.row(r);
    const double* w = weight.value.row(r);
    for (int c = 0; c < in_dim(); ++c) {
      wg[c] += g * x[c];
      dx[c] += g * w[c];
    }
  }
  return dx;
}

ParamRefs Linear::parameters() { return {&weight, &bias}; }

LSTMParams::LSTMParams(int hidden, int input, Rng& rng, const std::string& name)
    : w_input(4 * hidden, input, name + ".w_input"),
      w_hidden(4 * hidden, hidden, name + ".w_hidden"),
      bias(4 * hidden, 1, name + ".bias"),
      hidden(hidden),
      input(input) {
  xavier_init(w_input.value, rng);
  xavier_init(w_hidden.value, rng);
  for (int i = hidden; i < 2 * hidden; ++i) bias.value(i, 0) = 1.0;  // forget slice
}

ParamRefs LSTMParams::parameters() { return {&w_input, &w_hidden, &bias}; }

LSTMState lstm_zero_state(int hidden) {
  return {Vec(hidden, 0.0), Vec(hidden, 0.0)};
}

LSTMState lstm_step(const LSTMParams& params, const Vec& x, const LSTMState& prev,
                    LSTMCache* cache) {
  const int h = params.hidden;
  require(static_cast<int>(x.size()) == params.input,
          "lstm " + params.bias.name + ": input size " + std::to_string(x.size()) +
              " vs expected " + std::to_string(params.input));
  require(static_cast<int>(prev.h.size()) == h && static_cast<int>(prev.c.size()) == h,
          "lstm " + params.bias.name + ": state size mismatch");

  Vec pre(4 * h);
  for (int r = 0; r < 4 * h; ++r) {
    const double* wi = params.w_input.value.row(r);
    const double* wh = params.w_hidden.value.row(r);
    double acc = params.bias.value(r, 0);
    for (int c = 0; c < params.input; ++c) acc += wi[c] * x[c];
    for (int c = 0; c < h; ++c) acc += wh[c] * prev.h[c];
    pre[r] = acc;
  }

  LSTMState out{Vec(h), Vec(h)};
  Vec gi(h), gf(h), gg(h), go(h), tanh_c(h);
  for (int k = 0; k < h; ++k) {
    gi[k] = sigmoid(pre[k]);
    gf[k] = sigmoid(pre[h + k]);
    gg[k] = std::tanh(pre[2 * h + k]);
    go[k] = sigmoid(pre[3 * h + k]);
    out.c[k] = gf[k] * prev.c[k] + gi[k] * gg[k];
    tanh_c[k] = std::tanh(out.c[k]);
    out.h[k] = go[k] * tanh_c[k];
  }

  if (cache) {
    cache->x = x;
    cache->h_prev = prev.h;
    cache->c_prev = prev.c;
    cache->i = std::move(gi);
    cache->f = std::move(gf);
    cache->g = std::move(gg);
    cache->o = std::move(go);
    cache->c = out.c;
    cache->tanh_c = std::move(tanh_c);
  }
  return out;
}

LSTMGrad lstm_step_backward(LSTMParams& params, const LSTMCache& cache,
                            const Vec& dh, const Vec& dc) {
  const int h = params.hidden;
  const int d = params.input;
  require(static_cast<int>(dh.size()) == h && static_cast<int>(dc.size()) == h,
          "lstm " + params.bias.name + ": gradient size mismatch");

  Vec dpre(4 * h);
  LSTMGrad out{Vec(d, 0.0), Vec(h, 0.0), Vec(h, 0.0)};
  for (int k = 0; k < h; ++k) {
    const double dck = dc[k] + dh[k] * cache.o[k] * (1.0 - cache.tanh_c[k] * cache.tanh_c[k]);
    const double di = dck * cache.g[k];
    const double df = dck * cache.c_prev[k];
    const double dg = dck * cache.i[k];
    const double do_ = dh[k] * cache.tanh_c[k];
    dpre[k] = di * cache.i[k] * (1.0 - cache.i[k]);
    dpre[h + k] = df * cache.f[k] * (1.0 - cache.f[k]);
    dpre[2 * h + k] = dg * (1.0 - cache.g[k] * cache.g[k]);
    dpre[3 * h + k] = do_ * cache.o[k] * (1.0 - cache.o[k]);
    out.dc_prev[k] = dck * cache.f[k];
  }

  for (int r = 0; r < 4 * h; ++r) {
    const double g = dpre[r];
    params.bias.grad(r, 0) += g;
    double* wig = params.w_input.grad.row(r);
    const double* wi = params.w_input.value.row(r);
    for (int c = 0; c < d; ++c) {
      wig[c] += g * cache.x[c];
      out.dx[c] += g * wi[c];
    }
    double* whg = params.w_hidden.grad.row(r);
    const double* wh = params.w_hidden.value.row(r);
    for (int c = 0; c < h; ++c) {
      whg[c] += g * cache.h_prev[c];
      out.dh_prev[c] += g * wh[c];
    }
  }
  return out;
}

BiLSTM::BiLSTM(int hidden, int input, Rng& rng, const std::string& name)
    : fwd(hidden, input, rng, name + ".fwd"), bwd(hidden, input, rng, name + ".bwd") {}

std::vector<Vec> BiLSTM::forward(const std::vector<Vec>& inputs, BiLSTMCache* cache) const {
  const std::size_t T = inputs.size();
  require(T > 0, "bilstm: empty input sequence");
  const int h = fwd.hidden;

  if (cache) {
    cache->fwd.resize(T);
    cache->bwd.resize(T);
  }

  std::vector<Vec> out(T, Vec(2 * h));
  LSTMState state = lstm_zero_state(h);
  for (std::size_t t = 0; t < T; ++t) {
    state = lstm_step(fwd, inputs[t], state, cache ? &cache->fwd[t] : nullptr);
    std::copy(state.h.begin(), state.h.end(), out[t].begin());
  }
  state = lstm_zero_state(h);
  for (std::size_t t = T; t-- > 0;) {
    state = lstm_step(bwd, inputs[t], state, cache ? &cache->bwd[t] : nullptr);
    std::copy(state.h.begin(), state.h.end(), out[t].begin() + h);
  }
  return out;
}

std::vector<Vec> BiLSTM::backward(const BiLSTMCache& cache, const std::vector<Vec>& d_out) {
  const std::size_t T = cache.fwd.size();
  require(d_out.size() == T, "bilstm: output gradient length mismatch");
  const int h = fwd.hidden;
  const int d = fwd.input;

  std::vector<Vec> d_inputs(T, Vec(d, 0.0));
  Vec dh(h);
  Vec dc(h, 0.0);
  Vec dh_carry(h, 0.0);
  // Forward direction unrolls back from the last step.
  for (std::size_t t = T; t-- > 0;) {
    for (int k = 0; k < h; ++k) dh[k] = d_out[t][k] + dh_carry[k];
    LSTMGrad g = lstm_step_backward(fwd, cache.fwd[t], dh, dc);
    d_inputs[t] = std::move(g.dx);
    dh_carry = std::move(g.dh_prev);
    dc = std::move(g.dc_prev);
  }
  // Backward direction unrolls from the first step.
  std::fill(dc.begin(), dc.end(), 0.0);
  std::fill(dh_carry.begin(), dh_carry.end(), 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    for (int k = 0; k < h; ++k) dh[k] = d_out[t][h + k] + dh_carry[k];
    LSTMGrad g = lstm_step_backward(bwd, cache.bwd[t], dh, dc);
    for (int c = 0; c < d; ++c) d_inputs[t][c] += g.dx[c];
    dh_carry = std::move(g.dh_prev);
    dc = std::move(g.dc_prev);
  }
  return d_inputs;
}

ParamRefs BiLSTM::parameters() {
  ParamRefs out = fwd.parameters();
  ParamRefs b = bwd.parameters();
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double log_sum_exp(const double* v, int n) {
  double mx = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) mx = std::max(mx, v[i]);
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::exp(v[i] - mx);
  return mx + std::log(s);
}

Vec dropout_mask(double p, std::size_t len, Rng& rng) {
  require(p >= 0.0 && p < 1.0, "dropout probability must be in [0, 1)");
  Vec mask(len);
  const double keep = 1.0 / (1.0 - p);
  for (std::size_t i = 0; i < len; ++i) {
    mask[i] = rng.uniform() < p ? 0.0 : keep;
  }
  return mask;
}

double global_grad_norm(std::span<Parameter* const> params) {
  double sq = 0.0;
  for (const Parameter* p : params) {
    for (std::size_t i = 0; i < p->grad.size(); ++i) {
      const double g = p->grad.data()[i];
      sq += g * g;
    }
  }
  return std::sqrt(sq);
}

void clip_gradients(std::span<Parameter* const> params, double max_norm) {
  const double norm = global_grad_norm(params);
  if (norm <= max_norm || norm == 0.0) return;
  const double scale = max_norm / norm;
  for (Parameter* p : params) {
    for (std::size_t i = 0; i < p->grad.size(); ++i) p->grad.data()[i] *= scale;
  }
}

OptimizerKind optimizer_kind_from_string(const std::string& s) {
  if (s == "sgd") return OptimizerKind::SGD;
  if (s == "adam") return OptimizerKind::Adam;
  throw Error(errkind::invalid_argument, "unknown optimizer: " + s);
}

std::string to_string(OptimizerKind k) {
  return k == OptimizerKind::SGD ? "sgd" : "adam";
}

Optimizer::Optimizer(OptimizerKind kind, double lr) : kind_(kind), lr_(lr) {}

void Optimizer::step(std::span<Parameter* const> params) {
  for (const Parameter* p : params) {
    for (std::size_t i = 0; i < p->grad.size(); ++i) {
      if (!std::isfinite(p->grad.data()[i])) {
        throw Error(errkind::train_failed,
                    "non-finite gradient in parameter " +
                        (p->name.empty() ? std::string("<unnamed>") : p->name));
      }
    }
  }

  if (kind_ == OptimizerKind::SGD) {
    for (Parameter* p : params) {
      for (std::size_t i = 0; i < p->value.size(); ++i) {
        p->value.data()[i] -= lr_ * p->grad.data()[i];
      }
      p->zero_grad();
    }
    ++step_count_;
    return;
  }

  constexpr double beta1 = 0.9;
  constexpr double beta2 = 0.999;
  constexpr double eps = 1e-8;
  if (state_.m.empty()) {
    for (const Parameter* p : params) {
      state_.m.emplace_back(p->value.rows(), p->value.cols());
      state_.v.emplace_back(p->value.rows(), p->value.cols());
    }
  }
  if (state_.m.size() != params.size()) {
    throw Error(errkind::invalid_argument, "optimizer state does not match parameter list");
  }
  ++step_count_;
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(step_count_));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(step_count_));
  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    Parameter* p = params[pi];
    Matrix& m = state_.m[pi];
    Matrix& v = state_.v[pi];
    for (std::size_t i = 0; i < p->value.size(); ++i) {
      const double g = p->grad.data()[i];
      m.data()[i] = beta1 * m.data()[i] + (1.0 - beta1) * g;
      v.data()[i] = beta2 * v.data()[i] + (1.0 - beta2) * g * g;
      const double mhat = m.data()[i] / bc1;
      const double vhat = v.data()[i] / bc2;
      p->value.data()[i] -= lr_ * mhat / (std::sqrt(vhat) + eps);
    }
    p->zero_grad();
  }
}

void Optimizer::restore(State state) {
  step_count_ = state.step_count;
  state_ = std::move(state);
}

double grad_check(std::span<Parameter* const> params,
                  const std::function<double(bool)>& loss, double step) {
  for (Parameter* p : params) p->zero_grad();
  const double base = loss(true);
  if (!std::isfinite(base)) {
    throw Error(errkind::invalid_argument, "grad_check: non-finite loss");
  }

  double max_err = 0.0;
  for (Parameter* p : params) {
    for (std::size_t i = 0; i < p->value.size(); ++i) {
      const double saved = p->value.data()[i];
      p->value.data()[i] = saved + step;
      const double up = loss(false);
      p->value.data()[i] = saved - step;
      const double down = loss(false);
      p->value.data()[i] = saved;
      if (!std::isfinite(up) || !std::isfinite(down)) {
        throw Error(errkind::invalid_argument, "grad_check: non-finite loss");
      }
      const double numeric = (up - down) / (2.0 * step);
      const double analytic = p->grad.data()[i];
      const double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
      max_err = std::max(max_err, std::abs(analytic - numeric) / denom);
    }
  }
  for (Parameter* p : params) p->zero_grad();
  return max_err;
}

}  // namespace charcrf::nn
