#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <tuple>
#include <vector>

#include "charcrf/error.hpp"
#include "charcrf/nn.hpp"
#include "charcrf/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace charcrf;

TEST_CASE("rng basics") {
  Rng a(42), b(42), c(43);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}

TEST_CASE("seeded shuffle is a deterministic permutation") {
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  std::vector<int> w = v;
  Rng r1(9), r2(9);
  shuffle(v, r1);
  shuffle(w, r2);
  CHECK(v == w);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(50);
  std::iota(expect.begin(), expect.end(), 0);
  CHECK(sorted == expect);
}

TEST_CASE("linear layer forward") {
  Rng rng(1);
  nn::Linear lin(3, 2, rng, "l");
  double w[6] = {1, 0, 0, 1, 1, 1};
  std::copy(w, w + 6, lin.weight.value.data());
  lin.bias.value(0, 0) = 0;
  lin.bias.value(1, 0) = 0;
  lin.bias.value(2, 0) = 1;
  const nn::Vec y = lin.forward({1, 2});
  REQUIRE(y.size() == 3);
  CHECK(y[0] == doctest::Approx(1).epsilon(1e-12));
  CHECK(y[1] == doctest::Approx(2).epsilon(1e-12));
  CHECK(y[2] == doctest::Approx(4).epsilon(1e-12));
  CHECK(lin.weight.name == "l.weight");
  CHECK(lin.bias.name == "l.bias");
}

TEST_CASE("linear layer gradient") {
  Rng rng(2);
  nn::Linear lin(4, 3, rng);
  const nn::Vec x = {0.3, -1.2, 0.8};
  auto loss = [&](bool accumulate) {
    const nn::Vec y = lin.forward(x);
    double s = 0.0;
    for (double v : y) s += v * v;
    if (accumulate) {
      nn::Vec dy(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) dy[i] = 2.0 * y[i];
      lin.backward(x, dy);
    }
    return s;
  };
  auto params = lin.parameters();
  CHECK(nn::grad_check(params, loss) < 1e-6);
}

TEST_CASE("lstm forget gate bias keeps state") {
  Rng rng(3);
  nn::LSTMParams p(1, 1, rng, "cell");
  p.w_input.value.fill(0.0);
  p.w_hidden.value.fill(0.0);
  p.bias.value.fill(0.0);
  p.bias.value(1, 0) = 1.0;  // forget slice of the i,f,g,o stack
  nn::LSTMState prev{{0.0}, {1.0}};
  const nn::LSTMState st = nn::lstm_step(p, {0.0}, prev);
  const double sig1 = 1.0 / (1.0 + std::exp(-1.0));
  CHECK(st.c[0] == doctest::Approx(sig1).epsilon(1e-9));  // ~0.7311
  CHECK(st.h[0] == doctest::Approx(0.5 * std::tanh(sig1)).epsilon(1e-9));
  CHECK(p.w_input.name == "cell.w_input");

  // fresh cells come with the forget bias slice at 1
  nn::LSTMParams q(4, 2, rng);
  for (int i = 0; i < 4; ++i) {
    CHECK(q.bias.value(4 + i, 0) == 1.0);
    CHECK(q.bias.value(i, 0) == 0.0);
  }
}

TEST_CASE("lstm bounded activations") {
  Rng rng(4);
  nn::LSTMParams p(5, 3, rng);
  nn::LSTMState st = nn::lstm_zero_state(5);
  for (int t = 0; t < 20; ++t) {
    nn::Vec x = {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    st = nn::lstm_step(p, x, st);
    for (double h : st.h) {
      CHECK(h > -1.0);
      CHECK(h < 1.0);
    }
  }
}

TEST_CASE("lstm step gradient") {
  Rng rng(5);
  nn::LSTMParams p(3, 2, rng);
  const nn::Vec x = {0.4, -0.9};
  const nn::LSTMState prev{{0.1, -0.2, 0.3}, {0.5, 0.0, -0.7}};
  auto loss = [&](bool accumulate) {
    nn::LSTMCache cache;
    const nn::LSTMState st = nn::lstm_step(p, x, prev, &cache);
    double s = 0.0;
    for (double v : st.h) s += v * v;
    for (double v : st.c) s += 0.5 * v * v;
    if (accumulate) {
      nn::Vec dh(3), dc(3);
      for (int i = 0; i < 3; ++i) {
        dh[i] = 2.0 * st.h[i];
        dc[i] = st.c[i];
      }
      nn::lstm_step_backward(p, cache, dh, dc);
    }
    return s;
  };
  auto params = p.parameters();
  CHECK(nn::grad_check(params, loss) < 1e-6);
}

TEST_CASE("bilstm output and gradient") {
  Rng rng(6);
  nn::BiLSTM net(3, 2, rng, "b");
  CHECK(net.out_dim() == 6);
  CHECK(net.fwd.w_input.name == "b.fwd.w_input");
  CHECK(net.bwd.bias.name == "b.bwd.bias");

  std::vector<nn::Vec> xs = {{0.1, 0.2}, {-0.4, 0.5}, {0.9, -0.3}, {0.0, 0.7}};
  const auto out = net.forward(xs);
  REQUIRE(out.size() == 4);
  CHECK(out[0].size() == 6);

  // the first half at position 0 only saw x_0; changing x_3 must not move it
  std::vector<nn::Vec> xs2 = xs;
  xs2[3] = {5.0, -5.0};
  const auto out2 = net.forward(xs2);
  for (int i = 0; i < 3; ++i) CHECK(out2[0][i] == out[0][i]);
  // while the backward half at position 0 does change
  bool moved = false;
  for (int i = 3; i < 6; ++i) moved = moved || out2[0][i] != out[0][i];
  CHECK(moved);

  CHECK_THROWS_AS(net.forward({}), Error);

  auto loss = [&](bool accumulate) {
    nn::BiLSTMCache cache;
    const auto ys = net.forward(xs, accumulate ? &cache : nullptr);
    double s = 0.0;
    for (const auto& y : ys) {
      for (double v : y) s += v * v;
    }
    if (accumulate) {
      std::vector<nn::Vec> dy(ys.size());
      for (std::size_t t = 0; t < ys.size(); ++t) {
        dy[t].resize(ys[t].size());
        for (std::size_t i = 0; i < ys[t].size(); ++i) dy[t][i] = 2.0 * ys[t][i];
      }
      net.backward(cache, dy);
    }
    return s;
  };
  auto params = net.parameters();
  CHECK(nn::grad_check(params, loss) < 1e-6);
}

TEST_CASE("log sum exp") {
  const double one[] = {3.5};
  CHECK(nn::log_sum_exp(one, 1) == doctest::Approx(3.5).epsilon(1e-15));
  const double big[] = {1000.0, 1000.0};
  CHECK(nn::log_sum_exp(big, 2) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-12));
  const double mixed[] = {-1e9, 0.0};
  CHECK(nn::log_sum_exp(mixed, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isinf(nn::log_sum_exp(nullptr, 0)));
  CHECK(nn::log_sum_exp(nullptr, 0) < 0);
}

TEST_CASE("inverted dropout statistics") {
  Rng rng(8);
  const std::size_t n = 1000000;
  const nn::Vec mask = nn::dropout_mask(0.5, n, rng);
  std::size_t kept = 0;
  for (double m : mask) {
    CHECK((m == 0.0 || m == 2.0));
    if (m != 0.0) ++kept;
  }
  const double frac = static_cast<double>(kept) / n;
  CHECK(frac > 0.49);
  CHECK(frac < 0.51);

  const nn::Vec none = nn::dropout_mask(0.0, 10, rng);
  for (double m : none) CHECK(m == 1.0);
}

TEST_CASE("gradient clipping") {
  nn::Parameter a(2, 2, "a"), b(1, 2, "b");
  a.grad.fill(3.0);
  b.grad.fill(4.0);
  // joint norm = sqrt(4*9 + 2*16) = sqrt(68)
  nn::ParamRefs params{&a, &b};
  CHECK(nn::global_grad_norm(params) == doctest::Approx(std::sqrt(68.0)).epsilon(1e-12));
  nn::clip_gradients(params, 2.0);
  CHECK(nn::global_grad_norm(params) == doctest::Approx(2.0).epsilon(1e-9));
  const double ratio = a.grad(0, 0) / b.grad(0, 0);
  CHECK(ratio == doctest::Approx(3.0 / 4.0).epsilon(1e-12));

  a.grad.fill(0.1);
  b.grad.fill(0.1);
  nn::clip_gradients(params, 2.0);
  CHECK(a.grad(0, 0) == 0.1);  // under the limit: untouched
}

TEST_CASE("sgd converges on a quadratic") {
  nn::Parameter w(1, 1, "w");
  w.value(0, 0) = -4.0;
  nn::ParamRefs params{&w};
  nn::Optimizer opt(nn::OptimizerKind::SGD, 0.1);
  for (int i = 0; i < 500; ++i) {
    w.grad(0, 0) = 2.0 * (w.value(0, 0) - 3.0);
    opt.step(params);
  }
  CHECK(std::abs(w.value(0, 0) - 3.0) < 1e-6);
  CHECK(w.grad(0, 0) == 0.0);  // step zeroes gradients
  CHECK(opt.step_count() == 500);
}

TEST_CASE("adam first step moves by roughly lr times sign") {
  nn::Parameter w(1, 2, "w");
  w.value(0, 0) = 1.0;
  w.value(0, 1) = -2.0;
  nn::ParamRefs params{&w};
  nn::Optimizer opt(nn::OptimizerKind::Adam, 0.01);
  w.grad(0, 0) = 0.3;
  w.grad(0, 1) = -700.0;
  opt.step(params);
  CHECK(w.value(0, 0) == doctest::Approx(1.0 - 0.01).epsilon(1e-3));
  CHECK(w.value(0, 1) == doctest::Approx(-2.0 + 0.01).epsilon(1e-3));
}

TEST_CASE("adam converges on a quadratic") {
  nn::Parameter w(1, 1, "w");
  w.value(0, 0) = 10.0;
  nn::ParamRefs params{&w};
  nn::Optimizer opt(nn::OptimizerKind::Adam, 0.5);
  for (int i = 0; i < 2000; ++i) {
    w.grad(0, 0) = 2.0 * (w.value(0, 0) - 3.0);
    opt.step(params);
  }
  CHECK(std::abs(w.value(0, 0) - 3.0) < 1e-4);
}

TEST_CASE("optimizer state round trip resumes identically") {
  auto run = [](int total, int checkpoint_at) {
    Rng rng(11);
    nn::Parameter w(2, 3, "w");
    for (std::size_t i = 0; i < w.value.size(); ++i) w.value.data()[i] = rng.uniform(-1, 1);
    nn::ParamRefs params{&w};
    nn::Optimizer opt(nn::OptimizerKind::Adam, 0.05);
    nn::Optimizer::State snap;
    nn::Matrix snap_values;
    Rng grads(99);
    for (int s = 0; s < total; ++s) {
      if (s == checkpoint_at) {
        snap = opt.state();
        snap_values = w.value;
      }
      for (std::size_t i = 0; i < w.grad.size(); ++i) w.grad.data()[i] = grads.uniform(-1, 1);
      opt.step(params);
    }
    return std::tuple{w.value, snap, snap_values};
  };

  auto [direct, snap, snap_values] = run(10, 6);

  // resume: restore the snapshot and replay steps 6..9 with the same grads
  nn::Parameter w(2, 3, "w");
  w.value = snap_values;
  nn::ParamRefs params{&w};
  nn::Optimizer opt(nn::OptimizerKind::Adam, 0.05);
  opt.restore(snap);
  CHECK(opt.step_count() == 6);
  Rng grads(99);
  for (int s = 0; s < 10; ++s) {
    nn::Matrix g(2, 3);
    for (std::size_t i = 0; i < g.size(); ++i) g.data()[i] = grads.uniform(-1, 1);
    if (s >= 6) {
      w.grad = g;
      opt.step(params);
    }
  }
  CHECK(w.value == direct);  // bitwise
}

TEST_CASE("optimizer rejects non-finite gradients") {
  nn::Parameter w(1, 1, "late.bias");
  nn::ParamRefs params{&w};
  nn::Optimizer opt(nn::OptimizerKind::SGD, 0.1);
  w.grad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    opt.step(params);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == errkind::train_failed);
    CHECK(std::string(e.what()).find("late.bias") != std::string::npos);
  }
}

TEST_CASE("optimizer kind strings") {
  CHECK(nn::optimizer_kind_from_string("sgd") == nn::OptimizerKind::SGD);
  CHECK(nn::optimizer_kind_from_string("adam") == nn::OptimizerKind::Adam);
  CHECK(nn::to_string(nn::OptimizerKind::Adam) == "adam");
  CHECK_THROWS_AS(nn::optimizer_kind_from_string("momentum"), Error);
}

TEST_CASE("xavier bounds") {
  Rng rng(12);
  nn::Matrix m(20, 30);
  nn::xavier_init(m, rng);
  const double bound = std::sqrt(6.0 / (20 + 30));
  bool any_large = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(std::abs(m.data()[i]) <= bound);
    any_large = any_large || std::abs(m.data()[i]) > 0.5 * bound;
  }
  CHECK(any_large);
}
