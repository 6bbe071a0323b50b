#include <cmath>

#include "bridge.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "playbench/error.hpp"
#include "playbench/perceptron.hpp"

using namespace playbench;
using perceptron::State;

namespace {

const std::vector<int> k00{0, 0}, k01{0, 1}, k10{1, 0}, k11{1, 1};

State random_state(Rng64& rng, double lr) {
  const auto a = uniform_signed_unit(rng);
  const auto b = uniform_signed_unit(a.rng);
  rng = b.rng;
  return {a.value, b.value, lr};
}

}  // namespace

TEST_CASE("forward") {
  auto e = perceptron::forward({0, 0, 0.5}, k11);
  CHECK(e.n1 == 0.0);
  CHECK(e.y1 == 0);

  e = perceptron::forward({0.6, 0.6, 0.5}, k11);
  CHECK(e.n1 == 0.6 + 0.6);
  CHECK(e.n1 == doctest::Approx(1.2));
  CHECK(e.y1 == 1);

  e = perceptron::forward({0.5, 0.5, 0.5}, k01);
  CHECK(e.n1 == 0.5);
  CHECK(e.y1 == 0);

  CHECK(perceptron::forward({0.5, 0.5, 0.5}, k11).y1 == 1);  // n1 == 1 fires (>= 1)

  try {
    (void)perceptron::forward({}, std::vector<int>{1, 0, 1});
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::invalid_input);
  }
}

TEST_CASE("compute_error") {
  CHECK(perceptron::compute_error(1, 1) == 0);
  CHECK(perceptron::compute_error(1, 0) == 1);
  CHECK(perceptron::compute_error(0, 1) == -1);
  CHECK(perceptron::compute_error(0, 0) == 0);
}

TEST_CASE("update_weights") {
  const State s{0.3, -0.7, 0.25};
  CHECK(perceptron::update_weights(s, k11, 0) == s);
  CHECK(perceptron::update_weights({0, 0, 0.5}, k11, 1) == State{0.5, 0.5, 0.5});
  CHECK(perceptron::update_weights(s, k00, 1) == s);
  CHECK(perceptron::update_weights(s, k00, -1) == s);
  CHECK(perceptron::update_weights(s, k10, -1) == State{0.3 - 0.25, -0.7, 0.25});
}

TEST_CASE("present_sample") {
  const auto and2 = truth_table(Gate::and2);

  auto [s0, r0] = perceptron::present_sample({0, 0, 0.5}, and2.samples[0]);
  CHECK(r0.desired == 0);
  CHECK(r0.output == 0);
  CHECK(r0.error == 0);
  CHECK(s0 == State{0, 0, 0.5});

  auto [s1, r1] = perceptron::present_sample({0, 0, 0.5}, and2.samples[3]);
  CHECK(r1.net == std::vector<double>{0.0});
  CHECK(r1.error == 1);
  CHECK(s1 == State{0.5, 0.5, 0.5});
  CHECK(r1.weights == std::vector<double>{0.5, 0.5});

  for (const auto& sample : and2.samples) {
    auto [s2, r2] = perceptron::present_sample({0.5, 0.5, 0.5}, sample);
    CHECK(r2.error == 0);
    CHECK(s2 == State{0.5, 0.5, 0.5});
  }
}

TEST_CASE("train AND2 from zeros with lr 0.5: pinned hand trace") {
  const auto out = perceptron::train({0, 0, 0.5}, truth_table(Gate::and2), 100);

  oracle::ReplayConfig cfg;
  cfg.gate = "and2";
  cfg.lr = 0.5;
  cfg.max_epochs = 100;
  const auto replay = oracle::replay(cfg);
  CHECK(bit_identical(out.records, bridge::to_records(replay)));

  // Epoch 1 changes the weights once, at (1,1). Epoch 2 is already clean:
  // n1(1,1) = 0.5 + 0.5 = 1 reaches the threshold.
  CHECK(out.converged);
  CHECK(out.epochs_used == 2);
  CHECK(replay.epochs_used == 2);
  CHECK(out.state == State{0.5, 0.5, 0.5});
  REQUIRE(out.records.size() == 8);

  struct Row {
    int x1, x2;
    double n1;
    int y, e;
    double w1, w2;
  };
  const Row pinned[8] = {
      {0, 0, 0.0, 0, 0, 0.0, 0.0}, {0, 1, 0.0, 0, 0, 0.0, 0.0}, {1, 0, 0.0, 0, 0, 0.0, 0.0},
      {1, 1, 0.0, 0, 1, 0.5, 0.5}, {0, 0, 0.0, 0, 0, 0.5, 0.5}, {0, 1, 0.5, 0, 0, 0.5, 0.5},
      {1, 0, 0.5, 0, 0, 0.5, 0.5}, {1, 1, 1.0, 1, 0, 0.5, 0.5},
  };
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& r = out.records[i];
    CAPTURE(i);
    CHECK(r.step == i);
    CHECK(r.epoch == i / 4);
    CHECK(r.sample == i % 4);
    CHECK(r.inputs == std::vector<int>{pinned[i].x1, pinned[i].x2});
    CHECK(r.net[0] == pinned[i].n1);
    CHECK(r.output == pinned[i].y);
    CHECK(r.error == pinned[i].e);
    CHECK(r.weights == std::vector<double>{pinned[i].w1, pinned[i].w2});
  }
}

TEST_CASE("train OR2 from zeros with lr 0.5 reaches (1,1) exactly") {
  const auto out = perceptron::train({0, 0, 0.5}, truth_table(Gate::or2), 100);
  oracle::ReplayConfig cfg;
  cfg.gate = "or2";
  const auto replay = oracle::replay(cfg);
  CHECK(bit_identical(out.records, bridge::to_records(replay)));
  CHECK(out.converged);
  CHECK(out.epochs_used == 3);
  CHECK(out.state.w1 == 1.0);
  CHECK(out.state.w2 == 1.0);
}

TEST_CASE("train stops short of convergence when the epoch cap is hit") {
  const auto out = perceptron::train({0, 0, 0.5}, truth_table(Gate::and2), 1);
  CHECK_FALSE(out.converged);
  CHECK(out.epochs_used == 1);
  CHECK(out.records.size() == 4);
}

TEST_CASE("property: error 0 is a fixpoint and (0,0) never moves the weights") {
  Rng64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const State s = random_state(rng, 0.1 + 0.01 * (i % 50));
    CHECK(perceptron::update_weights(s, k01, 0) == s);
    CHECK(perceptron::update_weights(s, k11, 0) == s);
    for (int e : {-1, 1}) CHECK(perceptron::update_weights(s, k00, e) == s);
    CHECK(perceptron::forward(s, k00).y1 == 0);
  }
}

TEST_CASE("property: converged runs classify the whole table") {
  Rng64 rng(12);
  for (int i = 0; i < 100; ++i) {
    for (Gate g : {Gate::and2, Gate::or2}) {
      const auto table = truth_table(g);
      const auto out = perceptron::train(random_state(rng, 0.1), table, 500);
      if (!out.converged) continue;
      for (const auto& s : table.samples) REQUIRE(perceptron::forward(out.state, s.inputs).y1 == s.desired);
    }
  }
}

TEST_CASE("property: identical inputs give bit-identical traces") {
  Rng64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const State s = random_state(rng, 0.5);
    const auto a = perceptron::train(s, truth_table(Gate::or2), 50);
    const auto b = perceptron::train(s, truth_table(Gate::or2), 50);
    CHECK(bit_identical(a.records, b.records));
  }
}

TEST_CASE("empirical convergence over seeded uniform inits") {
  // Seeds 0..99, weights = first two uniform_signed_unit draws. Every run
  // converges within 18 epochs except AND2 at lr 1.0: there each update moves
  // a weight by a whole unit, so the fractional parts never change, and AND2
  // needs them to sum to at least 1.
  constexpr std::size_t kPinnedMaxEpochs = 18;
  std::size_t worst = 0;
  int stuck = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (double lr : {0.1, 0.5, 1.0}) {
      for (Gate g : {Gate::and2, Gate::or2}) {
        Rng64 rng(seed);
        const State init = random_state(rng, lr);
        const auto out = perceptron::train(init, truth_table(g), 200);
        if (g == Gate::and2 && lr == 1.0) {
          const double f1 = init.w1 - std::floor(init.w1);
          const double f2 = init.w2 - std::floor(init.w2);
          CHECK(out.converged == (f1 + f2 >= 1.0));
          stuck += out.converged ? 0 : 1;
          continue;
        }
        REQUIRE(out.converged);
        worst = std::max(worst, out.epochs_used);
      }
    }
  }
  CHECK(worst == kPinnedMaxEpochs);
  CHECK(stuck == 56);
}
