#include <cmath>

#include "bridge.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "playbench/error.hpp"
#include "playbench/mlp321.hpp"

using namespace playbench;
using mlp321::Mode;
using mlp321::State;

namespace {

State halves(Mode mode = Mode::paper_faithful, double lr = 0.1) {
  State s;
  s.w = {0.5, 0.5, 0.5, 0.5, 0.5};
  s.lr = lr;
  s.mode = mode;
  return s;
}

State random_state(Rng64& rng, Mode mode) {
  State s;
  s.mode = mode;
  for (auto& w : s.w) {
    const auto d = uniform_signed_unit(rng);
    w = d.value * 3.0;
    rng = d.rng;
  }
  if (mode == Mode::bias_augmented) {
    for (auto& b : s.b) {
      const auto d = uniform_signed_unit(rng);
      b = d.value;
      rng = d.rng;
    }
  }
  const auto lr = uniform_signed_unit(rng);
  rng = lr.rng;
  s.lr = 0.05 + (lr.value + 1.0);
  return s;
}

// Wrong on purpose: commits each weight before computing the next, so W4 sees
// a recomputed N1.
State sequential_update(State s, std::span<const int> x, int error) {
  s.w[0] = s.w[0] + s.lr * error * s.w[3] * x[0];
  s.w[1] = s.w[1] + s.lr * error * s.w[3] * x[1];
  s.w[2] = s.w[2] + s.lr * error * s.w[4] * x[2];
  const double n1 = x[0] * s.w[0] + x[1] * s.w[1];
  const double n2 = x[2] * s.w[2];
  s.w[3] = s.w[3] + s.lr * error * n1;
  s.w[4] = s.w[4] + s.lr * error * n2;
  return s;
}

const std::vector<int> k000{0, 0, 0}, k100{1, 0, 0}, k111{1, 1, 1};

}  // namespace

TEST_CASE("forward") {
  auto e = mlp321::forward(halves(), k111);
  CHECK(e.n1 == 1.0);
  CHECK(e.n2 == 0.5);
  CHECK(e.n3_raw == 0.75);
  CHECK(e.output == 1);

  Rng64 rng(1);
  for (int i = 0; i < 20; ++i) {
    e = mlp321::forward(random_state(rng, Mode::paper_faithful), k000);
    CHECK(e.n1 == 0.0);
    CHECK(e.n2 == 0.0);
    CHECK(e.n3_raw == 0.0);
    CHECK(e.output == 1);
  }

  State biased = halves(Mode::bias_augmented);
  biased.b[2] = -1.0;
  e = mlp321::forward(biased, k100);
  CHECK(e.n3_raw == -0.75);
  CHECK(e.output == 0);

  try {
    (void)mlp321::forward(halves(), std::vector<int>{1, 1});
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::invalid_input);
  }
}

TEST_CASE("paper mode ignores stored biases") {
  State s = halves();
  s.b = {5.0, 5.0, -100.0};
  CHECK(mlp321::forward(s, k100).n3_raw == 0.25);
  const auto next = mlp321::update_weights(s, k100, mlp321::forward(s, k100), -1);
  CHECK(next.b == s.b);
}

TEST_CASE("update_weights") {
  const State s = halves();
  const auto e100 = mlp321::forward(s, k100);
  CHECK(mlp321::update_weights(s, k100, e100, 0) == s);

  const auto next = mlp321::update_weights(s, k100, e100, -1);
  const std::array<double, 5> want{0.45, 0.5, 0.5, 0.45, 0.5};
  for (std::size_t i = 0; i < 5; ++i) CHECK(next.w[i] == doctest::Approx(want[i]).epsilon(1e-15));
  CHECK(next.w[0] == 0.5 + 0.1 * -1 * 0.5 * 1);

  for (int err : {-1, 1}) CHECK(mlp321::update_weights(s, k000, mlp321::forward(s, k000), err) == s);
}

TEST_CASE("bias-mode update rule") {
  State s = halves(Mode::bias_augmented, 0.2);
  s.b = {0.1, -0.2, 0.3};
  s.w[3] = 0.7;
  s.w[4] = -0.4;
  const auto e = mlp321::forward(s, k111);
  const auto next = mlp321::update_weights(s, k111, e, -1);
  CHECK(next.b[0] == 0.1 + 0.2 * -1 * 0.7);
  CHECK(next.b[1] == -0.2 + 0.2 * -1 * -0.4);
  CHECK(next.b[2] == 0.3 + 0.2 * -1);
  CHECK(next.w[3] == 0.7 + 0.2 * -1 * e.n1);
}

TEST_CASE("update is simultaneous: W4 uses the pre-update N1") {
  const State s = halves();
  const auto eval = mlp321::forward(s, k100);
  const auto correct = mlp321::update_weights(s, k100, eval, -1);
  const auto wrong = sequential_update(s, k100, -1);
  CHECK(correct.w[0] == wrong.w[0]);
  CHECK(correct.w[3] == 0.5 - 0.1 * 0.5);
  CHECK(wrong.w[3] == 0.5 - 0.1 * 0.45);
  CHECK(correct.w[3] != wrong.w[3]);
}

TEST_CASE("present_sample") {
  const auto and3 = truth_table(Gate::and3);

  auto [s0, r0] = mlp321::present_sample(halves(), and3.samples[0]);
  CHECK(r0.inputs == k000);
  CHECK(r0.output == 1);
  CHECK(r0.error == -1);
  CHECK(s0 == halves());

  auto [s7, r7] = mlp321::present_sample(halves(), and3.samples[7]);
  CHECK(r7.error == 0);
  CHECK(s7 == halves());

  auto [s4, r4] = mlp321::present_sample(halves(), and3.samples[4]);
  CHECK(r4.inputs == k100);
  CHECK(r4.net == std::vector<double>{0.5, 0.0, 0.25});
  CHECK(r4.error == -1);
  CHECK(r4.weights == std::vector<double>(s4.w.begin(), s4.w.end()));
  CHECK(r4.weights[0] == doctest::Approx(0.45));
  CHECK(r4.weights[3] == doctest::Approx(0.45));
  CHECK(r4.biases.empty());

  auto [sb, rb] = mlp321::present_sample(halves(Mode::bias_augmented), and3.samples[4]);
  CHECK(rb.biases.size() == 3);
}

TEST_CASE("train") {
  SUBCASE("OR3 with the zero row never converges in paper mode") {
    Rng64 rng(4);
    for (int i = 0; i < 5; ++i) {
      const auto out = mlp321::train(random_state(rng, Mode::paper_faithful), truth_table(Gate::or3, true), 1000);
      CHECK_FALSE(out.converged);
      CHECK(out.epochs_used == 1000);
    }
  }
  SUBCASE("OR3 without the zero row is already solved by all-0.5") {
    const auto out = mlp321::train(halves(), truth_table(Gate::or3, false), 10);
    CHECK(out.converged);
    CHECK(out.epochs_used == 1);
    CHECK(out.records.size() == 7);
    for (const auto& r : out.records) CHECK(r.output == 1);
  }
  SUBCASE("engine agrees with the oracle replay in both modes") {
    for (bool bias : {false, true}) {
      for (std::string gate : {"and3", "or3"}) {
        oracle::ReplayConfig cfg;
        cfg.model = "mlp321";
        cfg.gate = gate;
        cfg.bias = bias;
        cfg.lr = 0.1;
        cfg.init = "uniform";
        cfg.seed = 21;
        cfg.max_epochs = 300;
        const auto replay = oracle::replay(cfg);

        const Mode mode = bias ? Mode::bias_augmented : Mode::paper_faithful;
        std::uint64_t s = 21;
        State init;
        init.mode = mode;
        init.lr = 0.1;
        for (auto& w : init.w) w = oracle::signed_unit(s);
        if (bias) {
          for (auto& b : init.b) b = oracle::signed_unit(s);
        }
        const auto out = mlp321::train(init, truth_table(*parse_gate(gate)), 300);
        CHECK(bit_identical(out.records, bridge::to_records(replay)));
        CHECK(out.converged == replay.converged);
      }
    }
  }
}

TEST_CASE("zero-input degeneracy in paper mode") {
  Rng64 rng(50);
  for (int i = 0; i < 50; ++i) {
    const State s = random_state(rng, Mode::paper_faithful);
    const auto e = mlp321::forward(s, k000);
    CHECK(e.output == 1);
    CHECK(mlp321::update_weights(s, k000, e, mlp321::compute_error(0, e.output)) == s);
  }
}

TEST_CASE("representable") {
  const std::vector<double> grid{-1, -0.5, 0, 0.5, 1};

  SUBCASE("AND3 has no paper-mode classifier on the grid") {
    CHECK_FALSE(mlp321::representable(Gate::and3, Mode::paper_faithful, grid).has_value());
    CHECK_FALSE(oracle::grid_search("and3", false, true, grid).found);
  }
  SUBCASE("AND3 stays unrepresentable on other grids") {
    for (const std::vector<double>& g : {std::vector<double>{-2, 2}, std::vector<double>{-3, -1, 0, 1, 3},
                                         std::vector<double>{-0.25, 0.1, 0.75, 4}}) {
      CHECK_FALSE(mlp321::representable(Gate::and3, Mode::paper_faithful, g).has_value());
    }
    // Without the zero row the contradiction still holds: (1,1,1) must fire
    // although (1,1,0) and (0,0,1) must not.
    CHECK_FALSE(mlp321::representable(truth_table(Gate::and3, false), Mode::paper_faithful, grid).has_value());
  }
  SUBCASE("OR3 without the zero row: witness exists and all-0.5 works") {
    const auto table = truth_table(Gate::or3, false);
    const auto w = mlp321::representable(table, Mode::paper_faithful, grid);
    REQUIRE(w.has_value());
    CHECK(mlp321::classifies(*w, table));
    CHECK(mlp321::classifies(halves(), table));
    const auto o = oracle::grid_search("or3", false, false, grid);
    REQUIRE(o.found);
    CHECK(std::vector<double>(w->w.begin(), w->w.end()) == o.witness);
  }
  SUBCASE("AND3 is representable with biases on a coarse grid") {
    const std::vector<double> coarse{-3, -1, 0, 1};
    const auto w = mlp321::representable(Gate::and3, Mode::bias_augmented, coarse);
    REQUIRE(w.has_value());
    CHECK(mlp321::classifies(*w, truth_table(Gate::and3)));
    const auto o = oracle::grid_search("and3", true, true, coarse);
    REQUIRE(o.found);
    std::vector<double> got(w->w.begin(), w->w.end());
    got.insert(got.end(), w->b.begin(), w->b.end());
    CHECK(got == o.witness);
  }
  SUBCASE("empty or non-finite grids are rejected") {
    CHECK_THROWS_AS((void)mlp321::representable(Gate::and3, Mode::paper_faithful, std::vector<double>{}), Error);
    CHECK_THROWS_AS(
        (void)mlp321::representable(Gate::and3, Mode::paper_faithful, std::vector<double>{0.0, std::nan("")}),
        Error);
  }
}

TEST_CASE("mode names") {
  CHECK(mlp321::parse_mode("paper") == Mode::paper_faithful);
  CHECK(mlp321::parse_mode("bias") == Mode::bias_augmented);
  CHECK_FALSE(mlp321::parse_mode("sigmoid").has_value());
}
