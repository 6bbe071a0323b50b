#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "playbench/dataset.hpp"
#include "playbench/trace.hpp"

/// Two-input single neuron with a hard threshold at 1 and no bias:
///   n1 = x1*w1 + x2*w2,  y1 = [n1 >= 1],  error = desired - y1,
///   w_i <- w_i + x_i*lr*error.
namespace playbench::perceptron {

struct State {
  double w1 = 0.0;
  double w2 = 0.0;
  double lr = 0.5;

  friend constexpr bool operator==(const State&, const State&) = default;
};

struct Eval {
  double n1 = 0.0;
  int y1 = 0;
  int error = 0;  // unset (0) when produced by forward()
};

/// Throws Error(invalid_input) unless `inputs` has exactly two entries.
[[nodiscard]] Eval forward(const State& state, std::span<const int> inputs);

[[nodiscard]] constexpr int compute_error(int desired, int y1) noexcept { return desired - y1; }

[[nodiscard]] State update_weights(const State& state, std::span<const int> inputs, int error);

// forward -> error -> update; step/epoch/sample are left for the caller.
[[nodiscard]] std::pair<State, IterationRecord> present_sample(const State& state, const GateSample& sample);

[[nodiscard]] TrainOutcome<State> train(State state, const TruthTable& table, std::size_t max_epochs);

}  // namespace playbench::perceptron
