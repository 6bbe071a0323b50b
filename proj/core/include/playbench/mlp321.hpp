#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "playbench/dataset.hpp"
#include "playbench/trace.hpp"

/// 3-2-1 network trained without derivatives.
///
///   n1 = x1*w1 + x2*w2 (+ b1)
///   n2 = x3*w3         (+ b2)
///   n3 = n1*w4 + n2*w5 (+ b3),   output = [n3 >= 0]
///
/// Updates, all read from the pre-update state:
///   w1 += lr*e*w4*x1   w2 += lr*e*w4*x2   w3 += lr*e*w5*x3
///   w4 += lr*e*n1      w5 += lr*e*n2
///   b1 += lr*e*w4      b2 += lr*e*w5      b3 += lr*e        (bias mode)
///
/// Without biases the input (0,0,0) always yields n3 = 0 and therefore output
/// 1 with a zero update, so no table that wants 0 there can be learned.
namespace playbench::mlp321 {

enum class Mode { paper_faithful, bias_augmented };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view name) noexcept;

struct State {
  std::array<double, 5> w{};
  std::array<double, 3> b{};  // always zero in paper_faithful mode
  double lr = 0.1;
  Mode mode = Mode::paper_faithful;

  bool biased() const noexcept { return mode == Mode::bias_augmented; }

  friend constexpr bool operator==(const State&, const State&) = default;
};

struct Eval {
  double n1 = 0.0;
  double n2 = 0.0;
  double n3_raw = 0.0;
  int output = 0;
  int error = 0;
};

/// Throws Error(invalid_input) unless `inputs` has exactly three entries.
[[nodiscard]] Eval forward(const State& state, std::span<const int> inputs);

[[nodiscard]] constexpr int compute_error(int desired, int output) noexcept { return desired - output; }

/// `eval` must be forward(state, inputs); every right-hand side uses it and the
/// old weights, and the new values are committed together.
[[nodiscard]] State update_weights(const State& state, std::span<const int> inputs, const Eval& eval, int error);

[[nodiscard]] std::pair<State, IterationRecord> present_sample(const State& state, const GateSample& sample);

[[nodiscard]] TrainOutcome<State> train(State state, const TruthTable& table, std::size_t max_epochs);

/// True when `state` classifies every row of `table`.
[[nodiscard]] bool classifies(const State& state, const TruthTable& table);

/// Exhaustive search of grid^5 (grid^8 with biases) for a state classifying
/// the whole table; returns the first witness in lexicographic grid order.
[[nodiscard]] std::optional<State> representable(const TruthTable& table, Mode mode, std::span<const double> grid);
[[nodiscard]] std::optional<State> representable(Gate gate, Mode mode, std::span<const double> grid);

}  // namespace playbench::mlp321
