#include "playbench/mlp321.hpp"

#include <cmath>
#include <string>

#include "playbench/error.hpp"
#include "playbench/training.hpp"

namespace playbench::mlp321 {
namespace {

void require_arity(std::span<const int> inputs) {
  if (inputs.size() != 3) {
    throw Error(Errc::invalid_input, "3-2-1 network expects 3 inputs, got " + std::to_string(inputs.size()));
  }
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::paper_faithful ? "paper" : "bias";
}

std::optional<Mode> parse_mode(std::string_view name) noexcept {
  if (name == "paper") return Mode::paper_faithful;
  if (name == "bias") return Mode::bias_augmented;
  return std::nullopt;
}

Eval forward(const State& s, std::span<const int> x) {
  require_arity(x);
  Eval e;
  e.n1 = x[0] * s.w[0] + x[1] * s.w[1];
  e.n2 = x[2] * s.w[2];
  if (s.biased()) {
    e.n1 += s.b[0];
    e.n2 += s.b[1];
  }
  e.n3_raw = e.n1 * s.w[3] + e.n2 * s.w[4];
  if (s.biased()) e.n3_raw += s.b[2];
  e.output = e.n3_raw >= 0.0 ? 1 : 0;
  return e;
}

State update_weights(const State& s, std::span<const int> x, const Eval& eval, int error) {
  require_arity(x);
  const double lr = s.lr;
  State next = s;
  next.w[0] = s.w[0] + lr * error * s.w[3] * x[0];
  next.w[1] = s.w[1] + lr * error * s.w[3] * x[1];
  next.w[2] = s.w[2] + lr * error * s.w[4] * x[2];
  next.w[3] = s.w[3] + lr * error * eval.n1;
  next.w[4] = s.w[4] + lr * error * eval.n2;
  if (s.biased()) {
    next.b[0] = s.b[0] + lr * error * s.w[3];
    next.b[1] = s.b[1] + lr * error * s.w[4];
    next.b[2] = s.b[2] + lr * error;
  }
  return next;
}

std::pair<State, IterationRecord> present_sample(const State& state, const GateSample& sample) {
  const Eval eval = forward(state, sample.inputs);
  const int error = compute_error(sample.desired, eval.output);
  State next = update_weights(state, sample.inputs, eval, error);

  IterationRecord record;
  record.inputs = sample.inputs;
  record.desired = sample.desired;
  record.net = {eval.n1, eval.n2, eval.n3_raw};
  record.output = eval.output;
  record.error = error;
  record.weights.assign(next.w.begin(), next.w.end());
  if (next.biased()) record.biases.assign(next.b.begin(), next.b.end());
  return {next, std::move(record)};
}

TrainOutcome<State> train(State state, const TruthTable& table, std::size_t max_epochs) {
  return detail::train_epochs(state, table, max_epochs,
                              [](const State& s, const GateSample& g) { return present_sample(s, g); });
}

bool classifies(const State& state, const TruthTable& table) {
  for (const auto& sample : table.samples) {
    if (forward(state, sample.inputs).output != sample.desired) return false;
  }
  return true;
}

std::optional<State> representable(const TruthTable& table, Mode mode, std::span<const double> grid) {
  if (grid.empty()) throw Error(Errc::invalid_input, "representable: empty grid");
  for (double g : grid) {
    if (!std::isfinite(g)) throw Error(Errc::invalid_input, "representable: non-finite grid value");
  }

  const std::size_t dims = mode == Mode::bias_augmented ? 8 : 5;
  std::vector<std::size_t> idx(dims, 0);
  State candidate;
  candidate.mode = mode;
  for (;;) {
    for (std::size_t d = 0; d < 5; ++d) candidate.w[d] = grid[idx[d]];
    for (std::size_t d = 5; d < dims; ++d) candidate.b[d - 5] = grid[idx[d]];
    if (classifies(candidate, table)) return candidate;

    // Odometer over the grid, last coordinate fastest.
    std::size_t d = dims;
    while (d > 0) {
      --d;
      if (++idx[d] < grid.size()) break;
      idx[d] = 0;
      if (d == 0) return std::nullopt;
    }
  }
}

std::optional<State> representable(Gate gate, Mode mode, std::span<const double> grid) {
  return representable(truth_table(gate, true), mode, grid);
}

}  // namespace playbench::mlp321
