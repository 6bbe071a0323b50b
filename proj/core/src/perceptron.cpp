#include "playbench/perceptron.hpp"

#include <string>

#include "playbench/error.hpp"
#include "playbench/training.hpp"

namespace playbench::perceptron {
namespace {

void require_arity(std::span<const int> inputs) {
  if (inputs.size() != 2) {
    throw Error(Errc::invalid_input, "perceptron expects 2 inputs, got " + std::to_string(inputs.size()));
  }
}

}  // namespace

Eval forward(const State& state, std::span<const int> inputs) {
  require_arity(inputs);
  const double n1 = inputs[0] * state.w1 + inputs[1] * state.w2;
  return {n1, n1 >= 1.0 ? 1 : 0, 0};
}

State update_weights(const State& state, std::span<const int> inputs, int error) {
  require_arity(inputs);
  State next = state;
  next.w1 = state.w1 + inputs[0] * state.lr * error;
  next.w2 = state.w2 + inputs[1] * state.lr * error;
  return next;
}

std::pair<State, IterationRecord> present_sample(const State& state, const GateSample& sample) {
  const Eval eval = forward(state, sample.inputs);
  const int error = compute_error(sample.desired, eval.y1);
  State next = update_weights(state, sample.inputs, error);

  IterationRecord record;
  record.inputs = sample.inputs;
  record.desired = sample.desired;
  record.net = {eval.n1};
  record.output = eval.y1;
  record.error = error;
  record.weights = {next.w1, next.w2};
  return {next, std::move(record)};
}

TrainOutcome<State> train(State state, const TruthTable& table, std::size_t max_epochs) {
  return detail::train_epochs(state, table, max_epochs,
                              [](const State& s, const GateSample& g) { return present_sample(s, g); });
}

}  // namespace playbench::perceptron
