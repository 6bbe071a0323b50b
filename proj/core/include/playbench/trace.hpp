#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace playbench {

// One sample presentation: pre-update forward values and post-update parameters.
struct IterationRecord {
  std::uint64_t step = 0;
  std::uint64_t epoch = 0;   // 0-based
  std::uint64_t sample = 0;  // row index into the truth table
  std::vector<int> inputs;
  int desired = 0;
  std::vector<double> net;   // n1, or n1, n2, n3_raw
  int output = 0;
  int error = 0;
  std::vector<double> weights;
  std::vector<double> biases;  // bias-augmented networks only

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

/// Column shape of a record stream.
struct TraceLayout {
  std::size_t inputs = 2;
  std::size_t nets = 1;
  std::size_t weights = 2;
  std::size_t biases = 0;

  static constexpr TraceLayout perceptron() noexcept { return {2, 1, 2, 0}; }
  static constexpr TraceLayout mlp(bool biased) noexcept { return {3, 3, 5, biased ? 3u : 0u}; }

  bool matches(const IterationRecord& r) const noexcept {
    return r.inputs.size() == inputs && r.net.size() == nets && r.weights.size() == weights &&
           r.biases.size() == biases;
  }

  friend constexpr bool operator==(const TraceLayout&, const TraceLayout&) = default;
};

/// Equality that distinguishes -0.0 from 0.0 and compares NaN payloads.
bool bit_identical(const IterationRecord& a, const IterationRecord& b) noexcept;
bool bit_identical(const std::vector<IterationRecord>& a, const std::vector<IterationRecord>& b) noexcept;

template <class State>
struct TrainOutcome {
  State state;
  std::vector<IterationRecord> records;
  bool converged = false;
  std::size_t epochs_used = 0;
};

}  // namespace playbench
