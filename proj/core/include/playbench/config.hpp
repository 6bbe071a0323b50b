#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "playbench/dataset.hpp"
#include "playbench/mlp321.hpp"
#include "playbench/trace.hpp"

namespace playbench {

enum class Model { perceptron, mlp321, kmeans };

std::string_view to_string(Model model) noexcept;
std::optional<Model> parse_model(std::string_view name) noexcept;

struct SessionConfig {
  Model model = Model::perceptron;

  // perceptron / mlp321
  Gate gate = Gate::and2;
  mlp321::Mode mode = mlp321::Mode::paper_faithful;
  double lr = 0.5;
  InitPolicy init;
  bool include_zero_row = true;
  std::uint64_t max_epochs = 1000;
  bool shuffle = false;

  // kmeans
  std::uint64_t n = 100;
  std::uint64_t k = 5;
  StageBounds bounds;

  std::uint64_t seed = 0;

  friend bool operator==(const SessionConfig&, const SessionConfig&) = default;
};

inline constexpr double kPerceptronDefaultLr = 0.5;
inline constexpr double kMlpDefaultLr = 0.1;
inline constexpr std::uint64_t kDefaultMaxEpochs = 1000;

/// Config with the per-model defaults filled in.
SessionConfig default_config(Model model);

/// Names of every inconsistent field; empty when the config is usable.
std::vector<std::string> invalid_fields(const SessionConfig& config);

/// Throws Error(invalid_config) listing all offending fields.
void validate(const SessionConfig& config);

/// Number of trainable parameters initialised from `init` (weights, then biases).
std::size_t parameter_count(const SessionConfig& config) noexcept;

TraceLayout layout_of(const SessionConfig& config) noexcept;

}  // namespace playbench
