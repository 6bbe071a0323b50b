#include "playbench/config.hpp"

#include <cmath>

#include "playbench/error.hpp"

namespace playbench {

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::perceptron: return "perceptron";
    case Model::mlp321: return "mlp321";
    case Model::kmeans: return "kmeans";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view name) noexcept {
  if (name == "perceptron") return Model::perceptron;
  if (name == "mlp321" || name == "mlp") return Model::mlp321;
  if (name == "kmeans") return Model::kmeans;
  return std::nullopt;
}

SessionConfig default_config(Model model) {
  SessionConfig config;
  config.model = model;
  if (model == Model::mlp321) {
    config.gate = Gate::and3;
    config.lr = kMlpDefaultLr;
  }
  return config;
}

std::size_t parameter_count(const SessionConfig& config) noexcept {
  switch (config.model) {
    case Model::perceptron: return 2;
    case Model::mlp321: return config.mode == mlp321::Mode::bias_augmented ? 8 : 5;
    case Model::kmeans: return 0;
  }
  return 0;
}

TraceLayout layout_of(const SessionConfig& config) noexcept {
  if (config.model == Model::mlp321) return TraceLayout::mlp(config.mode == mlp321::Mode::bias_augmented);
  return TraceLayout::perceptron();
}

std::vector<std::string> invalid_fields(const SessionConfig& c) {
  std::vector<std::string> bad;
  if (c.model == Model::kmeans) {
    if (c.n < 1) bad.emplace_back("n");
    if (c.k < 1) bad.emplace_back("k");
    if (!c.bounds.valid()) bad.emplace_back("bounds");
    return bad;
  }

  const std::size_t want_arity = c.model == Model::perceptron ? 2 : 3;
  if (gate_arity(c.gate) != want_arity) bad.emplace_back("gate");
  if (!(c.lr > 0.0) || !std::isfinite(c.lr)) bad.emplace_back("lr");
  if (c.max_epochs < 1) bad.emplace_back("max_epochs");
  if (c.init.kind == InitPolicy::Kind::explicit_values) {
    bool ok = c.init.values.size() == parameter_count(c);
    for (double v : c.init.values) ok = ok && std::isfinite(v);
    if (!ok) bad.emplace_back("init_values");
  }
  return bad;
}

void validate(const SessionConfig& config) {
  auto bad = invalid_fields(config);
  if (bad.empty()) return;
  std::string message = "invalid session config:";
  for (const auto& f : bad) message += " " + f;
  throw Error(Errc::invalid_config, message, std::move(bad));
}

}  // namespace playbench
