#include "playbench/dataset.hpp"

#include <numeric>
#include <utility>

#include "playbench/error.hpp"

namespace playbench {
namespace {

Drawn<std::vector<Point>> draw_points(std::size_t n, const StageBounds& bounds, Rng64 rng) {
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = uniform_int(rng, bounds.x_min, bounds.x_max);
    const auto y = uniform_int(x.rng, bounds.y_min, bounds.y_max);
    rng = y.rng;
    points.push_back({static_cast<std::int32_t>(x.value), static_cast<std::int32_t>(y.value)});
  }
  return {std::move(points), rng};
}

}  // namespace

Drawn<PointCloud> gen_point_cloud(std::size_t n, const StageBounds& bounds, Rng64 rng) {
  if (n == 0) throw Error(Errc::empty_cloud, "point cloud needs at least one point");
  auto drawn = draw_points(n, bounds, rng);
  return {PointCloud{std::move(drawn.value)}, drawn.rng};
}

Drawn<CentroidSet> gen_mass_centers(std::size_t k, const StageBounds& bounds, Rng64 rng) {
  if (k == 0) throw Error(Errc::invalid_k, "k must be at least 1");
  auto drawn = draw_points(k, bounds, rng);
  return {CentroidSet{std::move(drawn.value)}, drawn.rng};
}

std::string_view to_string(Gate gate) noexcept {
  switch (gate) {
    case Gate::and2: return "and2";
    case Gate::or2: return "or2";
    case Gate::and3: return "and3";
    case Gate::or3: return "or3";
  }
  return "?";
}

std::optional<Gate> parse_gate(std::string_view name) noexcept {
  if (name == "and2") return Gate::and2;
  if (name == "or2") return Gate::or2;
  if (name == "and3") return Gate::and3;
  if (name == "or3") return Gate::or3;
  return std::nullopt;
}

TruthTable truth_table(Gate gate, bool include_zero_row) {
  const std::size_t arity = gate_arity(gate);
  const bool is_and = gate == Gate::and2 || gate == Gate::and3;
  TruthTable table{gate, {}, arity == 2 ? true : include_zero_row};

  const unsigned rows = 1u << arity;
  for (unsigned row = 0; row < rows; ++row) {
    if (row == 0 && !table.zero_row_included) continue;
    GateSample sample;
    // Most significant bit first gives (0,0),(0,1),(1,0),(1,1) ordering.
    for (std::size_t bit = arity; bit-- > 0;) sample.inputs.push_back(static_cast<int>((row >> bit) & 1u));
    sample.desired = is_and ? static_cast<int>(row == rows - 1) : static_cast<int>(row != 0);
    table.samples.push_back(std::move(sample));
  }
  return table;
}

std::string_view to_string(InitPolicy::Kind kind) noexcept {
  switch (kind) {
    case InitPolicy::Kind::zeros: return "zeros";
    case InitPolicy::Kind::uniform: return "uniform";
    case InitPolicy::Kind::explicit_values: return "explicit";
  }
  return "?";
}

Drawn<std::vector<double>> init_parameters(const InitPolicy& policy, std::size_t count, Rng64 rng) {
  switch (policy.kind) {
    case InitPolicy::Kind::zeros:
      return {std::vector<double>(count, 0.0), rng};
    case InitPolicy::Kind::uniform: {
      std::vector<double> values;
      values.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        const auto d = uniform_signed_unit(rng);
        values.push_back(d.value);
        rng = d.rng;
      }
      return {std::move(values), rng};
    }
    case InitPolicy::Kind::explicit_values:
      if (policy.values.size() != count) {
        throw Error(Errc::invalid_config,
                    "explicit init needs " + std::to_string(count) + " values, got " +
                        std::to_string(policy.values.size()),
                    {"init_values"});
      }
      return {policy.values, rng};
  }
  return {{}, rng};
}

Drawn<std::vector<std::size_t>> shuffled_order(std::size_t n, Rng64 rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    const auto j = uniform_int(rng, 0, static_cast<std::int64_t>(i));
    rng = j.rng;
    std::swap(order[i], order[static_cast<std::size_t>(j.value)]);
  }
  return {std::move(order), rng};
}

}  // namespace playbench
