#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "playbench/rng.hpp"

namespace playbench {

// Integer stage coordinates.
struct Point {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

struct StageBounds {
  std::int32_t x_min = -230;
  std::int32_t x_max = 230;
  std::int32_t y_min = -170;
  std::int32_t y_max = 170;

  constexpr bool valid() const noexcept { return x_min < x_max && y_min < y_max; }
  constexpr bool contains(Point p) const noexcept {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  friend constexpr bool operator==(const StageBounds&, const StageBounds&) = default;
};

struct PointCloud {
  std::vector<Point> points;

  friend bool operator==(const PointCloud&, const PointCloud&) = default;
};

struct CentroidSet {
  std::vector<Point> centers;

  friend bool operator==(const CentroidSet&, const CentroidSet&) = default;
};

/// Draws `n` points, x then y per point, each inclusive within `bounds`.
///
/// Degenerate bounds (x_min == x_max) are accepted here so that a fixed point
/// can be produced; only `StageBounds::valid()` configurations reach the
/// session layer. Throws Error(empty_cloud) for n == 0 and
/// Error(invalid_range) for inverted bounds.
[[nodiscard]] Drawn<PointCloud> gen_point_cloud(std::size_t n, const StageBounds& bounds, Rng64 rng);

/// Same drawing scheme as gen_point_cloud; throws Error(invalid_k) for k == 0.
[[nodiscard]] Drawn<CentroidSet> gen_mass_centers(std::size_t k, const StageBounds& bounds, Rng64 rng);

enum class Gate { and2, or2, and3, or3 };

std::string_view to_string(Gate gate) noexcept;
std::optional<Gate> parse_gate(std::string_view name) noexcept;
constexpr std::size_t gate_arity(Gate gate) noexcept {
  return (gate == Gate::and2 || gate == Gate::or2) ? 2 : 3;
}

struct GateSample {
  std::vector<int> inputs;
  int desired = 0;

  friend bool operator==(const GateSample&, const GateSample&) = default;
};

struct TruthTable {
  Gate gate = Gate::and2;
  std::vector<GateSample> samples;
  bool zero_row_included = true;

  std::size_t size() const noexcept { return samples.size(); }
};

/// Ascending-binary enumeration of the gate's inputs with the boolean result.
/// `include_zero_row` only affects 3-input gates; 2-input tables always have
/// four rows.
[[nodiscard]] TruthTable truth_table(Gate gate, bool include_zero_row = true);

struct InitPolicy {
  enum class Kind { zeros, uniform, explicit_values };

  Kind kind = Kind::zeros;
  std::vector<double> values;  // used by explicit_values only

  static InitPolicy zeros() { return {}; }
  static InitPolicy uniform() { return {Kind::uniform, {}}; }
  static InitPolicy explicit_values(std::vector<double> v) { return {Kind::explicit_values, std::move(v)}; }

  friend bool operator==(const InitPolicy&, const InitPolicy&) = default;
};

std::string_view to_string(InitPolicy::Kind kind) noexcept;

/// Produces `count` initial parameters. Uniform draws come from
/// uniform_signed_unit in order; explicit values must have exactly `count`
/// entries (Error(invalid_config) otherwise).
[[nodiscard]] Drawn<std::vector<double>> init_parameters(const InitPolicy& policy, std::size_t count, Rng64 rng);

/// A Fisher-Yates permutation of 0..n-1 driven by uniform_int, so the order is
/// identical on every standard library.
[[nodiscard]] Drawn<std::vector<std::size_t>> shuffled_order(std::size_t n, Rng64 rng);

}  // namespace playbench
