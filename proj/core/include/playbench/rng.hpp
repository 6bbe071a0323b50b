#pragma once

#include <cstdint>
#include <limits>

namespace playbench {

/// SplitMix64 generator held as a plain value.
///
/// `next()` is a pure transition returning the output together with the
/// successor state, so generators can be threaded through functions without
/// hidden mutation. The same seed yields the same sequence on every platform.
/// See https://prng.di.unimi.it for the reference transition.
class Rng64 {
 public:
  using result_type = std::uint64_t;

  struct Step {
    std::uint64_t value;
    std::uint64_t state;
  };

  constexpr explicit Rng64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  constexpr std::uint64_t state() const noexcept { return state_; }

  [[nodiscard]] constexpr Step advance() const noexcept {
    const std::uint64_t next_state = state_ + 0x9E3779B97F4A7C15ull;
    std::uint64_t z = next_state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return {z ^ (z >> 31), next_state};
  }

  // UniformRandomBitGenerator interface; mutates in place.
  constexpr result_type operator()() noexcept {
    const auto step = advance();
    state_ = step.state;
    return step.value;
  }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  friend constexpr bool operator==(const Rng64&, const Rng64&) = default;

 private:
  std::uint64_t state_;
};

template <class T>
struct Drawn {
  T value;
  Rng64 rng;
};

[[nodiscard]] constexpr Drawn<std::uint64_t> rng_next(Rng64 rng) noexcept {
  const auto step = rng.advance();
  return {step.value, Rng64(step.state)};
}

/// Inclusive integer draw: lo + (value mod (hi - lo + 1)).
///
/// The modulo bias is accepted; the ranges used here are tiny next to 2^64.
/// Throws Error(invalid_range) when lo > hi.
[[nodiscard]] Drawn<std::int64_t> uniform_int(Rng64 rng, std::int64_t lo, std::int64_t hi);

/// Maps the top 53 bits m of a raw output to (m / 2^53) * 2 - 1, in [-1, 1).
[[nodiscard]] constexpr double signed_unit_from_bits(std::uint64_t value) noexcept {
  const auto m = static_cast<double>(value >> 11);
  return (m / 9007199254740992.0) * 2.0 - 1.0;
}

[[nodiscard]] constexpr Drawn<double> uniform_signed_unit(Rng64 rng) noexcept {
  const auto [value, next] = rng_next(rng);
  return {signed_unit_from_bits(value), next};
}

}  // namespace playbench
