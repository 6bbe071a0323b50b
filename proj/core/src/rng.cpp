#include "playbench/rng.hpp"

#include <string>

#include "playbench/error.hpp"

namespace playbench {

Drawn<std::int64_t> uniform_int(Rng64 rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(Errc::invalid_range,
                "uniform_int: lo (" + std::to_string(lo) + ") exceeds hi (" + std::to_string(hi) + ")");
  }
  const auto [value, next] = rng_next(rng);
  // Unsigned arithmetic keeps the span well defined over the whole int64 range.
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1u;
  const std::uint64_t offset = span == 0 ? value : value % span;
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset), next};
}

}  // namespace playbench
