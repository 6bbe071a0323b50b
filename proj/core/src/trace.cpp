#include "playbench/trace.hpp"

#include <bit>
#include <cstdint>

namespace playbench {
namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
  }
  return true;
}

}  // namespace

bool bit_identical(const IterationRecord& a, const IterationRecord& b) noexcept {
  return a.step == b.step && a.epoch == b.epoch && a.sample == b.sample && a.inputs == b.inputs &&
         a.desired == b.desired && same_bits(a.net, b.net) && a.output == b.output && a.error == b.error &&
         same_bits(a.weights, b.weights) && same_bits(a.biases, b.biases);
}

bool bit_identical(const std::vector<IterationRecord>& a, const std::vector<IterationRecord>& b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!bit_identical(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace playbench
