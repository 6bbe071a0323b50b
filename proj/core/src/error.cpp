#include "playbench/error.hpp"

#include <utility>

namespace playbench {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_range: return "invalid_range";
    case Errc::empty_cloud: return "empty_cloud";
    case Errc::invalid_k: return "invalid_k";
    case Errc::invalid_input: return "invalid_input";
    case Errc::invalid_config: return "invalid_config";
    case Errc::state_error: return "state_error";
    case Errc::unsupported: return "unsupported";
    case Errc::not_found: return "not_found";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message, std::vector<std::string> fields)
    : std::runtime_error(message), code_(code), fields_(std::move(fields)) {}

}  // namespace playbench
