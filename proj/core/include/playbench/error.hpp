#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace playbench {

enum class Errc {
  invalid_range,
  empty_cloud,
  invalid_k,
  invalid_input,
  invalid_config,
  state_error,
  unsupported,
  not_found,
};

std::string_view to_string(Errc code) noexcept;

// Every engine failure is reported through this one exception type; `fields`
// names the offending configuration fields when the failure is a validation
// error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::string> fields = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  Errc code_;
  std::vector<std::string> fields_;
};

}  // namespace playbench
