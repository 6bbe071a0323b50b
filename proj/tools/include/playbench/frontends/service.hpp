#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "playbench/error.hpp"
#include "playbench/json_io.hpp"
#include "playbench/rng.hpp"

namespace playbench::frontends {

enum class ApiErrorCode { invalid_config, not_found, state_error, unsupported };

std::string_view to_string(ApiErrorCode code) noexcept;
int http_status(ApiErrorCode code) noexcept;  // 422 / 404 / 409 / 400

struct ApiError {
  ApiErrorCode code = ApiErrorCode::invalid_config;
  std::string message;
  std::optional<std::string> field;
};

/// Total mapping from engine errors to API errors.
ApiError to_api_error(const Error& error);
Json to_json(const ApiError& error);

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceOptions {
  std::optional<std::filesystem::path> data_dir;  // finished traces land here as <id>.trace.json
  std::optional<std::uint64_t> id_seed;           // fixed seed for session ids (tests only)
};

/// Session registry and the JSON API on top of it, independent of any socket.
///
/// The registry tolerates concurrent lookup, insert and delete. Each session
/// carries its own mutex, so operations on one session are serialized while
/// different sessions proceed in parallel.
class SessionService {
 public:
  explicit SessionService(ServiceOptions options = {});
  ~SessionService();

  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  Response create(std::string_view body);
  Response step(std::string_view id, std::string_view body);
  Response run(std::string_view id);
  Response get(std::string_view id) const;
  Response trace(std::string_view id, std::string_view format) const;
  Response remove(std::string_view id);
  Response kmeans(std::string_view body) const;

  /// Routes a request under /api/v1. `format` is the trace query parameter.
  Response dispatch(std::string_view method, std::string_view path, std::string_view body,
                    std::string_view format = "json");

  std::size_t size() const;

  struct Entry;

  /// Server-sent event feed for one session.
  ///
  /// A subscriber to a running session receives every record from step 0
  /// onward, then a terminal `status` event. A subscriber to a finished
  /// session receives only the terminal event.
  class Subscription {
   public:
    explicit Subscription(std::shared_ptr<Entry> entry);

    /// Waits up to `timeout` for new events and returns them as SSE text
    /// (possibly empty). Returns an empty string once done().
    std::string next(std::chrono::milliseconds timeout);
    bool done() const noexcept { return done_; }

   private:
    std::shared_ptr<Entry> entry_;
    std::size_t cursor_ = 0;
    bool done_ = false;
  };

  /// nullopt when the id is unknown.
  std::optional<Subscription> subscribe(std::string_view id) const;

  /// Ends every open subscription (used on server shutdown).
  void shutdown();

 private:
  std::shared_ptr<Entry> find(std::string_view id) const;
  std::string new_id();
  void persist_if_finished(const std::string& id, Entry& entry);

  ServiceOptions options_;
  mutable std::shared_mutex registry_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex id_mutex_;
  Rng64 id_rng_;
};

/// SSE framing shared by the service and tests.
std::string sse_event(std::string_view event, std::string_view data, std::optional<std::uint64_t> id = std::nullopt);

}  // namespace playbench::frontends
