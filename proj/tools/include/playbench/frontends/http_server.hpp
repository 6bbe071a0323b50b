#pragma once

#include <memory>
#include <string>

#include "playbench/frontends/service.hpp"

namespace playbench::frontends {

/// HTTP adapter over a SessionService: every route forwards to
/// SessionService::dispatch, except /api/v1/sessions/{id}/stream which is
/// served as text/event-stream.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds without serving; port 0 picks a free port. Returns the bound port
  /// or -1 on failure.
  int bind(const std::string& host, int port);

  /// Serves until stop(); returns false if the server could not run.
  bool listen_after_bind();

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace playbench::frontends
