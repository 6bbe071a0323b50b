#include "playbench/frontends/http_server.hpp"

#include <atomic>
#include <chrono>

#include <httplib.h>

namespace playbench::frontends {
namespace {

constexpr std::chrono::milliseconds kStreamPoll{200};

void write(httplib::Response& res, const Response& r) {
  res.status = r.status;
  if (r.status != 204) res.set_content(r.body, r.content_type.c_str());
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(SessionService& s) : service(s) {}

  SessionService& service;
  httplib::Server server;
  std::atomic<bool> stopping{false};
};

HttpServer::HttpServer(SessionService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  Impl* impl = impl_.get();

  // One worker per long-lived stream plus request handlers.
  server.new_task_queue = [] { return new httplib::ThreadPool(32); };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Get(R"(/api/v1/sessions/([^/]+)/stream)", [impl](const httplib::Request& req, httplib::Response& res) {
    auto sub = impl->service.subscribe(req.matches[1].str());
    if (!sub) {
      write(res, impl->service.dispatch("GET", "/api/v1/sessions/" + req.matches[1].str(), ""));
      return;
    }
    auto shared = std::make_shared<SessionService::Subscription>(std::move(*sub));
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider("text/event-stream", [impl, shared](std::size_t, httplib::DataSink& sink) {
      if (impl->stopping) return false;
      const std::string chunk = shared->next(kStreamPoll);
      if (!chunk.empty() && !sink.write(chunk.data(), chunk.size())) return false;
      if (shared->done()) sink.done();
      return true;
    });
  });

  const auto forward = [impl](const httplib::Request& req, httplib::Response& res) {
    const std::string format = req.has_param("format") ? req.get_param_value("format") : "json";
    write(res, impl->service.dispatch(req.method, req.path, req.body, format));
  };
  server.Get(R"(/api/v1/.*)", forward);
  server.Post(R"(/api/v1/.*)", forward);
  server.Delete(R"(/api/v1/.*)", forward);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->stopping.exchange(true)) return;
  impl_->service.shutdown();
  impl_->server.stop();
}

}  // namespace playbench::frontends
