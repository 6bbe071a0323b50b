#include "playbench/frontends/service.hpp"

#include <condition_variable>
#include <fstream>
#include <random>
#include <utility>
#include <vector>

#include "playbench/session.hpp"

namespace playbench::frontends {

std::string_view to_string(ApiErrorCode code) noexcept {
  switch (code) {
    case ApiErrorCode::invalid_config: return "invalid_config";
    case ApiErrorCode::not_found: return "not_found";
    case ApiErrorCode::state_error: return "state_error";
    case ApiErrorCode::unsupported: return "unsupported";
  }
  return "?";
}

int http_status(ApiErrorCode code) noexcept {
  switch (code) {
    case ApiErrorCode::invalid_config: return 422;
    case ApiErrorCode::not_found: return 404;
    case ApiErrorCode::state_error: return 409;
    case ApiErrorCode::unsupported: return 400;
  }
  return 500;
}

ApiError to_api_error(const Error& error) {
  ApiError out;
  out.message = error.what();
  if (!error.fields().empty()) out.field = error.fields().front();
  switch (error.code()) {
    case Errc::invalid_range:
    case Errc::empty_cloud:
    case Errc::invalid_k:
    case Errc::invalid_input:
    case Errc::invalid_config:
      out.code = ApiErrorCode::invalid_config;
      break;
    case Errc::state_error:
      out.code = ApiErrorCode::state_error;
      break;
    case Errc::unsupported:
      out.code = ApiErrorCode::unsupported;
      break;
    case Errc::not_found:
      out.code = ApiErrorCode::not_found;
      break;
  }
  return out;
}

Json to_json(const ApiError& error) {
  Json j;
  j["code"] = to_string(error.code);
  j["message"] = error.message;
  if (error.field) j["field"] = *error.field;
  return j;
}

std::string sse_event(std::string_view event, std::string_view data, std::optional<std::uint64_t> id) {
  std::string out;
  if (id) out += "id: " + std::to_string(*id) + "\n";
  out += "event: ";
  out += event;
  out += "\ndata: ";
  out += data;
  out += "\n\n";
  return out;
}

namespace {

Response json_response(int status, const Json& body) { return {status, "application/json", body.dump()}; }

Response error_response(const ApiError& error) { return json_response(http_status(error.code), to_json(error)); }

Response error_response(const Error& error) { return error_response(to_api_error(error)); }

Response unknown_session(std::string_view id) {
  return error_response(ApiError{ApiErrorCode::not_found, "no session with id '" + std::string(id) + "'", "id"});
}

Json status_event(const Session& session, std::string_view status) {
  Json j;
  j["status"] = status;
  j["converged"] = session.trace().converged;
  j["epochs_used"] = session.trace().epochs_used;
  j["steps"] = session.trace().records.size();
  return j;
}

}  // namespace

struct SessionService::Entry {
  explicit Entry(Session s) : session(std::move(s)) {}

  std::mutex mutex;
  std::condition_variable changed;
  Session session;
  bool deleted = false;
  bool closing = false;
  bool persisted = false;
};

SessionService::SessionService(ServiceOptions options) : options_(std::move(options)) {
  if (options_.id_seed) {
    id_rng_ = Rng64(*options_.id_seed);
  } else {
    std::random_device entropy;
    const std::uint64_t hi = entropy(), lo = entropy();
    const auto now = static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count());
    id_rng_ = Rng64((hi << 32) ^ lo ^ now);
  }
  if (options_.data_dir) std::filesystem::create_directories(*options_.data_dir);
}

SessionService::~SessionService() { shutdown(); }

std::string SessionService::new_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::lock_guard lock(id_mutex_);
  for (;;) {
    std::uint64_t v = id_rng_();
    std::string id(16, '0');
    for (std::size_t i = 16; i-- > 0; v >>= 4) id[i] = kHex[v & 0xF];
    std::shared_lock read(registry_mutex_);
    if (!sessions_.contains(id)) return id;
  }
}

std::shared_ptr<SessionService::Entry> SessionService::find(std::string_view id) const {
  std::shared_lock lock(registry_mutex_);
  const auto it = sessions_.find(std::string(id));
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionService::size() const {
  std::shared_lock lock(registry_mutex_);
  return sessions_.size();
}

void SessionService::persist_if_finished(const std::string& id, Entry& entry) {
  if (!options_.data_dir || entry.persisted || !entry.session.finished()) return;
  std::ofstream out(*options_.data_dir / (id + ".trace.json"), std::ios::binary | std::ios::trunc);
  out << entry.session.export_trace(TraceFormat::json);
  entry.persisted = true;
}

Response SessionService::create(std::string_view body) {
  try {
    Session session(config_from_json(parse_json_body(body)));
    const std::string id = new_id();
    auto entry = std::make_shared<Entry>(std::move(session));

    Json j;
    j["id"] = id;
    j["state"] = state_to_json(entry->session.state());
    j["status"] = to_string(entry->session.status());
    j["config"] = config_to_json(entry->session.config());
    if (entry->session.config().model != Model::kmeans) j["table"] = table_to_json(entry->session.table());

    persist_if_finished(id, *entry);
    {
      std::unique_lock lock(registry_mutex_);
      sessions_.emplace(id, std::move(entry));
    }
    return json_response(201, j);
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response SessionService::step(std::string_view id, std::string_view body) {
  auto entry = find(id);
  if (!entry) return unknown_session(id);
  try {
    std::size_t count = 1;
    if (!body.empty()) {
      const Json j = parse_json_body(body);
      if (!j.is_object()) throw Error(Errc::invalid_config, "step body must be an object", {"body"});
      for (const auto& [key, v] : j.items()) {
        if (key != "count") throw Error(Errc::invalid_config, "unknown field '" + key + "'", {key});
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
          throw Error(Errc::invalid_config, "count must be a non-negative integer", {"count"});
        }
        count = v.get<std::size_t>();
      }
    }

    std::lock_guard lock(entry->mutex);
    if (entry->deleted) return unknown_session(id);
    const auto records = entry->session.step(count);
    persist_if_finished(std::string(id), *entry);
    entry->changed.notify_all();

    Json list = Json::array();
    for (const auto& r : records) list.push_back(record_to_json(r));
    Json j;
    j["records"] = std::move(list);
    j["status"] = to_string(entry->session.status());
    return json_response(200, j);
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response SessionService::run(std::string_view id) {
  auto entry = find(id);
  if (!entry) return unknown_session(id);
  try {
    std::lock_guard lock(entry->mutex);
    if (entry->deleted) return unknown_session(id);
    entry->session.run();
    persist_if_finished(std::string(id), *entry);
    entry->changed.notify_all();

    Json j;
    j["converged"] = entry->session.trace().converged;
    j["epochs_used"] = entry->session.trace().epochs_used;
    return json_response(200, j);
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response SessionService::get(std::string_view id) const {
  auto entry = find(id);
  if (!entry) return unknown_session(id);
  std::lock_guard lock(entry->mutex);
  if (entry->deleted) return unknown_session(id);
  const Session& s = entry->session;
  Json j;
  j["id"] = id;
  j["state"] = state_to_json(s.state());
  j["status"] = to_string(s.status());
  j["config"] = config_to_json(s.config());
  if (s.config().model != Model::kmeans) j["table"] = table_to_json(s.table());
  j["steps"] = s.trace().records.size();
  j["epochs_used"] = s.trace().epochs_used;
  j["converged"] = s.trace().converged;
  return json_response(200, j);
}

Response SessionService::trace(std::string_view id, std::string_view format) const {
  TraceFormat fmt;
  if (format.empty() || format == "json") {
    fmt = TraceFormat::json;
  } else if (format == "csv") {
    fmt = TraceFormat::csv;
  } else {
    return error_response(ApiError{ApiErrorCode::invalid_config, "format must be json or csv", "format"});
  }
  auto entry = find(id);
  if (!entry) return unknown_session(id);
  std::lock_guard lock(entry->mutex);
  if (entry->deleted) return unknown_session(id);
  return {200, fmt == TraceFormat::json ? "application/json" : "text/csv",
          entry->session.export_trace(fmt)};
}

Response SessionService::remove(std::string_view id) {
  std::shared_ptr<Entry> entry;
  {
    std::unique_lock lock(registry_mutex_);
    const auto it = sessions_.find(std::string(id));
    if (it == sessions_.end()) return unknown_session(id);
    entry = std::move(it->second);
    sessions_.erase(it);
  }
  {
    std::lock_guard lock(entry->mutex);
    entry->deleted = true;
  }
  entry->changed.notify_all();
  return {204, "", ""};
}

Response SessionService::kmeans(std::string_view body) const {
  try {
    Json j = parse_json_body(body.empty() ? std::string_view("{}") : body);
    if (!j.is_object()) throw Error(Errc::invalid_config, "kmeans body must be an object", {"body"});
    if (j.contains("model") && j["model"] != "kmeans") {
      throw Error(Errc::invalid_config, "kmeans endpoint only accepts model kmeans", {"model"});
    }
    j["model"] = "kmeans";
    const SessionConfig config = config_from_json(j);
    return json_response(200, kmeans_to_json(run_kmeans(config.n, config.k, config.bounds, Rng64(config.seed))));
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response SessionService::dispatch(std::string_view method, std::string_view path, std::string_view body,
                                  std::string_view format) {
  constexpr std::string_view kPrefix = "/api/v1/";
  const auto not_found = [&] {
    return error_response(ApiError{ApiErrorCode::not_found, "no route for " + std::string(method) + " " +
                                                                std::string(path), std::nullopt});
  };
  if (!path.starts_with(kPrefix)) return not_found();
  path.remove_prefix(kPrefix.size());
  if (!path.empty() && path.back() == '/') path.remove_suffix(1);

  std::vector<std::string_view> parts;
  while (!path.empty()) {
    const auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }

  if (parts.size() == 1 && parts[0] == "kmeans" && method == "POST") return kmeans(body);
  if (parts.empty() || parts[0] != "sessions") return not_found();
  if (parts.size() == 1 && method == "POST") return create(body);
  if (parts.size() == 2) {
    if (method == "GET") return get(parts[1]);
    if (method == "DELETE") return remove(parts[1]);
  }
  if (parts.size() == 3) {
    if (parts[2] == "step" && method == "POST") return step(parts[1], body);
    if (parts[2] == "run" && method == "POST") return run(parts[1]);
    if (parts[2] == "trace" && method == "GET") return trace(parts[1], format);
  }
  return not_found();
}

SessionService::Subscription::Subscription(std::shared_ptr<Entry> entry) : entry_(std::move(entry)) {
  std::lock_guard lock(entry_->mutex);
  if (entry_->session.finished()) cursor_ = entry_->session.trace().records.size();
}

std::string SessionService::Subscription::next(std::chrono::milliseconds timeout) {
  if (done_) return {};
  std::unique_lock lock(entry_->mutex);
  const Session& s = entry_->session;
  entry_->changed.wait_for(lock, timeout, [&] {
    return s.trace().records.size() > cursor_ || s.finished() || entry_->deleted || entry_->closing;
  });

  std::string out;
  const auto& records = s.trace().records;
  for (; cursor_ < records.size(); ++cursor_) {
    out += sse_event("record", record_to_json(records[cursor_]).dump(), records[cursor_].step);
  }
  if (entry_->deleted || entry_->closing || s.finished()) {
    const std::string_view status = entry_->deleted ? "deleted"
                                    : entry_->closing && !s.finished() ? "closed"
                                                                       : to_string(s.status());
    out += sse_event("status", status_event(s, status).dump());
    done_ = true;
  }
  return out;
}

std::optional<SessionService::Subscription> SessionService::subscribe(std::string_view id) const {
  auto entry = find(id);
  if (!entry) return std::nullopt;
  return Subscription(std::move(entry));
}

void SessionService::shutdown() {
  std::shared_lock lock(registry_mutex_);
  for (auto& [id, entry] : sessions_) {
    {
      std::lock_guard guard(entry->mutex);
      entry->closing = true;
    }
    entry->changed.notify_all();
  }
}

}  // namespace playbench::frontends
