#include "playbench/json_io.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "playbench/error.hpp"

namespace playbench {
namespace {

bool read_u64(const Json& v, std::uint64_t& out) {
  if (v.is_number_unsigned()) {
    out = v.get<std::uint64_t>();
    return true;
  }
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    out = static_cast<std::uint64_t>(v.get<std::int64_t>());
    return true;
  }
  return false;
}

bool read_i32(const Json& v, std::int32_t& out) {
  if (!v.is_number_integer()) return false;
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) return false;
  out = static_cast<std::int32_t>(x);
  return true;
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::invalid_input, "malformed trace JSON: " + what);
}

}  // namespace

Json config_to_json(const SessionConfig& c) {
  Json j;
  j["model"] = to_string(c.model);
  if (c.model == Model::kmeans) {
    j["n"] = c.n;
    j["k"] = c.k;
    j["bounds"] = {{"x_min", c.bounds.x_min}, {"x_max", c.bounds.x_max},
                   {"y_min", c.bounds.y_min}, {"y_max", c.bounds.y_max}};
    j["seed"] = c.seed;
    return j;
  }
  j["gate"] = to_string(c.gate);
  if (c.model == Model::mlp321) {
    j["mode"] = mlp321::to_string(c.mode);
    j["include_zero_row"] = c.include_zero_row;
  }
  j["lr"] = c.lr;
  j["init"] = to_string(c.init.kind);
  if (c.init.kind == InitPolicy::Kind::explicit_values) j["init_values"] = c.init.values;
  j["seed"] = c.seed;
  j["max_epochs"] = c.max_epochs;
  j["shuffle"] = c.shuffle;
  return j;
}

SessionConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::invalid_config, "session config must be a JSON object", {"body"});

  std::vector<std::string> bad;
  const auto model_it = j.find("model");
  std::optional<Model> model;
  if (model_it != j.end() && model_it->is_string()) model = parse_model(model_it->get<std::string>());
  if (!model) throw Error(Errc::invalid_config, "missing or unknown \"model\"", {"model"});

  SessionConfig c = default_config(*model);
  bool have_values = false;
  for (const auto& [key, v] : j.items()) {
    bool ok = true;
    if (key == "model") {
      continue;
    } else if (key == "seed") {
      ok = read_u64(v, c.seed);
    } else if (*model == Model::kmeans) {
      if (key == "n") ok = read_u64(v, c.n);
      else if (key == "k") ok = read_u64(v, c.k);
      else if (key == "bounds") {
        ok = v.is_object() && v.size() == 4 && v.contains("x_min") && v.contains("x_max") &&
             v.contains("y_min") && v.contains("y_max") && read_i32(v.at("x_min"), c.bounds.x_min) &&
             read_i32(v.at("x_max"), c.bounds.x_max) && read_i32(v.at("y_min"), c.bounds.y_min) &&
             read_i32(v.at("y_max"), c.bounds.y_max);
      } else {
        ok = false;
      }
    } else if (key == "gate") {
      std::optional<Gate> g;
      if (v.is_string()) g = parse_gate(v.get<std::string>());
      ok = g.has_value();
      if (ok) c.gate = *g;
    } else if (key == "lr") {
      ok = v.is_number();
      if (ok) c.lr = v.get<double>();
    } else if (key == "init") {
      ok = v.is_string();
      if (ok) {
        const auto s = v.get<std::string>();
        if (s == "zeros") c.init.kind = InitPolicy::Kind::zeros;
        else if (s == "uniform") c.init.kind = InitPolicy::Kind::uniform;
        else if (s == "explicit") c.init.kind = InitPolicy::Kind::explicit_values;
        else ok = false;
      }
    } else if (key == "init_values") {
      ok = v.is_array();
      for (const auto& x : v) ok = ok && x.is_number();
      if (ok) {
        c.init.values.clear();
        for (const auto& x : v) c.init.values.push_back(x.get<double>());
        have_values = true;
      }
    } else if (key == "max_epochs") {
      ok = read_u64(v, c.max_epochs);
    } else if (key == "shuffle") {
      ok = v.is_boolean();
      if (ok) c.shuffle = v.get<bool>();
    } else if (key == "mode" && *model == Model::mlp321) {
      std::optional<mlp321::Mode> m;
      if (v.is_string()) m = mlp321::parse_mode(v.get<std::string>());
      ok = m.has_value();
      if (ok) c.mode = *m;
    } else if (key == "include_zero_row" && *model == Model::mlp321) {
      ok = v.is_boolean();
      if (ok) c.include_zero_row = v.get<bool>();
    } else {
      ok = false;
    }
    if (!ok) bad.push_back(key);
  }
  if (have_values != (c.init.kind == InitPolicy::Kind::explicit_values)) bad.emplace_back("init_values");
  if (!have_values) c.init.values.clear();

  for (auto& f : invalid_fields(c)) {
    if (std::find(bad.begin(), bad.end(), f) == bad.end()) bad.push_back(std::move(f));
  }
  if (!bad.empty()) {
    std::string message = "invalid session config:";
    for (const auto& f : bad) message += " " + f;
    throw Error(Errc::invalid_config, message, std::move(bad));
  }
  return c;
}

Json record_to_json(const IterationRecord& r) {
  Json j;
  j["step"] = r.step;
  j["epoch"] = r.epoch;
  j["sample"] = r.sample;
  j["inputs"] = r.inputs;
  j["desired"] = r.desired;
  static constexpr const char* kNetNames[] = {"n1", "n2", "n3"};
  for (std::size_t i = 0; i < r.net.size() && i < 3; ++i) j[kNetNames[i]] = r.net[i];
  j["output"] = r.output;
  j["error"] = r.error;
  j["weights"] = r.weights;
  if (!r.biases.empty()) j["biases"] = r.biases;
  return j;
}

IterationRecord record_from_json(const Json& j) {
  if (!j.is_object()) malformed("record is not an object");
  try {
    IterationRecord r;
    r.step = j.at("step").get<std::uint64_t>();
    r.epoch = j.at("epoch").get<std::uint64_t>();
    r.sample = j.at("sample").get<std::uint64_t>();
    r.inputs = j.at("inputs").get<std::vector<int>>();
    r.desired = j.at("desired").get<int>();
    for (const char* name : {"n1", "n2", "n3"}) {
      if (j.contains(name)) r.net.push_back(j.at(name).get<double>());
    }
    r.output = j.at("output").get<int>();
    r.error = j.at("error").get<int>();
    r.weights = j.at("weights").get<std::vector<double>>();
    if (j.contains("biases")) r.biases = j.at("biases").get<std::vector<double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json kmeans_to_json(const KMeansResult& result) {
  Json points = Json::array();
  for (Point p : result.cloud.points) points.push_back(point_json(p));
  Json centers = Json::array();
  for (Point p : result.centers.centers) centers.push_back(point_json(p));
  Json colors = Json::array();
  for (const auto& e : result.coloured.entries) colors.push_back(e.color);

  Json j;
  j["points"] = std::move(points);
  j["centers"] = std::move(centers);
  j["clusters"] = result.assignment.clusters;
  j["colors"] = std::move(colors);
  return j;
}

Json state_to_json(const ModelState& state) {
  return std::visit(
      [](const auto& s) -> Json {
        using S = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<S, perceptron::State>) {
          j["w1"] = s.w1;
          j["w2"] = s.w2;
          j["lr"] = s.lr;
        } else if constexpr (std::is_same_v<S, mlp321::State>) {
          for (std::size_t i = 0; i < s.w.size(); ++i) j["w" + std::to_string(i + 1)] = s.w[i];
          if (s.biased()) {
            for (std::size_t i = 0; i < s.b.size(); ++i) j["b" + std::to_string(i + 1)] = s.b[i];
          }
          j["lr"] = s.lr;
          j["mode"] = mlp321::to_string(s.mode);
        } else {
          j = kmeans_to_json(s);
        }
        return j;
      },
      state);
}

Json table_to_json(const TruthTable& table) {
  Json rows = Json::array();
  for (const auto& s : table.samples) rows.push_back({{"inputs", s.inputs}, {"desired", s.desired}});
  return rows;
}

Json trace_to_json(const TrainingTrace& trace) {
  Json records = Json::array();
  for (const auto& r : trace.records) records.push_back(record_to_json(r));
  Json j;
  j["config"] = config_to_json(trace.config);
  j["records"] = std::move(records);
  j["converged"] = trace.converged;
  j["epochs_used"] = trace.epochs_used;
  if (trace.cloud) j["cloud"] = kmeans_to_json(*trace.cloud);
  return j;
}

TrainingTrace trace_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("config") || !j.contains("records")) malformed("missing config or records");
  TrainingTrace t;
  t.config = config_from_json(j.at("config"));
  for (const auto& r : j.at("records")) t.records.push_back(record_from_json(r));
  try {
    t.converged = j.at("converged").get<bool>();
    t.epochs_used = j.at("epochs_used").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  if (j.contains("cloud")) {
    // The cloud is fully determined by the config; regenerate and check it matches.
    auto regenerated = run_kmeans(t.config.n, t.config.k, t.config.bounds, Rng64(t.config.seed));
    if (kmeans_to_json(regenerated) != j.at("cloud")) malformed("cloud does not match its config");
    t.cloud = std::move(regenerated);
  }
  return t;
}

Json parse_json_body(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::invalid_config, std::string("malformed JSON: ") + e.what(), {"body"});
  }
}

}  // namespace playbench
