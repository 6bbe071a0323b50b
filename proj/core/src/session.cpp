#include "playbench/session.hpp"

#include <numeric>
#include <utility>

#include "playbench/csv_io.hpp"
#include "playbench/error.hpp"
#include "playbench/json_io.hpp"

namespace playbench {

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::running: return "running";
    case Status::converged: return "converged";
    case Status::exhausted: return "exhausted";
  }
  return "?";
}

Session::Session(SessionConfig config) : config_(std::move(config)) {
  validate(config_);
  initialize();
}

void Session::initialize() {
  rng_ = Rng64(config_.seed);
  trace_ = TrainingTrace{config_, {}, false, 0, std::nullopt};
  epoch_clean_ = true;
  status_ = Status::running;
  order_.clear();

  switch (config_.model) {
    case Model::kmeans: {
      table_ = {};
      auto result = run_kmeans(config_.n, config_.k, config_.bounds, rng_);
      trace_.cloud = result;
      trace_.converged = true;
      state_ = std::move(result);
      status_ = Status::converged;
      break;
    }
    case Model::perceptron: {
      table_ = truth_table(config_.gate);
      auto params = init_parameters(config_.init, 2, rng_);
      rng_ = params.rng;
      state_ = perceptron::State{params.value[0], params.value[1], config_.lr};
      break;
    }
    case Model::mlp321: {
      table_ = truth_table(config_.gate, config_.include_zero_row);
      auto params = init_parameters(config_.init, parameter_count(config_), rng_);
      rng_ = params.rng;
      mlp321::State s;
      s.lr = config_.lr;
      s.mode = config_.mode;
      for (std::size_t i = 0; i < params.value.size(); ++i) {
        if (i < 5) s.w[i] = params.value[i];
        else s.b[i - 5] = params.value[i];
      }
      state_ = s;
      break;
    }
  }
  initial_ = state_;
}

void Session::require_steppable() const {
  if (config_.model == Model::kmeans) {
    throw Error(Errc::unsupported, "kmeans sessions are single-shot and cannot be stepped");
  }
  if (status_ != Status::running) {
    throw Error(Errc::state_error, "session already " + std::string(to_string(status_)));
  }
}

IterationRecord Session::present_next() {
  const std::size_t len = table_.size();
  const std::uint64_t step = trace_.records.size();
  const std::uint64_t epoch = step / len;
  const std::size_t pos = static_cast<std::size_t>(step % len);

  if (pos == 0) {
    epoch_clean_ = true;
    if (config_.shuffle) {
      auto order = shuffled_order(len, rng_);
      rng_ = order.rng;
      order_ = std::move(order.value);
    } else if (order_.size() != len) {
      order_.resize(len);
      std::iota(order_.begin(), order_.end(), std::size_t{0});
    }
  }
  const std::size_t row = order_[pos];
  const GateSample& sample = table_.samples[row];

  IterationRecord record = std::visit(
      [&](auto& s) -> IterationRecord {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, perceptron::State>) {
          auto [next, rec] = perceptron::present_sample(s, sample);
          s = next;
          return std::move(rec);
        } else if constexpr (std::is_same_v<S, mlp321::State>) {
          auto [next, rec] = mlp321::present_sample(s, sample);
          s = next;
          return std::move(rec);
        } else {
          throw Error(Errc::unsupported, "kmeans sessions cannot be stepped");
        }
      },
      state_);
  record.step = step;
  record.epoch = epoch;
  record.sample = row;
  epoch_clean_ = epoch_clean_ && record.error == 0;
  trace_.records.push_back(record);

  if (pos + 1 == len) {
    trace_.epochs_used = epoch + 1;
    if (epoch_clean_) {
      status_ = Status::converged;
      trace_.converged = true;
    } else if (epoch + 1 >= config_.max_epochs) {
      status_ = Status::exhausted;
    }
  }
  return record;
}

std::vector<IterationRecord> Session::step(std::size_t count) {
  require_steppable();
  std::vector<IterationRecord> out;
  out.reserve(count);
  while (out.size() < count && status_ == Status::running) out.push_back(present_next());
  return out;
}

void Session::run() {
  require_steppable();
  while (status_ == Status::running) present_next();
}

void Session::reset(std::optional<std::uint64_t> new_seed) {
  if (new_seed) config_.seed = *new_seed;
  initialize();
}

std::string Session::export_trace(TraceFormat format) const {
  if (format == TraceFormat::json) return trace_to_json(trace_).dump();
  if (trace_.cloud) return write_kmeans_csv(*trace_.cloud);
  return write_trace_csv(layout(), trace_.records);
}

}  // namespace playbench
