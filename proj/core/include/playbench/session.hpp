#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "playbench/config.hpp"
#include "playbench/kmeans.hpp"
#include "playbench/mlp321.hpp"
#include "playbench/perceptron.hpp"
#include "playbench/rng.hpp"
#include "playbench/trace.hpp"

namespace playbench {

enum class Status { running, converged, exhausted };

std::string_view to_string(Status status) noexcept;

struct TrainingTrace {
  SessionConfig config;
  std::vector<IterationRecord> records;
  bool converged = false;
  std::uint64_t epochs_used = 0;     // completed epochs
  std::optional<KMeansResult> cloud;  // kmeans sessions only
};

using ModelState = std::variant<perceptron::State, mlp321::State, KMeansResult>;

enum class TraceFormat { json, csv };

/// Stepping state machine around one model.
///
/// One step presents one sample. Convergence and exhaustion are decided only
/// at epoch boundaries: a clean epoch converges the session, and finishing
/// epoch `max_epochs` without one exhausts it. K-means sessions are computed
/// on construction and start out converged.
///
/// A Session is a value; callers sharing one must serialize access.
class Session {
 public:
  /// Throws Error(invalid_config) for an inconsistent config.
  explicit Session(SessionConfig config);

  const SessionConfig& config() const noexcept { return config_; }
  Status status() const noexcept { return status_; }
  bool finished() const noexcept { return status_ != Status::running; }
  const ModelState& state() const noexcept { return state_; }
  const ModelState& initial_state() const noexcept { return initial_; }
  const TrainingTrace& trace() const noexcept { return trace_; }
  const TruthTable& table() const noexcept { return table_; }
  TraceLayout layout() const noexcept { return layout_of(config_); }

  /// Presents up to `count` samples, stopping early if the session finishes.
  /// Throws Error(unsupported) for kmeans sessions and Error(state_error) once finished.
  std::vector<IterationRecord> step(std::size_t count = 1);

  /// Steps until converged or exhausted; same preconditions as step().
  void run();

  void reset(std::optional<std::uint64_t> new_seed = std::nullopt);

  std::string export_trace(TraceFormat format) const;

 private:
  void initialize();
  void require_steppable() const;
  IterationRecord present_next();

  SessionConfig config_;
  TruthTable table_;
  ModelState initial_;
  ModelState state_;
  Rng64 rng_;
  std::vector<std::size_t> order_;
  bool epoch_clean_ = true;
  Status status_ = Status::running;
  TrainingTrace trace_;
};

}  // namespace playbench
