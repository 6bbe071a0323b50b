#pragma once

// Conversions between engine values and the oracle's plain structs.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "playbench/config.hpp"
#include "playbench/kmeans.hpp"
#include "playbench/session.hpp"
#include "playbench/trace.hpp"

namespace bridge {

inline std::vector<oracle::Pt> to_oracle(const std::vector<playbench::Point>& pts) {
  std::vector<oracle::Pt> out;
  for (auto p : pts) out.push_back({p.x, p.y});
  return out;
}

inline oracle::ReplayConfig to_oracle(const playbench::SessionConfig& c) {
  oracle::ReplayConfig r;
  r.model = c.model == playbench::Model::mlp321 ? "mlp321" : "perceptron";
  r.gate = std::string(playbench::to_string(c.gate));
  r.bias = c.mode == playbench::mlp321::Mode::bias_augmented && c.model == playbench::Model::mlp321;
  r.lr = c.lr;
  r.init = std::string(playbench::to_string(c.init.kind));
  r.init_values = c.init.values;
  r.seed = c.seed;
  r.zero_row = c.include_zero_row;
  r.max_epochs = static_cast<long>(c.max_epochs);
  r.shuffle = c.shuffle;
  return r;
}

inline std::vector<playbench::IterationRecord> to_records(const oracle::Replay& replay) {
  std::vector<playbench::IterationRecord> out;
  for (const auto& row : replay.rows) {
    playbench::IterationRecord r;
    r.step = static_cast<std::uint64_t>(row.step);
    r.epoch = static_cast<std::uint64_t>(row.epoch);
    r.sample = static_cast<std::uint64_t>(row.sample);
    r.inputs = row.x;
    r.desired = row.desired;
    r.net = row.net;
    r.output = row.out;
    r.error = row.err;
    r.weights = row.w;
    r.biases = row.b;
    out.push_back(std::move(r));
  }
  return out;
}

// Oracle and engine agree on every record, bit for bit, and on the outcome.
inline bool replay_matches(const playbench::Session& session, const oracle::Replay& replay) {
  const auto& t = session.trace();
  return playbench::bit_identical(t.records, to_records(replay)) && t.converged == replay.converged &&
         t.epochs_used == static_cast<std::uint64_t>(replay.epochs_used);
}

}  // namespace bridge
