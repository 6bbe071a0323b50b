#pragma once

#include <cstddef>
#include <utility>

#include "playbench/dataset.hpp"
#include "playbench/error.hpp"
#include "playbench/trace.hpp"

namespace playbench::detail {

// Epoch loop shared by both networks. Stops after the first epoch in which
// every sample had error 0; that epoch counts toward epochs_used.
template <class State, class Present>
TrainOutcome<State> train_epochs(State state, const TruthTable& table, std::size_t max_epochs, Present&& present) {
  if (max_epochs == 0) throw Error(Errc::invalid_input, "max_epochs must be at least 1");

  TrainOutcome<State> out{std::move(state), {}, false, 0};
  out.records.reserve(table.size() * (max_epochs < 64 ? max_epochs : 64));
  std::uint64_t step = 0;
  for (std::size_t epoch = 0; epoch < max_epochs; ++epoch) {
    bool clean = true;
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto [next, record] = present(out.state, table.samples[i]);
      record.step = step++;
      record.epoch = epoch;
      record.sample = i;
      clean = clean && record.error == 0;
      out.state = std::move(next);
      out.records.push_back(std::move(record));
    }
    out.epochs_used = epoch + 1;
    if (clean) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace playbench::detail
