// Prints the empirical figures the test suite pins as regression constants.
//   oracle_measure
#include <algorithm>
#include <cstdio>
#include <vector>

#include "oracles.hpp"

namespace {

void robustness() {
  long worst = 0;
  int stuck = 0, runs = 0;
  for (const char* gate : {"and2", "or2"}) {
    for (double lr : {0.1, 0.5, 1.0}) {
      int fails = 0;
      long max_epochs = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        oracle::ReplayConfig c;
        c.gate = gate;
        c.lr = lr;
        c.init = "uniform";
        c.seed = seed;
        c.max_epochs = 10000;
        const auto r = oracle::replay(c);
        ++runs;
        if (r.converged) {
          max_epochs = std::max(max_epochs, r.epochs_used);
        } else {
          ++fails;
        }
      }
      std::printf("perceptron %s lr=%.1f: stuck=%d/100 max_epochs=%ld\n", gate, lr, fails, max_epochs);
      worst = std::max(worst, max_epochs);
      stuck += fails;
    }
  }
  std::printf("perceptron overall: runs=%d stuck=%d max_epochs_converged=%ld\n", runs, stuck, worst);
}

void learnability() {
  for (const char* gate : {"and3", "or3"}) {
    std::vector<long> epochs;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      oracle::ReplayConfig c;
      c.model = "mlp321";
      c.gate = gate;
      c.bias = true;
      c.lr = 0.1;
      c.init = "uniform";
      c.seed = seed;
      c.max_epochs = 5000;
      const auto r = oracle::replay(c);
      if (r.converged) epochs.push_back(r.epochs_used);
    }
    std::sort(epochs.begin(), epochs.end());
    const long median = epochs.empty() ? 0 : epochs[(epochs.size() - 1) / 2];
    std::printf("bias %s: converged=%zu/100 lower_median_epochs=%ld max_epochs=%ld\n", gate, epochs.size(), median,
                epochs.empty() ? 0 : epochs.back());
  }
}

}  // namespace

int main() {
  robustness();
  learnability();
}
