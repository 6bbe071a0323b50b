#pragma once

#include <iosfwd>

namespace playbench::frontends {

/// Subcommands:
///   perceptron --gate and|or --lr R --init zeros|uniform --seed S --max-epochs E [--shuffle] [--trace PATH]
///   mlp --gate and3|or3 --mode paper|bias [--no-zero-row] (same training flags)
///   kmeans --n N --k K --seed S --out PATH|-
///   serve --port P [--host H] [--data-dir DIR]    (PLAYBENCH_PORT is the --port fallback)
///
/// Returns 0 on success, including runs that do not converge, 2 on argument
/// or configuration errors and 1 on I/O or server failures.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace playbench::frontends
