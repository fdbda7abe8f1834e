#ifndef QCAP_CLI_HPP
#define QCAP_CLI_HPP

#include <ostream>

namespace qcap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;

/// Entry point of `qcap-sim`. Results go to `--out` (or `out`), diagnostics to `err`.
/// Returns 0 on success, 2 on a configuration error and 1 when a numerical
/// contract (cutoff convergence, solve residual, quadrature) fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcap::cli

#endif  // QCAP_CLI_HPP
