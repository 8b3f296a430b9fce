#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace schwinger::cli {

enum class Format { csv, json };

/// Largest --nmax accepted without --force (basis dimension 125,751).
inline constexpr int kNMaxLimit = 500;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsageOrIo = 2,
};

struct RunConfig {
  int n_max = 20;
  bool n_max_given = false;
  double hbar = 1.0;
  double tol = 1e-12;
  Format format = Format::csv;
  std::optional<std::string> output_path;
  std::uint64_t seed = 0;
  bool meta = true;
  bool force = false;
  unsigned threads = 1;
};

/// Worker count from SCHWINGER_THREADS, else hardware concurrency.
unsigned default_thread_count();

/// Formats a double with 17 significant digits ("%.17g"); used for every
/// floating-point field in CSV output.
std::string format_number(double value);

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out` (or --out PATH), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace schwinger::cli
