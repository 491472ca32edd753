#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sepfft/signal_io.hpp"
#include "sepfft/transform.hpp"

namespace sepfft::cli {

// Process exit status contract.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // unreadable/unparsable input, bad arguments, limits
  kBadLength = 2,      // sample count is not a power of two
  kVerifyFailed = 3,   // a factorization deviation exceeded the threshold
};

constexpr double kVerifyThreshold = 1e-12;
constexpr int kNaiveBenchLimit = 12;

struct TransformOptions {
  std::string input;   // "-" reads stdin
  std::string output;  // "-" writes stdout
  Variant variant = Variant::DIT;
  bool inverse = false;
  std::optional<io::SignalFormat> format;  // default: from file extension
};

int cmd_transform(const TransformOptions& opts, std::ostream& out,
                  std::ostream& err);

int cmd_verify(int max_m, std::ostream& out, std::ostream& err);

struct BenchOptions {
  int min_m = 10;
  int max_m = 12;
  int reps = 5;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// Full argument parsing and dispatch; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sepfft::cli
