#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sepfft/layout.hpp"

namespace sepfft::io {

enum class SignalFormat { CsvSplit, BinInterleaved };

/// Malformed signal file content.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks the format from a ".csv" / ".bin" extension; throws InvalidInput
/// for anything else.
SignalFormat format_from_path(std::string_view path);
SignalFormat parse_format_name(std::string_view name);

// CSV: one "re,im" sample per line. A leading "re,im" header line and blank
// lines are skipped. Length is not checked here.
SplitSignal read_csv(std::istream& is);
/// Emits 17 significant digits per value, no header. Negative zero is
/// written as 0.
void write_csv(std::ostream& os, const SplitSignal& s);

// Binary: headerless little-endian IEEE-754 doubles, interleaved pairs.
// read_bin throws ParseError unless the byte count is a multiple of 16.
std::vector<double> read_bin(std::istream& is);
void write_bin(std::ostream& os, std::span<const double> interleaved);

}  // namespace sepfft::io
