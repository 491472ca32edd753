#include "sepfft/signal_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "sepfft/error.hpp"

namespace sepfft::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  // from_chars rejects a leading '+', which strtod-style writers may emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" +
                     std::string(field) + "' as a number");
  }
  return value;
}

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    v = __builtin_bswap64(v);
  }
  return v;
}

void format_value(std::ostream& os, double v) {
  char buf[32];
  // +0.0 folds -0 into 0.
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  os << buf;
}

}  // namespace

SignalFormat format_from_path(std::string_view path) {
  if (path.ends_with(".csv")) return SignalFormat::CsvSplit;
  if (path.ends_with(".bin")) return SignalFormat::BinInterleaved;
  throw InvalidInput("cannot infer format from '" + std::string(path) +
                     "'; use --format csv|bin");
}

SignalFormat parse_format_name(std::string_view name) {
  if (name == "csv") return SignalFormat::CsvSplit;
  if (name == "bin") return SignalFormat::BinInterleaved;
  throw InvalidInput("unknown format '" + std::string(name) + "'");
}

SplitSignal read_csv(std::istream& is) {
  SplitSignal s;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(is, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!seen_data && text == "re,im") {
      seen_data = true;
      continue;
    }
    seen_data = true;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 're,im', got '" + std::string(text) + "'");
    }
    s.re.push_back(parse_number(text.substr(0, comma), line_no));
    s.im.push_back(parse_number(text.substr(comma + 1), line_no));
  }
  if (is.bad()) throw ParseError("read error");
  return s;
}

void write_csv(std::ostream& os, const SplitSignal& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    format_value(os, s.re[k]);
    os << ',';
    format_value(os, s.im[k]);
    os << '\n';
  }
}

std::vector<double> read_bin(std::istream& is) {
  const std::string bytes((std::istreambuf_iterator<char>(is)),
                          std::istreambuf_iterator<char>());
  if (is.bad()) throw ParseError("read error");
  if (bytes.size() % 16 != 0) {
    throw ParseError("binary input has " + std::to_string(bytes.size()) +
                     " bytes, not a whole number of (re, im) double pairs");
  }
  std::vector<double> out(bytes.size() / 8);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::uint64_t raw = 0;
    std::memcpy(&raw, bytes.data() + 8 * k, 8);
    out[k] = std::bit_cast<double>(to_little_endian(raw));
  }
  return out;
}

void write_bin(std::ostream& os, std::span<const double> interleaved) {
  for (const double v : interleaved) {
    const std::uint64_t raw = to_little_endian(std::bit_cast<std::uint64_t>(v));
    char buf[8];
    std::memcpy(buf, &raw, 8);
    os.write(buf, 8);
  }
}

}  // namespace sepfft::io
