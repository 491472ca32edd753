#include "sepfft/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "sepfft/dense.hpp"
#include "sepfft/error.hpp"
#include "sepfft/oracle.hpp"

namespace sepfft::cli {

namespace {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Reads the whole input as the requested format and returns interleaved
// samples. Throws io::ParseError / std::runtime_error on failure.
std::vector<double> load_signal(const std::string& path, io::SignalFormat fmt) {
  std::ifstream file;
  std::istream* is = &std::cin;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw io::ParseError("cannot open '" + path + "'");
    is = &file;
  }
  if (fmt == io::SignalFormat::BinInterleaved) return io::read_bin(*is);
  const SplitSignal s = io::read_csv(*is);
  std::vector<double> out(2 * s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    out[2 * k] = s.re[k];
    out[2 * k + 1] = s.im[k];
  }
  return out;
}

void store_signal(const std::string& path, io::SignalFormat fmt,
                  std::span<const double> data, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (path != "-") {
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    os = &file;
  }
  if (fmt == io::SignalFormat::BinInterleaved) {
    io::write_bin(*os, data);
  } else {
    io::write_csv(*os, deinterleave(data));
  }
  os->flush();
  if (!*os) throw std::runtime_error("write to '" + path + "' failed");
}

template <typename F>
double median_seconds(int reps, F&& body) {
  std::vector<double> times;
  times.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

int cmd_transform(const TransformOptions& opts, std::ostream& out,
                  std::ostream& err) {
  io::SignalFormat fmt;
  try {
    if (opts.format) {
      fmt = *opts.format;
    } else if (opts.input != "-") {
      fmt = io::format_from_path(opts.input);
    } else {
      fmt = io::SignalFormat::CsvSplit;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  std::vector<double> data;
  try {
    data = load_signal(opts.input, fmt);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  const std::size_t samples = data.size() / 2;
  const auto m = exact_log2(samples);
  if (!m) {
    err << "error: input has " << samples
        << " samples; the length must be a power of two\n";
    return kBadLength;
  }

  try {
    const FftPlan plan(*m, opts.variant);
    if (opts.inverse) {
      ifft(plan, data);
    } else {
      fft(plan, data);
    }
    store_signal(opts.output, fmt, data, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_verify(int max_m, std::ostream& out, std::ostream& err) {
  if (max_m < 0 || max_m > dense::kDefaultDenseLimit) {
    err << "error: --max-m must be in 0.." << dense::kDefaultDenseLimit
        << " (dense verification limit), got " << max_m << '\n';
    return kFailure;
  }
  bool all_pass = true;
  for (int m = 1; m <= max_m; ++m) {
    for (const Variant v : {Variant::DIT, Variant::DIF}) {
      const double dev = dense::verify_factorization(m, v);
      const bool pass = dev <= kVerifyThreshold;
      all_pass = all_pass && pass;
      out << "m=" << m << ' ' << to_string(v) << " max_dev=" << format_sci(dev)
          << ' ' << (pass ? "PASS" : "FAIL") << '\n';
    }
  }
  return all_pass ? kOk : kVerifyFailed;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.min_m < 0 || opts.max_m < opts.min_m ||
      opts.max_m > FftPlan::kDefaultMaxStages || opts.reps < 1) {
    err << "error: need 0 <= min-m <= max-m <= " << FftPlan::kDefaultMaxStages
        << " and reps >= 1\n";
    return kFailure;
  }
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;

  out << "m,N,algo,median_us,real_mults,real_adds,generic_rotations,"
         "quarter_turns,identity_rotations,executed_real_mults,"
         "executed_real_adds\n";
  for (int m = opts.min_m; m <= opts.max_m; ++m) {
    const std::size_t n = std::size_t{1} << m;
    std::vector<double> input(2 * n);
    for (double& v : input) v = gauss(rng);
    std::vector<double> work(input.size());

    for (const Variant v : {Variant::DIT, Variant::DIF}) {
      const FftPlan plan(m, v);
      const double t = median_seconds(opts.reps, [&] {
        std::copy(input.begin(), input.end(), work.begin());
        fft(plan, work);
      });
      const FlopReport f = count_flops(plan);
      out << m << ',' << n << ',' << to_string(v) << ',' << t * 1e6 << ','
          << f.real_mults << ',' << f.real_adds << ',' << f.generic_rotations
          << ',' << f.quarter_turns << ',' << f.identity_rotations << ','
          << f.executed_real_mults << ',' << f.executed_real_adds << '\n';
    }
    if (m <= kNaiveBenchLimit) {
      const SplitSignal x = deinterleave(input);
      const double t = median_seconds(opts.reps, [&] {
        const auto y = oracle::naive_dft(x);
        if (y.size() != n) std::abort();
      });
      out << m << ',' << n << ",naive," << t * 1e6 << ",,,,,,,\n";
    }
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Radix-2 DFT with separate real and imaginary channels"};
  app.require_subcommand(1);

  TransformOptions topts;
  std::string algo = "dit";
  std::string format;
  auto* transform = app.add_subcommand(
      "transform", "Transform a signal file (CSV re,im lines or binary pairs)");
  transform->add_option("input", topts.input, "Input path or '-'")->required();
  transform->add_option("output", topts.output, "Output path or '-'")->required();
  transform->add_option("--algo", algo, "Stage ordering")
      ->check(CLI::IsMember({"dit", "dif"}));
  transform->add_flag("--inverse", topts.inverse, "Inverse transform (1/N scaled)");
  transform->add_option("--format", format, "File format (default: by extension)")
      ->check(CLI::IsMember({"csv", "bin"}));

  int verify_max_m = 6;
  auto* verify = app.add_subcommand(
      "verify", "Check the dense stage-product identity for m = 1..max-m");
  verify->add_option("--max-m", verify_max_m, "Largest stage count");

  BenchOptions bopts;
  auto* bench = app.add_subcommand("bench", "Time DIT, DIF and the naive DFT");
  bench->add_option("--min-m", bopts.min_m, "Smallest stage count");
  bench->add_option("--max-m", bopts.max_m, "Largest stage count");
  bench->add_option("--reps", bopts.reps, "Repetitions per timing (median)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  if (*transform) {
    topts.variant = algo == "dif" ? Variant::DIF : Variant::DIT;
    if (!format.empty()) topts.format = io::parse_format_name(format);
    return cmd_transform(topts, out, err);
  }
  if (*verify) return cmd_verify(verify_max_m, out, err);
  return cmd_bench(bopts, out, err);
}

}  // namespace sepfft::cli
