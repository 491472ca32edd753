#include "sepfft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sepfft/dense.hpp"
#include "sepfft/error.hpp"

namespace sepfft::oracle {

namespace {

std::size_t check_channels(const SplitSignal& x) {
  if (x.re.size() != x.im.size()) {
    throw InvalidInput("channel length mismatch: " +
                       std::to_string(x.re.size()) + " vs " +
                       std::to_string(x.im.size()));
  }
  if (x.re.empty()) throw InvalidInput("signal is empty");
  return x.re.size();
}

}  // namespace

SplitSignal naive_dft(const SplitSignal& x) {
  const std::size_t n = check_channels(x);
  // Every term's angle is 2*pi*r/N with r = k*t mod N, so the N distinct
  // cos/sin values are evaluated once and looked up by r.
  std::vector<double> cos_r(n);
  std::vector<double> sin_r(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(n);
    cos_r[r] = std::cos(angle);
    sin_r[r] = std::sin(angle);
  }
  SplitSignal y{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    double acc_re = 0.0;
    double acc_im = 0.0;
    std::size_t r = 0;  // k*t mod N
    for (std::size_t t = 0; t < n; ++t) {
      const double c = cos_r[r];
      const double s = sin_r[r];
      // (xr + j xi)(c - j s)
      acc_re += x.re[t] * c + x.im[t] * s;
      acc_im += x.im[t] * c - x.re[t] * s;
      r += k;
      if (r >= n) r -= n;
    }
    y.re[k] = acc_re;
    y.im[k] = acc_im;
  }
  return y;
}

SplitSignal naive_real_mv(const SplitSignal& x) {
  const std::size_t n = check_channels(x);
  const auto c = dense::build_cos_matrix(n);
  const auto s = dense::build_sine_matrix(n);
  const auto c_re = c.apply(x.re);
  const auto c_im = c.apply(x.im);
  const auto s_re = s.apply(x.re);
  const auto s_im = s.apply(x.im);
  SplitSignal y{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    y.re[k] = c_re[k] + s_im[k];
    y.im[k] = c_im[k] - s_re[k];
  }
  return y;
}

}  // namespace sepfft::oracle
