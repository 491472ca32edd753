#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sepfft {

/// Complex samples held as two separate real channels.
struct SplitSignal {
  std::vector<double> re;
  std::vector<double> im;

  std::size_t size() const { return re.size(); }
  bool operator==(const SplitSignal&) const = default;
};

/// Returns log2(n) when n is a power of two (n >= 1), otherwise nullopt.
std::optional<int> exact_log2(std::size_t n);

/// Throws InvalidInput unless re/im have equal power-of-two length.
/// Returns the stage count m with N = 2^m.
int check_split_signal(const SplitSignal& s);

/// Length-2N real vector in pairwise layout [x0r, x0i, x1r, x1i, ...].
class InterleavedBuffer {
 public:
  /// Takes ownership of `data`; its length must be 2^(m+1) for some m >= 0.
  explicit InterleavedBuffer(std::vector<double> data);

  static InterleavedBuffer zeros(int m);

  int m() const { return m_; }
  std::size_t pairs() const { return data_.size() / 2; }
  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  const std::vector<double>& vec() const { return data_; }

  bool operator==(const InterleavedBuffer&) const = default;

 private:
  std::vector<double> data_;
  int m_ = 0;
};

InterleavedBuffer interleave(const SplitSignal& s);

SplitSignal deinterleave(const InterleavedBuffer& b);
/// Raw-span variant; only requires an even length.
SplitSignal deinterleave(std::span<const double> data);

/// Reverses the low `bits` bits of n. Requires n < 2^bits.
std::uint64_t bit_reverse_index(std::uint64_t n, int bits);

/// Out-of-place pairwise bit-reversal: out pair k = in pair rev(k).
InterleavedBuffer permute_pairwise_bitrev(const InterleavedBuffer& b);

/// In-place pairwise bit-reversal over 2^(m+1) reals by pair swaps.
void permute_pairwise_bitrev_inplace(std::span<double> data, int m);

}  // namespace sepfft
