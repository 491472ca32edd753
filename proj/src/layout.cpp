#include "sepfft/layout.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <utility>

#include "sepfft/error.hpp"

namespace sepfft {

std::optional<int> exact_log2(std::size_t n) {
  if (!std::has_single_bit(n)) return std::nullopt;
  return std::countr_zero(n);
}

int check_split_signal(const SplitSignal& s) {
  if (s.re.size() != s.im.size()) {
    throw InvalidInput("channel length mismatch: re has " +
                       std::to_string(s.re.size()) + " samples, im has " +
                       std::to_string(s.im.size()));
  }
  const auto m = exact_log2(s.re.size());
  if (!m) {
    throw InvalidInput("sample count " + std::to_string(s.re.size()) +
                       " is not a power of two");
  }
  return *m;
}

InterleavedBuffer::InterleavedBuffer(std::vector<double> data)
    : data_(std::move(data)) {
  const auto len = exact_log2(data_.size());
  if (!len || *len < 1) {
    throw InvalidInput("interleaved length " + std::to_string(data_.size()) +
                       " is not 2^(m+1)");
  }
  m_ = *len - 1;
}

InterleavedBuffer InterleavedBuffer::zeros(int m) {
  if (m < 0 || m > 60) throw InvalidInput("stage count out of range");
  return InterleavedBuffer(std::vector<double>(std::size_t{2} << m, 0.0));
}

InterleavedBuffer interleave(const SplitSignal& s) {
  check_split_signal(s);
  const std::size_t n = s.size();
  std::vector<double> out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[2 * k] = s.re[k];
    out[2 * k + 1] = s.im[k];
  }
  return InterleavedBuffer(std::move(out));
}

SplitSignal deinterleave(std::span<const double> data) {
  if (data.size() % 2 != 0) {
    throw InvalidInput("interleaved data has odd length " +
                       std::to_string(data.size()));
  }
  const std::size_t n = data.size() / 2;
  SplitSignal s{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    s.re[k] = data[2 * k];
    s.im[k] = data[2 * k + 1];
  }
  return s;
}

SplitSignal deinterleave(const InterleavedBuffer& b) {
  return deinterleave(b.data());
}

std::uint64_t bit_reverse_index(std::uint64_t n, int bits) {
  if (bits < 0 || bits > 63 || n >= (std::uint64_t{1} << bits)) {
    throw InvalidInput("index " + std::to_string(n) + " out of range for " +
                       std::to_string(bits) + "-bit reversal");
  }
  std::uint64_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | ((n >> i) & 1u);
  }
  return r;
}

InterleavedBuffer permute_pairwise_bitrev(const InterleavedBuffer& b) {
  const int m = b.m();
  const auto in = b.data();
  std::vector<double> out(in.size());
  for (std::uint64_t k = 0; k < b.pairs(); ++k) {
    const std::uint64_t src = bit_reverse_index(k, m);
    out[2 * k] = in[2 * src];
    out[2 * k + 1] = in[2 * src + 1];
  }
  return InterleavedBuffer(std::move(out));
}

namespace {

// Tiled reversal: index k = (hi, mid, lo) with hi and lo kTileBits wide maps
// to (rev lo, rev mid, rev hi). For each mid/rev(mid) couple the two tiles
// of pairs are staged in small buffers so the reads and writes run along
// contiguous lo-runs instead of jumping across the whole buffer.
constexpr int kTileBits = 5;
constexpr std::size_t kTile = std::size_t{1} << kTileBits;

std::size_t reverse_bits(std::size_t n, int bits) {
  std::size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | ((n >> i) & 1u);
  }
  return r;
}

void swap_walk(std::span<double> data) {
  const std::size_t pairs = data.size() / 2;
  // j tracks the reversal of k via a reversed-carry increment.
  std::size_t j = 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    if (k < j) {
      std::swap(data[2 * k], data[2 * j]);
      std::swap(data[2 * k + 1], data[2 * j + 1]);
    }
    std::size_t bit = pairs >> 1;
    while (bit != 0 && (j & bit) != 0) {
      j ^= bit;
      bit >>= 1;
    }
    j |= bit;
  }
}

void tiled_reverse(std::span<double> data, int m) {
  const int mid_bits = m - 2 * kTileBits;
  const std::size_t mids = std::size_t{1} << mid_bits;
  const int hi_shift = m - kTileBits;

  std::array<std::size_t, kTile> rev_tile{};
  for (std::size_t t = 0; t < kTile; ++t) rev_tile[t] = reverse_bits(t, kTileBits);

  std::array<double, 2 * kTile * kTile> tile_a;
  std::array<double, 2 * kTile * kTile> tile_b;

  const auto load = [&](std::array<double, 2 * kTile * kTile>& tile, std::size_t mid) {
    for (std::size_t hi = 0; hi < kTile; ++hi) {
      const double* src =
          data.data() + 2 * ((hi << hi_shift) | (mid << kTileBits));
      std::copy(src, src + 2 * kTile, tile.data() + 2 * kTile * hi);
    }
  };
  // Pair (hi, mid, lo) <- source tile entry [rev lo][rev hi].
  const auto store = [&](const std::array<double, 2 * kTile * kTile>& tile,
                         std::size_t mid) {
    for (std::size_t hi = 0; hi < kTile; ++hi) {
      double* dst = data.data() + 2 * ((hi << hi_shift) | (mid << kTileBits));
      const std::size_t col = rev_tile[hi];
      for (std::size_t lo = 0; lo < kTile; ++lo) {
        const double* src = tile.data() + 2 * (kTile * rev_tile[lo] + col);
        dst[2 * lo] = src[0];
        dst[2 * lo + 1] = src[1];
      }
    }
  };

  for (std::size_t mid = 0; mid < mids; ++mid) {
    const std::size_t mid_rev = reverse_bits(mid, mid_bits);
    if (mid_rev < mid) continue;
    load(tile_a, mid);
    if (mid_rev == mid) {
      store(tile_a, mid);
    } else {
      load(tile_b, mid_rev);
      store(tile_b, mid);
      store(tile_a, mid_rev);
    }
  }
}

}  // namespace

void permute_pairwise_bitrev_inplace(std::span<double> data, int m) {
  if (m < 0 || m > 62 || data.size() != (std::size_t{2} << m)) {
    throw InvalidInput("buffer length does not match 2^(m+1)");
  }
  if (m >= 2 * kTileBits) {
    tiled_reverse(data, m);
  } else {
    swap_walk(data);
  }
}

}  // namespace sepfft
