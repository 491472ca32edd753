#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sepfft {

enum class RotationKind { Identity, QuarterTurn, Generic };

/// The 2x2 block [[c, s], [-s, c]]. Acting on a (re, im) pair it multiplies
/// the complex sample by exp(-j*theta) where (c, s) = (cos theta, sin theta).
struct RotationBlock {
  double c = 1.0;
  double s = 0.0;
  RotationKind kind = RotationKind::Identity;

  void apply(double& re, double& im) const {
    const double r = c * re + s * im;
    const double i = c * im - s * re;
    re = r;
    im = i;
  }
};

RotationKind classify_rotation(double c, double s);

/// Block for stage i >= 1 and 0 <= q < 2^(i-1), angle 2*pi*q / 2^i.
/// Angles that are multiples of pi/2 are stored as exact 0/1 values.
RotationBlock rotation_block(int stage, std::uint64_t q);

/// Rotation blocks for every stage 1..m of a 2^m-point transform. Stage i
/// holds 2^(i-1) blocks; storage is one flat array with stage i starting at
/// offset 2^(i-1) - 1.
class TwiddleTable {
 public:
  explicit TwiddleTable(int m);

  /// Builds a table from explicit blocks (2^m - 1 of them, stage-major).
  /// Used to probe the factorization with altered values.
  static TwiddleTable from_blocks(int m, std::vector<RotationBlock> blocks);

  int m() const { return m_; }
  std::span<const RotationBlock> stage(int i) const;
  const RotationBlock& at(int i, std::uint64_t q) const;
  std::size_t total_blocks() const { return blocks_.size(); }

 private:
  TwiddleTable() = default;

  int m_ = 0;
  std::vector<RotationBlock> blocks_;
};

inline TwiddleTable build_twiddle_table(int m) { return TwiddleTable(m); }

}  // namespace sepfft
