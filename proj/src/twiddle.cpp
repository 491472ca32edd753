#include "sepfft/twiddle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "sepfft/error.hpp"

namespace sepfft {

namespace {

constexpr int kMaxTableStages = 40;

}  // namespace

RotationKind classify_rotation(double c, double s) {
  if (c == 1.0 && s == 0.0) return RotationKind::Identity;
  if (c == 0.0 && s == 1.0) return RotationKind::QuarterTurn;
  return RotationKind::Generic;
}

RotationBlock rotation_block(int stage, std::uint64_t q) {
  if (stage < 1 || stage > 62) {
    throw InvalidInput("stage " + std::to_string(stage) + " out of range");
  }
  const std::uint64_t half = std::uint64_t{1} << (stage - 1);
  if (q >= half) {
    throw InvalidInput("twiddle index " + std::to_string(q) +
                       " out of range for stage " + std::to_string(stage));
  }
  if (q == 0) return {1.0, 0.0, RotationKind::Identity};
  // 4q == 2^i  <=>  angle == pi/2.
  if (4 * q == 2 * half) return {0.0, 1.0, RotationKind::QuarterTurn};

  // Division by a power of two is exact.
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(q) /
                       static_cast<double>(2 * half);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, s, classify_rotation(c, s)};
}

TwiddleTable::TwiddleTable(int m) : m_(m) {
  if (m < 0 || m > kMaxTableStages) {
    throw CapacityError("twiddle table stage count " + std::to_string(m) +
                        " out of range");
  }
  blocks_.reserve((std::size_t{1} << m) - 1);
  for (int i = 1; i <= m; ++i) {
    const std::uint64_t count = std::uint64_t{1} << (i - 1);
    for (std::uint64_t q = 0; q < count; ++q) {
      blocks_.push_back(rotation_block(i, q));
    }
  }
}

TwiddleTable TwiddleTable::from_blocks(int m, std::vector<RotationBlock> blocks) {
  if (m < 0 || m > kMaxTableStages) {
    throw CapacityError("twiddle table stage count out of range");
  }
  if (blocks.size() != (std::size_t{1} << m) - 1) {
    throw InvalidInput("expected " + std::to_string((std::size_t{1} << m) - 1) +
                       " rotation blocks, got " + std::to_string(blocks.size()));
  }
  for (auto& b : blocks) b.kind = classify_rotation(b.c, b.s);
  TwiddleTable t;
  t.m_ = m;
  t.blocks_ = std::move(blocks);
  return t;
}

std::span<const RotationBlock> TwiddleTable::stage(int i) const {
  if (i < 1 || i > m_) {
    throw InvalidInput("stage " + std::to_string(i) + " out of range 1.." +
                       std::to_string(m_));
  }
  const std::size_t count = std::size_t{1} << (i - 1);
  return std::span<const RotationBlock>(blocks_).subspan(count - 1, count);
}

const RotationBlock& TwiddleTable::at(int i, std::uint64_t q) const {
  const auto blocks = stage(i);
  if (q >= blocks.size()) {
    throw InvalidInput("twiddle index " + std::to_string(q) + " out of range");
  }
  return blocks[q];
}

}  // namespace sepfft
