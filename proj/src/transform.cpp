#include "sepfft/transform.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sepfft/error.hpp"

namespace sepfft {

namespace {

// Blocks of at most 2^(kLocalStages+1) reals (64 KiB) run their stages
// breadth-first. Larger blocks are scheduled depth-first: the sub-blocks are
// finished before the top stages sweep the block, so every sweep works on
// data that was touched recently. The per-element arithmetic is the same
// for any schedule.
constexpr int kLocalStages = 12;

int buffer_stages(std::span<const double> data) {
  const auto len = exact_log2(data.size());
  if (!len || *len < 1) {
    throw InvalidInput("interleaved length " + std::to_string(data.size()) +
                       " is not 2^(m+1)");
  }
  return *len - 1;
}

void check_plan_matches(const FftPlan& plan, std::span<const double> data) {
  const int m = buffer_stages(data);
  if (m != plan.m()) {
    throw InvalidInput("buffer holds 2^" + std::to_string(m) +
                       " samples but plan expects 2^" +
                       std::to_string(plan.m()));
  }
}

void check_stage(int stage, int m) {
  if (stage < 1 || stage > m) {
    throw InvalidInput("stage " + std::to_string(stage) +
                       " out of range 1.." + std::to_string(m));
  }
}

inline void rotate(const RotationBlock& w, double& re, double& im) {
  switch (w.kind) {
    case RotationKind::Identity:
      break;
    case RotationKind::QuarterTurn: {
      const double t = re;
      re = im;
      im = -t;
      break;
    }
    case RotationKind::Generic:
      w.apply(re, im);
      break;
  }
}

// Twiddle pass D(i) followed by butterfly W(i) on one pair of the two
// halves a, b of a block.
inline void dit_pair(const RotationBlock& w, double* a, double* b) {
  double br = b[0];
  double bi = b[1];
  rotate(w, br, bi);
  const double ar = a[0];
  const double ai = a[1];
  a[0] = ar + br;
  a[1] = ai + bi;
  b[0] = ar - br;
  b[1] = ai - bi;
}

// Butterfly W(i) followed by twiddle pass D(i).
inline void dif_pair(const RotationBlock& w, double* a, double* b) {
  const double ar = a[0];
  const double ai = a[1];
  const double br = b[0];
  const double bi = b[1];
  a[0] = ar + br;
  a[1] = ai + bi;
  double dr = ar - br;
  double di = ai - bi;
  rotate(w, dr, di);
  b[0] = dr;
  b[1] = di;
}

// Stage i over every block of 2^(i+1) reals in `data`; tw = stage i table.
void dit_stage(std::span<double> data, std::span<const RotationBlock> tw) {
  const std::size_t half = 2 * tw.size();
  for (std::size_t base = 0; base < data.size(); base += 2 * half) {
    double* a = data.data() + base;
    for (std::size_t q = 0; q < tw.size(); ++q) dit_pair(tw[q], a + 2 * q, a + half + 2 * q);
  }
}

void dif_stage(std::span<double> data, std::span<const RotationBlock> tw) {
  const std::size_t half = 2 * tw.size();
  for (std::size_t base = 0; base < data.size(); base += 2 * half) {
    double* a = data.data() + base;
    for (std::size_t q = 0; q < tw.size(); ++q) dif_pair(tw[q], a + 2 * q, a + half + 2 * q);
  }
}

// Stages i and i+1 in one sweep. A block of 2^(i+2) reals is split into
// quarters Q0..Q3; stage i pairs (Q0,Q1) and (Q2,Q3), stage i+1 pairs
// (Q0,Q2) and (Q1,Q3). Each element sees exactly the operations of the two
// separate stages, in the same order.
void dit_stage_pair(std::span<double> data, std::span<const RotationBlock> lo,
                    std::span<const RotationBlock> hi) {
  const std::size_t quarter = 2 * lo.size();
  for (std::size_t base = 0; base < data.size(); base += 4 * quarter) {
    double* q0 = data.data() + base;
    double* q1 = q0 + quarter;
    double* q2 = q1 + quarter;
    double* q3 = q2 + quarter;
    for (std::size_t q = 0; q < lo.size(); ++q) {
      const std::size_t o = 2 * q;
      dit_pair(lo[q], q0 + o, q1 + o);
      dit_pair(lo[q], q2 + o, q3 + o);
      dit_pair(hi[q], q0 + o, q2 + o);
      dit_pair(hi[lo.size() + q], q1 + o, q3 + o);
    }
  }
}

void dif_stage_pair(std::span<double> data, std::span<const RotationBlock> lo,
                    std::span<const RotationBlock> hi) {
  const std::size_t quarter = 2 * lo.size();
  for (std::size_t base = 0; base < data.size(); base += 4 * quarter) {
    double* q0 = data.data() + base;
    double* q1 = q0 + quarter;
    double* q2 = q1 + quarter;
    double* q3 = q2 + quarter;
    for (std::size_t q = 0; q < lo.size(); ++q) {
      const std::size_t o = 2 * q;
      dif_pair(hi[q], q0 + o, q2 + o);
      dif_pair(hi[lo.size() + q], q1 + o, q3 + o);
      dif_pair(lo[q], q0 + o, q1 + o);
      dif_pair(lo[q], q2 + o, q3 + o);
    }
  }
}

// DIT stages first..last (ascending) over `data`.
void run_dit_stages(std::span<double> data, const TwiddleTable& table, int first,
                    int last) {
  int i = first;
  for (; i + 1 <= last; i += 2) dit_stage_pair(data, table.stage(i), table.stage(i + 1));
  if (i == last) dit_stage(data, table.stage(i));
}

// DIF stages last..first (descending) over `data`.
void run_dif_stages(std::span<double> data, const TwiddleTable& table, int first,
                    int last) {
  int i = last;
  for (; i - 1 >= first; i -= 2) dif_stage_pair(data, table.stage(i - 1), table.stage(i));
  if (i == first) dif_stage(data, table.stage(i));
}

void dit_block(std::span<double> block, const TwiddleTable& table, int stages) {
  if (stages <= kLocalStages) {
    run_dit_stages(block, table, 1, stages);
    return;
  }
  if ((stages - kLocalStages) % 2 == 1) {
    const std::size_t half = block.size() / 2;
    dit_block(block.first(half), table, stages - 1);
    dit_block(block.subspan(half), table, stages - 1);
    dit_stage(block, table.stage(stages));
    return;
  }
  const std::size_t quarter = block.size() / 4;
  for (std::size_t k = 0; k < 4; ++k) {
    dit_block(block.subspan(k * quarter, quarter), table, stages - 2);
  }
  dit_stage_pair(block, table.stage(stages - 1), table.stage(stages));
}

void dif_block(std::span<double> block, const TwiddleTable& table, int stages) {
  if (stages <= kLocalStages) {
    run_dif_stages(block, table, 1, stages);
    return;
  }
  if ((stages - kLocalStages) % 2 == 1) {
    const std::size_t half = block.size() / 2;
    dif_stage(block, table.stage(stages));
    dif_block(block.first(half), table, stages - 1);
    dif_block(block.subspan(half), table, stages - 1);
    return;
  }
  dif_stage_pair(block, table.stage(stages - 1), table.stage(stages));
  const std::size_t quarter = block.size() / 4;
  for (std::size_t k = 0; k < 4; ++k) {
    dif_block(block.subspan(k * quarter, quarter), table, stages - 2);
  }
}

void swap_channels(std::span<double> data) {
  for (std::size_t k = 0; k < data.size(); k += 2) {
    std::swap(data[k], data[k + 1]);
  }
}

}  // namespace

const char* to_string(Variant v) {
  return v == Variant::DIT ? "dit" : "dif";
}

FftPlan::FftPlan(int m, Variant variant, int max_stages)
    : m_(m), variant_(variant) {
  if (m < 0) throw InvalidInput("stage count must be non-negative");
  if (m > max_stages) {
    throw CapacityError("stage count " + std::to_string(m) +
                        " exceeds the configured maximum " +
                        std::to_string(max_stages));
  }
  twiddles_ = std::make_shared<const TwiddleTable>(m);
}

FlopReport count_flops(const FftPlan& plan) {
  FlopReport r;
  const int m = plan.m();
  std::uint64_t generic_applications = 0;
  for (int i = 1; i <= m; ++i) {
    std::uint64_t generic = 0;
    for (const auto& w : plan.twiddles().stage(i)) {
      switch (w.kind) {
        case RotationKind::Identity:
          ++r.identity_rotations;
          break;
        case RotationKind::QuarterTurn:
          ++r.quarter_turns;
          break;
        case RotationKind::Generic:
          ++generic;
          break;
      }
    }
    r.generic_rotations += generic;
    generic_applications += generic << (m - i);
  }
  r.real_mults = 4 * r.generic_rotations;
  // Each pair butterfly is 4 real additions; there are N/2 per stage.
  r.real_adds = 4 * (plan.size() / 2) * static_cast<std::uint64_t>(m);
  r.executed_real_mults = 4 * generic_applications;
  r.executed_real_adds = r.real_adds + 2 * generic_applications;
  return r;
}

void apply_butterfly_stage(std::span<double> data, int stage) {
  const int m = buffer_stages(data);
  check_stage(stage, m);
  const std::size_t half = std::size_t{1} << stage;
  for (std::size_t base = 0; base < data.size(); base += 2 * half) {
    double* a = data.data() + base;
    double* b = a + half;
    for (std::size_t k = 0; k < half; ++k) {
      const double x = a[k];
      const double y = b[k];
      a[k] = x + y;
      b[k] = x - y;
    }
  }
}

void apply_twiddle_stage(std::span<double> data, const FftPlan& plan,
                         int stage) {
  check_plan_matches(plan, data);
  check_stage(stage, plan.m());
  const auto tw = plan.twiddles().stage(stage);
  const std::size_t half = 2 * tw.size();
  for (std::size_t base = 0; base < data.size(); base += 2 * half) {
    double* b = data.data() + base + half;
    for (std::size_t q = 0; q < tw.size(); ++q) {
      rotate(tw[q], b[2 * q], b[2 * q + 1]);
    }
  }
}

void apply_butterfly_stage(InterleavedBuffer& buf, int stage) {
  apply_butterfly_stage(buf.data(), stage);
}

void apply_twiddle_stage(InterleavedBuffer& buf, const FftPlan& plan,
                         int stage) {
  apply_twiddle_stage(buf.data(), plan, stage);
}

void fft_dit(const FftPlan& plan, std::span<double> data) {
  if (plan.variant() != Variant::DIT) {
    throw InvalidInput("fft_dit called with a DIF plan");
  }
  check_plan_matches(plan, data);
  const int m = plan.m();
  permute_pairwise_bitrev_inplace(data, m);

  dit_block(data, plan.twiddles(), m);
}

void fft_dif(const FftPlan& plan, std::span<double> data) {
  if (plan.variant() != Variant::DIF) {
    throw InvalidInput("fft_dif called with a DIT plan");
  }
  check_plan_matches(plan, data);
  const int m = plan.m();

  dif_block(data, plan.twiddles(), m);
  permute_pairwise_bitrev_inplace(data, m);
}

void fft_dit(const FftPlan& plan, InterleavedBuffer& buf) {
  fft_dit(plan, buf.data());
}

void fft_dif(const FftPlan& plan, InterleavedBuffer& buf) {
  fft_dif(plan, buf.data());
}

void fft(const FftPlan& plan, std::span<double> data) {
  if (plan.variant() == Variant::DIT) {
    fft_dit(plan, data);
  } else {
    fft_dif(plan, data);
  }
}

void fft(const FftPlan& plan, InterleavedBuffer& buf) { fft(plan, buf.data()); }

void ifft(const FftPlan& plan, std::span<double> data) {
  check_plan_matches(plan, data);
  // conj(F conj(y)) / N, with conjugation expressed as a channel swap.
  swap_channels(data);
  fft(plan, data);
  swap_channels(data);
  const double scale = 1.0 / static_cast<double>(plan.size());
  for (double& v : data) v *= scale;
}

void ifft(const FftPlan& plan, InterleavedBuffer& buf) {
  ifft(plan, buf.data());
}

SplitSignal forward(const FftPlan& plan, const SplitSignal& x) {
  auto buf = interleave(x);
  fft(plan, buf);
  return deinterleave(buf);
}

SplitSignal inverse(const FftPlan& plan, const SplitSignal& y) {
  auto buf = interleave(y);
  ifft(plan, buf);
  return deinterleave(buf);
}

}  // namespace sepfft
