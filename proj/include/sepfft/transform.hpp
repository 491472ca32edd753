#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>

#include "sepfft/layout.hpp"
#include "sepfft/twiddle.hpp"

namespace sepfft {

/// Stage ordering of the radix-2 factorization.
///   DIT: y = W(m) D(m) ... W(1) D(1) S x
///   DIF: y = S D(1) W(1) ... D(m) W(m) x
/// where W(i) = I_{2^(m-i)} (x) H2 (x) I_{2^i} is the pair butterfly,
/// D(i) = I_{2^(m-i)} (x) diag(I_{2^i}, w(i,0), ..., w(i,2^(i-1)-1)) the
/// twiddle pass, and S the pairwise bit-reversal.
enum class Variant { DIT, DIF };

const char* to_string(Variant v);

/// Immutable transform descriptor. Copies share the twiddle table, so a plan
/// may be passed by value and used concurrently on distinct buffers.
class FftPlan {
 public:
  static constexpr int kDefaultMaxStages = 30;

  FftPlan(int m, Variant variant, int max_stages = kDefaultMaxStages);

  int m() const { return m_; }
  std::size_t size() const { return std::size_t{1} << m_; }
  Variant variant() const { return variant_; }
  const TwiddleTable& twiddles() const { return *twiddles_; }

 private:
  int m_;
  Variant variant_;
  std::shared_ptr<const TwiddleTable> twiddles_;
};

inline FftPlan plan_create(int m, Variant variant,
                           int max_stages = FftPlan::kDefaultMaxStages) {
  return FftPlan(m, variant, max_stages);
}

/// Operation counts for one transform.
///
/// The rotation counts classify the distinct table entries w(i,q) over all
/// stages; `real_mults` is 4 per generic entry and `real_adds` counts the
/// butterfly additions 4 * (N/2) * m. The executed_* fields count every
/// application of a rotation (stage i applies each entry 2^(m-i) times)
/// and include the 2 additions of each generic rotation.
struct FlopReport {
  std::uint64_t real_mults = 0;
  std::uint64_t real_adds = 0;
  std::uint64_t generic_rotations = 0;
  std::uint64_t quarter_turns = 0;
  std::uint64_t identity_rotations = 0;
  std::uint64_t executed_real_mults = 0;
  std::uint64_t executed_real_adds = 0;

  bool operator==(const FlopReport&) const = default;
};

FlopReport count_flops(const FftPlan& plan);

// Single stages over a raw interleaved span of 2^(m+1) reals.
void apply_butterfly_stage(std::span<double> data, int stage);
void apply_twiddle_stage(std::span<double> data, const FftPlan& plan, int stage);

void apply_butterfly_stage(InterleavedBuffer& buf, int stage);
void apply_twiddle_stage(InterleavedBuffer& buf, const FftPlan& plan, int stage);

// In-place forward transforms. The plan variant must match the routine.
void fft_dit(const FftPlan& plan, std::span<double> data);
void fft_dif(const FftPlan& plan, std::span<double> data);
void fft_dit(const FftPlan& plan, InterleavedBuffer& buf);
void fft_dif(const FftPlan& plan, InterleavedBuffer& buf);

/// Forward transform using the plan's variant.
void fft(const FftPlan& plan, std::span<double> data);
void fft(const FftPlan& plan, InterleavedBuffer& buf);

/// Inverse transform (with 1/N scaling) using the plan's variant.
void ifft(const FftPlan& plan, std::span<double> data);
void ifft(const FftPlan& plan, InterleavedBuffer& buf);

// Out-of-place convenience wrappers on split channels.
SplitSignal forward(const FftPlan& plan, const SplitSignal& x);
SplitSignal inverse(const FftPlan& plan, const SplitSignal& y);

}  // namespace sepfft
