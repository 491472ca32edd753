#pragma once

#include "sepfft/layout.hpp"

namespace sepfft::oracle {

// Reference transforms for testing. Both accept any N >= 1 (power of two
// not required) and are O(N^2).

/// Direct summation of y_k = sum_n x_n exp(-j 2 pi n k / N).
SplitSignal naive_dft(const SplitSignal& x);

/// y_re = C x_re + Sine x_im, y_im = -Sine x_re + C x_im with the dense
/// cosine and sine matrices.
SplitSignal naive_real_mv(const SplitSignal& x);

}  // namespace sepfft::oracle
