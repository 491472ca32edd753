#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "sepfft/transform.hpp"
#include "sepfft/twiddle.hpp"

namespace sepfft::dense {

/// Row-major real matrix. Only the verification path uses it.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> data() const { return data_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  DenseMatrix transpose() const;
  std::vector<double> apply(std::span<const double> x) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double k, const DenseMatrix& a);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

/// Largest absolute entry-wise difference. Dimensions must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Writes "rows cols" then one line per row, 17 significant digits.
void write_text(std::ostream& os, const DenseMatrix& a);
DenseMatrix read_text(std::istream& is);

DenseMatrix mat_kron(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_direct_sum(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix hadamard2();
DenseMatrix rotation_matrix(const RotationBlock& w);

/// Pairwise bit-reversal permutation of size 2^(m+1).
DenseMatrix build_perm_S(int m);
/// Butterfly factor I_{2^(m-i)} (x) H2 (x) I_{2^i}.
DenseMatrix build_W(int m, int stage);
/// Twiddle factor I_{2^(m-i)} (x) diag(I_{2^i}, w(i,0), ..., w(i,R-1)).
DenseMatrix build_D(int m, int stage);
DenseMatrix build_D(const TwiddleTable& table, int stage);

DenseMatrix build_cos_matrix(std::size_t n);
DenseMatrix build_sine_matrix(std::size_t n);
/// [[C, Sine], [-Sine, C]] acting on the split layout [x_re; x_im].
DenseMatrix build_E_block(std::size_t n);
/// The same map acting on the interleaved layout; block (k, n) is the
/// rotation by 2*pi*k*n/N.
DenseMatrix build_E_interleaved(std::size_t n);
/// Maps split index (channel, n) to interleaved index 2n + channel.
DenseMatrix shuffle_perm(std::size_t n);

/// Ordered factor list of a stage chain, rightmost (first applied) first.
std::vector<DenseMatrix> stage_factors(const TwiddleTable& table,
                                       Variant variant);

constexpr int kDefaultDenseLimit = 8;

/// Max-abs deviation between the dense stage product and
/// build_E_interleaved(2^m).
double verify_factorization(int m, Variant variant,
                            int dense_limit = kDefaultDenseLimit);
double verify_factorization(const TwiddleTable& table, Variant variant,
                            int dense_limit = kDefaultDenseLimit);

}  // namespace sepfft::dense
