#include "sepfft/dense.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

#include "sepfft/error.hpp"
#include "sepfft/layout.hpp"

namespace sepfft::dense {

namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 32;

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw CapacityError("matrix dimension overflow");
  }
  return a * b;
}

void check_dims(std::size_t rows, std::size_t cols) {
  if (checked_mul(rows, cols) > kMaxEntries) {
    throw CapacityError("matrix of " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds the dense size limit");
  }
}

void check_stage(int m, int stage) {
  if (m < 0 || stage < 1 || stage > m) {
    throw InvalidInput("stage " + std::to_string(stage) + " out of range 1.." +
                       std::to_string(m));
  }
}

// Angle of exp(-j*2*pi*k*n/N) with k*n reduced mod N first.
double dft_angle(std::size_t k, std::size_t n, std::size_t size) {
  const std::uint64_t kn = (static_cast<std::uint64_t>(k) * n) % size;
  return 2.0 * std::numbers::pi * static_cast<double>(kn) /
         static_cast<double>(size);
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(rows * cols, 0.0);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  check_dims(rows, cols);
  if (data_.size() != rows * cols) {
    throw InvalidInput("matrix data length does not match rows*cols");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw InvalidInput("vector length " + std::to_string(x.size()) +
                       " does not match matrix columns " +
                       std::to_string(cols_));
  }
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* row = data_.data() + r * cols_;
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("matrix product dimension mismatch");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double v = a(r, k);
      if (v == 0.0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += v * b(k, c);
    }
  }
  return out;
}

DenseMatrix operator*(double k, const DenseMatrix& a) {
  std::vector<double> d(a.data().begin(), a.data().end());
  for (double& v : d) v *= k;
  return DenseMatrix(a.rows(), a.cols(), std::move(d));
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("matrix difference dimension mismatch");
  }
  std::vector<double> d(a.data().begin(), a.data().end());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= b.data()[k];
  return DenseMatrix(a.rows(), a.cols(), std::move(d));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("matrix comparison dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

void write_text(std::ostream& os, const DenseMatrix& a) {
  const auto old_precision = os.precision(17);
  os << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c != 0) os << ' ';
      os << a(r, c);
    }
    os << '\n';
  }
  os.precision(old_precision);
}

DenseMatrix read_text(std::istream& is) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(is >> rows >> cols)) throw InvalidInput("missing matrix header");
  DenseMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(is >> out(r, c))) throw InvalidInput("truncated matrix data");
    }
  }
  return out;
}

DenseMatrix mat_kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t rows = checked_mul(a.rows(), b.rows());
  const std::size_t cols = checked_mul(a.cols(), b.cols());
  DenseMatrix out(rows, cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const double v = a(ar, ac);
      if (v == 0.0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
        }
      }
    }
  }
  return out;
}

DenseMatrix mat_direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out(a.rows() + r, a.cols() + c) = b(r, c);
    }
  }
  return out;
}

DenseMatrix hadamard2() { return DenseMatrix(2, 2, {1.0, 1.0, 1.0, -1.0}); }

DenseMatrix rotation_matrix(const RotationBlock& w) {
  return DenseMatrix(2, 2, {w.c, w.s, -w.s, w.c});
}

DenseMatrix build_perm_S(int m) {
  if (m < 0 || m > 20) throw CapacityError("permutation stage count out of range");
  const std::size_t n = std::size_t{1} << m;
  DenseMatrix bitrev(n, n);
  for (std::size_t k = 0; k < n; ++k) bitrev(k, bit_reverse_index(k, m)) = 1.0;
  return mat_kron(bitrev, DenseMatrix::identity(2));
}

DenseMatrix build_W(int m, int stage) {
  check_stage(m, stage);
  return mat_kron(mat_kron(DenseMatrix::identity(std::size_t{1} << (m - stage)),
                           hadamard2()),
                  DenseMatrix::identity(std::size_t{1} << stage));
}

DenseMatrix build_D(const TwiddleTable& table, int stage) {
  const int m = table.m();
  check_stage(m, stage);
  DenseMatrix block = DenseMatrix::identity(std::size_t{1} << stage);
  for (const auto& w : table.stage(stage)) {
    block = mat_direct_sum(block, rotation_matrix(w));
  }
  return mat_kron(DenseMatrix::identity(std::size_t{1} << (m - stage)), block);
}

DenseMatrix build_D(int m, int stage) {
  check_stage(m, stage);
  return build_D(TwiddleTable(m), stage);
}

DenseMatrix build_cos_matrix(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix order must be at least 1");
  DenseMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) out(k, j) = std::cos(dft_angle(k, j, n));
  }
  return out;
}

DenseMatrix build_sine_matrix(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix order must be at least 1");
  DenseMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) out(k, j) = std::sin(dft_angle(k, j, n));
  }
  return out;
}

DenseMatrix build_E_block(std::size_t n) {
  const DenseMatrix c = build_cos_matrix(n);
  const DenseMatrix s = build_sine_matrix(n);
  DenseMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      out(r, k) = c(r, k);
      out(r, n + k) = s(r, k);
      out(n + r, k) = -s(r, k);
      out(n + r, n + k) = c(r, k);
    }
  }
  return out;
}

DenseMatrix build_E_interleaved(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix order must be at least 1");
  DenseMatrix out(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = dft_angle(k, j, n);
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      out(2 * k, 2 * j) = c;
      out(2 * k, 2 * j + 1) = s;
      out(2 * k + 1, 2 * j) = -s;
      out(2 * k + 1, 2 * j + 1) = c;
    }
  }
  return out;
}

DenseMatrix shuffle_perm(std::size_t n) {
  if (n == 0) throw InvalidInput("matrix order must be at least 1");
  DenseMatrix out(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    out(2 * j, j) = 1.0;
    out(2 * j + 1, n + j) = 1.0;
  }
  return out;
}

std::vector<DenseMatrix> stage_factors(const TwiddleTable& table,
                                       Variant variant) {
  const int m = table.m();
  std::vector<DenseMatrix> factors;
  if (variant == Variant::DIT) {
    factors.push_back(build_perm_S(m));
    for (int i = 1; i <= m; ++i) {
      factors.push_back(build_D(table, i));
      factors.push_back(build_W(m, i));
    }
  } else {
    for (int i = m; i >= 1; --i) {
      factors.push_back(build_W(m, i));
      factors.push_back(build_D(table, i));
    }
    factors.push_back(build_perm_S(m));
  }
  return factors;
}

double verify_factorization(const TwiddleTable& table, Variant variant,
                            int dense_limit) {
  const int m = table.m();
  if (m > dense_limit) {
    throw CapacityError("dense verification limited to m <= " +
                        std::to_string(dense_limit) + ", got " +
                        std::to_string(m));
  }
  const std::size_t dim = std::size_t{2} << m;
  const auto factors = stage_factors(table, variant);
  const DenseMatrix expected = build_E_interleaved(std::size_t{1} << m);

  // Push each identity column through the chain; column j of the product is
  // the chain applied to e_j.
  DenseMatrix product(dim, dim);
  std::vector<double> column(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(column.begin(), column.end(), 0.0);
    column[j] = 1.0;
    for (const auto& f : factors) column = f.apply(column);
    for (std::size_t r = 0; r < dim; ++r) product(r, j) = column[r];
  }
  return max_abs_diff(product, expected);
}

double verify_factorization(int m, Variant variant, int dense_limit) {
  if (m < 0) throw InvalidInput("stage count must be non-negative");
  if (m > dense_limit) {
    throw CapacityError("dense verification limited to m <= " +
                        std::to_string(dense_limit) + ", got " +
                        std::to_string(m));
  }
  return verify_factorization(TwiddleTable(m), variant, dense_limit);
}

}  // namespace sepfft::dense
