#ifndef MODINV_NUMERICS_DENSE_MATRIX_HPP
#define MODINV_NUMERICS_DENSE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/numerics/int_matrix.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

/// Row-major dense matrix over a (possibly multiprecision) scalar type.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T* row(std::size_t i) { return &data_[i * cols_]; }
  const T* row(std::size_t i) const { return &data_[i * cols_]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T* out = c.row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        const T* brow = b.row(k);
        for (std::size_t j = 0; j < b.cols_; ++j) out[j] += aik * brow[j];
      }
    }
    return c;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class Real>
using ComplexMatrix = DenseMatrix<Complex<Real>>;

template <class Real>
using RealMatrix = DenseMatrix<Real>;

template <class Real>
ComplexMatrix<Real> adjoint(const ComplexMatrix<Real>& m) {
  ComplexMatrix<Real> a(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(j, i) = std::conj(m(i, j));
  return a;
}

template <class Real>
ComplexMatrix<Real> to_complex(const IntMatrix& m) {
  ComplexMatrix<Real> c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = Complex<Real>(Real(m(i, j)), Real(0));
  return c;
}

/// max_{ij} |A_ij - B_ij|
template <class Real>
Real max_abs_diff(const ComplexMatrix<Real>& a, const ComplexMatrix<Real>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  using std::abs;
  Real worst(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Real d = abs(a(i, j) - b(i, j));
      if (d > worst) worst = d;
    }
  return worst;
}

/// Z * S with Z integral; skips zero entries of Z.
template <class Real>
ComplexMatrix<Real> int_times(const IntMatrix& z, const ComplexMatrix<Real>& s) {
  ComplexMatrix<Real> out(z.rows(), s.cols());
  z.for_each_nonzero([&](std::size_t i, std::size_t k, std::int64_t v) {
    const Real coeff(v);
    Complex<Real>* dst = out.row(i);
    const Complex<Real>* src = s.row(k);
    for (std::size_t j = 0; j < s.cols(); ++j) dst[j] += coeff * src[j];
  });
  return out;
}

/// S * Z with Z integral; skips zero entries of Z.
template <class Real>
ComplexMatrix<Real> times_int(const ComplexMatrix<Real>& s, const IntMatrix& z) {
  ComplexMatrix<Real> out(s.rows(), z.cols());
  z.for_each_nonzero([&](std::size_t k, std::size_t j, std::int64_t v) {
    const Real coeff(v);
    for (std::size_t i = 0; i < s.rows(); ++i) out(i, j) += coeff * s(i, k);
  });
  return out;
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_DENSE_MATRIX_HPP
