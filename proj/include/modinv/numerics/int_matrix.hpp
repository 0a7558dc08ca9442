#ifndef MODINV_NUMERICS_INT_MATRIX_HPP
#define MODINV_NUMERICS_INT_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "modinv/errors.hpp"

namespace modinv {

/// Dense integer matrix with exact arithmetic. Products skip zero entries of
/// the left factor, so the block-sparse invariants of large theories
/// (1716 labels for SU(7)_7) multiply in O(nnz * n).
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Permutation matrix P with P(i, perm[i]) = 1.
  static IntMatrix permutation(const std::vector<std::size_t>& perm) {
    IntMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  value_type operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<value_type>& data() const noexcept { return data_; }

  /// Calls fn(i, j, value) for every non-zero entry in row-major order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (const auto v = data_[i * cols_ + j]; v != 0) fn(i, j, v);
  }

  std::size_t nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](value_type v) { return v != 0; }));
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  value_type trace() const {
    value_type t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v >= 0; });
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0; });
  }

  bool is_symmetric() const { return is_square() && *this == transpose(); }

  /// True iff every row and column holds exactly one 1 and zeros elsewhere.
  bool is_permutation() const {
    if (!is_square()) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      int row_hits = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto v = (*this)(i, j);
        if (v == 1) {
          ++row_hits;
          ++col_hits[j];
        } else if (v != 0) {
          return false;
        }
      }
      if (row_hits != 1) return false;
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
  }

  std::vector<value_type> row_sums() const {
    std::vector<value_type> s(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
    return s;
  }

  std::vector<value_type> col_sums() const {
    std::vector<value_type> s(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
    return s;
  }

  /// Sum of squared entries, i.e. tr(M^T M).
  value_type frobenius_square() const {
    value_type s = 0;
    for (auto v : data_) s += v * v;
    return s;
  }

  IntMatrix& operator+=(const IntMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  IntMatrix& operator-=(const IntMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  IntMatrix& operator*=(value_type s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(value_type s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(IntMatrix a, value_type s) { return a *= s; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      value_type* out = &c.data_[i * c.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type aik = a(i, k);
        if (aik == 0) continue;
        const value_type* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) out[j] += aik * brow[j];
      }
    }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  /// Rows/cols permuted: result(i, j) = M(perm[i], perm[j]).
  IntMatrix conjugate_by(const std::vector<std::size_t>& perm) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(perm[i], perm[j]);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i == 0 ? "[[" : " [");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << (i + 1 == m.rows_ ? "]]" : "]\n");
    }
    if (m.rows_ == 0) os << "[]";
    return os;
  }

 private:
  void check_same_shape(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

}  // namespace modinv

#endif  // MODINV_NUMERICS_INT_MATRIX_HPP
