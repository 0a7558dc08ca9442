#ifndef MODINV_NUMERICS_NULLSPACE_HPP
#define MODINV_NUMERICS_NULLSPACE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/numerics/dense_matrix.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

/// A rational subspace of Q^n in reduced form: basis[i][coords[j]] == (i == j).
/// The coordinates `coords` identify a vector of the subspace uniquely.
struct RationalSubspace {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> coords;
  std::vector<std::vector<Rational>> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

namespace detail {

/// Splits complex rows into real and imaginary rows, dropping identically
/// zero rows.
template <class Real>
RealMatrix<Real> realify(const ComplexMatrix<Real>& m) {
  std::vector<std::size_t> keep;
  RealMatrix<Real> tmp(2 * m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      tmp(2 * i, j) = m(i, j).real();
      tmp(2 * i + 1, j) = m(i, j).imag();
    }
  for (std::size_t i = 0; i < tmp.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < tmp.cols() && !nonzero; ++j) nonzero = tmp(i, j) != 0;
    if (nonzero) keep.push_back(i);
  }
  RealMatrix<Real> out(keep.size(), m.cols());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = tmp(keep[r], j);
  return out;
}

/// Streams realified equations: fn(i, out) writes row i (out has cols entries).
template <class T>
using RowFn = std::function<void(std::size_t, std::vector<T>&)>;

/// Greedy selection, in machine precision, of rows that are linearly
/// independent (Gram-Schmidt with reorthogonalisation). Rows shorter than
/// `abs_tol` are rounding noise of exact zeros and are skipped.
inline std::vector<std::size_t> select_independent_rows(std::size_t rows, std::size_t n, const RowFn<double>& row,
                                                        double rel_tol, double abs_tol = 1e-12) {
  std::vector<std::vector<double>> q;
  std::vector<std::size_t> chosen;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < rows && chosen.size() < n; ++i) {
    row(i, v);
    double norm0 = 0;
    for (double x : v) norm0 += x * x;
    norm0 = std::sqrt(norm0);
    if (norm0 <= abs_tol) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) {
        const double dot = std::inner_product(v.begin(), v.end(), b.begin(), 0.0);
        if (dot == 0) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] -= dot * b[j];
      }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > rel_tol * norm0) {
      for (double& x : v) x /= norm;
      q.push_back(v);
      chosen.push_back(i);
    }
  }
  return chosen;
}

/// Null vectors of the selected rows, in free-variable form. Columns are
/// eliminated right to left, so the free columns are the leftmost possible.
template <class Real>
std::vector<std::vector<Real>> free_variable_nullspace(std::size_t n, const RowFn<Real>& row,
                                                       const std::vector<std::size_t>& rows, double null_tol,
                                                       std::vector<std::size_t>& free_cols) {
  using std::abs;
  RealMatrix<Real> a(rows.size(), n);
  Real scale(0);
  std::vector<Real> buf(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    row(rows[r], buf);
    for (std::size_t j = 0; j < n; ++j) {
      a(r, j) = buf[j];
      if (abs(a(r, j)) > scale) scale = abs(a(r, j));
    }
  }
  const Real threshold = Real(null_tol) * (scale > 0 ? scale : Real(1));

  std::vector<std::ptrdiff_t> pivot_row_of_col(n, -1);
  std::size_t rank = 0;
  for (std::size_t cc = 0; cc < n && rank < a.rows(); ++cc) {
    const std::size_t c = n - 1 - cc;
    std::size_t best = rank;
    for (std::size_t r = rank + 1; r < a.rows(); ++r)
      if (abs(a(r, c)) > abs(a(best, c))) best = r;
    if (abs(a(best, c)) <= threshold) continue;
    if (best != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(best, j), a(rank, j));
    const Real inv = Real(1) / a(rank, c);
    for (std::size_t j = 0; j < n; ++j) a(rank, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, c) == 0) continue;
      const Real f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(rank, j);
    }
    pivot_row_of_col[c] = static_cast<std::ptrdiff_t>(rank);
    ++rank;
  }

  free_cols.clear();
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row_of_col[c] < 0) free_cols.push_back(c);

  std::vector<std::vector<Real>> basis;
  for (std::size_t f : free_cols) {
    std::vector<Real> v(n, Real(0));
    v[f] = Real(1);
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_row_of_col[c] >= 0) v[c] = -a(static_cast<std::size_t>(pivot_row_of_col[c]), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// max_i |row_i . v| over every row.
template <class Real>
Real residual_norm(std::size_t rows, std::size_t n, const RowFn<Real>& row, const std::vector<Rational>& v) {
  using std::abs;
  std::vector<Real> x(n);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = to_real<Real>(v[j]);
    if (v[j].numerator() != 0) support.push_back(j);
  }
  Real worst(0);
  std::vector<Real> buf(n);
  for (std::size_t i = 0; i < rows; ++i) {
    row(i, buf);
    Real acc(0);
    for (std::size_t j : support) acc += buf[j] * x[j];
    if (abs(acc) > worst) worst = abs(acc);
  }
  return worst;
}

template <class Real>
bool try_reconstruct(std::size_t rows, std::size_t n, const RowFn<Real>& row, const std::vector<std::size_t>& chosen,
                     const PrecisionConfig& cfg, RationalSubspace& out) {
  std::vector<std::size_t> free_cols;
  const auto numeric = free_variable_nullspace(n, row, chosen, cfg.null_tol, free_cols);
  RationalSubspace sub;
  sub.ambient_dim = n;
  sub.coords = free_cols;
  for (const auto& v : numeric) {
    std::vector<Rational> q(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto r = reconstruct_rational(v[j], cfg.max_denominator, cfg.null_tol);
      if (!r)
        throw Error(ErrorCode::ReconstructionFailed,
                    "null vector entry " + to_string(v[j]) + " has no rational form with denominator <= " +
                        std::to_string(cfg.max_denominator));
      q[j] = *r;
    }
    sub.basis.push_back(std::move(q));
  }
  for (const auto& v : sub.basis) {
    Real norm(0);
    for (const auto& x : v) norm += to_real<Real>(x) * to_real<Real>(x);
    using std::sqrt;
    if (residual_norm(rows, n, row, v) > Real(cfg.null_tol) * sqrt(norm)) return false;
  }
  out = std::move(sub);
  return true;
}

}  // namespace detail

/// Rational basis of the null space of a system of real equations supplied
/// row by row, once in machine precision (`row_fast`, used to pick
/// independent equations) and once in `Real` (`row`).
///
/// The basis is returned in free-variable form, which is unique for a given
/// set of free coordinates and therefore rational whenever the null space is
/// defined over Q. Every reconstructed vector is checked against all rows; if
/// that fails, the elimination is redone over all rows.
template <class Real>
RationalSubspace nullspace_basis(std::size_t rows, std::size_t cols, const detail::RowFn<double>& row_fast,
                                 const detail::RowFn<Real>& row, const PrecisionConfig& cfg) {
  RationalSubspace sub;
  const auto chosen = detail::select_independent_rows(rows, cols, row_fast, 1e-8);
  if (detail::try_reconstruct(rows, cols, row, chosen, cfg, sub)) return sub;
  std::vector<std::size_t> all(rows);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (detail::try_reconstruct(rows, cols, row, all, cfg, sub)) return sub;
  throw Error(ErrorCode::ReconstructionFailed,
              "reconstructed null vectors do not annihilate the system within null_tol");
}

/// Null space of a complex matrix; real and imaginary parts of every
/// equation are imposed separately.
template <class Real>
RationalSubspace nullspace_basis(const ComplexMatrix<Real>& m, const PrecisionConfig& cfg) {
  const RealMatrix<Real> a = detail::realify(m);
  const detail::RowFn<Real> row = [&](std::size_t i, std::vector<Real>& out) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = a(i, j);
  };
  const detail::RowFn<double> row_fast = [&](std::size_t i, std::vector<double>& out) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = to_double(a(i, j));
  };
  return nullspace_basis<Real>(a.rows(), a.cols(), row_fast, row, cfg);
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_NULLSPACE_HPP
