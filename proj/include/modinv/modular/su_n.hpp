#ifndef MODINV_MODULAR_SU_N_HPP
#define MODINV_MODULAR_SU_N_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/modular/label_set.hpp"
#include "modinv/modular/modular_data.hpp"
#include "modinv/numerics/dense_matrix.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

inline constexpr std::size_t kDefaultSizeCap = 5000;

namespace detail {

inline void dominant_weights(int rank, int level, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == rank) {
    out.push_back(prefix);
    return;
  }
  for (int v = 0; v <= level; ++v) {
    prefix.push_back(v);
    dominant_weights(rank, level - v, prefix, out);
    prefix.pop_back();
  }
}

/// Shifted weight lambda + rho in orthogonal coordinates:
/// x_a = sum_{b >= a} (lambda_b + 1), with x_n = 0.
inline std::vector<long long> epsilon_coords(const std::vector<int>& w) {
  const std::size_t n = w.size() + 1;
  std::vector<long long> x(n, 0);
  for (std::size_t a = n - 1; a-- > 0;) x[a] = x[a + 1] + w[a] + 1;
  return x;
}

/// (x, y) on the hyperplane sum = 0, for vectors given up to a multiple of (1,...,1).
inline Rational traceless_product(const std::vector<long long>& x, const std::vector<long long>& y) {
  long long dot = 0, sx = 0, sy = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    dot += x[a] * y[a];
    sx += x[a];
    sy += y[a];
  }
  return Rational(dot) - Rational(sx * sy, static_cast<long long>(x.size()));
}

template <class Real>
Complex<Real> determinant(std::vector<Complex<Real>> m, std::size_t n) {
  using std::abs;
  Complex<Real> det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(m[r * n + c]) > abs(m[piv * n + c])) piv = r;
    if (m[piv * n + c] == Complex<Real>(0)) return Complex<Real>(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[c * n + j], m[piv * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    const Complex<Real> inv = Real(1) / m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex<Real> f = m[r * n + c] * inv;
      if (f == Complex<Real>(0)) continue;
      for (std::size_t j = c + 1; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

}  // namespace detail

/// Number of level-k dominant weights of SU(n): C(n-1+k, n-1).
inline std::size_t su_n_k_label_count(int n, int k) {
  long double count = 1;
  for (int i = 1; i < n; ++i) count = count * (k + i) / i;
  return static_cast<std::size_t>(count + 0.5L);
}

/// Label set of SU(n)_k: level-k Dynkin weights (lambda_1..lambda_{n-1}) in
/// lexicographic order, vacuum first, with exact conformal weights
/// h = (lambda, lambda + 2 rho) / 2(k+n). Needs no S matrix.
inline std::shared_ptr<const LabelSet> su_n_k_labels(int n, int k, std::size_t size_cap = kDefaultSizeCap) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "SU(n) needs n >= 2");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "level must be >= 1");
  if (su_n_k_label_count(n, k) > size_cap)
    throw Error(ErrorCode::SizeCap, "SU(" + std::to_string(n) + ")_" + std::to_string(k) + " has " +
                                        std::to_string(su_n_k_label_count(n, k)) + " labels, cap is " +
                                        std::to_string(size_cap));
  std::vector<std::vector<int>> weights;
  std::vector<int> prefix;
  detail::dominant_weights(n - 1, k, prefix, weights);
  const auto rho = detail::epsilon_coords(std::vector<int>(n - 1, 0));
  const Rational rho2 = detail::traceless_product(rho, rho);
  std::vector<std::string> names;
  std::vector<Rational> h;
  for (const auto& w : weights) {
    names.push_back(LabelSet::format_weight(w));
    const auto x = detail::epsilon_coords(w);
    h.push_back((detail::traceless_product(x, x) - rho2) / (2 * (k + n)));
  }
  return std::make_shared<const LabelSet>(TheoryId{"su", n, k, 0}, std::move(names), std::move(h), std::move(weights));
}

/// Conjugate weight: Dynkin labels reversed.
inline Permutation su_n_k_conjugation(const LabelSet& labels) {
  Permutation conj(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto w = labels.weight(i);
    std::reverse(w.begin(), w.end());
    conj[i] = labels.index_of_weight(w);
  }
  return conj;
}

/// c = k (n^2 - 1) / (k + n), not reduced.
inline Rational su_n_k_central_charge(int n, int k) { return Rational(k * (n * n - 1), k + n); }

/// Kac-Peterson S matrix of SU(n)_k as a Weyl determinant in orthogonal
/// coordinates,
///   S ~ det[exp(-2 pi i x_a y_b / K)] exp(2 pi i |x||y| / nK),  K = k + n,
/// normalised so that S_00 > 0.
template <class Real>
ComplexMatrix<Real> su_n_k_s_matrix(const LabelSet& labels) {
  const int n = labels.theory().n;
  const int kk = labels.theory().k + n;
  const std::size_t size = labels.size();
  const long long nk = static_cast<long long>(n) * kk;
  std::vector<Complex<Real>> roots(static_cast<std::size_t>(nk));
  for (long long m = 0; m < nk; ++m) roots[static_cast<std::size_t>(m)] = root_of_unity<Real>(Rational(m, nk));
  auto root = [&](long long num, long long den) {  // exp(2 pi i num/den), den | nk
    long long m = (num * (nk / den)) % nk;
    if (m < 0) m += nk;
    return roots[static_cast<std::size_t>(m)];
  };

  std::vector<std::vector<long long>> xs(size);
  std::vector<long long> sums(size);
  for (std::size_t i = 0; i < size; ++i) {
    xs[i] = detail::epsilon_coords(labels.weight(i));
    sums[i] = std::accumulate(xs[i].begin(), xs[i].end(), 0LL);
  }
  ComplexMatrix<Real> s(size, size);
  std::vector<Complex<Real>> m(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[a * n + b] = root(-((xs[i][a] * xs[j][b]) % kk), kk);
      const Complex<Real> v = detail::determinant(m, static_cast<std::size_t>(n)) * root((sums[i] * sums[j]) % nk, nk);
      s(i, j) = v;
      s(j, i) = v;
    }
  using std::abs;
  using std::sqrt;
  Real norm = sqrt(Real(n));
  for (int i = 1; i < n; ++i) norm *= sqrt(Real(kk));
  const Complex<Real> phase = std::conj(s(0, 0)) / abs(s(0, 0));
  const Complex<Real> scale = phase / norm;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) s(i, j) *= scale;
  return s;
}

/// Modular data of SU(n)_k, verified before return.
template <class Real>
ModularData<Real> su_n_k(int n, int k, const PrecisionConfig& cfg, std::size_t size_cap = kDefaultSizeCap) {
  auto labels = su_n_k_labels(n, k, size_cap);
  auto s = su_n_k_s_matrix<Real>(*labels);
  auto conj = su_n_k_conjugation(*labels);
  return assemble_modular_data<Real>(std::move(labels), std::move(s), su_n_k_central_charge(n, k), std::move(conj),
                                     cfg);
}

}  // namespace modinv

#endif  // MODINV_MODULAR_SU_N_HPP
