#ifndef MODINV_MODULAR_ZN_HPP
#define MODINV_MODULAR_ZN_HPP

#include <cmath>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/modular/label_set.hpp"
#include "modinv/modular/modular_data.hpp"

namespace modinv {

/// Labels 0..n-1 with h = a lambda^2 / 2n mod 1.
inline std::shared_ptr<const LabelSet> zn_labels(int n, int a) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (std::gcd(a, n) != 1) throw Error(ErrorCode::InvalidArgument, "a must be coprime to n");
  if (n % 2 == 1 && a % 2 != 0) throw Error(ErrorCode::InvalidArgument, "a must be even when n is odd");
  std::vector<std::string> names;
  std::vector<Rational> h;
  for (int l = 0; l < n; ++l) {
    names.push_back(std::to_string(l));
    h.push_back(Rational(static_cast<long long>(a) * l * l, 2LL * n));
  }
  return std::make_shared<const LabelSet>(TheoryId{"zn", n, 0, a}, std::move(names), std::move(h));
}

/// S from braiding statistics,
///   S_lm = |z|^-1 sum_r (omega_l omega_m / omega_r) N_lm^r d_r,
/// with Z_n fusion and unit dimensions.
template <class Real>
ComplexMatrix<Real> statistics_s_matrix(const LabelSet& labels) {
  using std::abs;
  const std::size_t n = labels.size();
  Complex<Real> z(0);
  for (std::size_t l = 0; l < n; ++l) z += root_of_unity<Real>(labels.h(l));
  const Real inv = Real(1) / abs(z);
  ComplexMatrix<Real> s(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t r = (l + m) % n;  // N_lm^r = 1 only here
      s(l, m) = inv * root_of_unity<Real>(labels.h(l) + labels.h(m) - labels.h(r));
    }
  return s;
}

/// Central charge from arg z, snapped to a multiple of 1/4.
template <class Real>
Rational central_charge_from_z(const Complex<Real>& z) {
  using std::arg;
  const double c = 4.0 * to_double(Real(arg(z))) / to_double(pi<Real>());
  return mod_n(Rational(static_cast<long long>(std::llround(c * 4)), 4), 8);
}

/// Z_n anyons with h = a lambda^2 / 2n. A degenerate choice of (n, a) shows
/// up as a non-unitary S and is reported as DegenerateBraiding.
template <class Real>
ModularData<Real> zn_anyon(int n, int a, const PrecisionConfig& cfg) {
  auto labels = zn_labels(n, a);
  auto s = statistics_s_matrix<Real>(*labels);
  Complex<Real> z(0);
  for (std::size_t l = 0; l < labels->size(); ++l) z += root_of_unity<Real>(labels->h(l));
  Permutation conj(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) conj[static_cast<std::size_t>(l)] = static_cast<std::size_t>((n - l) % n);
  return assemble_modular_data<Real>(std::move(labels), std::move(s), central_charge_from_z(z), std::move(conj), cfg,
                                     ErrorCode::DegenerateBraiding);
}

}  // namespace modinv

#endif  // MODINV_MODULAR_ZN_HPP
