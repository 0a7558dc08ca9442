#ifndef MODINV_NUMERICS_CHARPOLY_HPP
#define MODINV_NUMERICS_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <type_traits>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/numerics/int_matrix.hpp"
#include "modinv/numerics/precision.hpp"

namespace modinv {

/// Integer polynomial, coefficients in increasing degree.
using IntPolynomial = std::vector<boost::multiprecision::cpp_int>;

/// det(x I - A) by Faddeev-LeVerrier; all divisions are exact.
inline IntPolynomial characteristic_polynomial(const IntMatrix& a) {
  using boost::multiprecision::cpp_int;
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  IntPolynomial c(n + 1, 0);
  c[n] = 1;
  std::vector<cpp_int> mk(n * n, 0);  // M_k, starts at M_0 = 0
  std::vector<cpp_int> ai(n * n);
  for (std::size_t i = 0; i < n * n; ++i) ai[i] = a.data()[i];
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{n-k+1} I)
    std::vector<cpp_int> tmp = mk;
    for (std::size_t i = 0; i < n; ++i) tmp[i * n + i] += c[n - k + 1];
    std::vector<cpp_int> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (ai[i * n + l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += ai[i * n + l] * tmp[l * n + j];
      }
    mk = std::move(next);
    cpp_int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk[i * n + i];
    if (tr % cpp_int(k) != 0) throw Error(ErrorCode::InvalidArgument, "inexact Faddeev-LeVerrier step");
    c[n - k] = -tr / cpp_int(k);
  }
  return c;
}

inline IntPolynomial derivative(const IntPolynomial& p) {
  IntPolynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * i);
  return d;
}

namespace detail {
template <class Real>
Real from_int(const boost::multiprecision::cpp_int& v) {
  if constexpr (std::is_floating_point_v<Real>) return v.convert_to<Real>();
  else return Real(v.str());
}
}  // namespace detail

template <class Real>
Complex<Real> evaluate(const IntPolynomial& p, const Complex<Real>& x) {
  Complex<Real> acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Complex<Real>(detail::from_int<Real>(p[i]), Real(0));
  return acc;
}

/// Multiplicity of `x` as a root of p: the number of successive derivatives
/// vanishing at x, each tested relative to the size of its terms.
template <class Real>
std::size_t root_multiplicity(IntPolynomial p, const Complex<Real>& x, double tol) {
  using std::abs;
  std::size_t mult = 0;
  while (p.size() > 1) {
    Real scale(0);
    Real power(1);
    const Real ax = abs(x);
    for (const auto& coeff : p) {
      scale += abs(detail::from_int<Real>(coeff)) * power;
      power *= ax;
    }
    if (abs(evaluate(p, x)) > Real(tol) * (scale > 1 ? scale : Real(1))) break;
    ++mult;
    p = derivative(p);
  }
  return mult;
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_CHARPOLY_HPP
