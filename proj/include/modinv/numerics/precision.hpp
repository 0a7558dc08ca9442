#ifndef MODINV_NUMERICS_PRECISION_HPP
#define MODINV_NUMERICS_PRECISION_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include "modinv/errors.hpp"

namespace modinv {

namespace mp = boost::multiprecision;

/// Variable-precision MPFR float; its working precision is set from a
/// PrecisionConfig (see apply_precision).
using HighPrec = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <class Real>
using Complex = std::complex<Real>;

/// Exact rational numbers for conformal weights and central charges.
using Rational = boost::rational<std::int64_t>;

/// Extra decimal digits carried internally beyond the requested precision, so
/// that accumulated rounding in O(n) sums stays below 10^(2 - digits).
inline constexpr int kGuardDigits = 10;

struct PrecisionConfig {
  int digits = 50;
  double int_tol = 1e-20;
  double null_tol = 1e-30;
  std::int64_t max_denominator = 1'000'000;

  static PrecisionConfig high(int digits = 50) {
    PrecisionConfig cfg;
    cfg.digits = digits;
    cfg.int_tol = std::pow(10.0, -(digits * 2) / 5);
    cfg.null_tol = std::pow(10.0, -(digits * 3) / 5);
    return cfg;
  }

  static PrecisionConfig machine() {
    PrecisionConfig cfg;
    cfg.digits = 15;
    cfg.int_tol = 1e-9;
    cfg.null_tol = 1e-9;
    return cfg;
  }

  /// Residual bound for modular-data identities (S unitarity, TSTST = S, ...).
  /// Machine precision gets 1e-9 since sums over thousands of labels lose
  /// several digits in double.
  double validation_tol() const { return digits <= 16 ? 1e-9 : std::pow(10.0, 2 - digits); }

  void validate() const {
    if (digits < 15) throw Error(ErrorCode::InvalidArgument, "digits must be >= 15");
    if (!(int_tol > 0 && int_tol < 0.5))
      throw Error(ErrorCode::InvalidArgument, "int_tol must lie in (0, 0.5)");
    if (!(null_tol > 0)) throw Error(ErrorCode::InvalidArgument, "null_tol must be positive");
    if (max_denominator < 1)
      throw Error(ErrorCode::InvalidArgument, "max_denominator must be positive");
  }
};

/// Sets the working precision of HighPrec for the calling thread.
inline void apply_precision(const PrecisionConfig& cfg) {
  cfg.validate();
  HighPrec::default_precision(static_cast<unsigned>(cfg.digits + kGuardDigits));
}

template <class Real>
inline constexpr bool is_high_precision_v = !std::is_floating_point_v<Real>;

/// The configuration that matches a scalar type: machine precision for
/// built-in floats, the supplied high-precision settings otherwise.
template <class Real>
PrecisionConfig config_for(const PrecisionConfig& requested) {
  if constexpr (is_high_precision_v<Real>) {
    return requested;
  } else {
    return PrecisionConfig::machine();
  }
}

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real to_real(const Rational& q) {
  return Real(q.numerator()) / Real(q.denominator());
}

template <class Real>
double to_double(const Real& x) {
  if constexpr (is_high_precision_v<Real>) {
    return x.template convert_to<double>();
  } else {
    return static_cast<double>(x);
  }
}

template <class Real>
std::string to_string(const Real& x, int digits = 20) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

/// e^{2 pi i q} for rational q, reduced mod 1 before evaluation.
template <class Real>
Complex<Real> root_of_unity(const Rational& q) {
  std::int64_t num = q.numerator() % q.denominator();
  if (num < 0) num += q.denominator();
  const Real angle = 2 * pi<Real>() * Real(num) / Real(q.denominator());
  using std::cos;
  using std::sin;
  return Complex<Real>(cos(angle), sin(angle));
}

/// Fractional part in [0, 1).
inline Rational mod1(const Rational& q) {
  std::int64_t num = q.numerator() % q.denominator();
  if (num < 0) num += q.denominator();
  return Rational(num, q.denominator());
}

inline Rational mod_n(const Rational& q, std::int64_t n) {
  const Rational scaled = q / n;
  return mod1(scaled) * n;
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// Rounds a complex number to the nearest integer, rejecting anything that
/// is not within cfg.int_tol of one.
template <class Real>
long long nearest_integer(const Complex<Real>& x, const PrecisionConfig& cfg) {
  using std::abs;
  using std::round;
  const Real re = x.real();
  const Real nearest = round(re);
  const Real dist_re = abs(re - nearest);
  const Real dist_im = abs(x.imag());
  const long long n = static_cast<long long>(to_double(nearest));
  if (dist_re > cfg.int_tol || dist_im > cfg.int_tol) {
    const double dist = to_double<Real>(dist_re > dist_im ? dist_re : dist_im);
    throw NotAnIntegerError(to_string(re) + (dist_im > 0 ? " + " + to_string(x.imag()) + "i" : ""),
                            n, dist);
  }
  return n;
}

template <class Real>
long long nearest_integer(const Real& x, const PrecisionConfig& cfg) {
  return nearest_integer(Complex<Real>(x, Real(0)), cfg);
}

/// Best rational approximation with denominator <= max_den via continued
/// fractions; nullopt unless the approximation is within tol of x.
template <class Real>
std::optional<Rational> reconstruct_rational(const Real& x, std::int64_t max_den, double tol) {
  using std::abs;
  using std::floor;
  // Convergents h/k of the continued fraction of x.
  std::int64_t h1 = 1, h2 = 0;
  std::int64_t k1 = 0, k2 = 1;
  Real rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    const Real a_real = floor(rem);
    if (abs(a_real) > Real(1e15)) break;
    const auto a = static_cast<std::int64_t>(to_double(a_real));
    const std::int64_t h = a * h1 + h2;
    const std::int64_t k = a * k1 + k2;
    if (k > max_den) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    if (abs(x - Real(h) / Real(k)) <= tol) return Rational(h, k);
    const Real frac = rem - a_real;
    if (frac == 0) break;
    rem = Real(1) / frac;
  }
  return std::nullopt;
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_PRECISION_HPP
