#ifndef MODINV_MODULAR_LEVEL_ONE_HPP
#define MODINV_MODULAR_LEVEL_ONE_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/modular/label_set.hpp"
#include "modinv/modular/modular_data.hpp"
#include "modinv/modular/su_n.hpp"
#include "modinv/modular/zn.hpp"

namespace modinv {

namespace detail {

template <class Real>
ModularData<Real> relabel(const ModularData<Real>& md, TheoryId id, std::vector<std::string> names,
                          const Rational& c, const PrecisionConfig& cfg) {
  auto labels = std::make_shared<const LabelSet>(std::move(id), std::move(names), md.labels().conformal_weights());
  return assemble_modular_data<Real>(std::move(labels), md.S(), c, md.conjugation(), cfg);
}

/// SO(2r)_1: sectors 0, v, s, c with h = 0, 1/2, r/8, r/8.
template <class Real>
ModularData<Real> so_even(int m, const PrecisionConfig& cfg) {
  const int r = m / 2;
  auto labels = std::make_shared<const LabelSet>(
      TheoryId{"so", m, 1, 0}, std::vector<std::string>{"0", "v", "s", "c"},
      std::vector<Rational>{Rational(0), Rational(1, 2), Rational(r, 8), Rational(r, 8)});
  const Complex<Real> phase = root_of_unity<Real>(Rational(-r, 4));  // i^{-r}
  const Real half = Real(1) / 2;
  const Complex<Real> one(half), minus(-half);
  ComplexMatrix<Real> s(4, 4);
  const Complex<Real> rows[4][4] = {{one, one, one, one},
                                    {one, one, minus, minus},
                                    {one, minus, half * phase, -half * phase},
                                    {one, minus, -half * phase, half * phase}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s(i, j) = rows[i][j];
  Permutation conj = r % 2 == 0 ? Permutation{0, 1, 2, 3} : Permutation{0, 1, 3, 2};
  return assemble_modular_data<Real>(std::move(labels), std::move(s), Rational(r), std::move(conj), cfg);
}

/// SO(2r+1)_1: Ising-type sectors 0, v, s with h_s = (2r+1)/16.
template <class Real>
ModularData<Real> so_odd(int m, const PrecisionConfig& cfg) {
  auto labels = std::make_shared<const LabelSet>(TheoryId{"so", m, 1, 0}, std::vector<std::string>{"0", "v", "s"},
                                                 std::vector<Rational>{Rational(0), Rational(1, 2), Rational(m, 16)});
  using std::sqrt;
  const Real half = Real(1) / 2;
  const Real r2 = Real(1) / sqrt(Real(2));
  ComplexMatrix<Real> s(3, 3);
  const Real rows[3][3] = {{half, half, r2}, {half, half, -r2}, {r2, -r2, Real(0)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = Complex<Real>(rows[i][j]);
  return assemble_modular_data<Real>(std::move(labels), std::move(s), Rational(m, 2), Permutation{0, 1, 2}, cfg);
}

/// (G2)_1: Fibonacci, h = 2/5.
template <class Real>
ModularData<Real> g2_level_one(const PrecisionConfig& cfg) {
  using std::sqrt;
  auto labels = std::make_shared<const LabelSet>(TheoryId{"g2", 0, 1, 0}, std::vector<std::string>{"0", "7"},
                                                 std::vector<Rational>{Rational(0), Rational(2, 5)});
  const Real phi = (Real(1) + sqrt(Real(5))) / 2;
  const Real norm = Real(1) / sqrt(Real(2) + phi);
  ComplexMatrix<Real> s(2, 2);
  s(0, 0) = Complex<Real>(norm);
  s(0, 1) = s(1, 0) = Complex<Real>(norm * phi);
  s(1, 1) = Complex<Real>(-norm);
  return assemble_modular_data<Real>(std::move(labels), std::move(s), Rational(14, 5), Permutation{0, 1}, cfg);
}

}  // namespace detail

/// Level-one theories: family is one of su, so, e6, e7, e8, g2 (case
/// insensitive); m is the rank index for su/so and ignored otherwise.
template <class Real>
ModularData<Real> level_one(std::string family, int m, const PrecisionConfig& cfg) {
  for (auto& ch : family) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (family == "su") return su_n_k<Real>(m, 1, cfg);
  if (family == "so") {
    if (m < 3) throw Error(ErrorCode::InvalidArgument, "SO(m)_1 needs m >= 3");
    return m % 2 == 0 ? detail::so_even<Real>(m, cfg) : detail::so_odd<Real>(m, cfg);
  }
  if (family == "e6")
    return detail::relabel(zn_anyon<Real>(3, 4, cfg), TheoryId{"e6", 0, 1, 0}, {"0", "27", "27b"}, Rational(6), cfg);
  if (family == "e7")
    return detail::relabel(zn_anyon<Real>(2, 3, cfg), TheoryId{"e7", 0, 1, 0}, {"0", "56"}, Rational(7), cfg);
  if (family == "g2") return detail::g2_level_one<Real>(cfg);
  if (family == "e8") {
    auto labels = std::make_shared<const LabelSet>(TheoryId{"e8", 0, 1, 0}, std::vector<std::string>{"0"},
                                                   std::vector<Rational>{Rational(0)});
    ComplexMatrix<Real> s(1, 1);
    s(0, 0) = Complex<Real>(1);
    return assemble_modular_data<Real>(std::move(labels), std::move(s), Rational(8), Permutation{0}, cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown level-one family '" + family + "'");
}

}  // namespace modinv

#endif  // MODINV_MODULAR_LEVEL_ONE_HPP
