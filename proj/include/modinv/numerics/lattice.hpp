#ifndef MODINV_NUMERICS_LATTICE_HPP
#define MODINV_NUMERICS_LATTICE_HPP

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include "modinv/errors.hpp"
#include "modinv/numerics/nullspace.hpp"

namespace modinv {

using BigInt = boost::multiprecision::cpp_int;

/// Integer points of a rational subspace.
///
/// `coord_basis` is an upper-triangular Hermite basis of the projection onto
/// `coords` (positive diagonal); `basis` holds the same lattice vectors in the
/// ambient space, so basis[i] restricted to coords equals coord_basis[i].
struct IntegralLattice {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> coords;
  std::vector<std::vector<BigInt>> coord_basis;
  std::vector<std::vector<std::int64_t>> basis;

  std::size_t rank() const noexcept { return coord_basis.size(); }
};

namespace detail {

/// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const BigInt q = a / b;
    BigInt t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

/// Unimodular row operations bringing rows [from, rows.size()) to a single
/// non-zero entry in column `col`, placed at row `from`. Returns false if the
/// column is zero on those rows.
inline bool eliminate_column(std::vector<std::vector<BigInt>>& rows, std::size_t from, std::size_t col) {
  std::size_t pivot = rows.size();
  for (std::size_t r = from; r < rows.size(); ++r)
    if (rows[r][col] != 0) {
      pivot = r;
      break;
    }
  if (pivot == rows.size()) return false;
  std::swap(rows[from], rows[pivot]);
  for (std::size_t r = from + 1; r < rows.size(); ++r) {
    if (rows[r][col] == 0) continue;
    const BigInt a = rows[from][col];
    const BigInt b = rows[r][col];
    auto [g, x, y] = ext_gcd(a, b);
    const BigInt ua = a / g, ub = b / g;
    // [x y; -ub ua] has determinant 1.
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      const BigInt p = rows[from][j], q = rows[r][j];
      rows[from][j] = x * p + y * q;
      rows[r][j] = -ub * p + ua * q;
    }
  }
  if (rows[from][col] < 0)
    for (auto& v : rows[from]) v = -v;
  return true;
}

/// Hermite normal form of a full-rank square integer basis (rows), upper
/// triangular with positive diagonal and reduced entries above it.
inline std::vector<std::vector<BigInt>> hermite_form(std::vector<std::vector<BigInt>> rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    if (!eliminate_column(rows, r, c)) continue;
    for (std::size_t above = 0; above < r; ++above) {
      BigInt q = rows[above][c] / rows[r][c];
      if (rows[above][c] - q * rows[r][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[above][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace detail

/// Lattice of integer vectors lying in a rational subspace given in
/// free-variable form. A vector sum_i c_i v_i is integral iff c is integral
/// and every other coordinate sum_i c_i v_i[j] is; each such congruence cuts
/// the current lattice of admissible c down by one gcd elimination.
inline IntegralLattice integral_lattice(const RationalSubspace& sub) {
  const std::size_t r = sub.dim();
  IntegralLattice out;
  out.ambient_dim = sub.ambient_dim;
  out.coords = sub.coords;

  std::vector<std::vector<BigInt>> lat(r, std::vector<BigInt>(r, 0));
  for (std::size_t i = 0; i < r; ++i) lat[i][i] = 1;

  for (std::size_t j = 0; j < sub.ambient_dim; ++j) {
    BigInt den = 1;
    for (std::size_t i = 0; i < r; ++i) den = detail::lcm(den, BigInt(sub.basis[i][j].denominator()));
    if (den == 1) continue;
    std::vector<BigInt> a(r);
    for (std::size_t i = 0; i < r; ++i)
      a[i] = BigInt(sub.basis[i][j].numerator()) * (den / sub.basis[i][j].denominator());
    // rows (w_k | b_k) with w_k = b_k . a, plus (den | 0)
    std::vector<std::vector<BigInt>> aug;
    for (const auto& b : lat) {
      std::vector<BigInt> row(r + 1, 0);
      for (std::size_t i = 0; i < r; ++i) row[0] += b[i] * a[i];
      row[0] %= den;
      for (std::size_t i = 0; i < r; ++i) row[i + 1] = b[i];
      aug.push_back(std::move(row));
    }
    std::vector<BigInt> den_row(r + 1, 0);
    den_row[0] = den;
    aug.push_back(std::move(den_row));
    detail::eliminate_column(aug, 0, 0);
    lat.clear();
    for (std::size_t k = 1; k < aug.size(); ++k) lat.emplace_back(aug[k].begin() + 1, aug[k].end());
  }

  out.coord_basis = detail::hermite_form(std::move(lat));
  if (out.coord_basis.size() != r)
    throw Error(ErrorCode::InvalidArgument, "integral lattice lost rank");

  for (const auto& c : out.coord_basis) {
    std::vector<std::int64_t> v(sub.ambient_dim, 0);
    for (std::size_t j = 0; j < sub.ambient_dim; ++j) {
      Rational acc(0);
      for (std::size_t i = 0; i < r; ++i)
        if (c[i] != 0) acc += Rational(static_cast<std::int64_t>(c[i])) * sub.basis[i][j];
      if (acc.denominator() != 1) throw Error(ErrorCode::NotAnInteger, "lattice vector is not integral");
      v[j] = acc.numerator();
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace modinv

#endif  // MODINV_NUMERICS_LATTICE_HPP
