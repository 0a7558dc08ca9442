#include <gtest/gtest.h>

#include <complex>
#include <numeric>

#include "modinv/numerics/birkhoff.hpp"
#include "modinv/numerics/charpoly.hpp"
#include "modinv/numerics/dense_matrix.hpp"
#include "modinv/numerics/lattice.hpp"
#include "modinv/numerics/nullspace.hpp"
#include "modinv/numerics/precision.hpp"

using namespace modinv;

namespace {

struct HighPrecision : ::testing::Test {
  void SetUp() override { apply_precision(cfg); }
  PrecisionConfig cfg = PrecisionConfig::high(50);
};

IntMatrix from_perms(const std::vector<Permutation>& ps, std::size_t n) {
  IntMatrix m(n, n);
  for (const auto& p : ps) m += IntMatrix::permutation(p);
  return m;
}

// Closed-form SU(2)_k S matrix, kept independent of the library constructor.
ComplexMatrix<HighPrec> su2_sine_s(int k) {
  const int n = k + 1;
  ComplexMatrix<HighPrec> s(n, n);
  const HighPrec norm = sqrt(HighPrec(2) / HighPrec(k + 2));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s(a, b) = Complex<HighPrec>(norm * sin(HighPrec((a + 1) * (b + 1)) * pi<HighPrec>() / HighPrec(k + 2)), 0);
  return s;
}

}  // namespace

TEST(PrecisionConfig, Defaults) {
  const auto cfg = PrecisionConfig::high(50);
  EXPECT_EQ(cfg.digits, 50);
  EXPECT_DOUBLE_EQ(cfg.int_tol, 1e-20);
  EXPECT_DOUBLE_EQ(cfg.null_tol, 1e-30);
  EXPECT_DOUBLE_EQ(PrecisionConfig::machine().int_tol, 1e-9);
  PrecisionConfig bad;
  bad.digits = 10;
  EXPECT_THROW(bad.validate(), Error);
  bad = PrecisionConfig{};
  bad.int_tol = 0.5;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(NearestInteger, RoundsWithinTolerance) {
  const auto cfg = PrecisionConfig::machine();
  EXPECT_EQ(nearest_integer(3.0000000001, cfg), 3);
  EXPECT_EQ(nearest_integer(Complex<double>(-2.0, 1e-12), cfg), -2);
}

TEST(NearestInteger, RejectsMidpoint) {
  const auto cfg = PrecisionConfig::machine();
  try {
    nearest_integer(0.5, cfg);
    FAIL() << "expected NotAnIntegerError";
  } catch (const NotAnIntegerError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnInteger);
    EXPECT_NEAR(e.distance(), 0.5, 1e-12);
  }
  EXPECT_THROW(nearest_integer(Complex<double>(1.0, 0.01), cfg), NotAnIntegerError);
}

TEST_F(HighPrecision, NearestIntegerRoundTrip) {
  for (int n : {-7, 0, 1, 12345}) {
    for (double eps : {0.0, 4e-21, -4e-21}) {
      const HighPrec x = HighPrec(n) + HighPrec(eps);
      EXPECT_EQ(nearest_integer(x, cfg), n);
    }
  }
}

TEST_F(HighPrecision, VerlindeSumSU2Level2) {
  // N_{1,1}^0 = 1 for spin 1/2 x spin 1/2 at level 2
  const auto s = su2_sine_s(2);
  Complex<HighPrec> sum(0);
  for (int r = 0; r < 3; ++r) sum += s(1, r) * s(1, r) * std::conj(s(0, r)) / s(0, r);
  EXPECT_EQ(nearest_integer(sum, cfg), 1);
}

TEST(ReconstructRational, IdempotentOnRationals) {
  apply_precision(PrecisionConfig::high(50));
  for (auto q : {Rational(0), Rational(1, 3), Rational(-22, 7), Rational(999983, 1000000), Rational(5)}) {
    const auto r = reconstruct_rational(to_real<HighPrec>(q), 1'000'000, 1e-30);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, q);
  }
  EXPECT_FALSE(reconstruct_rational(sqrt(HighPrec(2)), 1'000'000, 1e-30).has_value());
}

TEST_F(HighPrecision, NullspaceIdentityIsEmpty) {
  const auto id = ComplexMatrix<HighPrec>::identity(3);
  EXPECT_EQ(nullspace_basis(id, cfg).dim(), 0u);
}

TEST_F(HighPrecision, NullspaceZeroIsEverything) {
  const ComplexMatrix<HighPrec> zero(2, 2);
  const auto ns = nullspace_basis(zero, cfg);
  ASSERT_EQ(ns.dim(), 2u);
  EXPECT_EQ(ns.basis[0], (std::vector<Rational>{1, 0}));
  EXPECT_EQ(ns.basis[1], (std::vector<Rational>{0, 1}));
}

TEST_F(HighPrecision, NullspaceRationalWithIrrationalCoefficients) {
  // x + sqrt(2) y - (1 + sqrt(2)) z = 0 and x - z = 0  =>  span{(1,1,1)}
  ComplexMatrix<HighPrec> m(2, 3);
  const HighPrec r2 = sqrt(HighPrec(2));
  using C = Complex<HighPrec>;
  m(0, 0) = C(1, 0);
  m(0, 1) = C(r2, 0);
  m(0, 2) = C(-(1 + r2), 0);
  m(1, 0) = C(0, 1);
  m(1, 2) = C(0, -1);
  const auto ns = nullspace_basis(m, cfg);
  ASSERT_EQ(ns.dim(), 1u);
  EXPECT_EQ(ns.basis[0], (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(ns.coords, (std::vector<std::size_t>{0}));
}

TEST(IntegralLattice, HalfVector) {
  RationalSubspace sub;
  sub.ambient_dim = 2;
  sub.coords = {0};
  sub.basis = {{Rational(1, 2) * 2, Rational(1)}};
  // span{(1/2,1/2)} in free-variable form is span{(1,1)}
  auto lat = integral_lattice(sub);
  ASSERT_EQ(lat.rank(), 1u);
  EXPECT_EQ(lat.basis[0], (std::vector<std::int64_t>{1, 1}));

  sub.basis = {{Rational(1), Rational(1, 2)}};
  lat = integral_lattice(sub);
  ASSERT_EQ(lat.rank(), 1u);
  EXPECT_EQ(lat.basis[0], (std::vector<std::int64_t>{2, 1}));
}

TEST(IntegralLattice, StandardBasis) {
  RationalSubspace sub;
  sub.ambient_dim = 2;
  sub.coords = {0, 1};
  sub.basis = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  const auto lat = integral_lattice(sub);
  ASSERT_EQ(lat.rank(), 2u);
  EXPECT_EQ(lat.basis[0], (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(lat.basis[1], (std::vector<std::int64_t>{0, 1}));
}

TEST(IntegralLattice, MixedCongruences) {
  // v1 = (1, 0, 1/3, 1/2), v2 = (0, 1, 2/3, 1/2): c1 + 2 c2 = 0 mod 3, c1 + c2 = 0 mod 2
  RationalSubspace sub;
  sub.ambient_dim = 4;
  sub.coords = {0, 1};
  sub.basis = {{1, 0, Rational(1, 3), Rational(1, 2)}, {0, 1, Rational(2, 3), Rational(1, 2)}};
  const auto lat = integral_lattice(sub);
  ASSERT_EQ(lat.rank(), 2u);
  // index of the lattice in Z^2 is 6
  EXPECT_EQ(lat.coord_basis[0][0] * lat.coord_basis[1][1], 6);
  for (const auto& v : lat.basis) {
    const std::int64_t c1 = v[0], c2 = v[1];
    EXPECT_EQ(Rational(c1, 3) + Rational(2 * c2, 3), Rational(v[2]));
    EXPECT_EQ(Rational(c1 + c2, 2), Rational(v[3]));
  }
  EXPECT_EQ(lat.coord_basis[0][1] >= 0, true);
}

TEST_F(HighPrecision, ZnCommutantLattice) {
  // Z_5 with h = λ^2/5: solve ZS = SZ, ZT = TZ and compare with the divisor invariants.
  const int n = 5;
  ComplexMatrix<HighPrec> s(n, n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      s(l, m) = root_of_unity<HighPrec>(Rational(-2 * l * m, n)) / sqrt(HighPrec(n));
  // unknowns Z_{ab} restricted to pairs with h_a = h_b (a^2 = b^2 mod 5)
  std::vector<std::pair<int, int>> support;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a * a - b * b) % n == 0) support.emplace_back(a, b);
  ComplexMatrix<HighPrec> sys(n * n, support.size());
  for (std::size_t u = 0; u < support.size(); ++u) {
    const auto [a, b] = support[u];
    // (ZS - SZ)_{ij} gets Z_ab (δ_ia S_bj - S_ia δ_bj)
    for (int j = 0; j < n; ++j) sys(a * n + j, u) += s(b, j);
    for (int i = 0; i < n; ++i) sys(i * n + b, u) -= s(i, a);
  }
  const auto ns = nullspace_basis(sys, cfg);
  ASSERT_EQ(ns.dim(), 2u);
  const auto lat = integral_lattice(ns);
  ASSERT_EQ(lat.rank(), 2u);
  // identity and conjugation both lie in the lattice and span it
  auto coords_of = [&](auto pred) {
    std::vector<std::int64_t> v(support.size());
    for (std::size_t u = 0; u < support.size(); ++u) v[u] = pred(support[u].first, support[u].second);
    return v;
  };
  const auto id = coords_of([](int a, int b) { return a == b ? 1 : 0; });
  const auto cc = coords_of([&](int a, int b) { return (a + b) % n == 0 ? 1 : 0; });
  const std::int64_t det = lat.basis[0][ns.coords[0]] * lat.basis[1][ns.coords[1]] -
                           lat.basis[0][ns.coords[1]] * lat.basis[1][ns.coords[0]];
  EXPECT_EQ(std::abs(det), 1);
  for (const auto& target : {id, cc}) {
    // target = t0 b0 + t1 b1 solved on coordinates, then checked everywhere
    const std::int64_t x = target[ns.coords[0]], y = target[ns.coords[1]];
    const auto& b0 = lat.basis[0];
    const auto& b1 = lat.basis[1];
    const std::int64_t t0 = (x * b1[ns.coords[1]] - y * b1[ns.coords[0]]) / det;
    const std::int64_t t1 = (b0[ns.coords[0]] * y - b0[ns.coords[1]] * x) / det;
    for (std::size_t u = 0; u < support.size(); ++u) EXPECT_EQ(t0 * b0[u] + t1 * b1[u], target[u]);
  }
}

TEST(Birkhoff, Identity) {
  const auto ps = permutation_sum_decomposition(IntMatrix::identity(4));
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(is_identity(ps[0]));
}

TEST(Birkhoff, D10Sandwich) {
  IntMatrix m(6, 6);
  for (int i = 0; i < 4; ++i) m(i, i) = 2;
  m(4, 4) = m(4, 5) = m(5, 4) = m(5, 5) = 1;
  const auto ps = permutation_sum_decomposition(m);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_TRUE(is_identity(ps[0]));
  EXPECT_EQ(ps[1], (Permutation{0, 1, 2, 3, 5, 4}));
  EXPECT_EQ(from_perms(ps, 6), m);
}

TEST(Birkhoff, E12Sandwich) {
  const IntMatrix m{{6, 0, 0}, {0, 3, 3}, {0, 3, 3}};
  const auto ps = permutation_sum_decomposition(m);
  ASSERT_EQ(ps.size(), 6u);
  const auto grouped = group_permutations(ps);
  ASSERT_EQ(grouped.size(), 2u);
  EXPECT_EQ(grouped[0].first, 3);
  EXPECT_TRUE(is_identity(grouped[0].second));
  EXPECT_EQ(grouped[1].first, 3);
  EXPECT_EQ(grouped[1].second, (Permutation{0, 2, 1}));
  EXPECT_EQ(from_perms(ps, 3), m);
}

TEST(Birkhoff, SumsBackExactly) {
  const IntMatrix m{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}};
  EXPECT_EQ(from_perms(permutation_sum_decomposition(m), 4), m);
  EXPECT_THROW(permutation_sum_decomposition(IntMatrix{{1, 1}, {0, 1}}), Error);
}

TEST(CharPoly, SmallMatrices) {
  // A_3 adjacency: x^3 - 2x
  const IntMatrix a{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  const auto p = characteristic_polynomial(a);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], 0);
  EXPECT_EQ(p[1], -2);
  EXPECT_EQ(p[2], 0);
  EXPECT_EQ(p[3], 1);
  apply_precision(PrecisionConfig::high(50));
  const auto id_poly = characteristic_polynomial(IntMatrix::identity(3) * 2);
  EXPECT_EQ(root_multiplicity(id_poly, Complex<HighPrec>(2, 0), 1e-30), 3u);
  EXPECT_EQ(root_multiplicity(p, Complex<HighPrec>(sqrt(HighPrec(2)), 0), 1e-30), 1u);
  EXPECT_EQ(root_multiplicity(p, Complex<HighPrec>(1, 0), 1e-30), 0u);
}
