#include <gtest/gtest.h>

#include <algorithm>

#include "modinv/invariants/named.hpp"
#include "modinv/modular/level_one.hpp"
#include "modinv/modular/zn.hpp"

using namespace modinv;

namespace {

struct Invariants : ::testing::Test {
  void SetUp() override { apply_precision(cfg); }
  PrecisionConfig cfg = PrecisionConfig::high(50);

  std::shared_ptr<const ModularData<HighPrec>> su2(int k) {
    return std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, k, cfg));
  }
};

bool contains(const std::vector<ModularInvariant>& list, const IntMatrix& m) {
  return std::any_of(list.begin(), list.end(), [&](const ModularInvariant& z) { return z.matrix() == m; });
}

// E6 of SU(2)_10 written entry by entry from its three blocks.
IntMatrix e6_by_hand() {
  IntMatrix m(11, 11);
  for (auto [a, b] : {std::pair{0, 6}, std::pair{4, 10}, std::pair{3, 7}}) {
    m(a, a) = m(b, b) = m(a, b) = m(b, a) = 1;
  }
  return m;
}

}  // namespace

TEST_F(Invariants, IdentityVerifiesAndIsNormalized) {
  const auto md = su2(5);
  const auto rep = verify_invariant(*md, IntMatrix::identity(6), cfg);
  EXPECT_TRUE(rep.ok()) << rep;
  EXPECT_TRUE(rep.flag("normalized"));
  const auto c = counts(IntMatrix::identity(6));
  EXPECT_EQ(c.trace, 6);
  EXPECT_EQ(c.trace_zt_z, 6);
  EXPECT_EQ(c.vacuum_row_squares, 1);
  EXPECT_EQ(c.zzstar_00, 1);
}

TEST_F(Invariants, E7SquareIsAnUnnormalizedInvariant) {
  auto md = su2(16);
  FusionRing<HighPrec> ring(md);
  const auto e7 = ade_invariant(ring, AdeDiagram::parse("E7"));
  auto rep = verify_invariant(*md, e7, cfg);
  EXPECT_TRUE(rep.ok()) << rep;
  EXPECT_TRUE(rep.flag("normalized"));
  const IntMatrix sq = product(e7, e7);
  rep = verify_invariant(*md, sq, cfg);
  EXPECT_TRUE(rep.ok()) << rep;
  EXPECT_FALSE(rep.flag("normalized"));
  EXPECT_EQ(sq(0, 0), 2);
  EXPECT_EQ(counts(e7).zzstar_00, (e7.matrix() * adjoint(e7.matrix()))(0, 0));
}

TEST_F(Invariants, RejectsNonInvariants) {
  const auto md = su2(4);
  IntMatrix m = IntMatrix::identity(5);
  m(0, 2) = 1;  // h_0 != h_2
  auto rep = verify_invariant(*md, m, cfg);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.find("support on equal conformal weights")->passed);
  m = IntMatrix::identity(5);
  m(1, 1) = -1;
  EXPECT_FALSE(verify_invariant(*md, m, cfg).ok());
  EXPECT_FALSE(verify_invariant(*md, IntMatrix::identity(4), cfg).ok());
}

TEST_F(Invariants, NamedSU2Invariants) {
  auto e6 = ade_invariant<HighPrec>("E6", 10, cfg);
  EXPECT_TRUE(e6.report.ok()) << e6.report;
  EXPECT_EQ(e6.z.matrix(), e6_by_hand());
  EXPECT_EQ(e6.z.matrix().trace(), 6);
  auto d10 = ade_invariant<HighPrec>("D10", 16, cfg);
  EXPECT_EQ(d10.z.matrix().trace(), 10);
  EXPECT_EQ(d10.z(8, 8), 2);
  auto a17 = ade_invariant<HighPrec>("A_17", 16, cfg);
  EXPECT_EQ(a17.z.matrix(), IntMatrix::identity(17));
  EXPECT_THROW(ade_invariant<HighPrec>("E6", 12, cfg), Error);
  try {
    ade_invariant<HighPrec>("E8", 16, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleLevel);
  }
  EXPECT_THROW(AdeDiagram::parse("F4"), Error);
}

TEST_F(Invariants, EnumerationSU2Level16IsADE) {
  auto md = su2(16);
  FusionRing<HighPrec> ring(md);
  const auto res = enumerate_physical(*md, cfg);
  ASSERT_EQ(res.invariants.size(), 3u);
  EXPECT_EQ(res.invariants[0].matrix(), IntMatrix::identity(17));
  EXPECT_EQ(res.invariants[1].matrix(), ade_invariant(ring, {'D', 10}).matrix());
  EXPECT_EQ(res.invariants[2].matrix(), ade_invariant(ring, {'E', 7}).matrix());
  EXPECT_TRUE(res.bound_touched);  // Z_{0,16} = 1 = d_0 d_16
  EXPECT_EQ(res.support_size, 29u);
}

TEST_F(Invariants, EnumerationSmallLevels) {
  auto md = su2(4);
  FusionRing<HighPrec> ring(md);
  const auto res = enumerate_physical(*md, cfg);
  EXPECT_EQ(res.invariants.size(), 2u);
  EXPECT_TRUE(contains(res.invariants, IntMatrix::identity(5)));
  EXPECT_TRUE(contains(res.invariants, ade_invariant(ring, {'D', 4}).matrix()));
  for (int k : {10, 28}) EXPECT_EQ(enumerate_physical(*su2(k), cfg).invariants.size(), 3u) << k;
  for (int k : {1, 3, 5}) EXPECT_EQ(enumerate_physical(*su2(k), cfg).invariants.size(), 1u) << k;
}

TEST_F(Invariants, EnumerationCapAndNodeLimit) {
  auto md = su2(16);
  EnumerationOptions opt;
  opt.label_cap = 10;
  try {
    enumerate_physical(*md, cfg, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCap);
  }
  opt = {};
  opt.node_limit = 2;
  try {
    enumerate_physical(*md, cfg, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchSpaceTooLarge);
  }
}

TEST_F(Invariants, Level16FusionRules) {
  auto md = su2(16);
  FusionRing<HighPrec> ring(md);
  const IntMatrix d = ade_invariant(ring, {'D', 10}).matrix();
  const IntMatrix e = ade_invariant(ring, {'E', 7}).matrix();
  EXPECT_EQ(d * d, 2 * d);
  EXPECT_EQ(d * e, 2 * e);
  EXPECT_EQ(e * d, 2 * e);
  EXPECT_EQ(e * e, d + e);
}

TEST_F(Invariants, SU2GeneralRules) {
  for (int k = 4; k <= 28; k += 2) {
    auto md = su2(k);
    FusionRing<HighPrec> ring(md);
    for (const auto& diag : su2_diagrams(k)) {
      const IntMatrix z = ade_invariant(ring, diag).matrix();
      EXPECT_TRUE(verify_invariant(*md, z, cfg).ok()) << diag.name();
      IntMatrix expected = z * z;
      if (diag.series == 'D') expected = diag.rank % 2 == 0 ? 2 * z : IntMatrix::identity(k + 1);
      if (diag.series == 'E' && diag.rank == 6) expected = 2 * z;
      if (diag.series == 'E' && diag.rank == 8) expected = 4 * z;
      EXPECT_EQ(z * z, expected) << diag.name() << " at k=" << k;
    }
  }
}

TEST_F(Invariants, DecomposeReturnsAllSolutions) {
  auto md = su2(16);
  FusionRing<HighPrec> ring(md);
  const std::vector<IntMatrix> basis{IntMatrix::identity(17), ade_invariant(ring, {'D', 10}).matrix(),
                                     ade_invariant(ring, {'E', 7}).matrix()};
  auto sol = decompose(basis[1] * basis[1], basis);
  ASSERT_EQ(sol.size(), 1u);
  EXPECT_EQ(sol[0], (std::vector<std::int64_t>{0, 2, 0}));
  sol = decompose(basis[2] * basis[2], basis);
  ASSERT_EQ(sol.size(), 1u);
  EXPECT_EQ(sol[0], (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_EQ(recompose(sol[0], basis), basis[2] * basis[2]);
  // Ties are all reported.
  const std::vector<IntMatrix> redundant{basis[0], basis[0]};
  EXPECT_EQ(decompose(2 * basis[0], redundant).size(), 3u);
  EXPECT_TRUE(decompose(basis[1] + basis[0], {basis[2]}).empty());
}

TEST_F(Invariants, ConjugationAndAdjoint) {
  const auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(3, 2, cfg));
  const IntMatrix c = conj(IntMatrix::identity(md->size()), md->conjugation());
  EXPECT_EQ(c, IntMatrix::permutation(md->conjugation()));
  EXPECT_TRUE(verify_invariant(*md, c, cfg).ok());
  EXPECT_EQ(c * c, IntMatrix::identity(md->size()));
  EXPECT_EQ(adjoint(c), c.transpose());
}

TEST_F(Invariants, SU3Invariants) {
  auto e12 = su3_invariant<HighPrec>("E^(12)", cfg);
  EXPECT_TRUE(e12.report.ok()) << e12.report;
  const IntMatrix& z = e12.z.matrix();
  EXPECT_EQ(z(0, 0), 1);
  EXPECT_EQ(z.trace(), 12);
  EXPECT_EQ(z.transpose() * z, 6 * z);
  EXPECT_EQ(counts(z).vacuum_row_squares, 6);
  std::int64_t ones = 0;
  for (std::size_t l = 0; l < z.cols(); ++l) ones += z(0, l) == 1;
  EXPECT_EQ(ones, 6);

  auto d12 = su3_invariant<HighPrec>("D^(12)", cfg);
  EXPECT_TRUE(d12.report.ok()) << d12.report;
  const auto fixed = d12.md->labels().index_of("(3,3)");
  EXPECT_EQ(d12.z(fixed, fixed), 3);
  EXPECT_EQ(d12.z(0, d12.md->labels().index_of("(9,0)")), 1);

  auto e8 = su3_invariant<HighPrec>("E^(8)", cfg);
  EXPECT_TRUE(e8.report.ok()) << e8.report;
  EXPECT_EQ(e8.z.matrix().trace(), 12);
}

TEST_F(Invariants, SU3E24InMachinePrecision) {
  const auto mcfg = PrecisionConfig::machine();
  auto e24 = su3_invariant<double>("E^(24)", mcfg);
  EXPECT_TRUE(e24.report.ok()) << e24.report;
  EXPECT_EQ(e24.z.matrix().trace(), 24);
  EXPECT_EQ(e24.md->size(), 253u);
}

TEST_F(Invariants, ZnDivisorLabelling) {
  for (auto [n, expected] : {std::pair{5, 2}, std::pair{9, 3}, std::pair{15, 4}}) {
    const auto md = zn_anyon<HighPrec>(n, 2, cfg);
    const auto list = zn_invariants(md, cfg);
    ASSERT_EQ(list.size(), static_cast<std::size_t>(expected)) << n;
    for (const auto& [d, z] : list) {
      const auto& dual = std::find_if(list.begin(), list.end(), [&, d = d](const auto& p) { return p.first == n / d; });
      ASSERT_NE(dual, list.end());
      for (int l = 0; l < n; ++l) {
        const auto lu = static_cast<std::size_t>(l);
        EXPECT_EQ(z(lu, static_cast<std::size_t>((n - l) % n)), dual->second(lu, lu)) << n << " " << d << " " << l;
      }
    }
    EXPECT_EQ(list.front().second.matrix(), IntMatrix::permutation(md.conjugation()));
    EXPECT_EQ(list.back().second.matrix(), IntMatrix::identity(static_cast<std::size_t>(n)));
  }
}

TEST_F(Invariants, HeteroticInvariantIsEnumerated) {
  const auto md = level_one<HighPrec>("so", 48, cfg);
  IntMatrix het(4, 4);
  const auto& L = md.labels();
  het(0, 0) = het(L.index_of("s"), 0) = het(0, L.index_of("c")) = het(L.index_of("s"), L.index_of("c")) = 1;
  const auto rep = verify_invariant(md, het, cfg);
  EXPECT_TRUE(rep.ok()) << rep;
  EXPECT_FALSE(het.is_symmetric());
  EXPECT_TRUE(contains(enumerate_physical(md, cfg).invariants, het));
}

TEST_F(Invariants, ParentInequality) {
  auto e6 = ade_invariant<HighPrec>("E6", 10, cfg);
  IntMatrix bplus(3, 11);
  for (auto [r, l] : {std::pair{0, 0}, {0, 6}, {1, 4}, {1, 10}, {2, 3}, {2, 7}}) bplus(r, l) = 1;
  const auto p = parent_inequality_check(e6.z.matrix(), bplus);
  EXPECT_TRUE(p.report.ok());
  EXPECT_EQ(p.zplus, e6.z.matrix());
  EXPECT_EQ(p.difference, p.zplus);

  const auto id = parent_inequality_check(IntMatrix::identity(3), IntMatrix::identity(3));
  EXPECT_TRUE(id.report.ok());
  EXPECT_TRUE(id.difference.is_zero());

  IntMatrix big(1, 3);
  big(0, 0) = 2;
  EXPECT_THROW(parent_inequality_check(IntMatrix::identity(3), big), Error);
}
