#include <gtest/gtest.h>

#include <random>

#include "modinv/fusion/fusion_ring.hpp"
#include "modinv/modular/su_n.hpp"
#include "modinv/modular/zn.hpp"

using namespace modinv;

namespace {

struct Fusion : ::testing::Test {
  void SetUp() override { apply_precision(cfg); }
  PrecisionConfig cfg = PrecisionConfig::high(50);

  FusionRing<HighPrec> su(int n, int k) { return FusionRing<HighPrec>(su_n_k<HighPrec>(n, k, cfg)); }
};

SectorVector labels_sum(const FusionRing<HighPrec>& ring, std::initializer_list<int> su2_labels) {
  SectorVector v(ring.labels());
  for (int a : su2_labels) v[static_cast<std::size_t>(a)] += 1;
  return v;
}

// Truncated Clebsch-Gordan series for SU(2)_k.
std::vector<std::int64_t> su2_oracle(int k, int a, int b) {
  std::vector<std::int64_t> out(k + 1, 0);
  for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) out[c] = 1;
  return out;
}

}  // namespace

TEST_F(Fusion, SU2MatchesTruncatedClebschGordan) {
  for (int k : {2, 5, 16}) {
    const auto ring = su(2, k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) EXPECT_EQ(ring.row(a, b), su2_oracle(k, a, b)) << k << " " << a << " " << b;
  }
  const auto ring = su(2, 16);
  EXPECT_EQ(ring.verlinde(1, 1).to_string(), "[(0)] + [(2)]");
}

TEST_F(Fusion, SU3FundamentalMatchesKacWalton) {
  // (1,0) x (a,b) = (a+1,b) + (a-1,b+1) + (a,b-1), keeping dominant weights of level <= k.
  const int k = 9;
  const auto ring = su(3, k);
  const auto& labels = ring.md().labels();
  const auto f = labels.index_of("(1,0)");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int a = labels.weight(i)[0], b = labels.weight(i)[1];
    std::vector<std::int64_t> expect(labels.size(), 0);
    for (auto [x, y] : {std::pair{a + 1, b}, {a - 1, b + 1}, {a, b - 1}})
      if (x >= 0 && y >= 0 && x + y <= k) expect[labels.index_of_weight({x, y})] = 1;
    EXPECT_EQ(ring.row(f, i), expect) << labels.name(i);
  }
  // 3 x 8 = 3 + 6bar + 15
  const auto prod = ring.verlinde(f, labels.index_of("(1,1)"));
  EXPECT_EQ(prod, SectorVector::sum_of(ring.labels(), std::vector<std::string>{"(1,0)", "(0,2)", "(2,1)"}));
}

TEST_F(Fusion, RingAxioms) {
  const auto ring = su(3, 4);
  const auto& md = ring.md();
  const std::size_t n = ring.size();
  for (std::size_t l = 0; l < n; ++l) {
    EXPECT_EQ(ring.verlinde(l, 0), SectorVector::unit(ring.labels(), l));
    for (std::size_t m = 0; m < n; ++m) {
      EXPECT_EQ(ring.row(l, m), ring.row(m, l));
      EXPECT_EQ(ring.N(l, m, 0), m == md.conjugation()[l] ? 1 : 0);
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int t = 0; t < 100; ++t) {
    const auto a = SectorVector::unit(ring.labels(), pick(rng));
    const auto b = SectorVector::unit(ring.labels(), pick(rng));
    const auto c = SectorVector::unit(ring.labels(), pick(rng));
    EXPECT_EQ(fuse(ring, fuse(ring, a, b), c), fuse(ring, a, fuse(ring, b, c)));
    const HighPrec lhs = dim(ring, fuse(ring, a, b));
    EXPECT_LT(to_double(abs(lhs - dim(ring, a) * dim(ring, b))), 1e-40);
  }
}

TEST_F(Fusion, SignedFusionE8Chain) {
  const auto ring = su(2, 28);
  const auto theta = labels_sum(ring, {0, 10, 18, 28});
  SectorVector x = labels_sum(ring, {5, 3});
  x -= labels_sum(ring, {7});
  EXPECT_FALSE(x.is_physical());
  const auto result = fuse(ring, theta, fuse(ring, x, x));
  EXPECT_EQ(result[0], 1);
  EXPECT_TRUE(fuse(ring, x, SectorVector(ring.labels())).is_zero());
  EXPECT_EQ(fuse(ring, SectorVector::unit(ring.labels(), 0), x), x);
}

TEST_F(Fusion, PairingConjugateDim) {
  const auto su2 = su(2, 16);
  const auto theta_e7 = labels_sum(su2, {0, 8, 16});
  EXPECT_EQ(pairing(theta_e7, SectorVector::unit(su2.labels(), 8)), 1);
  EXPECT_EQ(pairing(SectorVector::unit(su2.labels(), 3), SectorVector::unit(su2.labels(), 3)), 1);
  EXPECT_LT(to_double(abs(dim(su2, labels_sum(su2, {0, 16})) - 2)), 1e-40);

  const auto su3 = su(3, 9);
  const auto v = SectorVector::parse(su3.labels(), "(2,5)");
  EXPECT_EQ(conjugate(su3, v), SectorVector::parse(su3.labels(), "(5,2)"));
  EXPECT_EQ(conjugate(su3, SectorVector::unit(su3.labels(), 0)), SectorVector::unit(su3.labels(), 0));
  const auto parsed = SectorVector::parse(su3.labels(), "(0,0) + 2(4,1) - [1,4]");
  EXPECT_EQ(parsed[su3.md().labels().index_of("(4,1)")], 2);
  EXPECT_EQ(parsed[su3.md().labels().index_of("(1,4)")], -1);
}

TEST_F(Fusion, GlobalData) {
  for (auto [n, k] : {std::pair{2, 16}, {3, 9}}) {
    const auto ring = su(n, k);
    const auto g = global_data(ring);
    EXPECT_TRUE(g.agrees);
    EXPECT_EQ(g.c, ring.md().c());
  }
  const FusionRing<HighPrec> z9(zn_anyon<HighPrec>(9, 2, cfg));
  EXPECT_TRUE(global_data(z9).agrees);
  EXPECT_LT(to_double(abs(global_data(z9).global_index - 9)), 1e-40);
}

TEST_F(Fusion, AlphaHomWithIdentityIsPlainHom) {
  const auto ring = su(2, 8);
  const auto id = IntMatrix::identity(9);
  auto unit = [&](std::size_t i) { return SectorVector::unit(ring.labels(), i); };
  for (std::size_t l = 0; l < 9; ++l)
    for (std::size_t r = 0; r < 9; ++r)
      for (std::size_t m = 0; m < 9; ++m)
        for (std::size_t s = 0; s < 9; ++s) {
          const auto lhs = alpha_hom(id, ring, {unit(l), unit(r)}, {unit(m), unit(s)});
          const auto rhs = pairing(fuse(ring, unit(l), unit(r)), fuse(ring, unit(m), unit(s)));
          ASSERT_EQ(lhs, rhs) << l << r << m << s;
        }
}

TEST_F(Fusion, AlphaHomE12) {
  const auto ring = su(3, 9);
  const auto& labels = ring.md().labels();
  IntMatrix z(labels.size(), labels.size());
  const std::vector<std::string> b1{"(0,0)", "(9,0)", "(0,9)", "(4,1)", "(1,4)", "(4,4)"};
  const std::vector<std::string> b2{"(2,2)", "(5,2)", "(2,5)"};
  for (const auto& x : b1)
    for (const auto& y : b1) z(labels.index_of(x), labels.index_of(y)) = 1;
  for (const auto& x : b2)
    for (const auto& y : b2) z(labels.index_of(x), labels.index_of(y)) = 2;

  auto sec = [&](const std::string& s) { return SectorVector::parse(ring.labels(), s); };
  const auto f = sec("(1,0)");
  const auto zero = sec("(0,0)");
  // recovers Z on vacuum pairs
  EXPECT_EQ(alpha_hom(z, ring, {sec("(4,1)"), zero}, {zero, sec("(1,4)")}), 1);
  EXPECT_EQ(alpha_hom(z, ring, {sec("(2,2)"), zero}, {zero, sec("(2,5)")}), 2);

  EXPECT_EQ(alpha_hom(z, ring, {f, f}, {f, f}), 1);
  const auto f_adj = fuse(ring, f, sec("(0,1)"));
  EXPECT_EQ(alpha_hom(z, ring, {f_adj, zero}, {zero, f_adj}), 1);
  const auto ff = fuse(ring, f, f);
  EXPECT_EQ(alpha_hom(z, ring, {f, ff}, {f, ff}), 2);
  const auto two = sec("(2,0)");
  EXPECT_EQ(alpha_hom(z, ring, {two, f}, {two, f}), 1);
  EXPECT_EQ(alpha_hom(z, ring, {two, ff}, {two, ff}), 4);
}

TEST_F(Fusion, CacheFillsLazily) {
  const auto ring = su(3, 5);
  EXPECT_EQ(ring.cached_rows(), 0u);
  ring.row(2, 3);
  ring.row(3, 2);
  EXPECT_EQ(ring.cached_rows(), 1u);
  ring.precompute_all(2);
  EXPECT_EQ(ring.cached_rows(), ring.size() * (ring.size() + 1) / 2);
}
