#include <gtest/gtest.h>

#include "modinv/modular/level_one.hpp"
#include "modinv/modular/su_n.hpp"
#include "modinv/modular/zn.hpp"

using namespace modinv;

namespace {

struct Modular : ::testing::Test {
  void SetUp() override { apply_precision(cfg); }
  PrecisionConfig cfg = PrecisionConfig::high(50);
};

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_F(Modular, SU2Level16LabelsAndSineFormula) {
  const auto md = su_n_k<HighPrec>(2, 16, cfg);
  ASSERT_EQ(md.size(), 17u);
  const int kk = 18;
  HighPrec worst(0);
  for (int a = 0; a <= 16; ++a)
    for (int b = 0; b <= 16; ++b) {
      const HighPrec expect = sqrt(HighPrec(2) / kk) * sin(HighPrec((a + 1) * (b + 1)) * pi<HighPrec>() / kk);
      worst = std::max<HighPrec>(worst, abs(md.S(a, b) - Complex<HighPrec>(expect)));
    }
  EXPECT_LT(to_double(worst), 1e-45);
  for (int a = 0; a <= 16; ++a) EXPECT_EQ(md.labels().h(a), mod1(Rational(a * (a + 2), 4 * kk)));
  EXPECT_EQ(md.c(), Rational(48, 18));
  for (std::size_t i = 0; i < md.size(); ++i) EXPECT_EQ(md.conjugation()[i], i);
}

TEST_F(Modular, AllResidualsTinyAtFiftyDigits) {
  const auto md = su_n_k<HighPrec>(2, 16, cfg);
  const auto report = verify_modular(md, cfg);
  EXPECT_TRUE(report.ok()) << report;
  for (const auto& c : report.checks()) EXPECT_LE(c.residual, 1e-40) << c.name;
}

TEST_F(Modular, SU3Level9) {
  const auto md = su_n_k<HighPrec>(3, 9, cfg);
  EXPECT_EQ(static_cast<long long>(md.size()), binomial(11, 2));
  EXPECT_LE(verify_modular(md, cfg).find("S unitary")->residual, 1e-40);
  // C read from S^2 numerically: (a,b) -> (b,a)
  const auto conj = conjugation_from_s(md.S(), cfg);
  for (std::size_t i = 0; i < md.size(); ++i) {
    const auto& w = md.labels().weight(i);
    EXPECT_EQ(md.labels().weight(conj[i]), (std::vector<int>{w[1], w[0]}));
  }
  EXPECT_EQ(md.labels().index_of("(0,0)"), 0u);
  EXPECT_EQ(md.labels().name(md.labels().index_of("2 5")), "(2,5)");
}

TEST_F(Modular, QuantumDimensionsAndGlobalIndex) {
  for (auto [n, k] : {std::pair{2, 10}, {3, 5}, {4, 3}}) {
    const auto md = su_n_k<HighPrec>(n, k, cfg);
    EXPECT_EQ(to_double(md.d()[0]), 1.0);
    for (const auto& d : md.d()) EXPECT_GE(to_double(d), 1.0 - 1e-30);
    const HighPrec s00 = md.S(0, 0).real();
    EXPECT_LT(to_double(abs(md.global_index() * s00 * s00 - 1)), 1e-40);
  }
}

TEST(ModularLabels, SU7Level7WithoutS) {
  const auto labels = su_n_k_labels(7, 7);
  EXPECT_EQ(labels->size(), 1716u);
  EXPECT_EQ(labels->name(0), "(0,0,0,0,0,0)");
  EXPECT_THROW(su_n_k_labels(7, 12, 5000), Error);
}

TEST(ModularLabels, SU7Level7MachinePrecision) {
  const auto cfg = PrecisionConfig::machine();
  const auto md = su_n_k<double>(7, 7, cfg);
  EXPECT_EQ(md.size(), 1716u);
  EXPECT_EQ(md.c(), Rational(0));  // 7*48/14 = 24 = 0 mod 8
}

TEST_F(Modular, PerturbedSFailsUnitarity) {
  const auto good = su_n_k<HighPrec>(2, 4, cfg);
  auto s = good.S();
  s(1, 2) += Complex<HighPrec>(HighPrec(1e-3));
  const ModularData<HighPrec> bad(good.label_set_ptr(), s, good.c(), good.conjugation(), cfg);
  const auto report = verify_modular(bad, cfg);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.find("S unitary")->passed);
  EXPECT_FALSE(report.find("S symmetric")->passed);
}

TEST_F(Modular, LevelOneFamilies) {
  const auto e8 = level_one<HighPrec>("E8", 0, cfg);
  ASSERT_EQ(e8.size(), 1u);
  EXPECT_EQ(to_double(e8.S(0, 0).real()), 1.0);

  const auto so48 = level_one<HighPrec>("so", 48, cfg);
  ASSERT_EQ(so48.size(), 4u);
  const double omegas[] = {1, -1, 1, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(to_double(so48.omega(i).real()), omegas[i], 1e-40);
    EXPECT_NEAR(to_double(so48.omega(i).imag()), 0.0, 1e-40);
    EXPECT_EQ(so48.conjugation()[i], i);
  }
  const auto so10 = level_one<HighPrec>("so", 10, cfg);
  EXPECT_EQ(so10.conjugation()[2], 3u);

  const auto e6 = level_one<HighPrec>("e6", 0, cfg);
  ASSERT_EQ(e6.size(), 3u);
  for (const auto& d : e6.d()) EXPECT_NEAR(to_double(d), 1.0, 1e-40);
  EXPECT_EQ(e6.c(), Rational(6));
  EXPECT_EQ(level_one<HighPrec>("e7", 0, cfg).size(), 2u);
  EXPECT_EQ(level_one<HighPrec>("so", 7, cfg).size(), 3u);
  const auto g2 = level_one<HighPrec>("g2", 0, cfg);
  EXPECT_NEAR(to_double(g2.d()[1]), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(level_one<HighPrec>("su", 5, cfg).size(), 5u);
  EXPECT_THROW(level_one<HighPrec>("so", 2, cfg), Error);
}

TEST_F(Modular, ZnAnyonWeights) {
  const auto md = zn_anyon<HighPrec>(5, 2, cfg);
  const std::vector<Rational> expect{0, Rational(1, 5), Rational(4, 5), Rational(4, 5), Rational(1, 5)};
  EXPECT_EQ(md.labels().conformal_weights(), expect);
  for (const auto& d : md.d()) EXPECT_NEAR(to_double(d), 1.0, 1e-40);
  for (int l = 0; l < 5; ++l) EXPECT_EQ(md.conjugation()[l], static_cast<std::size_t>((5 - l) % 5));
  EXPECT_EQ(conjugation_from_s(md.S(), cfg), md.conjugation());
}

TEST_F(Modular, ZnStatisticsMatchesQuadraticForm) {
  for (auto [n, a] : {std::pair{5, 2}, {9, 2}, {8, 3}, {6, 1}}) {
    const auto md = zn_anyon<HighPrec>(n, a, cfg);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) {
        const auto direct = root_of_unity<HighPrec>(Rational(-a * l * m, n)) / sqrt(HighPrec(n));
        EXPECT_LT(to_double(abs(md.S(l, m) - direct)), 1e-40);
      }
  }
  const auto z9 = zn_anyon<HighPrec>(9, 2, cfg);
  EXPECT_TRUE(verify_modular(z9, cfg).ok());
}

TEST_F(Modular, ZnDegenerateAndInvalid) {
  EXPECT_THROW(zn_anyon<HighPrec>(5, 1, cfg), Error);  // odd n needs even a
  EXPECT_THROW(zn_anyon<HighPrec>(6, 2, cfg), Error);  // not coprime
  try {
    zn_anyon<HighPrec>(4, 2, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::DegenerateBraiding);
  }
}
