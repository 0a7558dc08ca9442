#include <gtest/gtest.h>

#include <cmath>

#include "modinv/invariants/enumerate.hpp"
#include "modinv/nimreps/nimrep.hpp"

using namespace modinv;

namespace {

struct Nimreps : ::testing::Test {
  void SetUp() override { apply_precision(cfg); }
  PrecisionConfig cfg = PrecisionConfig::high(50);

  std::shared_ptr<const ModularData<HighPrec>> su2(int k) {
    return std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, k, cfg));
  }
};

SectorVector su2_sum(const std::shared_ptr<const LabelSet>& labels, const std::vector<std::pair<int, int>>& terms) {
  SectorVector v(labels);
  for (auto [l, m] : terms) v[labels->index_of_weight({l})] += m;
  return v;
}

// Truncated Clebsch-Gordan rule at level k.
std::int64_t cg(int k, int i, int j, int m) {
  return std::abs(i - j) <= m && m <= std::min(i + j, 2 * k - i - j) && (i + j + m) % 2 == 0;
}

}  // namespace

TEST_F(Nimreps, DynkinShapes) {
  const auto a3 = dynkin("A3");
  EXPECT_EQ(a3.adjacency(), (IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  const auto d10 = dynkin("D10");
  EXPECT_EQ(d10.size(), 10u);
  EXPECT_EQ(d10.branch_nodes(), (std::vector<std::size_t>{7}));
  const auto e7 = dynkin("E7");
  EXPECT_EQ(e7.branch_nodes(), (std::vector<std::size_t>{2}));
  const auto pf = perron_frobenius<HighPrec>(e7, cfg);
  EXPECT_LT(abs(pf.value - 2 * cos(pi<HighPrec>() / 18)), HighPrec(1e-24));
  EXPECT_NEAR(to_double(pf.value), 1.9696, 1e-4);
}

TEST_F(Nimreps, Components) {
  const auto u = disjoint_union(dynkin("A3"), dynkin("A2"));
  EXPECT_EQ(components(u).count, 2u);
  const auto full = disjoint_union(dynkin("D10"), dynkin("E7"));
  const auto c = components(full);
  ASSERT_EQ(c.count, 2u);
  EXPECT_EQ(c.parts[0].size(), 10u);
  EXPECT_EQ(c.parts[1].size(), 7u);
  const auto pf = perron_frobenius<double>(full, PrecisionConfig::machine());
  ASSERT_EQ(pf.component_values.size(), 2u);
  EXPECT_NEAR(pf.component_values[0], pf.component_values[1], 1e-7);  // both have Coxeter number 18
}

TEST_F(Nimreps, DotIsDeterministic) {
  const auto g = dynkin("A3");
  EXPECT_EQ(dot_export(g), "graph A3 {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v2 [label=\"2\"];\n"
                           "  v0 -- v1;\n  v1 -- v2;\n}\n");
  EXPECT_EQ(dot_export(fusion_graph(IntMatrix{{0, 2}, {0, 0}})), "digraph G {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n"
                                                                   "  v0 -> v1 [label=\"2\"];\n}\n");
}

TEST_F(Nimreps, PathGraphIsTruncatedChebyshev) {
  const int k = 16;
  const auto nim = su2_nimrep(dynkin("A17"), su2(k));
  for (int m = 0; m <= k; ++m)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) ASSERT_EQ(nim.G(m)(i, j), cg(k, i, j, m)) << m << " " << i << " " << j;
}

TEST_F(Nimreps, LevelMismatchAndBadGraphs) {
  EXPECT_THROW(su2_nimrep(dynkin("D10"), su2(17)), Error);
  try {
    su2_nimrep(dynkin("D10"), su2(17));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoxeterMismatch);
  }
  EXPECT_NO_THROW(su2_nimrep(dynkin("E7"), su2(16)));
}

TEST_F(Nimreps, AxiomsForAllSu2Graphs) {
  for (int k = 1; k <= 28; ++k) {
    auto md = su2(k);
    FusionRing<HighPrec> ring(md);
    for (const auto& d : su2_diagrams(k)) {
      const auto nim = su2_nimrep(dynkin(d), ring);
      EXPECT_TRUE(verify_nimrep(nim, ring).ok()) << d.name();
      const auto z = ade_invariant(ring, d);
      EXPECT_TRUE(spectrum_report(nim, z.matrix()).ok()) << d.name();
      EXPECT_TRUE(theta_sum_report(&nim, z.matrix(), ring).report.ok()) << d.name();
    }
  }
}

TEST_F(Nimreps, Spectra) {
  auto md = su2(16);
  FusionRing<HighPrec> ring(md);
  const auto e7 = su2_nimrep(dynkin("E7"), md);
  const auto ze7 = ade_invariant(ring, {'E', 7}).matrix();
  EXPECT_NO_THROW(spectrum_check(e7, ze7));
  EXPECT_EQ(su2_exponents(ze7), (std::vector<int>{1, 5, 7, 9, 11, 13, 17}));
  const auto d10 = su2_nimrep(dynkin("D10"), md);
  const auto zd = ade_invariant(ring, {'D', 10}).matrix();
  EXPECT_TRUE(spectrum_check(d10, zd).ok());
  EXPECT_EQ(root_multiplicity(characteristic_polynomial(d10.G(1)), Complex<HighPrec>(0), cfg.int_tol), 2u);
  EXPECT_TRUE(spectrum_check(su2_nimrep(dynkin("A17"), md), IntMatrix::identity(17)).ok());
  // the wrong pairing is caught
  EXPECT_THROW(spectrum_check(e7, zd), Error);
}

TEST_F(Nimreps, ThetaSumThreeWays) {
  auto md = su2(16);
  FusionRing<HighPrec> ring(md);
  const auto e7 = su2_nimrep(dynkin("E7"), md);
  const auto ze7 = ade_invariant(ring, {'E', 7}).matrix();
  const auto r = theta_sum_check(&e7, ze7, ring);
  ASSERT_EQ(r.vertex_sum.size(), 17u);
  EXPECT_EQ(r.vertex_sum, r.fusion_sum);
  EXPECT_EQ(r.fusion_sum, r.spectral_sum);
  EXPECT_THROW(theta_sum_check(&e7, IntMatrix::identity(17), ring), Error);

  // A5 with the identity: sum_l l lbar
  auto md4 = su2(4);
  FusionRing<HighPrec> ring4(md4);
  const auto a5 = su2_nimrep(dynkin("A5"), md4);
  const auto r4 = theta_sum_check(&a5, IntMatrix::identity(5), ring4);
  SectorVector expected(md4->label_set_ptr());
  for (std::size_t l = 0; l < 5; ++l) expected += ring4.verlinde(l, l);
  EXPECT_EQ(r4.vertex_sum, expected.coeffs());

  // without a nimrep: SU(3) E^(12)
  auto md3 = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(3, 9, cfg));
  FusionRing<HighPrec> ring3(md3);
  const auto z = su3_invariant(ring3, "E^(12)").matrix();
  const auto r3 = theta_sum_check<HighPrec>(nullptr, z, ring3);
  EXPECT_TRUE(r3.vertex_sum.empty());
  EXPECT_EQ(r3.fusion_sum, r3.spectral_sum);
}

TEST_F(Nimreps, ThetaTables) {
  struct Row {
    const char* diagram;
    std::vector<std::pair<int, int>> iota_theta, vertex_theta;
  };
  auto ones = [](std::initializer_list<int> ls) {
    std::vector<std::pair<int, int>> t;
    for (int l : ls) t.emplace_back(l, 1);
    return t;
  };
  const std::vector<Row> rows{
      {"A17", ones({0}), ones({0, 2, 4, 6, 8, 10, 12, 14, 16})},
      {"D10", ones({0, 16}), {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 1}, {12, 1}, {14, 1}, {16, 1}}},
      {"D4", ones({0, 4}), {{0, 1}, {2, 2}, {4, 1}}},
      {"D7", ones({0, 10}), ones({0, 2, 4, 6, 8, 10})},
      {"E6", ones({0, 6}), ones({0, 4, 6, 10})},
      {"E7", ones({0, 8, 16}), ones({0, 4, 6, 8, 10, 12, 16})},
      {"E8", ones({0, 10, 18, 28}), ones({0, 6, 10, 12, 16, 18, 22, 28})},
  };
  for (const auto& row : rows) {
    const auto marked = marked_su2_graph(row.diagram);
    auto md = su2(marked.level);
    FusionRing<HighPrec> ring(md);
    const auto nim = su2_nimrep(dynkin(marked.diagram), md);
    EXPECT_EQ(theta_at_vertex(nim, marked.iota), su2_sum(md->label_set_ptr(), row.iota_theta)) << row.diagram;
    const auto theta = theta_at_vertex(nim, marked.theta);
    EXPECT_EQ(theta, su2_sum(md->label_set_ptr(), row.vertex_theta)) << row.diagram;
    const auto z = ade_invariant(ring, marked.diagram);
    EXPECT_EQ(theta, candidate_theta(z, md->conjugation(), ThetaSelection::EvenSpin)) << row.diagram;
  }
}

TEST_F(Nimreps, ThetaAtEveryVertexHasVacuumOnce) {
  for (const auto& marked : marked_su2_graphs()) {
    const auto nim = su2_nimrep(dynkin(marked.diagram), su2(marked.level));
    for (std::size_t a = 0; a < nim.size(); ++a) {
      const auto t = theta_at_vertex(nim, a);
      EXPECT_EQ(t[0], 1);
      EXPECT_TRUE(t.is_physical());
      EXPECT_EQ(conjugate(t, nim.md().conjugation()), t);
    }
    const auto pf = pf_dimension_check(nim);
    EXPECT_TRUE(pf.ok()) << marked.diagram.name() << "\n" << pf;
  }
}

TEST_F(Nimreps, CandidateTheta) {
  auto md5 = std::make_shared<const ModularData<HighPrec>>(zn_anyon<HighPrec>(5, 2, cfg));
  const auto inv = zn_invariants(*md5, cfg);
  const auto& z5 = inv.back().second;  // delta = 5
  ASSERT_EQ(inv.back().first, 5);
  const auto t = candidate_theta(z5, md5->conjugation(), ThetaSelection::All);
  EXPECT_EQ(t, SectorVector::unit(md5->label_set_ptr(), 0));
  EXPECT_THROW(candidate_theta(z5, md5->conjugation(), ThetaSelection::EvenSpin), Error);

  auto md3 = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(3, 9, cfg));
  FusionRing<HighPrec> ring3(md3);
  const auto e12 = su3_invariant(ring3, "E^(12)");
  const auto c = candidate_theta(e12, md3->conjugation(), ThetaSelection::DiagonalConjugate);
  EXPECT_EQ(c, SectorVector::parse(md3->label_set_ptr(),
                                   "(0,0) + (9,0) + (0,9) + (4,1) + (1,4) + (4,4) + 2(2,2) + 2(5,2) + 2(2,5)"));
}

TEST_F(Nimreps, OrbitCounts) {
  auto md = su2(28);
  FusionRing<HighPrec> ring(md);
  EXPECT_EQ(orbit_counts(ade_invariant(ring, {'E', 8}).matrix()), (std::pair<std::int64_t, std::int64_t>{4, 4}));
  EXPECT_EQ(orbit_counts(IntMatrix::identity(5)).first, 1);
  auto md3 = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(3, 9, cfg));
  FusionRing<HighPrec> ring3(md3);
  EXPECT_EQ(orbit_counts(su3_invariant(ring3, "E^(12)").matrix()).first, 6);
}

TEST_F(Nimreps, ComponentsMatchSpectralMultiplicity) {
  for (const auto& marked : marked_su2_graphs()) {
    const auto nim = su2_nimrep(dynkin(marked.diagram), su2(marked.level));
    std::vector<std::size_t> even;
    for (std::size_t t = 0; t <= static_cast<std::size_t>(marked.level); t += 2) even.push_back(t);
    const auto c = component_count(nim, even);
    EXPECT_EQ(c.components, 2u) << marked.diagram.name();  // bipartite halves
    EXPECT_EQ(c.components, c.multiplicity) << marked.diagram.name();
    std::vector<std::size_t> all;
    for (std::size_t t = 0; t <= static_cast<std::size_t>(marked.level); ++t) all.push_back(t);
    const auto c1 = component_count(nim, all);
    EXPECT_EQ(c1.components, 1u);
    EXPECT_EQ(c1.multiplicity, 1u);
  }
}

TEST_F(Nimreps, RegularNimrep) {
  auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(3, 2, cfg));
  FusionRing<HighPrec> ring(md);
  const auto nim = regular_nimrep(ring);
  EXPECT_TRUE(verify_nimrep(nim, ring).ok());
  EXPECT_TRUE(theta_sum_check(&nim, IntMatrix::identity(md->size()), ring).report.ok());
  EXPECT_TRUE(spectrum_check(nim, IntMatrix::identity(md->size())).ok());
}
