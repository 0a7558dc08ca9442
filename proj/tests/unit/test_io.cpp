#include <gtest/gtest.h>

#include "modinv/branching/extensions.hpp"
#include "modinv/io/json.hpp"
#include "modinv/nimreps/nimrep.hpp"

using namespace modinv;
using io::json;

namespace {

struct Io : ::testing::Test {
  void SetUp() override { apply_precision(cfg); }
  PrecisionConfig cfg = PrecisionConfig::high(30);
};

// Serialize, print, parse back: what the CLI writes and reads.
json through_text(const json& j) { return json::parse(j.dump(2)); }

}  // namespace

TEST(Theory, ParsesSpellings) {
  EXPECT_EQ(parse_theory("SU(2)_16").display(), "SU(2)_16");
  EXPECT_EQ(parse_theory("su3_9").display(), "SU(3)_9");
  EXPECT_EQ(parse_theory("SO(48)_1").display(), "SO(48)_1");
  EXPECT_EQ(parse_theory("so5").display(), "SO(5)_1");
  EXPECT_EQ(parse_theory("Z_5(a=2)").display(), "Z_5(a=2)");
  EXPECT_EQ(parse_theory("zn9_2").display(), "Z_9(a=2)");
  EXPECT_EQ(parse_theory("E8").family, "e8");
  EXPECT_EQ(parse_theory("(G2)_1").family, "g2");
  EXPECT_THROW(parse_theory("su_2"), Error);
  EXPECT_THROW(parse_theory("f4"), Error);
}

TEST_F(Io, ModularDataRebuilds) {
  for (const char* t : {"su2_10", "su3_4", "so16", "zn9_2", "g2"}) {
    const auto md = build_modular_data<HighPrec>(parse_theory(t), cfg);
    const auto j = through_text(io::to_json(md));
    const auto back = io::modular_data_from_json<HighPrec>(j, cfg);
    EXPECT_EQ(back.labels().names(), md.labels().names()) << t;
    EXPECT_EQ(back.c(), md.c()) << t;
  }
  const auto md = su_n_k<HighPrec>(2, 3, cfg);
  auto j = io::to_json(md, true);
  EXPECT_EQ(j["S"].size(), 4u);
  j["labels"][1]["h"] = "1/5";
  EXPECT_THROW(io::modular_data_from_json<HighPrec>(j, cfg), Error);
  j["schema"] = "modinv.invariant";
  EXPECT_THROW(io::modular_data_from_json<HighPrec>(j, cfg), Error);
}

TEST_F(Io, InvariantRoundTrip) {
  auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, 16, cfg));
  FusionRing<HighPrec> ring(md);
  const auto z = ade_invariant(ring, {'E', 7});
  const auto back = io::invariant_from_json(through_text(io::to_json(z)), md->label_set_ptr());
  EXPECT_EQ(back.matrix(), z.matrix());
  EXPECT_EQ(back.name(), "E7");
  // wrong theory
  const auto other = su_n_k_labels(2, 10);
  EXPECT_THROW(io::invariant_from_json(io::to_json(z), other), Error);
  // the dump is byte-stable
  EXPECT_EQ(io::to_json(z).dump(), io::to_json(back).dump());
}

TEST_F(Io, GraphRoundTrip) {
  for (const char* name : {"E7", "D10", "A3"}) {
    const auto g = dynkin(name);
    const auto back = io::graph_from_json(through_text(io::to_json(g)));
    EXPECT_EQ(back.adjacency(), g.adjacency()) << name;
    EXPECT_EQ(back.names(), g.names()) << name;
  }
  const auto directed = fusion_graph(IntMatrix{{0, 1}, {0, 0}}, {"a", "b"}, "arrow");
  const auto j = io::to_json(directed);
  EXPECT_TRUE(j["directed"].get<bool>());
  EXPECT_EQ(io::graph_from_json(j).adjacency(), directed.adjacency());
}

TEST_F(Io, BranchingRoundTrip) {
  const auto b = embedding_branching("su3_9-e6");
  const auto back = io::branching_from_json(through_text(io::to_json(b)), b.base_ptr(), b.ext_labels());
  EXPECT_EQ(back.matrix(), b.matrix());
  for (std::size_t t = 0; t < b.rows(); ++t) {
    EXPECT_EQ(back.ext_name(t), b.ext_name(t));
    EXPECT_EQ(back.ext_index(t), b.ext_index(t));
  }
  auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, 6, cfg));
  FusionRing<HighPrec> ring(md);
  const auto nonlocal = simple_current_extension(ring, 6);
  const auto nl = io::branching_from_json(io::to_json(nonlocal), md->label_set_ptr());
  EXPECT_FALSE(nl.is_local());
  EXPECT_EQ(nl.matrix(), nonlocal.matrix());
}

TEST_F(Io, ReportsAndSectors) {
  auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, 4, cfg));
  const auto r = verify_invariant(*md, IntMatrix::identity(5), cfg);
  const auto j = io::to_json(r);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["checks"].size(), r.checks().size());
  FusionRing<HighPrec> ring(md);
  const auto f = io::fusion_to_json(ring, 2, 2);
  EXPECT_EQ(f["products"].size(), 3u);
  EXPECT_EQ(f["products"][2]["nu"], "(4)");
  const auto s = io::to_json(ring.verlinde(1, 1));
  EXPECT_EQ(s["terms"].size(), 2u);
}
