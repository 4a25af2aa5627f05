#include "appui/checks.hpp"
#include "appui/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace appui;
using appui::test::antichain;
using appui::test::simples;

TEST(ParseTest, RootTokens) {
  EXPECT_EQ(io::parse_coords(4, "0,1,2,2"), (Coords{0, 1, 2, 2}));
  EXPECT_EQ(io::parse_coords(4, "a3"), (Coords{0, 0, 1, 0}));
  EXPECT_EQ(io::parse_coords(4, "a2+2a3+2a4"), (Coords{0, 1, 2, 2}));
  EXPECT_EQ(io::parse_coords(2, "-a1-a2"), (Coords{-1, -1}));
  EXPECT_THROW(io::parse_coords(4, "0,1,2"), std::invalid_argument);
  EXPECT_THROW(io::parse_coords(4, "a5"), std::invalid_argument);
  EXPECT_THROW(io::parse_coords(4, "x"), std::invalid_argument);
  EXPECT_THROW(io::parse_coords(2, "1,b"), std::invalid_argument);
}

TEST(ParseTest, Antichains) {
  const auto a = io::parse_antichain(2, {"a1;a2"});
  EXPECT_EQ(a, (std::vector<Coords>{{1, 0}, {0, 1}}));
  EXPECT_EQ(io::parse_antichain(2, {"1,0", "0,1"}), a);
  EXPECT_EQ(io::parse_psi(4, "a1,a2"), (std::vector<int>{1, 2}));
  EXPECT_EQ(io::parse_psi(4, "4"), (std::vector<int>{4}));
  EXPECT_THROW(io::parse_psi(4, "5"), std::invalid_argument);
  EXPECT_THROW(io::parse_psi(4, ""), std::invalid_argument);
}

TEST(DescriptorTest, RoundTrip) {
  io::Descriptor d;
  d.type = LieType::parse("F4");
  d.antichain = {{0, 0, 1, 0}};
  d.psi = std::vector<int>{1, 2};
  d.n = 2;
  const auto j = io::to_json(d);
  EXPECT_EQ(io::descriptor_from_json(io::json::parse(j.dump())), d);
  io::Descriptor bare;
  bare.type = LieType::parse("A2");
  bare.antichain = {{1, 1}};
  EXPECT_EQ(io::descriptor_from_json(io::to_json(bare)), bare);
}

TEST(DescriptorTest, Validation) {
  const RootSystem rs(LieType::parse("A2"));
  io::Descriptor d;
  d.type = rs.type();
  d.antichain = {{1, 2}};
  EXPECT_THROW(io::resolve(rs, d), std::invalid_argument);
  d.antichain = {{-1, 0}};
  EXPECT_THROW(io::resolve(rs, d), std::invalid_argument);
  d.antichain = {{1, 0}};
  d.n = 0;
  EXPECT_THROW(io::resolve(rs, d), std::invalid_argument);
  EXPECT_THROW(io::descriptor_from_json(io::json{{"type", "A2"}}), std::invalid_argument);
  EXPECT_THROW(io::descriptor_from_json(io::json{{"type", "Q2"}, {"antichain", io::json::array()}}),
               std::invalid_argument);
}

TEST(SubspaceJsonTest, RoundTripOverCorpus) {
  for (const char* t : {"A2", "B2", "G2", "B3"}) {
    const LieAlgebra g(LieType::parse(t));
    for (const auto& r : g.roots().antichains()) {
      const auto c = checks::make_case(g, r);
      for (const auto* s : {&c.tau, &c.v_formula, &c.rho_formula})
        EXPECT_EQ(io::subspace_from_json(g, io::json::parse(io::to_json(g, *s).dump())), *s);
    }
  }
}

TEST(LoopJsonTest, RoundTrip) {
  const LieAlgebra g(LieType::parse("B4"));
  const auto c = checks::make_case(g, antichain(g.roots(), {"a2+2a3+2a4"}));
  const LoopSubspace t = build_tau_bar(g, c.tau, c.rho_formula, c.v_formula, 2);
  EXPECT_EQ(io::loop_from_json(g, io::json::parse(io::to_json(g, t).dump())), t);
  const LoopSubspace cor = build_degree_zero_form(g, c.tau);
  EXPECT_EQ(io::loop_from_json(g, io::to_json(g, cor)), cor);
}

TEST(RationalTextTest, RoundTrip) {
  for (const Rational& x : {Rational(0), Rational(3), Rational(-2, 3), Rational(7, 2)})
    EXPECT_EQ(io::parse_rational(io::to_string(x)), x);
}

TEST(ReportJsonTest, Fields) {
  const LieAlgebra g(LieType::parse("F4"));
  auto [s, tau] = build_standard(g, antichain(g.roots(), {"a3"}), simples({4}));
  const LoopSubspace t = build_tau_bar(g, s, tau, 1);
  const auto r = io::to_json(verify_standard(g, t, normalizer_finite(g, s)));
  EXPECT_TRUE(r.at("passed").get<bool>());
  EXPECT_EQ(r.at("normalizer_levi"), io::json({1, 2, 4}));
  const auto c = io::to_json(g, classify_graded(g, t));
  EXPECT_TRUE(c.at("accepted").get<bool>());
  EXPECT_EQ(c.at("relations"), io::json({true, true, true, true}));
}
