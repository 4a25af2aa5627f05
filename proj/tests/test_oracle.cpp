#include "appui/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace appui;
using appui::test::root;
using appui::test::roots;

namespace {

struct A2 : ::testing::Test {
  LieAlgebra g{LieType::parse("A2")};
  const RootSystem& rs = g.roots();
  RootSet pos = roots(rs, {"a1", "a2", "a1+a2"});
};

}  // namespace

TEST_F(A2, AppuiOfTopRootSpace) {
  const HStableSubspace v = oracle::appui_oracle(g, g.root_spaces({rs.highest_root()}));
  EXPECT_EQ(v.pos, pos);
  EXPECT_TRUE(v.neg.empty());
  EXPECT_EQ(v.cartan, g.coroot_span({rs.highest_root()}));
}

TEST_F(A2, AppuiOfNilradical) {
  const HStableSubspace v = oracle::appui_oracle(g, g.root_spaces(pos));
  EXPECT_EQ(v.pos, pos);
  EXPECT_EQ(v.neg, roots(rs, {"a1", "a2"}));
  EXPECT_EQ(v.cartan, g.full_cartan());
}

TEST_F(A2, NormalizerOfTopRootSpaceIsBorel) {
  const HStableSubspace n = oracle::normalizer_oracle(g, g.root_spaces({rs.highest_root()}));
  EXPECT_EQ(n.pos, pos);
  EXPECT_TRUE(n.neg.empty());
  EXPECT_EQ(n.cartan, g.full_cartan());
  EXPECT_EQ(oracle::normalizer_oracle(g, g.whole()), g.whole());
}

TEST_F(A2, Closure) {
  const auto e = [&](const char* r) { return g.root_basis(root(rs, r)); };
  EXPECT_EQ(oracle::subalgebra_closure(g, {e("a1")}), g.root_spaces(roots(rs, {"a1"})));
  const HStableSubspace n = oracle::subalgebra_closure(g, {e("a1"), e("a2")});
  EXPECT_EQ(n, g.root_spaces(pos));
  EXPECT_EQ(n.dim(), 3u);
  const RootId th = rs.highest_root();
  HStableSubspace sl2 = g.root_spaces({th, rs.negate(th)});
  sl2.cartan = g.coroot_span({th});
  EXPECT_EQ(oracle::subalgebra_closure(g, {g.root_basis(th), g.root_basis(rs.negate(th))}), sl2);
}

TEST_F(A2, SubalgebraTest) {
  for (RootId r = 0; r < rs.num_roots(); ++r) EXPECT_TRUE(oracle::is_subalgebra(g, g.root_spaces({r})));
  // V of the nilradical: pos = Δ+, neg = {a1, a2}, full h; [g_{-a1}, g_{-a2}] leaves it.
  const HStableSubspace v = oracle::appui_oracle(g, g.root_spaces(pos));
  EXPECT_FALSE(oracle::is_subalgebra(g, v));
}

TEST(OracleTest, BracketAgreesWithFastRoute) {
  for (const char* t : {"B2", "G2", "A3", "C3"}) {
    const LieAlgebra g(LieType::parse(t));
    const RootSystem& rs = g.roots();
    for (RootId a = 0; a < rs.num_roots(); a += 2) {
      HStableSubspace u = g.root_spaces({a, rs.negate(a)});
      u.cartan.add(g.coroot_vector(rs.abs(a)));
      for (RootId b = 0; b < rs.num_roots(); b += 3)
        EXPECT_EQ(oracle::bracket(g, u, g.root_spaces({b})), bracket_spaces(g, u, g.root_spaces({b})));
    }
  }
}

TEST(OracleTest, ClosureIdempotentAndMonotone) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const LieAlgebra g(LieType::parse(t));
    const std::size_t n = g.dim();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; y += 2) {
        const HStableSubspace c1 = oracle::subalgebra_closure(g, {x});
        const HStableSubspace c2 = oracle::subalgebra_closure(g, {x, y});
        EXPECT_TRUE(subspace_contains(c2, c1));
        EXPECT_TRUE(oracle::is_subalgebra(g, c2));
        std::vector<std::size_t> again{x, y};
        for (RootId r : c2.roots(g.roots())) again.push_back(g.root_basis(r));
        EXPECT_EQ(oracle::subalgebra_closure(g, again), c2);
      }
  }
}

TEST(OracleTest, NormalizerContainsSubalgebra) {
  for (const char* t : {"A2", "B2", "G2", "A3", "B3"}) {
    const LieAlgebra g(LieType::parse(t));
    const RootSystem& rs = g.roots();
    for (RootId a = 0; a < rs.num_roots(); ++a)
      for (RootId b = a; b < rs.num_roots(); b += 3) {
        const HStableSubspace s = oracle::subalgebra_closure(g, {g.root_basis(a), g.root_basis(b)});
        EXPECT_TRUE(subspace_contains(oracle::normalizer_oracle(g, s), s));
        const HStableSubspace v = oracle::appui_oracle(g, s);
        EXPECT_TRUE(subspace_contains(v, s));
        EXPECT_TRUE(subspace_contains(v, oracle::bracket(g, v, oracle::normalizer_oracle(g, s))));
      }
  }
}

TEST(OracleTest, RejectsNonWeightSpan) {
  const LieAlgebra g(LieType::parse("A2"));
  Vector v(g.dim());
  v[g.root_basis(0)] = 1;
  v[g.root_basis(1)] = 1;
  const Span s = oracle::detail::dense_span(g, {v});
  EXPECT_THROW(oracle::detail::to_subspace(g, s), std::logic_error);
}
