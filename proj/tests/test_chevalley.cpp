#include "appui/chevalley.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace appui;
using appui::test::root;
using appui::test::roots;

namespace {

Vector h(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Vector add(Vector a, const Vector& b, const Rational& c = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  return a;
}

}  // namespace

TEST(SpanTest, CanonicalForm) {
  Span a(3), b(3);
  a.add(h({1, 2, 0}));
  a.add(h({0, 1, 1}));
  b.add(h({1, 3, 1}));
  b.add(h({2, 4, 0}));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(h({1, 1, -1})));
  EXPECT_FALSE(a.contains(h({0, 0, 1})));
  EXPECT_FALSE(a.add(h({3, 5, -1})));
  EXPECT_EQ(a.dim(), 2u);
}

TEST(SpanTest, NullSpace) {
  const Matrix cols{h({1, 0}), h({0, 1}), h({1, 1})};
  const Matrix ns = null_space(cols);
  ASSERT_EQ(ns.size(), 1u);
  Vector sum(2);
  for (std::size_t i = 0; i < 3; ++i) sum = add(sum, cols[i], ns[0][i]);
  EXPECT_TRUE(is_zero(sum));
}

TEST(StructureConstantsTest, Examples) {
  const LieAlgebra a2(LieType::parse("A2"));
  const RootSystem& rs = a2.roots();
  EXPECT_EQ(std::abs(a2.structure_constant(root(rs, "a1"), root(rs, "a2"))), 1);
  const LieAlgebra b2(LieType::parse("B2"));
  EXPECT_EQ(std::abs(b2.structure_constant(root(b2.roots(), "a2"), root(b2.roots(), "a1+a2"))), 2);
  EXPECT_EQ(a2.structure_constant(root(rs, "a1+a2"), root(rs, "a1")), 0);
}

TEST(StructureConstantsTest, MagnitudeAndAntisymmetry) {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "B4", "F4"}) {
    const LieAlgebra g(LieType::parse(t));
    const RootSystem& rs = g.roots();
    for (RootId a = 0; a < rs.num_roots(); ++a)
      for (RootId b = 0; b < rs.num_roots(); ++b) {
        const int n = g.structure_constant(a, b);
        EXPECT_EQ(n, -g.structure_constant(b, a));
        if (!rs.sum(a, b)) {
          EXPECT_EQ(n, 0);
          continue;
        }
        int p = 0;
        for (auto d = rs.difference(b, a); d; d = rs.difference(*d, a)) ++p;
        EXPECT_EQ(std::abs(n), p + 1) << t << " " << root_name(rs, a) << " " << root_name(rs, b);
      }
  }
}

TEST(BracketTest, Examples) {
  const LieAlgebra a2(LieType::parse("A2"));
  const RootSystem& rs = a2.roots();
  const RootId a1 = root(rs, "a1"), a2r = root(rs, "a2"), th = rs.highest_root();
  const Vector e1 = a2.basis_vector(a2.root_basis(a1));
  const Vector f1 = a2.basis_vector(a2.root_basis(rs.negate(a1)));
  const Vector h1 = a2.basis_vector(a2.cartan_basis(0));
  EXPECT_EQ(a2.bracket(e1, f1), h1);
  const Vector e2 = a2.basis_vector(a2.root_basis(a2r));
  Vector minus_e2 = e2;
  for (auto& x : minus_e2) x = -x;
  EXPECT_EQ(a2.bracket(h1, e2), minus_e2);
  EXPECT_TRUE(is_zero(a2.bracket(a2.basis_vector(a2.root_basis(th)), e1)));
  EXPECT_TRUE(is_zero(a2.bracket(h1, a2.basis_vector(a2.cartan_basis(1)))));
}

TEST(BracketTest, CorootsAreCartanImages) {
  for (const char* t : {"B2", "G2", "C3", "F4"}) {
    const LieAlgebra g(LieType::parse(t));
    const RootSystem& rs = g.roots();
    for (RootId a = 0; a < rs.num_positive(); ++a) {
      const Vector b = g.bracket(g.basis_vector(g.root_basis(a)), g.basis_vector(g.root_basis(rs.negate(a))));
      Vector hv(g.dim());
      const Vector co = g.coroot_vector(a);
      for (int i = 0; i < g.rank(); ++i) hv[i] = co[i];
      EXPECT_EQ(b, hv);
      // α(h_α) = 2
      EXPECT_EQ(g.evaluate(a, co), Rational(2));
    }
  }
}

TEST(BracketTest, JacobiAndAntisymmetryExhaustive) {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const LieAlgebra g(LieType::parse(t));
    const std::size_t n = g.dim();
    std::vector<Vector> basis;
    for (std::size_t x = 0; x < n; ++x) basis.push_back(g.basis_vector(x));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Vector xy = g.bracket(basis[x], basis[y]);
        EXPECT_TRUE(is_zero(add(xy, g.bracket(basis[y], basis[x]))));
        for (std::size_t z = y + 1; z < n; ++z) {
          if (x >= y) continue;
          Vector j = g.bracket(xy, basis[z]);
          j = add(j, g.bracket(g.bracket(basis[y], basis[z]), basis[x]));
          j = add(j, g.bracket(g.bracket(basis[z], basis[x]), basis[y]));
          ASSERT_TRUE(is_zero(j)) << t << " " << x << " " << y << " " << z;
        }
      }
  }
}

TEST(FormTest, Examples) {
  const LieAlgebra a2(LieType::parse("A2"));
  const RootSystem& rs = a2.roots();
  EXPECT_TRUE(is_zero(a2.form_basis(a2.root_basis(root(rs, "a1")), a2.root_basis(root(rs, "a2")))));
  for (const char* t : {"A2", "B2", "G2", "C3", "F4"}) {
    const LieAlgebra g(LieType::parse(t));
    const RootId th = g.roots().highest_root();
    EXPECT_EQ(g.form_basis(g.root_basis(th), g.root_basis(g.roots().negate(th))), Rational(1)) << t;
  }
}

TEST(FormTest, InvariantSymmetricNondegenerate) {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const LieAlgebra g(LieType::parse(t));
    const std::size_t n = g.dim();
    std::vector<Vector> basis;
    for (std::size_t x = 0; x < n; ++x) basis.push_back(g.basis_vector(x));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        EXPECT_EQ(g.form_basis(x, y), g.form_basis(y, x));
        const Vector xy = g.bracket(basis[x], basis[y]);
        for (std::size_t z = 0; z < n; ++z)
          ASSERT_EQ(g.form(xy, basis[z]), g.form(basis[x], g.bracket(basis[y], basis[z]))) << t;
      }
    Matrix gram;
    for (int i = 0; i < g.rank(); ++i) {
      Vector row;
      for (int j = 0; j < g.rank(); ++j) row.push_back(g.form_basis(g.cartan_basis(i), g.cartan_basis(j)));
      gram.push_back(row);
    }
    EXPECT_EQ(rank(static_cast<std::size_t>(g.rank()), gram), static_cast<std::size_t>(g.rank())) << t;
  }
}

TEST(BracketSpacesTest, Examples) {
  const LieAlgebra a2(LieType::parse("A2"));
  const RootSystem& rs = a2.roots();
  const HStableSubspace top = a2.root_spaces({rs.highest_root()});
  const HStableSubspace v = bracket_spaces(a2, top, a2.whole());
  EXPECT_EQ(v.pos, roots(rs, {"a1", "a2", "a1+a2"}));
  EXPECT_TRUE(v.neg.empty());
  EXPECT_EQ(v.cartan, a2.coroot_span({rs.highest_root()}));

  const HStableSubspace nplus = a2.root_spaces(roots(rs, {"a1", "a2", "a1+a2"}));
  const HStableSubspace w = bracket_spaces(a2, nplus, a2.whole());
  EXPECT_EQ(w.pos.size(), 3u);
  EXPECT_EQ(w.neg, roots(rs, {"a1", "a2"}));
  EXPECT_EQ(w.cartan, a2.full_cartan());

  EXPECT_TRUE(bracket_spaces(a2, a2.zero(), a2.whole()).is_zero());
}

TEST(BracketSpacesTest, SymmetricAndMatchesDenseBrackets) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const LieAlgebra g(LieType::parse(t));
    const RootSystem& rs = g.roots();
    for (RootId a = 0; a < rs.num_roots(); ++a)
      for (RootId b = 0; b < rs.num_roots(); ++b) {
        HStableSubspace u = g.root_spaces({a}), w = g.root_spaces({b});
        if (a % 3 == 0) u.cartan.add(g.coroot_vector(rs.abs(b)));
        EXPECT_EQ(bracket_spaces(g, u, w), bracket_spaces(g, w, u));
        Span dense(g.rank());
        RootSet got_roots;
        for (const auto& x : g.basis_of(u))
          for (const auto& y : g.basis_of(w)) {
            const Vector z = g.bracket(x, y);
            Vector hz(z.begin(), z.begin() + g.rank());
            dense.add(hz);
            for (RootId r = 0; r < rs.num_roots(); ++r)
              if (nonzero(z[g.root_basis(r)])) got_roots.insert(r);
          }
        const HStableSubspace s = bracket_spaces(g, u, w);
        EXPECT_EQ(s.cartan, dense);
        EXPECT_EQ(s.roots(rs), got_roots);
      }
  }
}

TEST(SubspaceTest, Containment) {
  const LieAlgebra a2(LieType::parse("A2"));
  const RootSystem& rs = a2.roots();
  EXPECT_TRUE(subspace_contains(a2.whole(), a2.root_spaces(roots(rs, {"a1", "a2"}))));
  EXPECT_FALSE(subspace_contains(a2.root_spaces(roots(rs, {"a1"})), a2.root_spaces(roots(rs, {"a1", "a2"}))));
  HStableSubspace u = a2.zero(), w = a2.zero();
  u.cartan = a2.full_cartan();
  w.cartan.add(h({1, 1}));
  EXPECT_TRUE(subspace_contains(u, w));
  EXPECT_FALSE(subspace_contains(w, u));
}

TEST(SubspaceTest, EqualityIsCanonical) {
  const LieAlgebra b2(LieType::parse("B2"));
  HStableSubspace u = b2.zero(), w = b2.zero();
  u.cartan.add(h({1, 2}));
  u.cartan.add(h({0, 3}));
  w.cartan.add(h({5, -1}));
  w.cartan.add(h({1, 0}));
  EXPECT_EQ(u, w);
}
