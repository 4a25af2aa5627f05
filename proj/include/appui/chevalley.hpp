#pragma once

// Chevalley basis of a simple Lie algebra: exact structure constants, the
// bracket on basis elements and vectors, the invariant form, and the algebra
// of ad-h-stable subspaces.

#include "appui/linalg.hpp"
#include "appui/rootsys.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace appui {

/// An ad-h-invariant subspace of g: a set of root spaces plus a subspace of
/// the Cartan subalgebra in canonical RREF (coordinates over h_1..h_p).
struct HStableSubspace {
  RootSet pos;  // positive ids alpha with g_alpha included
  RootSet neg;  // positive ids alpha with g_{-alpha} included
  Span cartan;

  std::size_t dim() const { return pos.size() + neg.size() + cartan.dim(); }
  bool is_zero() const { return dim() == 0; }
  bool operator==(const HStableSubspace&) const = default;

  bool has_root(const RootSystem& rs, RootId id) const {
    return rs.is_positive(id) ? pos.count(id) > 0 : neg.count(rs.abs(id)) > 0;
  }
  void add_root(const RootSystem& rs, RootId id) {
    if (rs.is_positive(id))
      pos.insert(id);
    else
      neg.insert(rs.abs(id));
  }
  void remove_root(const RootSystem& rs, RootId id) {
    if (rs.is_positive(id))
      pos.erase(id);
    else
      neg.erase(rs.abs(id));
  }
  /// All included root ids, either sign.
  RootSet roots(const RootSystem& rs) const {
    RootSet out(pos.begin(), pos.end());
    for (RootId a : neg) out.insert(rs.negate(a));
    return out;
  }
};

/// Exact Chevalley basis of the simple Lie algebra of a given type.
///
/// Basis order: h_1..h_p (simple coroots), then e_r for every root id r.
class LieAlgebra {
 public:
  explicit LieAlgebra(LieType type) : LieAlgebra(RootSystem(type)) {}
  explicit LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {
    build_coroots();
    build_structure_constants();
    build_form();
  }

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t dim() const { return static_cast<std::size_t>(rank() + rs_.num_roots()); }
  std::size_t cartan_basis(int i) const { return static_cast<std::size_t>(i); }
  std::size_t root_basis(RootId r) const { return static_cast<std::size_t>(rank() + r); }
  bool is_cartan_basis(std::size_t x) const { return x < static_cast<std::size_t>(rank()); }
  RootId root_of_basis(std::size_t x) const { return static_cast<RootId>(x) - rank(); }

  /// N(a, b) with [e_a, e_b] = N(a, b) e_{a+b}; zero when a+b is not a root.
  int structure_constant(RootId a, RootId b) const {
    return n_[static_cast<std::size_t>(a) * rs_.num_roots() + b];
  }
  /// h_a = [e_a, e_{-a}] in coordinates over h_1..h_p.
  const std::vector<int>& coroot(RootId a) const { return coroot_[a]; }
  Vector coroot_vector(RootId a) const {
    Vector v(rank());
    for (int i = 0; i < rank(); ++i) v[i] = coroot_[a][i];
    return v;
  }
  /// beta(h) for h given over the coroot basis.
  Rational evaluate(RootId beta, const Vector& h) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
      if (nonzero(h[i])) s += h[i] * rs_.pairing(beta, i);
    return s;
  }

  using Term = std::pair<std::size_t, Rational>;

  /// Bracket of two basis elements as a sparse combination.
  std::vector<Term> bracket_basis(std::size_t x, std::size_t y) const {
    std::vector<Term> out;
    const bool hx = is_cartan_basis(x), hy = is_cartan_basis(y);
    if (hx && hy) return out;
    if (hx) {
      const RootId b = root_of_basis(y);
      if (int v = rs_.pairing(b, static_cast<int>(x)); v != 0) out.emplace_back(y, Rational(v));
      return out;
    }
    if (hy) {
      const RootId a = root_of_basis(x);
      if (int v = rs_.pairing(a, static_cast<int>(y)); v != 0) out.emplace_back(x, Rational(-v));
      return out;
    }
    const RootId a = root_of_basis(x), b = root_of_basis(y);
    if (b == rs_.negate(a)) {
      for (int i = 0; i < rank(); ++i)
        if (coroot_[a][i] != 0) out.emplace_back(cartan_basis(i), Rational(coroot_[a][i]));
      return out;
    }
    if (auto c = rs_.sum(a, b)) out.emplace_back(root_basis(*c), Rational(structure_constant(a, b)));
    return out;
  }

  Vector basis_vector(std::size_t x) const {
    Vector v(dim());
    v[x] = 1;
    return v;
  }

  Vector bracket(const Vector& u, const Vector& w) const {
    Vector out(dim());
    const auto nu = support_of(u), nw = support_of(w);
    for (std::size_t i : nu)
      for (std::size_t j : nw)
        for (const auto& [k, c] : bracket_basis(i, j)) out[k] += u[i] * w[j] * c;
    return out;
  }

  /// Invariant form on basis elements, normalized by (theta, theta) = 2.
  Rational form_basis(std::size_t x, std::size_t y) const {
    if (is_cartan_basis(x) != is_cartan_basis(y)) return 0;
    if (is_cartan_basis(x)) return hform_[x][y];
    const RootId a = root_of_basis(x), b = root_of_basis(y);
    if (b != rs_.negate(a)) return 0;
    return Rational(2) / rs_.length2(a);
  }

  Rational form(const Vector& u, const Vector& w) const {
    Rational s = 0;
    const auto nu = support_of(u), nw = support_of(w);
    for (std::size_t i : nu)
      for (std::size_t j : nw) s += u[i] * w[j] * form_basis(i, j);
    return s;
  }

  static std::vector<std::size_t> support_of(const Vector& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (nonzero(v[i])) idx.push_back(i);
    return idx;
  }

  // Distinguished subspaces.
  HStableSubspace zero() const { return HStableSubspace{{}, {}, Span(rank())}; }
  HStableSubspace whole() const {
    HStableSubspace s = zero();
    for (RootId a = 0; a < rs_.num_positive(); ++a) {
      s.pos.insert(a);
      s.neg.insert(a);
    }
    s.cartan = full_cartan();
    return s;
  }
  Span full_cartan() const {
    Span h(rank());
    for (int i = 0; i < rank(); ++i) {
      Vector v(rank());
      v[i] = 1;
      h.add(v);
    }
    return h;
  }
  /// Span of the root spaces g_r, r in roots (either sign).
  HStableSubspace root_spaces(const RootSet& roots) const {
    HStableSubspace s = zero();
    for (RootId r : roots) s.add_root(rs_, r);
    return s;
  }
  /// Span of the coroots h_r, r in roots.
  Span coroot_span(const RootSet& roots) const {
    Span h(rank());
    for (RootId r : roots) h.add(coroot_vector(r));
    return h;
  }

  /// A basis of the subspace as vectors of g.
  Matrix basis_of(const HStableSubspace& s) const {
    Matrix out;
    for (const auto& row : s.cartan.rows()) {
      Vector v(dim());
      for (int i = 0; i < rank(); ++i) v[i] = row[i];
      out.push_back(std::move(v));
    }
    for (RootId r : s.roots(rs_)) out.push_back(basis_vector(root_basis(r)));
    return out;
  }

 private:
  void build_coroots() {
    const int total = rs_.num_roots();
    coroot_.assign(total, std::vector<int>(rank(), 0));
    for (RootId a = 0; a < rs_.num_positive(); ++a) {
      const Coords& c = rs_.coords(a);
      const Rational len = rs_.length2(a);
      for (int i = 0; i < rank(); ++i) {
        const Rational k = Rational(c[i]) * rs_.inner(i, i) / len;
        if (k.denominator() != 1) throw std::logic_error("non-integral coroot coordinate");
        coroot_[a][i] = static_cast<int>(k.numerator());
        coroot_[rs_.negate(a)][i] = -coroot_[a][i];
      }
    }
  }

  // Extraspecial-pair construction: N is +(p+1) on each extraspecial pair
  // and every other value follows from the quadratic relations among the N.
  void build_structure_constants() {
    const int P = rs_.num_positive();
    const int total = rs_.num_roots();
    n_.assign(static_cast<std::size_t>(total) * total, 0);
    known_.assign(static_cast<std::size_t>(total) * total, false);

    auto string_p = [&](RootId a, RootId b) {
      int p = 0;
      RootId cur = b;
      while (auto d = rs_.difference(cur, a)) {
        ++p;
        cur = *d;
      }
      return p;
    };

    for (RootId xi = rs_.rank(); xi < P; ++xi) {
      RootId ga = -1, de = -1;
      for (RootId a = 0; a < P; ++a) {
        if (auto d = rs_.difference(xi, a); d && rs_.is_positive(*d)) {
          ga = a;
          de = *d;
          break;
        }
      }
      const int nx = string_p(ga, de) + 1;
      set_positive(ga, de, nx);

      const Rational lxi = rs_.length2(xi);
      for (RootId a = ga + 1; a < P; ++a) {
        auto bd = rs_.difference(xi, a);
        if (!bd || !rs_.is_positive(*bd) || *bd <= a) continue;
        const RootId b = *bd;
        Rational acc = 0;
        if (auto e = rs_.difference(b, ga)) {
          acc += Rational(value(b, rs_.negate(ga)) * value(a, rs_.negate(de))) / rs_.length2(*e);
        }
        if (auto e = rs_.difference(a, ga)) {
          acc += Rational(value(rs_.negate(ga), a) * value(b, rs_.negate(de))) / rs_.length2(*e);
        }
        const Rational v = lxi * acc / nx;
        if (v.denominator() != 1) throw std::logic_error("non-integral structure constant");
        set_positive(a, b, static_cast<int>(v.numerator()));
      }
    }

    for (RootId a = 0; a < total; ++a)
      for (RootId b = 0; b < total; ++b)
        if (rs_.sum(a, b)) n_[index(a, b)] = value(a, b);
  }

  std::size_t index(RootId a, RootId b) const {
    return static_cast<std::size_t>(a) * rs_.num_roots() + b;
  }

  void set_positive(RootId a, RootId b, int v) {
    n_[index(a, b)] = v;
    n_[index(b, a)] = -v;
    known_[index(a, b)] = known_[index(b, a)] = true;
  }

  // N(a, b) for arbitrary roots, derived from the positive table through
  // N(-a,-b) = -N(a,b) and N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y) when
  // x + y + z = 0.
  int value(RootId a, RootId b) const {
    auto s = rs_.sum(a, b);
    if (!s) return 0;
    const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
    if (pa && pb) {
      if (!known_[index(a, b)]) throw std::logic_error("structure constant requested out of order");
      return n_[index(a, b)];
    }
    if (!pa && !pb) return -value(rs_.negate(a), rs_.negate(b));
    const RootId c = rs_.negate(*s);  // a + b + c = 0
    Rational v;
    if (rs_.is_positive(b) == rs_.is_positive(c))
      v = rs_.length2(c) / rs_.length2(a) * value(b, c);
    else
      v = rs_.length2(c) / rs_.length2(b) * value(c, a);
    if (v.denominator() != 1) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(v.numerator());
  }

  void build_form() {
    hform_.assign(rank(), std::vector<Rational>(rank(), Rational(0)));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        hform_[i][j] = Rational(4) * rs_.inner(i, j) / (rs_.inner(i, i) * rs_.inner(j, j));
  }

  RootSystem rs_;
  std::vector<std::vector<int>> coroot_;
  std::vector<int> n_;
  std::vector<bool> known_;
  std::vector<std::vector<Rational>> hform_;
};

/// Exact [U, W] for ad-h-stable U and W.
inline HStableSubspace bracket_spaces(const LieAlgebra& g, const HStableSubspace& u,
                                      const HStableSubspace& w) {
  const RootSystem& rs = g.roots();
  HStableSubspace out = g.zero();
  const RootSet ur = u.roots(rs), wr = w.roots(rs);
  for (RootId a : ur) {
    for (RootId b : wr) {
      if (b == rs.negate(a)) {
        out.cartan.add(g.coroot_vector(a));
      } else if (auto c = rs.sum(a, b); c && g.structure_constant(a, b) != 0) {
        out.add_root(rs, *c);
      }
    }
  }
  auto act = [&](const Span& h, const RootSet& roots) {
    for (RootId b : roots)
      for (const auto& row : h.rows())
        if (nonzero(g.evaluate(b, row))) {
          out.add_root(rs, b);
          break;
        }
  };
  act(u.cartan, wr);
  act(w.cartan, ur);
  return out;
}

/// W is contained in U.
inline bool subspace_contains(const HStableSubspace& u, const HStableSubspace& w) {
  return std::includes(u.pos.begin(), u.pos.end(), w.pos.begin(), w.pos.end()) &&
         std::includes(u.neg.begin(), u.neg.end(), w.neg.begin(), w.neg.end()) &&
         u.cartan.contains(w.cartan);
}

inline HStableSubspace subspace_sum(const HStableSubspace& u, const HStableSubspace& w) {
  HStableSubspace out = u;
  out.pos.insert(w.pos.begin(), w.pos.end());
  out.neg.insert(w.neg.begin(), w.neg.end());
  for (const auto& row : w.cartan.rows()) out.cartan.add(row);
  return out;
}

/// Compact description, e.g. "pos{a1,a1+a2} neg{a2} h(1/2)".
inline std::string describe(const LieAlgebra& g, const HStableSubspace& s) {
  const RootSystem& rs = g.roots();
  std::string out = "pos{";
  bool first = true;
  for (RootId a : s.pos) {
    out += (first ? "" : ",") + root_name(rs, a);
    first = false;
  }
  out += "} neg{";
  first = true;
  for (RootId a : s.neg) {
    out += (first ? "" : ",") + root_name(rs, a);
    first = false;
  }
  out += "} h(" + std::to_string(s.cartan.dim()) + "/" + std::to_string(g.rank()) + ")";
  return out;
}

}  // namespace appui
