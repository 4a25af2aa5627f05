#pragma once

// Brute-force ground truth computed from structure constants alone: [U, g],
// normalizers, bracket closures and subalgebra tests.
//
// Everything here works on dense vectors of g and generic row reduction.
// Results are converted back to HStableSubspace only at the end, after
// checking that the computed span really is a sum of weight spaces.

#include "appui/chevalley.hpp"
#include "appui/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace appui::oracle {

namespace detail {

// Column order used for dense spans: root coordinates first, Cartan last, so
// RREF rows with a pivot in the Cartan block span exactly (span ∩ h).
inline Vector to_oracle_order(const LieAlgebra& g, const Vector& v) {
  Vector out(v.size());
  const std::size_t p = static_cast<std::size_t>(g.rank());
  const std::size_t roots = v.size() - p;
  for (std::size_t r = 0; r < roots; ++r) out[r] = v[p + r];
  for (std::size_t i = 0; i < p; ++i) out[roots + i] = v[i];
  return out;
}

inline Span dense_span(const LieAlgebra& g, const Matrix& vectors) {
  Span s(g.dim());
  for (const auto& v : vectors) s.add(to_oracle_order(g, v));
  return s;
}

/// Reads a dense span back as an HStableSubspace. Throws std::logic_error if
/// the span is not ad-h-stable.
inline HStableSubspace to_subspace(const LieAlgebra& g, const Span& s) {
  const RootSystem& rs = g.roots();
  const std::size_t p = static_cast<std::size_t>(g.rank());
  const std::size_t roots = g.dim() - p;
  HStableSubspace out = g.zero();
  for (RootId r = 0; r < rs.num_roots(); ++r) {
    Vector e(g.dim());
    e[static_cast<std::size_t>(r)] = 1;
    if (s.contains(e)) out.add_root(rs, r);
  }
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (s.pivots()[k] < roots) continue;
    Vector h(p);
    for (std::size_t i = 0; i < p; ++i) h[i] = s.rows()[k][roots + i];
    out.cartan.add(h);
  }
  if (out.dim() != s.dim()) throw std::logic_error("oracle: span is not a sum of weight spaces");
  return out;
}

inline Matrix all_basis(const LieAlgebra& g) {
  Matrix out;
  for (std::size_t x = 0; x < g.dim(); ++x) out.push_back(g.basis_vector(x));
  return out;
}

inline Span bracket_span(const LieAlgebra& g, const Matrix& u, const Matrix& w) {
  Span s(g.dim());
  for (const auto& x : u)
    for (const auto& y : w) s.add(to_oracle_order(g, g.bracket(x, y)));
  return s;
}

}  // namespace detail

/// [U, W] by exhaustive brackets of basis vectors.
inline HStableSubspace bracket(const LieAlgebra& g, const HStableSubspace& u, const HStableSubspace& w) {
  return detail::to_subspace(g, detail::bracket_span(g, g.basis_of(u), g.basis_of(w)));
}

/// V = [tau, g].
inline HStableSubspace appui_oracle(const LieAlgebra& g, const HStableSubspace& tau) {
  return detail::to_subspace(g, detail::bracket_span(g, g.basis_of(tau), detail::all_basis(g)));
}

/// Largest subspace N with [N, tau] ⊆ tau; ad-h-stable since tau is.
inline HStableSubspace normalizer_oracle(const LieAlgebra& g, const HStableSubspace& tau) {
  const RootSystem& rs = g.roots();
  const Matrix tb = g.basis_of(tau);
  const Span ts = detail::dense_span(g, tb);
  HStableSubspace out = g.zero();
  for (RootId r = 0; r < rs.num_roots(); ++r) {
    const Vector e = g.basis_vector(g.root_basis(r));
    bool ok = true;
    for (const auto& b : tb) {
      if (!ts.contains(detail::to_oracle_order(g, g.bracket(e, b)))) {
        ok = false;
        break;
      }
    }
    if (ok) out.add_root(rs, r);
  }
  // Cartan part: kernel of h -> ([h, b] mod tau)_b.
  Matrix columns;
  for (int i = 0; i < g.rank(); ++i) {
    Vector col;
    const Vector hi = g.basis_vector(g.cartan_basis(i));
    for (const auto& b : tb) {
      const Vector rem = ts.reduce(detail::to_oracle_order(g, g.bracket(hi, b)));
      col.insert(col.end(), rem.begin(), rem.end());
    }
    columns.push_back(std::move(col));
  }
  if (tb.empty()) {
    out.cartan = g.full_cartan();
  } else {
    for (const auto& v : null_space(columns)) out.cartan.add(v);
  }
  return out;
}

/// Smallest bracket-closed subspace containing the given basis elements.
inline HStableSubspace subalgebra_closure(const LieAlgebra& g, const std::vector<std::size_t>& generators) {
  Matrix basis;
  Span s(g.dim());
  for (std::size_t x : generators) {
    const Vector v = g.basis_vector(x);
    if (s.add(detail::to_oracle_order(g, v))) basis.push_back(v);
  }
  std::size_t rounds = 0;
  for (;;) {
    if (++rounds > g.dim() + 1) throw std::logic_error("oracle: closure did not stabilize");
    Matrix added;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const Vector b = g.bracket(basis[i], basis[j]);
        if (s.add(detail::to_oracle_order(g, b))) added.push_back(b);
      }
    if (added.empty()) break;
    basis.insert(basis.end(), added.begin(), added.end());
  }
  return detail::to_subspace(g, s);
}

/// [U, U] ⊆ U.
inline bool is_subalgebra(const LieAlgebra& g, const HStableSubspace& u) {
  const Matrix b = g.basis_of(u);
  const Span s = detail::dense_span(g, b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(detail::to_oracle_order(g, g.bracket(b[i], b[j])))) return false;
  return true;
}

}  // namespace appui::oracle
