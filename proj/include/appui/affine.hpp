#pragma once

// Non-twisted affine algebra g(A) = L(g) + CK + Cd over a finite Chevalley
// algebra: the bracket on elements, a graded model of subspaces with a full
// tail, graded standard subalgebras and their parabolic normalizers.

#include "appui/chevalley.hpp"
#include "appui/standard.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace appui {

/// Σ t^n ⊗ x_n + k K + d d, with x_n dense vectors of g.
struct AffineElement {
  std::map<int, Vector> terms;
  Rational k = 0;
  Rational d = 0;

  bool is_zero() const {
    if (nonzero(k) || nonzero(d)) return false;
    for (const auto& [deg, v] : terms)
      if (!appui::is_zero(v)) return false;
    return true;
  }

  /// Drops zero layers so that equal elements compare equal.
  AffineElement& prune() {
    for (auto it = terms.begin(); it != terms.end();) {
      if (appui::is_zero(it->second))
        it = terms.erase(it);
      else
        ++it;
    }
    return *this;
  }

  bool operator==(const AffineElement& o) const {
    AffineElement a = *this, b = o;
    a.prune();
    b.prune();
    return a.terms == b.terms && a.k == b.k && a.d == b.d;
  }

  AffineElement& add(const AffineElement& o, const Rational& c = 1) {
    for (const auto& [deg, v] : o.terms) {
      auto [it, fresh] = terms.try_emplace(deg, Vector(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i)
        if (nonzero(v[i])) it->second[i] += c * v[i];
    }
    k += c * o.k;
    d += c * o.d;
    return prune();
  }

  static AffineElement loop(int degree, Vector x) {
    AffineElement a;
    a.terms.emplace(degree, std::move(x));
    return a.prune();
  }
  static AffineElement central(Rational c = 1) {
    AffineElement a;
    a.k = c;
    return a;
  }
  static AffineElement derivation(Rational c = 1) {
    AffineElement a;
    a.d = c;
    return a;
  }
};

/// [t^n x + λK + μd, t^m y + λ1 K + μ1 d]
///   = t^{n+m}[x,y] + μ m t^m y − μ1 n t^n x + n δ_{n,−m} (x|y) K.
inline AffineElement affine_bracket(const LieAlgebra& g, const AffineElement& a, const AffineElement& b) {
  AffineElement out;
  auto acc = [&](int deg, const Vector& v, const Rational& c) {
    auto [it, fresh] = out.terms.try_emplace(deg, Vector(g.dim()));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (nonzero(v[i])) it->second[i] += c * v[i];
  };
  for (const auto& [n, x] : a.terms) {
    for (const auto& [m, y] : b.terms) {
      acc(n + m, g.bracket(x, y), 1);
      if (n != 0 && n == -m) out.k += Rational(n) * g.form(x, y);
    }
  }
  if (nonzero(a.d))
    for (const auto& [m, y] : b.terms)
      if (m != 0) acc(m, y, a.d * Rational(m));
  if (nonzero(b.d))
    for (const auto& [n, x] : a.terms)
      if (n != 0) acc(n, x, -b.d * Rational(n));
  return out.prune();
}

/// Σ_{j≥0} t^j ⊗ I_j (+ CK) (+ Cd), where I_j is all of g for j ≥ tail.
struct LoopSubspace {
  std::map<int, HStableSubspace> layers;  // degrees in [0, tail); absent means zero
  int tail = 0;
  bool has_k = false;
  bool has_d = false;

  HStableSubspace layer(const LieAlgebra& g, int j) const {
    if (j >= tail) return g.whole();
    if (j < 0) return g.zero();
    auto it = layers.find(j);
    return it == layers.end() ? g.zero() : it->second;
  }

  /// Lowest degree with a nonzero layer.
  int start() const {
    for (const auto& [j, s] : layers)
      if (j < tail && !s.is_zero()) return j;
    return tail;
  }

  /// Canonical form: no stored zero layers, tail as small as possible.
  LoopSubspace& normalize(const LieAlgebra& g) {
    for (auto it = layers.begin(); it != layers.end();) {
      if (it->first >= tail || it->second.is_zero())
        it = layers.erase(it);
      else
        ++it;
    }
    const HStableSubspace all = g.whole();
    while (tail > 0) {
      auto it = layers.find(tail - 1);
      if (it == layers.end() || !(it->second == all)) break;
      layers.erase(it);
      --tail;
    }
    return *this;
  }

  bool operator==(const LoopSubspace&) const = default;
};

/// W ⊆ U.
inline bool loop_contains(const LieAlgebra& g, const LoopSubspace& u, const LoopSubspace& w) {
  if ((w.has_k && !u.has_k) || (w.has_d && !u.has_d)) return false;
  const int top = std::max(u.tail, w.tail);
  for (int j = 0; j < top; ++j)
    if (!subspace_contains(u.layer(g, j), w.layer(g, j))) return false;
  return true;
}

inline bool loop_equal(const LieAlgebra& g, const LoopSubspace& u, const LoopSubspace& w) {
  return loop_contains(g, u, w) && loop_contains(g, w, u);
}

/// [U, W] in non-negative degrees. K never appears (the cocycle needs
/// opposite degrees) and neither does d. Every layer at or above
/// U.tail + W.tail is [g, g] = g; the layers below are computed exactly and
/// materialized at least up to cap.
inline LoopSubspace bracket_loop(const LieAlgebra& g, const LoopSubspace& u, const LoopSubspace& w, int cap = 0) {
  LoopSubspace out;
  out.tail = std::max(cap, u.tail + w.tail);
  const int exact = u.tail + w.tail;
  for (int k = 0; k < exact; ++k) {
    HStableSubspace acc = g.zero();
    for (int i = 0; i <= k; ++i) {
      const HStableSubspace ui = u.layer(g, i), wj = w.layer(g, k - i);
      if (ui.is_zero() || wj.is_zero()) continue;
      acc = subspace_sum(acc, bracket_spaces(g, ui, wj));
    }
    // [d, t^k x] = k t^k x and [t^k x, d] = -k t^k x.
    if (k != 0 && u.has_d) acc = subspace_sum(acc, w.layer(g, k));
    if (k != 0 && w.has_d) acc = subspace_sum(acc, u.layer(g, k));
    if (!acc.is_zero()) out.layers.emplace(k, std::move(acc));
  }
  for (int k = exact; k < out.tail; ++k) out.layers.emplace(k, g.whole());
  return out;
}

/// Borel plus g_{-α} for α ∈ <S>+.
inline HStableSubspace parabolic(const LieAlgebra& g, const SimpleSet& s) {
  HStableSubspace p = g.zero();
  for (RootId a = 0; a < g.roots().num_positive(); ++a) p.pos.insert(a);
  p.neg = g.roots().root_span_positive(s);
  p.cartan = g.full_cartan();
  return p;
}

/// ρ + tC[t] ⊗ g + CK + Cd.
inline LoopSubspace affine_parabolic(const HStableSubspace& rho) {
  LoopSubspace p;
  p.tail = 1;
  p.layers.emplace(0, rho);
  p.has_k = p.has_d = true;
  return p;
}

/// t^n ⊗ τ + t^{n+1} ⊗ V + t^{n+2} C[t] ⊗ g + CK, no hypotheses checked.
inline LoopSubspace assemble_tau_bar(const LieAlgebra& g, const HStableSubspace& tau, const HStableSubspace& v,
                                     int n) {
  LoopSubspace t;
  t.tail = n + 2;
  if (!tau.is_zero()) t.layers.emplace(n, tau);
  if (!v.is_zero()) t.layers.emplace(n + 1, v);
  t.has_k = true;
  return t.normalize(g);
}

/// t^n ⊗ τ + t^{n+1} ⊗ V + t^{n+2} C[t] ⊗ g + CK. Throws std::invalid_argument
/// if n < 1, if V does not contain [τ, g], or if [V, ρ] is not inside V.
inline LoopSubspace build_tau_bar(const LieAlgebra& g, const HStableSubspace& tau, const HStableSubspace& rho,
                                  const HStableSubspace& v, int n) {
  if (n < 1) throw std::invalid_argument("degree n must be at least 1");
  if (!subspace_contains(v, bracket_spaces(g, tau, g.whole())))
    throw std::invalid_argument("V does not contain [tau, g]");
  if (!subspace_contains(v, bracket_spaces(g, v, rho))) throw std::invalid_argument("V is not stable under rho");
  return assemble_tau_bar(g, tau, v, n);
}

inline LoopSubspace build_tau_bar(const LieAlgebra& g, const StandardSubalgebra& s, const HStableSubspace& tau,
                                  int n) {
  return build_tau_bar(g, tau, normalizer_finite(g, s), appui_formula(g, s), n);
}

/// t^{n+1} ⊗ V + t^{n+2} C[t] ⊗ g + CK: the construction with the τ layer dropped.
inline LoopSubspace build_vbar(const LieAlgebra& g, const HStableSubspace& v, int n) {
  if (n < 1) throw std::invalid_argument("degree n must be at least 1");
  LoopSubspace t;
  t.tail = n + 2;
  if (!v.is_zero()) t.layers.emplace(n + 1, v);
  t.has_k = true;
  return t.normalize(g);
}

/// τ + tC[t] ⊗ g + CK + Cd.
inline LoopSubspace build_degree_zero_form(const LieAlgebra& g, const HStableSubspace& tau) {
  LoopSubspace t;
  t.tail = 1;
  if (!tau.is_zero()) t.layers.emplace(0, tau);
  t.has_k = t.has_d = true;
  return t.normalize(g);
}

struct AffineNormalizer {
  SimpleSet levi;        // S with finite part the parabolic ρ_S
  HStableSubspace rho;   // finite part
  LoopSubspace space;    // ρ_S + tC[t] ⊗ g + CK + Cd
  bool unique = true;    // every normalizing family member lies inside it
  std::vector<SimpleSet> normalizing;  // all S whose member normalizes T
};

/// The largest member of {ρ_S + tC[t]⊗g + CK + Cd : S ⊆ Π} normalizing T, or
/// nullopt if none does.
inline std::optional<AffineNormalizer> affine_normalizer(const LieAlgebra& g, const LoopSubspace& t) {
  const int p = g.rank();
  std::vector<SimpleSet> ok;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    SimpleSet s;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) s.insert(i);
    const LoopSubspace cand = affine_parabolic(parabolic(g, s));
    if (loop_contains(g, t, bracket_loop(g, cand, t))) ok.push_back(std::move(s));
  }
  if (ok.empty()) return std::nullopt;
  const SimpleSet* best = &ok.front();
  for (const auto& s : ok)
    if (s.size() > best->size()) best = &s;
  AffineNormalizer out;
  out.levi = *best;
  out.rho = parabolic(g, out.levi);
  out.space = affine_parabolic(out.rho);
  for (const auto& s : ok)
    if (!std::includes(best->begin(), best->end(), s.begin(), s.end())) out.unique = false;
  out.normalizing = std::move(ok);
  return out;
}

struct StandardReport {
  bool is_subalgebra = false;        // [T, T] ⊆ T
  bool has_normalizer = false;       // some family member normalizes T
  bool ideal_of_normalizer = false;  // T ⊆ N and [N, T] ⊆ T
  bool maximal = false;              // N is the unique maximal normalizing member
  std::optional<bool> matches_claim;
  int cap = 0;
  std::optional<AffineNormalizer> normalizer;

  bool passed() const {
    return is_subalgebra && has_normalizer && ideal_of_normalizer && maximal && matches_claim.value_or(true);
  }
};

/// Checks that T is a subalgebra which is an ideal of a parabolic of the
/// family, and optionally that the parabolic has the claimed finite part.
inline StandardReport verify_standard(const LieAlgebra& g, const LoopSubspace& t,
                                      const std::optional<HStableSubspace>& claimed_rho = std::nullopt) {
  StandardReport r;
  r.cap = t.tail + 2;
  r.is_subalgebra = loop_contains(g, t, bracket_loop(g, t, t, r.cap));
  r.normalizer = affine_normalizer(g, t);
  r.has_normalizer = r.normalizer.has_value();
  if (r.normalizer) {
    const LoopSubspace& n = r.normalizer->space;
    r.ideal_of_normalizer = loop_contains(g, n, t) && loop_contains(g, t, bracket_loop(g, n, t, r.cap));
    r.maximal = r.normalizer->unique;
    if (claimed_rho) r.matches_claim = r.normalizer->rho == *claimed_rho;
  } else if (claimed_rho) {
    r.matches_claim = false;
  }
  return r;
}

enum class GradedFailure {
  NotSubalgebra,           // I_n is not a subalgebra of g
  NoParabolicNormalizer,   // no family member normalizes T
  RelationFailed,          // one of the four graded relations
  NotInNormalizer,         // I_n is not inside ρ
  UpperLayersNotFull,      // some I_{n+j}, j ≥ 2, is not g
};

struct GradedIssue {
  GradedFailure code;
  int relation = 0;  // 1..4 for RelationFailed
};

struct GradedClassification {
  int n = 0;
  HStableSubspace tau;  // I_n
  HStableSubspace v;    // I_{n+1}
  std::optional<HStableSubspace> rho;
  bool relations[4] = {false, false, false, false};
  bool degree_zero = false;  // n = 0 with d: T = τ + tC[t]⊗g + CK + Cd
  std::vector<GradedIssue> issues;

  bool accepted() const { return issues.empty(); }
};

/// Reads a graded subalgebra T = Σ t^j ⊗ I_j (+ CK + Cd) back as (τ, V, n)
/// and checks the graded relations:
///   1. [I_n, ρ] ⊆ I_n
///   2. [I_n, g] ⊆ I_{n+1} and [I_{n+1}, ρ] ⊆ I_{n+1}
///   3. [I_{n+1}, g] ⊆ I_{n+2} and [I_{n+2}, ρ] ⊆ I_{n+2}
///   4. [I_{n+2}, g] ⊆ I_{n+j} for j ≥ 3
/// Relations involving ρ are skipped when no normalizer is found.
inline GradedClassification classify_graded(const LieAlgebra& g, const LoopSubspace& t) {
  GradedClassification c;
  c.n = t.start();
  const int n = c.n;
  c.tau = t.layer(g, n);
  c.v = t.layer(g, n + 1);
  const HStableSubspace all = g.whole();
  auto fail = [&](GradedFailure f, int rel = 0) { c.issues.push_back({f, rel}); };

  if (auto norm = affine_normalizer(g, t))
    c.rho = norm->rho;
  else
    fail(GradedFailure::NoParabolicNormalizer);

  auto in = [&](const HStableSubspace& big, const HStableSubspace& a, const HStableSubspace& b) {
    return subspace_contains(big, bracket_spaces(g, a, b));
  };
  auto rho_ok = [&](int j) { return !c.rho || in(t.layer(g, j), t.layer(g, j), *c.rho); };
  c.relations[0] = rho_ok(n);
  c.relations[1] = in(t.layer(g, n + 1), t.layer(g, n), all) && rho_ok(n + 1);
  c.relations[2] = in(t.layer(g, n + 2), t.layer(g, n + 1), all) && rho_ok(n + 2);
  c.relations[3] = true;
  {
    const HStableSubspace up = bracket_spaces(g, t.layer(g, n + 2), all);
    for (int j = n + 3; j < std::max(t.tail, n + 4); ++j)
      if (!subspace_contains(t.layer(g, j), up)) c.relations[3] = false;
  }
  for (int i = 0; i < 4; ++i)
    if (!c.relations[i]) fail(GradedFailure::RelationFailed, i + 1);

  if (!subspace_contains(c.tau, bracket_spaces(g, c.tau, c.tau))) fail(GradedFailure::NotSubalgebra);
  if (c.rho && !subspace_contains(*c.rho, c.tau)) fail(GradedFailure::NotInNormalizer);
  for (int j = n + 2; j < t.tail; ++j)
    if (!(t.layer(g, j) == all)) {
      fail(GradedFailure::UpperLayersNotFull);
      break;
    }
  c.degree_zero = n == 0 && t.has_d && c.v == all;
  return c;
}

inline std::string failure_name(GradedFailure f) {
  switch (f) {
    case GradedFailure::NotSubalgebra: return "not_subalgebra";
    case GradedFailure::NoParabolicNormalizer: return "no_parabolic_normalizer";
    case GradedFailure::RelationFailed: return "relation_failed";
    case GradedFailure::NotInNormalizer: return "not_in_normalizer";
    case GradedFailure::UpperLayersNotFull: return "upper_layers_not_full";
  }
  return "unknown";
}

/// Real and imaginary root space notation: t^j ⊗ g_α is g(A)_{α+jδ} and
/// t^j ⊗ h is g(A)_{jδ}. A proper Cartan part is shown as t^j⊗h[k/p].
/// With full_cartan set every nonzero Cartan part is printed as g(A)_{jδ}.
inline std::vector<std::string> affine_terms(const LieAlgebra& g, const LoopSubspace& t, bool full_cartan = false) {
  const RootSystem& rs = g.roots();
  std::vector<std::string> out;
  auto shift = [](int j) {
    if (j == 0) return std::string();
    if (j == 1) return std::string("+δ");
    return "+" + std::to_string(j) + "δ";
  };
  for (const auto& [j, s] : t.layers) {
    if (j >= t.tail) continue;
    for (RootId a : s.roots(rs)) out.push_back("g(A)_{" + root_name(rs, a) + shift(j) + "}");
    if (s.cartan.dim() == 0) continue;
    if (s.cartan.dim() == static_cast<std::size_t>(g.rank()) || full_cartan) {
      out.push_back(j == 0 ? "h" : "g(A)_{" + std::string(j == 1 ? "" : std::to_string(j)) + "δ}");
    } else {
      out.push_back("t^" + std::to_string(j) + "(x)h[" + std::to_string(s.cartan.dim()) + "/" +
                    std::to_string(g.rank()) + "]");
    }
  }
  out.push_back("t^" + std::to_string(t.tail) + "C[t](x)g");
  if (t.has_k) out.push_back("CK");
  if (t.has_d) out.push_back("Cd");
  return out;
}

inline std::string render_affine(const LieAlgebra& g, const LoopSubspace& t, bool full_cartan = false) {
  std::string s;
  for (const auto& term : affine_terms(g, t, full_cartan)) s += (s.empty() ? "" : " + ") + term;
  return s;
}

}  // namespace appui
