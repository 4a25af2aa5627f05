#pragma once

// Standard subalgebras of a simple Lie algebra built from antichains of
// positive roots, their parabolic normalizers, and closed forms for the
// appui subspace V = [tau, g].

#include "appui/chevalley.hpp"
#include "appui/rootsys.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace appui {

/// An antichain R together with every set the closed forms are stated in.
/// All root sets hold positive ids.
struct NilpotentStandard {
  std::vector<RootId> antichain;  // R, sorted
  RootSet r1;                     // upward closure of R
  SimpleSet s1;                   // R ∩ Π
  SimpleSet s2;                   // union of S^ω over ω in R
  RootSet delta1;                 // positive part of <Π \ S2>
  RootSet r2;                     // α with α + β a root for some β in R1
  SimpleSet r3;                   // Π \ union of S^β over β in R1
  SimpleSet r3_literal;           // Π \ S2
  std::optional<RootSet> rc;      // α with α_β = θ_β for all β in R, when R ⊆ Π
};

struct StandardSubalgebra {
  NilpotentStandard nil;
  std::optional<SimpleSet> psi;  // generates the semisimple part r0
  RootSet omega1;                // positive part of <Π \ S1>
};

enum class PsiPolicy {
  Common,        // union of components of both Π \ S1 and Π \ S2
  S2Components,  // union of components of Π \ S2
  AnyConnected,  // any connected subset of Π \ S2
};

inline RootSet upward_closure(const RootSystem& rs, const std::vector<RootId>& r) {
  RootSet out;
  for (RootId b = 0; b < rs.num_positive(); ++b)
    if (std::any_of(r.begin(), r.end(), [&](RootId w) { return rs.leq(w, b); })) out.insert(b);
  return out;
}

inline SimpleSet complement(const RootSystem& rs, const SimpleSet& b) {
  SimpleSet out;
  for (int i = 0; i < rs.rank(); ++i)
    if (!b.count(i)) out.insert(i);
  return out;
}

/// Computes R1, S1, S2, Δ1, R2, R3 (and RC when R ⊆ Π). Throws
/// std::invalid_argument if R is empty or not an antichain of positive roots.
inline NilpotentStandard derived_sets(const RootSystem& rs, std::vector<RootId> r) {
  std::sort(r.begin(), r.end());
  if (r.empty()) throw std::invalid_argument("antichain must be nonempty");
  if (!rs.is_antichain(r)) throw std::invalid_argument("roots do not form an antichain of positive roots");

  NilpotentStandard n;
  n.antichain = r;
  n.r1 = upward_closure(rs, r);
  for (RootId w : r) {
    if (rs.is_simple(w)) n.s1.insert(w);
    const SimpleSet s = rs.extremal_set(w);
    n.s2.insert(s.begin(), s.end());
  }
  n.delta1 = rs.root_span_positive(complement(rs, n.s2));
  for (RootId a = 0; a < rs.num_positive(); ++a)
    for (RootId b : n.r1)
      if (rs.sum(a, b)) {
        n.r2.insert(a);
        break;
      }
  SimpleSet extremal_r1;
  for (RootId b : n.r1) {
    const SimpleSet s = rs.extremal_set(b);
    extremal_r1.insert(s.begin(), s.end());
  }
  n.r3 = complement(rs, extremal_r1);
  n.r3_literal = complement(rs, n.s2);

  if (std::all_of(r.begin(), r.end(), [&](RootId w) { return rs.is_simple(w); })) {
    const Coords& theta = rs.coords(rs.highest_root());
    RootSet rc;
    for (RootId a = 0; a < rs.num_positive(); ++a) {
      const Coords& c = rs.coords(a);
      if (std::all_of(r.begin(), r.end(), [&](RootId w) { return c[w] == theta[w]; })) rc.insert(a);
    }
    n.rc = std::move(rc);
  }
  return n;
}

/// psi is a nonempty union of connected components of `within`.
inline bool is_component_union(const RootSystem& rs, const SimpleSet& within, const SimpleSet& psi) {
  if (psi.empty()) return false;
  if (!std::includes(within.begin(), within.end(), psi.begin(), psi.end())) return false;
  for (const auto& comp : rs.connected_components(within)) {
    const bool meets = std::any_of(comp.begin(), comp.end(), [&](int i) { return psi.count(i) > 0; });
    const bool inside = std::includes(psi.begin(), psi.end(), comp.begin(), comp.end());
    if (meets && !inside) return false;
  }
  return true;
}

/// Whether psi may generate the semisimple part r0 under the given policy.
/// The default requires a union of components of both Π \ S1 and Π \ S2;
/// only then is r0 an ideal of the Levi factor of ρ(m).
inline bool common_subsystem_check(const RootSystem& rs, const NilpotentStandard& n, const SimpleSet& psi,
                                   PsiPolicy policy = PsiPolicy::Common) {
  const SimpleSet outside2 = complement(rs, n.s2);
  switch (policy) {
    case PsiPolicy::Common:
      return is_component_union(rs, outside2, psi) && is_component_union(rs, complement(rs, n.s1), psi);
    case PsiPolicy::S2Components:
      return is_component_union(rs, outside2, psi);
    case PsiPolicy::AnyConnected:
      return !psi.empty() && std::includes(outside2.begin(), outside2.end(), psi.begin(), psi.end()) &&
             rs.connected_components(psi).size() == 1;
  }
  return false;
}

/// Ψ candidates: the admissible components of Π \ S2, or all nonempty
/// unions of them. AnyConnected enumerates like S2Components.
inline std::vector<SimpleSet> enumerate_psi_candidates(const RootSystem& rs, const NilpotentStandard& n,
                                                       PsiPolicy policy = PsiPolicy::Common,
                                                       bool unions = false) {
  std::vector<SimpleSet> comps;
  for (auto& c : rs.connected_components(complement(rs, n.s2)))
    if (policy != PsiPolicy::Common || common_subsystem_check(rs, n, c, policy)) comps.push_back(std::move(c));
  if (!unions) return comps;
  std::vector<SimpleSet> out;
  const std::size_t k = comps.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    SimpleSet s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(comps[i].begin(), comps[i].end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const SimpleSet& a, const SimpleSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// The realized subspace τ = Σ_{β∈R1} g_β, plus r0 when Ψ is present.
inline HStableSubspace tau_subspace(const LieAlgebra& g, const StandardSubalgebra& s) {
  const RootSystem& rs = g.roots();
  HStableSubspace tau = g.zero();
  tau.pos = s.nil.r1;
  if (s.psi) {
    const RootSet span = rs.root_span_positive(*s.psi);
    tau.pos.insert(span.begin(), span.end());
    tau.neg.insert(span.begin(), span.end());
    tau.cartan = g.coroot_span(span);
  }
  return tau;
}

/// Builds the standard subalgebra for (R, Ψ) and its realized subspace.
/// Throws std::invalid_argument if Ψ violates the policy.
inline std::pair<StandardSubalgebra, HStableSubspace> build_standard(
    const LieAlgebra& g, const std::vector<RootId>& r, std::optional<SimpleSet> psi = std::nullopt,
    PsiPolicy policy = PsiPolicy::Common) {
  const RootSystem& rs = g.roots();
  StandardSubalgebra s;
  s.nil = derived_sets(rs, r);
  s.omega1 = rs.root_span_positive(complement(rs, s.nil.s1));
  if (psi) {
    if (!common_subsystem_check(rs, s.nil, *psi, policy))
      throw std::invalid_argument("psi is not an admissible subsystem of the simple roots outside S2");
    s.psi = std::move(psi);
  }
  HStableSubspace tau = tau_subspace(g, s);
  return {std::move(s), std::move(tau)};
}

/// ρ(τ) = Σ_{Δ+} g_α + h + Σ_{α∈Δ1+} g_{-α}.
inline HStableSubspace normalizer_finite(const LieAlgebra& g, const StandardSubalgebra& s) {
  HStableSubspace rho = g.zero();
  for (RootId a = 0; a < g.roots().num_positive(); ++a) rho.pos.insert(a);
  rho.neg = s.nil.delta1;
  rho.cartan = g.full_cartan();
  return rho;
}

/// n2^+ (sign > 0) or n2^- (sign < 0): root spaces g_{±β}, β ∈ Δ+ \ R2.
inline HStableSubspace n2(const LieAlgebra& g, const NilpotentStandard& n, int sign) {
  HStableSubspace out = g.zero();
  for (RootId b = 0; b < g.roots().num_positive(); ++b) {
    if (n.r2.count(b)) continue;
    (sign > 0 ? out.pos : out.neg).insert(b);
  }
  return out;
}

/// P_Ψ^± = Σ_{α∈<Ψ>} [g_α, n2^±], summed over the components of Ψ.
inline HStableSubspace p_psi(const LieAlgebra& g, const StandardSubalgebra& s, int sign) {
  if (!s.psi) throw std::invalid_argument("p_psi requires psi");
  const RootSystem& rs = g.roots();
  const HStableSubspace target = n2(g, s.nil, sign);
  HStableSubspace out = g.zero();
  for (const auto& comp : rs.connected_components(*s.psi)) {
    const auto span = rs.root_span(comp);
    out = subspace_sum(out, bracket_spaces(g, g.root_spaces(span.all), target));
  }
  return out;
}

/// Closed form for V of the nilpotent part m:
/// Σ_{α∈Δ+ \ <R3>+} g_α + span{h_α : α ∈ R1 ∪ R2} + Σ_{α∈R2} g_{-α}.
inline HStableSubspace appui_nilpotent_formula(const LieAlgebra& g, const NilpotentStandard& n,
                                               const SimpleSet& r3) {
  const RootSystem& rs = g.roots();
  HStableSubspace v = g.zero();
  const RootSet low = rs.root_span_positive(r3);
  for (RootId a = 0; a < rs.num_positive(); ++a)
    if (!low.count(a)) v.pos.insert(a);
  RootSet r12 = n.r1;
  r12.insert(n.r2.begin(), n.r2.end());
  v.cartan = g.coroot_span(r12);
  v.neg = n.r2;
  return v;
}

/// Closed form for complete standard subalgebras (R ⊆ Π):
/// Σ_{Δ+} g_α + h + Σ_{α∈Δ+ \ RC} g_{-α}.
inline std::optional<HStableSubspace> appui_complete_formula(const LieAlgebra& g, const NilpotentStandard& n) {
  if (!n.rc) return std::nullopt;
  HStableSubspace v = g.zero();
  for (RootId a = 0; a < g.roots().num_positive(); ++a) {
    v.pos.insert(a);
    if (!n.rc->count(a)) v.neg.insert(a);
  }
  v.cartan = g.full_cartan();
  return v;
}

/// V_τ by closed form: the nilpotent formula for m; with Ψ present, V_m when
/// P_Ψ^- is zero and all of g otherwise.
inline HStableSubspace appui_formula(const LieAlgebra& g, const StandardSubalgebra& s) {
  HStableSubspace vm = appui_nilpotent_formula(g, s.nil, s.nil.r3);
  if (!s.psi) return vm;
  return p_psi(g, s, -1).is_zero() ? vm : g.whole();
}

}  // namespace appui
