#pragma once

// Property checks over standard subalgebras: closed forms against the
// brute-force oracle, the structural properties, and the affine construction.
// Each check returns true on success; sweeps tally them by name.

#include "appui/affine.hpp"
#include "appui/chevalley.hpp"
#include "appui/oracle.hpp"
#include "appui/standard.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace appui::checks {

/// Everything a check may need about one (R, Ψ), computed once.
struct Case {
  StandardSubalgebra s;
  HStableSubspace tau;
  HStableSubspace v_formula;
  HStableSubspace v_oracle;
  HStableSubspace rho_formula;
  HStableSubspace rho_oracle;
};

inline Case make_case(const LieAlgebra& g, const std::vector<RootId>& r, std::optional<SimpleSet> psi = std::nullopt,
                      PsiPolicy policy = PsiPolicy::Common) {
  Case c;
  auto [s, tau] = build_standard(g, r, std::move(psi), policy);
  c.s = std::move(s);
  c.tau = std::move(tau);
  c.v_formula = appui_formula(g, c.s);
  c.v_oracle = oracle::appui_oracle(g, c.tau);
  c.rho_formula = normalizer_finite(g, c.s);
  c.rho_oracle = oracle::normalizer_oracle(g, c.tau);
  return c;
}

inline bool appui_matches(const Case& c) { return c.v_formula == c.v_oracle; }

inline bool normalizer_matches(const Case& c) { return c.rho_formula == c.rho_oracle; }

inline bool complete_form_matches(const LieAlgebra& g, const Case& c) {
  auto v = appui_complete_formula(g, c.s.nil);
  return !v || *v == appui_nilpotent_formula(g, c.s.nil, c.s.nil.r3);
}

/// g_α ⊆ V ⇔ C_α meets S^β for some β ∈ R1.
inline bool positive_part_rule(const LieAlgebra& g, const Case& c) {
  const RootSystem& rs = g.roots();
  for (RootId a = 0; a < rs.num_positive(); ++a) {
    const SimpleSet sup = rs.support(a);
    bool meets = false;
    for (RootId b : c.s.nil.r1) {
      for (int i : rs.extremal_set(b))
        if (sup.count(i)) meets = true;
      if (meets) break;
    }
    if (meets != (c.v_oracle.pos.count(a) > 0)) return false;
  }
  return true;
}

/// g_{-α} ⊆ V ⇔ α + β ∈ Δ+ for some β ∈ R1.
inline bool negative_part_rule(const LieAlgebra& g, const Case& c) {
  const RootSystem& rs = g.roots();
  for (RootId a = 0; a < rs.num_positive(); ++a) {
    bool sums = false;
    for (RootId b : c.s.nil.r1)
      if (auto x = rs.sum(a, b); x && rs.is_positive(*x)) sums = true;
    if (sums != (c.v_oracle.neg.count(a) > 0)) return false;
  }
  return true;
}

/// [V, ρ] ⊆ V.
inline bool v_stable_under_normalizer(const LieAlgebra& g, const Case& c) {
  return subspace_contains(c.v_oracle, oracle::bracket(g, c.v_oracle, c.rho_oracle));
}

inline bool tau_inside_v(const Case& c) { return subspace_contains(c.v_oracle, c.tau); }

/// [V, g] = g.
inline bool v_generates(const LieAlgebra& g, const Case& c) {
  return oracle::bracket(g, c.v_oracle, g.whole()) == g.whole();
}

inline bool tau_is_subalgebra(const LieAlgebra& g, const Case& c) { return oracle::is_subalgebra(g, c.tau); }

/// P_Ψ^+ ⊆ n2^+.
inline bool p_plus_inside_n2(const LieAlgebra& g, const Case& c) {
  if (!c.s.psi) return true;
  return subspace_contains(n2(g, c.s.nil, +1), p_psi(g, c.s, +1));
}

/// For α, β, α+β ∈ Δ+ \ R2: g_{α+β} ⊆ P_Ψ^+ iff both g_α and g_β are, and
/// either of them being inside forces g_{α+β} inside.
inline bool p_plus_closure(const LieAlgebra& g, const Case& c) {
  if (!c.s.psi) return true;
  const RootSystem& rs = g.roots();
  const HStableSubspace p = p_psi(g, c.s, +1);
  const RootSet& r2 = c.s.nil.r2;
  for (RootId a = 0; a < rs.num_positive(); ++a) {
    if (r2.count(a)) continue;
    for (RootId b = a; b < rs.num_positive(); ++b) {
      if (r2.count(b)) continue;
      auto x = rs.sum(a, b);
      if (!x || !rs.is_positive(*x) || r2.count(*x)) continue;
      const bool ia = p.pos.count(a) > 0, ib = p.pos.count(b) > 0, ix = p.pos.count(*x) > 0;
      if (ix && !(ia && ib)) return false;
      if ((ia || ib) && !ix) return false;
    }
  }
  return true;
}

/// V_τ is V_m when P_Ψ^- = 0 and g otherwise, both sides by brute force.
inline bool dichotomy(const LieAlgebra& g, const Case& c) {
  if (!c.s.psi) return true;
  const HStableSubspace m = tau_subspace(g, StandardSubalgebra{c.s.nil, std::nullopt, c.s.omega1});
  const HStableSubspace expected =
      p_psi(g, c.s, -1).is_zero() ? oracle::appui_oracle(g, m) : g.whole();
  return c.v_oracle == expected;
}

// Affine construction.

/// verify_standard on t^n τ + t^{n+1} V + ... passes and the normalizer is
/// exactly ρ(τ) + tC[t]g + CK + Cd.
inline bool existence(const LieAlgebra& g, const Case& c, int n) {
  const LoopSubspace t = build_tau_bar(g, c.tau, c.rho_formula, c.v_formula, n);
  const StandardReport r = verify_standard(g, t, c.rho_formula);
  return r.passed() && r.normalizer && loop_equal(g, r.normalizer->space, affine_parabolic(c.rho_formula));
}

/// The same with the τ layer dropped.
inline bool truncation(const LieAlgebra& g, const Case& c, int n) {
  return verify_standard(g, build_vbar(g, c.v_formula, n)).passed();
}

inline bool classification_round_trip(const LieAlgebra& g, const Case& c, int n) {
  const LoopSubspace t = build_tau_bar(g, c.tau, c.rho_formula, c.v_formula, n);
  const GradedClassification k = classify_graded(g, t);
  const bool rels = k.relations[0] && k.relations[1] && k.relations[2] && k.relations[3];
  return k.accepted() && rels && k.n == n && k.tau == c.tau && k.v == c.v_formula && k.rho == c.rho_formula;
}

inline bool degree_zero_round_trip(const LieAlgebra& g, const Case& c) {
  const LoopSubspace t = build_degree_zero_form(g, c.tau);
  const GradedClassification k = classify_graded(g, t);
  return k.accepted() && k.degree_zero && k.n == 0 && k.tau == c.tau && verify_standard(g, t, c.rho_formula).passed();
}

/// Layers n, n+1, n+1, then g: I_{n+2} ⊊ g must be rejected.
inline bool rejects_short_tail(const LieAlgebra& g, const Case& c, int n) {
  if (c.v_formula == g.whole()) return true;
  LoopSubspace t;
  t.tail = n + 3;
  t.layers.emplace(n, c.tau);
  t.layers.emplace(n + 1, c.v_formula);
  t.layers.emplace(n + 2, c.v_formula);
  t.has_k = true;
  t.normalize(g);
  const GradedClassification k = classify_graded(g, t);
  for (const auto& issue : k.issues)
    if (issue.code == GradedFailure::UpperLayersNotFull) return true;
  return false;
}

/// Removing any single root space from V breaks verification of τ̄.
inline bool mutations_detected(const LieAlgebra& g, const Case& c, int n) {
  const RootSystem& rs = g.roots();
  for (RootId r : c.v_formula.roots(rs)) {
    HStableSubspace v = c.v_formula;
    v.remove_root(rs, r);
    if (verify_standard(g, assemble_tau_bar(g, c.tau, v, n), c.rho_formula).passed()) return false;
  }
  return true;
}

/// Named results for one case; the affine entries are present when requested.
inline std::vector<std::pair<std::string, bool>> run_all(const LieAlgebra& g, const Case& c, bool affine,
                                                         bool mutations = false) {
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("appui_formula", appui_matches(c));
  out.emplace_back("normalizer", normalizer_matches(c));
  out.emplace_back("tau_subalgebra", tau_is_subalgebra(g, c));
  out.emplace_back("tau_in_v", tau_inside_v(c));
  out.emplace_back("v_rho_stable", v_stable_under_normalizer(g, c));
  out.emplace_back("v_generates_g", v_generates(g, c));
  if (!c.s.psi) {
    out.emplace_back("complete_form", complete_form_matches(g, c));
    out.emplace_back("positive_part", positive_part_rule(g, c));
    out.emplace_back("negative_part", negative_part_rule(g, c));
  } else {
    out.emplace_back("p_plus_in_n2", p_plus_inside_n2(g, c));
    out.emplace_back("p_plus_closure", p_plus_closure(g, c));
    out.emplace_back("dichotomy", dichotomy(g, c));
  }
  if (affine) {
    for (int n : {1, 2}) {
      out.emplace_back("existence_n" + std::to_string(n), existence(g, c, n));
      out.emplace_back("truncation_n" + std::to_string(n), truncation(g, c, n));
      out.emplace_back("classify_n" + std::to_string(n), classification_round_trip(g, c, n));
      out.emplace_back("rejects_short_tail_n" + std::to_string(n), rejects_short_tail(g, c, n));
    }
    out.emplace_back("degree_zero", degree_zero_round_trip(g, c));
    if (mutations) out.emplace_back("mutations", mutations_detected(g, c, 1));
  }
  return out;
}

}  // namespace appui::checks
