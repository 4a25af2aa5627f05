// Command-line front end: root data, antichains, appui subspaces by closed
// form and by brute force, affine verification and corpus sweeps.

#include "appui/affine.hpp"
#include "appui/checks.hpp"
#include "appui/io.hpp"
#include "appui/oracle.hpp"
#include "appui/standard.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace appui;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kVerify = 3;

struct Options {
  std::string type;
  std::vector<std::string> antichain;
  std::string psi;
  std::optional<int> n;
  std::string mode = "both";
  int cap = 0;
  bool include_empty = false;
  bool explain = false;
  bool json_out = false;
  std::string psi_policy = "common";
  std::string descriptor;
  std::string drop;
  std::string types = "A1,A2,A3,B2,B3,C3,D4,G2";
  int max_rank = 0;
  bool affine = false;
  bool unions = true;
};

PsiPolicy parse_policy(const std::string& s) {
  if (s == "common") return PsiPolicy::Common;
  if (s == "s2") return PsiPolicy::S2Components;
  if (s == "any") return PsiPolicy::AnyConnected;
  throw std::invalid_argument("unknown psi policy '" + s + "'");
}

std::string simple_names(const SimpleSet& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::string("a") + std::to_string(i + 1);
  return out + "}";
}

std::string root_names(const RootSystem& rs, const RootSet& roots) {
  std::string out = "{";
  for (RootId a : roots) out += (out.size() > 1 ? ", " : "") + root_name(rs, a);
  return out + "}";
}

io::Descriptor read_descriptor(const Options& o) {
  if (!o.descriptor.empty()) {
    std::ifstream in(o.descriptor);
    if (!in) throw std::invalid_argument("cannot read " + o.descriptor);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    io::Descriptor d = io::descriptor_from_json(j);
    if (o.n) d.n = o.n;
    return d;
  }
  if (o.type.empty()) throw std::invalid_argument("--type is required");
  io::Descriptor d;
  d.type = LieType::parse(o.type);
  d.antichain = io::parse_antichain(d.type.rank, o.antichain);
  if (!o.psi.empty()) d.psi = io::parse_psi(d.type.rank, o.psi);
  if (o.n) d.n = o.n;
  return d;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_roots(const Options& o) {
  const RootSystem rs(LieType::parse(o.type));
  if (o.json_out) {
    json j;
    j["type"] = rs.type().name();
    j["cartan"] = rs.cartan_matrix();
    json roots = json::array();
    for (RootId a = 0; a < rs.num_positive(); ++a)
      roots.push_back({{"id", a},
                       {"coords", rs.coords(a)},
                       {"name", root_name(rs, a)},
                       {"height", rs.height(a)},
                       {"support", io::simple_list(rs.support(a))},
                       {"extremal", io::simple_list(rs.extremal_set(a))}});
    j["positive_roots"] = roots;
    j["highest_root"] = rs.coords(rs.highest_root());
    print_json(j);
    return kOk;
  }
  std::cout << rs.type().name() << ": " << rs.num_positive() << " positive roots, highest "
            << root_name(rs, rs.highest_root()) << "\n";
  for (RootId a = 0; a < rs.num_positive(); ++a)
    std::cout << "  " << a << "  " << root_name(rs, a) << "  height " << rs.height(a) << "  S="
              << simple_names(rs.extremal_set(a)) << "\n";
  return kOk;
}

int cmd_antichains(const Options& o) {
  const RootSystem rs(LieType::parse(o.type));
  const auto all = rs.antichains(o.include_empty);
  if (o.json_out) {
    json list = json::array();
    for (const auto& a : all) {
      json roots = json::array();
      for (RootId r : a) roots.push_back(rs.coords(r));
      list.push_back(roots);
    }
    print_json({{"type", rs.type().name()}, {"count", all.size()}, {"antichains", list}});
    return kOk;
  }
  for (const auto& a : all) std::cout << root_names(rs, RootSet(a.begin(), a.end())) << "\n";
  std::cout << all.size() << " antichains\n";
  return kOk;
}

json sets_json(const RootSystem& rs, const NilpotentStandard& n) {
  json j;
  j["r1"] = io::root_list(rs, n.r1);
  j["s1"] = io::simple_list(n.s1);
  j["s2"] = io::simple_list(n.s2);
  j["delta1"] = io::root_list(rs, n.delta1);
  j["r2"] = io::root_list(rs, n.r2);
  j["r3_adopted"] = io::simple_list(n.r3);
  j["r3_literal"] = io::simple_list(n.r3_literal);
  j["rc"] = n.rc ? io::root_list(rs, *n.rc) : json(nullptr);
  return j;
}

int cmd_compute(const Options& o) {
  if (o.mode != "formula" && o.mode != "oracle" && o.mode != "both")
    throw std::invalid_argument("--mode must be formula, oracle or both");
  const io::Descriptor d = read_descriptor(o);
  const LieAlgebra g(d.type);
  const RootSystem& rs = g.roots();
  const io::Resolved r = io::resolve(rs, d);
  auto [s, tau] = build_standard(g, r.antichain, r.psi, parse_policy(o.psi_policy));
  const HStableSubspace rho = normalizer_finite(g, s);
  const bool want_formula = o.mode != "oracle", want_oracle = o.mode != "formula";

  json rep;
  rep["descriptor"] = io::to_json(d);
  rep["sets"] = sets_json(rs, s.nil);
  rep["tau"] = io::to_json(g, tau);
  rep["normalizer"] = io::to_json(g, rho);

  std::optional<HStableSubspace> vf, vo;
  if (want_formula) vf = appui_formula(g, s);
  if (want_oracle) vo = oracle::appui_oracle(g, tau);
  json appui;
  appui["formula"] = vf ? io::to_json(g, *vf) : json(nullptr);
  appui["oracle"] = vo ? io::to_json(g, *vo) : json(nullptr);
  const bool both = vf && vo;
  const bool agree = both && *vf == *vo;
  appui["agree"] = both ? json(agree) : json(nullptr);
  rep["appui"] = appui;
  const HStableSubspace& v = vf ? *vf : *vo;

  // Both readings of R3 for the nilpotent part, judged by the oracle.
  const HStableSubspace m = tau_subspace(g, StandardSubalgebra{s.nil, std::nullopt, s.omega1});
  const HStableSubspace vm_oracle = oracle::appui_oracle(g, m);
  for (const auto& [key, r3] : {std::pair<std::string, SimpleSet>{"r3_adopted", s.nil.r3},
                                std::pair<std::string, SimpleSet>{"r3_literal", s.nil.r3_literal}}) {
    const HStableSubspace vm = appui_nilpotent_formula(g, s.nil, r3);
    rep[key] = {{"simple_roots", io::simple_list(r3)},
                {"v_m", io::to_json(g, vm)},
                {"matches_oracle", vm == vm_oracle}};
  }

  json notes = json::array();
  if (v.cartan.dim() < static_cast<std::size_t>(g.rank()))
    notes.push_back("Cartan part of V has dimension " + std::to_string(v.cartan.dim()) + " of " +
                    std::to_string(g.rank()) + "; it is a proper subspace of h, so a reading of V with all of h is a "
                    "different subspace");
  if (s.psi) {
    const HStableSubspace pm = p_psi(g, s, -1);
    json pj;
    pj["psi"] = io::simple_list(*s.psi);
    pj["p_minus"] = io::to_json(g, pm);
    pj["p_minus_zero"] = pm.is_zero();
    pj["p_minus_equals_n2"] = pm == n2(g, s.nil, -1);
    pj["p_plus_in_n2"] = subspace_contains(n2(g, s.nil, +1), p_psi(g, s, +1));
    pj["V == V_m"] = v == vm_oracle;
    pj["V == g"] = v == g.whole();
    rep["psi"] = pj;
  }
  if (d.n) {
    const LoopSubspace t = assemble_tau_bar(g, tau, v, *d.n);
    rep["affine"] = {{"n", *d.n},
                     {"tau_bar", render_affine(g, t)},
                     {"tau_bar_full_cartan", render_affine(g, t, true)},
                     {"normalizer", render_affine(g, affine_parabolic(rho))}};
  }
  rep["notes"] = notes;
  rep["passed"] = !both || agree;

  if (o.json_out) {
    print_json(rep);
  } else {
    std::cout << d.type.name() << "  R = " << root_names(rs, RootSet(r.antichain.begin(), r.antichain.end()));
    if (s.psi) std::cout << "  psi = " << simple_names(*s.psi);
    std::cout << "\n";
    if (o.explain) {
      std::cout << "  R1     = " << root_names(rs, s.nil.r1) << "\n"
                << "  S1     = " << simple_names(s.nil.s1) << "\n"
                << "  S2     = " << simple_names(s.nil.s2) << "\n"
                << "  Delta1 = " << root_names(rs, s.nil.delta1) << "\n"
                << "  R2     = " << root_names(rs, s.nil.r2) << "\n"
                << "  R3     = " << simple_names(s.nil.r3) << "  (oracle: "
                << (rep["r3_adopted"]["matches_oracle"].get<bool>() ? "agrees" : "disagrees") << ")\n"
                << "  Pi\\S2  = " << simple_names(s.nil.r3_literal) << "  (as R3, oracle: "
                << (rep["r3_literal"]["matches_oracle"].get<bool>() ? "agrees" : "disagrees") << ")\n";
      if (s.nil.rc) std::cout << "  RC     = " << root_names(rs, *s.nil.rc) << "\n";
    }
    std::cout << "tau        " << describe(g, tau) << "\n";
    std::cout << "normalizer " << describe(g, rho) << "\n";
    if (vf) std::cout << "V formula  " << describe(g, *vf) << "\n";
    if (vo) std::cout << "V oracle   " << describe(g, *vo) << "\n";
    if (both) std::cout << "agree      " << (agree ? "yes" : "NO") << "\n";
    if (s.psi) {
      std::cout << "P_psi^- " << (rep["psi"]["p_minus_zero"].get<bool>() ? "= 0" : "!= 0")
                << ", V == V_m: " << rep["psi"]["V == V_m"].get<bool>() << ", V == g: " << rep["psi"]["V == g"].get<bool>()
                << "\n";
    }
    if (d.n) {
      std::cout << "tau_bar    " << rep["affine"]["tau_bar"].get<std::string>() << "\n";
      std::cout << "  with h   " << rep["affine"]["tau_bar_full_cartan"].get<std::string>() << "\n";
    }
    for (const auto& note : notes) std::cout << "note: " << note.get<std::string>() << "\n";
  }
  return !both || agree ? kOk : kVerify;
}

int cmd_affine_verify(const Options& o) {
  const io::Descriptor d = read_descriptor(o);
  if (!d.n) throw std::invalid_argument("--n is required for affine-verify");
  if (*d.n < 1) throw std::invalid_argument("n must be a positive integer");
  const LieAlgebra g(d.type);
  const RootSystem& rs = g.roots();
  const io::Resolved r = io::resolve(rs, d);
  auto [s, tau] = build_standard(g, r.antichain, r.psi, parse_policy(o.psi_policy));
  const HStableSubspace rho = normalizer_finite(g, s);
  HStableSubspace v = appui_formula(g, s);
  const int n = *d.n;

  json rep;
  rep["descriptor"] = io::to_json(d);
  if (!o.drop.empty()) {
    const RootId dropped = io::resolve_root(rs, io::parse_coords(rs.rank(), o.drop));
    if (!v.has_root(rs, dropped)) throw std::invalid_argument("V has no root space " + root_name(rs, dropped));
    v.remove_root(rs, dropped);
    rep["dropped"] = root_name(rs, dropped);
  }
  bool precondition = true;
  try {
    build_tau_bar(g, tau, rho, v, n);
  } catch (const std::invalid_argument& e) {
    precondition = false;
    rep["precondition_error"] = e.what();
  }
  const LoopSubspace t = assemble_tau_bar(g, tau, v, n);
  if (o.cap != 0 && o.cap < t.tail) throw std::invalid_argument("--cap must be at least the tail degree");
  rep["precondition"] = precondition;
  rep["tau_bar"] = io::to_json(g, t);
  rep["render"] = {{"exact", render_affine(g, t)}, {"full_cartan", render_affine(g, t, true)}};

  StandardReport vr = verify_standard(g, t, rho);
  if (o.cap != 0) vr.cap = o.cap;
  rep["verify"] = io::to_json(vr);
  bool normalizer_ok = false;
  if (vr.normalizer) {
    normalizer_ok = loop_equal(g, vr.normalizer->space, affine_parabolic(rho));
    rep["normalizer"] = {{"finite", io::to_json(g, vr.normalizer->rho)},
                         {"render", render_affine(g, vr.normalizer->space)},
                         {"equals_rho_bar", normalizer_ok}};
  } else {
    rep["normalizer"] = nullptr;
  }
  const GradedClassification c = classify_graded(g, t);
  rep["classification"] = io::to_json(g, c);
  const bool round_trip = c.accepted() && c.n == n && c.tau == tau && c.v == v;
  rep["round_trip"] = round_trip;
  const StandardReport trunc = verify_standard(g, build_vbar(g, v, n));
  rep["truncation"] = io::to_json(trunc);

  const bool passed = precondition && vr.passed() && normalizer_ok && round_trip && trunc.passed();
  rep["passed"] = passed;
  if (o.json_out) {
    print_json(rep);
  } else {
    std::cout << "tau_bar      " << render_affine(g, t) << "\n";
    if (rep.contains("dropped")) std::cout << "dropped      " << rep["dropped"].get<std::string>() << "\n";
    std::cout << "precondition " << (precondition ? "ok" : "FAILED") << "\n"
              << "subalgebra   " << (vr.is_subalgebra ? "ok" : "FAILED") << "\n"
              << "normalizer   " << (vr.normalizer ? render_affine(g, vr.normalizer->space) : "none found") << "\n"
              << "ideal        " << (vr.ideal_of_normalizer ? "ok" : "FAILED") << "\n"
              << "maximal      " << (vr.maximal ? "ok" : "FAILED") << "\n"
              << "rho_bar      " << (normalizer_ok ? "ok" : "FAILED") << "\n"
              << "classified   " << (round_trip ? "ok" : "FAILED") << "\n"
              << "truncation   " << (trunc.passed() ? "ok" : "FAILED") << "\n"
              << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kOk : kVerify;
}

int cmd_sweep(const Options& o) {
  const PsiPolicy policy = parse_policy(o.psi_policy);
  std::vector<LieType> types;
  for (const auto& tok : io::split(o.types, ','))
    if (!tok.empty()) {
      const LieType t = LieType::parse(tok);
      if (o.max_rank == 0 || t.rank <= o.max_rank) types.push_back(t);
    }

  json rep;
  json per_type = json::array();
  std::size_t total_cases = 0, total_checks = 0, total_failures = 0;
  for (const LieType& type : types) {
    const LieAlgebra g(type);
    const RootSystem& rs = g.roots();
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    json failures = json::array();
    std::size_t antichains = 0, cases = 0, literal_agree = 0;
    for (const auto& r : rs.antichains()) {
      ++antichains;
      const NilpotentStandard nil = derived_sets(rs, r);
      std::vector<std::optional<SimpleSet>> psis{std::nullopt};
      for (auto& p : enumerate_psi_candidates(rs, nil, policy, o.unions)) psis.emplace_back(std::move(p));
      for (const auto& psi : psis) {
        const checks::Case c = checks::make_case(g, r, psi, policy);
        ++cases;
        if (!psi && appui_nilpotent_formula(g, nil, nil.r3_literal) == c.v_oracle) ++literal_agree;
        for (const auto& [name, ok] : checks::run_all(g, c, o.affine)) {
          auto& t = tally[name];
          ++t.second;
          if (ok) {
            ++t.first;
            continue;
          }
          json roots = json::array();
          for (RootId a : r) roots.push_back(rs.coords(a));
          failures.push_back({{"antichain", roots}, {"psi", psi ? io::simple_list(*psi) : json(nullptr)}, {"check", name}});
        }
      }
    }
    json checks_json;
    std::size_t type_checks = 0;
    for (const auto& [name, t] : tally) {
      checks_json[name] = {{"passed", t.first}, {"total", t.second}};
      type_checks += t.second;
    }
    per_type.push_back({{"type", type.name()},
                        {"antichains", antichains},
                        {"cases", cases},
                        {"checks", checks_json},
                        {"r3_literal_agrees", literal_agree},
                        {"failures", failures}});
    total_cases += cases;
    total_checks += type_checks;
    total_failures += failures.size();
    if (!o.json_out) {
      std::cout << type.name() << ": " << antichains << " antichains, " << cases << " cases, " << type_checks
                << " checks, " << failures.size() << " failures (literal R3 agrees on " << literal_agree << "/"
                << antichains << ")\n";
      for (const auto& f : failures) std::cout << "  FAIL " << f.dump() << "\n";
    }
  }
  rep["types"] = per_type;
  rep["summary"] = {{"cases", total_cases}, {"checks", total_checks}, {"failures", total_failures}};
  rep["passed"] = total_failures == 0;
  if (o.json_out)
    print_json(rep);
  else
    std::cout << (total_failures == 0 ? "PASS" : "FAIL") << ": " << total_checks << " checks over " << total_cases
              << " cases\n";
  return total_failures == 0 ? kOk : kVerify;
}

void add_descriptor_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Lie type, e.g. B4");
  cmd->add_option("--antichain", o.antichain, "antichain roots: \"0,1,2,2\" or \"a3\"; repeat or separate with ';'");
  cmd->add_option("--psi", o.psi, "simple roots generating r0, e.g. \"1,2\" or \"a4\"");
  cmd->add_option("--n", o.n, "affine degree n >= 1");
  cmd->add_option("--descriptor", o.descriptor, "read the descriptor from a JSON file");
  cmd->add_option("--psi-policy", o.psi_policy, "admissible psi: common, s2 or any");
  cmd->add_flag("--json", o.json_out, "emit JSON");
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::boolalpha;
  CLI::App app{"Standard subalgebras, appui subspaces and affine verification"};
  app.require_subcommand(1);
  Options o;

  auto* roots = app.add_subcommand("roots", "list the positive roots of a type");
  roots->add_option("--type", o.type, "Lie type")->required();
  roots->add_flag("--json", o.json_out, "emit JSON");

  auto* anti = app.add_subcommand("antichains", "enumerate antichains of positive roots");
  anti->add_option("--type", o.type, "Lie type")->required();
  anti->add_flag("--include-empty", o.include_empty, "include the empty antichain");
  anti->add_flag("--json", o.json_out, "emit JSON");

  auto* compute = app.add_subcommand("compute", "normalizer and appui subspace of a standard subalgebra");
  add_descriptor_options(compute, o);
  compute->add_option("--mode", o.mode, "formula, oracle or both");
  compute->add_flag("--explain", o.explain, "print the derived root sets");

  auto* affine = app.add_subcommand("affine-verify", "verify the graded affine standard subalgebra");
  add_descriptor_options(affine, o);
  affine->add_option("--cap", o.cap, "truncation degree reported");
  affine->add_option("--drop", o.drop, "remove this root space from V before verifying");

  auto* sweep = app.add_subcommand("sweep", "check every antichain of the given types");
  sweep->add_option("--types", o.types, "comma-separated types");
  sweep->add_option("--max-rank", o.max_rank, "skip types above this rank");
  sweep->add_option("--psi-policy", o.psi_policy, "admissible psi: common, s2 or any");
  sweep->add_flag("--affine", o.affine, "include the affine construction checks");
  sweep->add_flag_callback("--no-unions", [&o] { o.unions = false; }, "only single components as psi");
  sweep->add_flag("--json", o.json_out, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*anti) return cmd_antichains(o);
    if (*compute) return cmd_compute(o);
    if (*affine) return cmd_affine_verify(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
