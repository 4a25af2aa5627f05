#pragma once

// Text and JSON encodings: root tokens, subalgebra descriptors, subspaces
// and graded subspaces.

#include "appui/affine.hpp"
#include "appui/chevalley.hpp"
#include "appui/rootsys.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace appui::io {

using json = nlohmann::json;

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

inline int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

/// Parses a root as coordinates ("0,1,2,2") or as a sum of simple roots
/// ("a3", "a2+2a3+2a4"). Throws std::invalid_argument if it is not a root.
inline Coords parse_coords(int rank, const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw std::invalid_argument("empty root");
  Coords c(static_cast<std::size_t>(rank), 0);
  if (t.find('a') == std::string::npos && t.find('A') == std::string::npos) {
    const auto parts = split(t, ',');
    if (static_cast<int>(parts.size()) != rank)
      throw std::invalid_argument("root '" + t + "' needs " + std::to_string(rank) + " coordinates");
    for (int i = 0; i < rank; ++i) c[i] = parse_int(parts[i]);
    return c;
  }
  std::size_t pos = 0;
  int sign = 1;
  while (pos < t.size()) {
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::string mult;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) mult += t[pos++];
    if (pos >= t.size() || (t[pos] != 'a' && t[pos] != 'A')) throw std::invalid_argument("bad root '" + t + "'");
    ++pos;
    std::string idx;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) idx += t[pos++];
    if (idx.empty()) throw std::invalid_argument("bad root '" + t + "'");
    const int i = parse_int(idx);
    if (i < 1 || i > rank) throw std::invalid_argument("simple root index out of range in '" + t + "'");
    c[i - 1] += sign * (mult.empty() ? 1 : parse_int(mult));
    sign = 1;
  }
  return c;
}

inline RootId resolve_root(const RootSystem& rs, const Coords& c) {
  auto id = rs.find(c);
  if (!id) {
    std::string s;
    for (int v : c) s += (s.empty() ? "" : ",") + std::to_string(v);
    throw std::invalid_argument("(" + s + ") is not a root of " + rs.type().name());
  }
  return *id;
}

/// Antichain arguments: every value may hold several roots separated by ';'.
inline std::vector<Coords> parse_antichain(int rank, const std::vector<std::string>& values) {
  std::vector<Coords> out;
  for (const auto& v : values)
    for (const auto& tok : split(v, ';'))
      if (!tok.empty()) out.push_back(parse_coords(rank, tok));
  return out;
}

/// Ψ as 1-based simple-root indices: "4", "1,2", "a1,a2".
inline std::vector<int> parse_psi(int rank, const std::string& text) {
  std::vector<int> out;
  for (auto tok : split(text, ',')) {
    if (tok.empty()) continue;
    if (tok[0] == 'a' || tok[0] == 'A') tok = tok.substr(1);
    const int i = parse_int(tok);
    if (i < 1 || i > rank) throw std::invalid_argument("psi index " + tok + " out of range");
    out.push_back(i);
  }
  if (out.empty()) throw std::invalid_argument("psi must be nonempty");
  return out;
}

struct Descriptor {
  LieType type;
  std::vector<Coords> antichain;
  std::optional<std::vector<int>> psi;  // 1-based
  std::optional<int> n;

  bool operator==(const Descriptor&) const = default;
};

inline json to_json(const Descriptor& d) {
  json j;
  j["type"] = d.type.name();
  j["antichain"] = d.antichain;
  j["psi"] = d.psi ? json(*d.psi) : json(nullptr);
  j["n"] = d.n ? json(*d.n) : json(nullptr);
  return j;
}

/// Throws std::invalid_argument on malformed input.
inline Descriptor descriptor_from_json(const json& j) {
  try {
    Descriptor d;
    d.type = LieType::parse(j.at("type").get<std::string>());
    d.antichain = j.at("antichain").get<std::vector<Coords>>();
    if (j.contains("psi") && !j["psi"].is_null()) d.psi = j["psi"].get<std::vector<int>>();
    if (j.contains("n") && !j["n"].is_null()) d.n = j["n"].get<int>();
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed descriptor: ") + e.what());
  }
}

/// Root ids and the 0-based Ψ of a descriptor, checked against the root system.
struct Resolved {
  std::vector<RootId> antichain;
  std::optional<SimpleSet> psi;
};

inline Resolved resolve(const RootSystem& rs, const Descriptor& d) {
  Resolved r;
  for (const auto& c : d.antichain) {
    if (static_cast<int>(c.size()) != rs.rank()) throw std::invalid_argument("root has wrong number of coordinates");
    const RootId id = resolve_root(rs, c);
    if (!rs.is_positive(id)) throw std::invalid_argument("antichain roots must be positive");
    r.antichain.push_back(id);
  }
  if (d.psi) {
    SimpleSet s;
    for (int i : *d.psi) {
      if (i < 1 || i > rs.rank()) throw std::invalid_argument("psi index out of range");
      s.insert(i - 1);
    }
    r.psi = std::move(s);
  }
  if (d.n && *d.n < 1) throw std::invalid_argument("n must be a positive integer");
  return r;
}

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline json root_list(const RootSystem& rs, const RootSet& roots) {
  json out = json::array();
  for (RootId a : roots) out.push_back(rs.coords(a));
  return out;
}

inline json simple_list(const SimpleSet& s) {
  json out = json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

/// pos / neg hold coordinates of positive roots α (neg means g_{-α}); cartan
/// rows are RREF coordinates over h_1..h_p as rational strings.
inline json to_json(const LieAlgebra& g, const HStableSubspace& s) {
  const RootSystem& rs = g.roots();
  json j;
  j["pos"] = root_list(rs, s.pos);
  j["neg"] = root_list(rs, s.neg);
  json rows = json::array();
  for (const auto& row : s.cartan.rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  j["cartan"] = rows;
  j["cartan_dim"] = s.cartan.dim();
  j["dim"] = s.dim();
  return j;
}

inline HStableSubspace subspace_from_json(const LieAlgebra& g, const json& j) {
  const RootSystem& rs = g.roots();
  HStableSubspace s = g.zero();
  try {
    for (const auto& c : j.at("pos").get<std::vector<Coords>>()) s.pos.insert(resolve_root(rs, c));
    for (const auto& c : j.at("neg").get<std::vector<Coords>>()) s.neg.insert(resolve_root(rs, c));
    for (const auto& row : j.at("cartan")) {
      Vector v;
      for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
      if (static_cast<int>(v.size()) != g.rank()) throw std::invalid_argument("cartan row has wrong length");
      s.cartan.add(v);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed subspace: ") + e.what());
  }
  for (RootId a : s.pos)
    if (!rs.is_positive(a)) throw std::invalid_argument("subspace lists a negative root");
  for (RootId a : s.neg)
    if (!rs.is_positive(a)) throw std::invalid_argument("subspace lists a negative root");
  return s;
}

inline json to_json(const LieAlgebra& g, const LoopSubspace& t) {
  json j;
  json layers = json::array();
  for (const auto& [deg, s] : t.layers) layers.push_back({{"degree", deg}, {"space", to_json(g, s)}});
  j["layers"] = layers;
  j["tail"] = t.tail;
  j["has_k"] = t.has_k;
  j["has_d"] = t.has_d;
  return j;
}

inline LoopSubspace loop_from_json(const LieAlgebra& g, const json& j) {
  LoopSubspace t;
  try {
    t.tail = j.at("tail").get<int>();
    t.has_k = j.at("has_k").get<bool>();
    t.has_d = j.at("has_d").get<bool>();
    for (const auto& l : j.at("layers")) t.layers.emplace(l.at("degree").get<int>(), subspace_from_json(g, l.at("space")));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graded subspace: ") + e.what());
  }
  return t;
}

inline json to_json(const StandardReport& r) {
  json j;
  j["is_subalgebra"] = r.is_subalgebra;
  j["has_normalizer"] = r.has_normalizer;
  j["ideal_of_normalizer"] = r.ideal_of_normalizer;
  j["maximal"] = r.maximal;
  j["matches_claim"] = r.matches_claim ? json(*r.matches_claim) : json(nullptr);
  j["cap"] = r.cap;
  j["passed"] = r.passed();
  j["normalizer_levi"] = r.normalizer ? simple_list(r.normalizer->levi) : json(nullptr);
  return j;
}

inline json to_json(const LieAlgebra& g, const GradedClassification& c) {
  json j;
  j["accepted"] = c.accepted();
  j["n"] = c.n;
  j["tau"] = to_json(g, c.tau);
  j["v"] = to_json(g, c.v);
  j["rho"] = c.rho ? to_json(g, *c.rho) : json(nullptr);
  j["relations"] = {c.relations[0], c.relations[1], c.relations[2], c.relations[3]};
  j["degree_zero"] = c.degree_zero;
  json issues = json::array();
  for (const auto& i : c.issues) {
    json e = {{"code", failure_name(i.code)}};
    if (i.code == GradedFailure::RelationFailed) e["relation"] = i.relation;
    issues.push_back(e);
  }
  j["issues"] = issues;
  return j;
}

}  // namespace appui::io
