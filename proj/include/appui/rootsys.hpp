#pragma once

// Finite root systems from Cartan data, with the root-poset combinatorics
// (order, supports, extremal sets, spans, diagram components, antichains).

#include "appui/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace appui {

using Coords = std::vector<int>;
/// Root identifier: positive roots are 0..P-1 in canonical order, and the
/// negative of positive root i is P + i.
using RootId = int;
using RootSet = std::set<RootId>;
/// Subset of the simple roots, as 0-based Bourbaki indices.
using SimpleSet = std::set<int>;

struct LieType {
  char series = 'A';
  int rank = 1;

  /// Parses "A2", "b4", "F4", ... Throws std::invalid_argument.
  static LieType parse(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("invalid Lie type '" + std::string(text) + "'");
    LieType t;
    t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int r = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || r > 1000)
        throw std::invalid_argument("invalid Lie type '" + std::string(text) + "'");
      r = r * 10 + (c - '0');
    }
    t.rank = r;
    t.validate();
    return t;
  }

  void validate() const {
    bool ok = false;
    switch (series) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 3; break;
      case 'D': ok = rank >= 4; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: break;
    }
    if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for series " + series);
  }

  std::string name() const { return std::string(1, series) + std::to_string(rank); }

  /// Known number of positive roots.
  int positive_root_count() const {
    const int n = rank;
    switch (series) {
      case 'A': return n * (n + 1) / 2;
      case 'B':
      case 'C': return n * n;
      case 'D': return n * (n - 1);
      case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
      case 'F': return 24;
      case 'G': return 6;
    }
    return 0;
  }

  bool operator==(const LieType&) const = default;
};

/// Immutable root system of a finite-dimensional simple Lie algebra, with
/// simple roots numbered as in Bourbaki and the inner product normalized so
/// that long roots have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(LieType type) : type_(type) {
    type_.validate();
    build_inner_products();
    generate_roots();
    build_sum_table();
  }

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }

  /// Cartan integer <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// Inner product of simple roots.
  Rational inner(int i, int j) const { return inner_[i][j]; }
  /// Symmetrizer d_i with d_i * a_ij symmetric: d_i = (alpha_i, alpha_i) / 2.
  Rational symmetrizer(int i) const { return inner_[i][i] / Rational(2); }

  const std::vector<Coords>& positive_roots() const { return positive_; }
  const Coords& coords(RootId id) const { return all_[id]; }
  bool is_positive(RootId id) const { return id < num_positive(); }
  RootId negate(RootId id) const { return is_positive(id) ? id + num_positive() : id - num_positive(); }
  /// Positive root underlying a root of either sign.
  RootId abs(RootId id) const { return is_positive(id) ? id : id - num_positive(); }
  RootId simple(int i) const { return i; }
  bool is_simple(RootId id) const { return id < rank(); }
  int height(RootId id) const {
    const auto& c = all_[id];
    return std::accumulate(c.begin(), c.end(), 0);
  }
  RootId highest_root() const { return num_positive() - 1; }

  std::optional<RootId> find(const Coords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const Coords& c) const { return index_.count(c) > 0; }

  /// Root id of a+b, if a+b is a root.
  std::optional<RootId> sum(RootId a, RootId b) const {
    const int s = sum_[static_cast<std::size_t>(a) * num_roots() + b];
    if (s < 0) return std::nullopt;
    return s;
  }
  std::optional<RootId> difference(RootId a, RootId b) const { return sum(a, negate(b)); }

  /// (alpha, beta) for arbitrary roots.
  Rational inner_roots(RootId a, RootId b) const {
    const Coords& ca = coords(a);
    const Coords& cb = coords(b);
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (ca[i] != 0 && cb[j] != 0) s += Rational(ca[i] * cb[j]) * inner_[i][j];
    return s;
  }
  Rational length2(RootId a) const { return length2_[a]; }

  /// <beta, alpha_i^vee>.
  int pairing(RootId beta, int i) const { return pairing_[static_cast<std::size_t>(beta) * rank() + i]; }

  /// a <= b in the root order: b - a is a non-negative combination of simple roots.
  static bool leq(const Coords& a, const Coords& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b[i] - a[i] < 0) return false;
    return true;
  }
  bool leq(RootId a, RootId b) const { return leq(coords(a), coords(b)); }

  /// C_alpha: simple roots with nonzero coefficient.
  SimpleSet support(RootId a) const {
    SimpleSet s;
    const Coords& c = coords(a);
    for (int i = 0; i < rank(); ++i)
      if (c[i] != 0) s.insert(i);
    return s;
  }

  /// S^beta: simple gamma with beta = gamma or beta - gamma a root.
  SimpleSet extremal_set(RootId b) const {
    SimpleSet s;
    for (int i = 0; i < rank(); ++i)
      if (b == simple(i) || difference(b, simple(i))) s.insert(i);
    return s;
  }

  struct RootSpan {
    RootSet all, pos, neg;
  };
  /// <B>: roots whose support lies in B, split by sign. neg holds negative ids.
  RootSpan root_span(const SimpleSet& b) const {
    RootSpan out;
    for (RootId id = 0; id < num_positive(); ++id) {
      const SimpleSet sup = support(id);
      if (std::includes(b.begin(), b.end(), sup.begin(), sup.end())) {
        out.pos.insert(id);
        out.neg.insert(negate(id));
        out.all.insert(id);
        out.all.insert(negate(id));
      }
    }
    return out;
  }
  /// Positive part of <B>.
  RootSet root_span_positive(const SimpleSet& b) const { return root_span(b).pos; }

  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  /// Partition of B into Dynkin-diagram components, each component ordered
  /// and the list ordered by smallest member.
  std::vector<SimpleSet> connected_components(const SimpleSet& b) const {
    std::vector<SimpleSet> comps;
    SimpleSet seen;
    for (int start : b) {
      if (seen.count(start)) continue;
      SimpleSet comp;
      std::vector<int> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.insert(v);
        for (int w : b)
          if (!seen.count(w) && adjacent(v, w)) {
            seen.insert(w);
            stack.push_back(w);
          }
      }
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  SimpleSet all_simple() const {
    SimpleSet s;
    for (int i = 0; i < rank(); ++i) s.insert(i);
    return s;
  }

  /// Visits every antichain of (Delta+, <=) as a sorted list of positive ids,
  /// in lexicographic order of those lists. The empty antichain is visited
  /// first when include_empty is set.
  void for_each_antichain(const std::function<void(const std::vector<RootId>&)>& visit,
                          bool include_empty = false) const {
    std::vector<RootId> current;
    if (include_empty) visit(current);
    extend_antichain(current, 0, visit);
  }

  std::vector<std::vector<RootId>> antichains(bool include_empty = false) const {
    std::vector<std::vector<RootId>> out;
    for_each_antichain([&](const std::vector<RootId>& a) { out.push_back(a); }, include_empty);
    return out;
  }

  bool is_antichain(const std::vector<RootId>& r) const {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!is_positive(r[i])) return false;
      for (std::size_t j = i + 1; j < r.size(); ++j)
        if (r[i] == r[j] || leq(r[i], r[j]) || leq(r[j], r[i])) return false;
    }
    return true;
  }

 private:
  void extend_antichain(std::vector<RootId>& current, RootId from,
                        const std::function<void(const std::vector<RootId>&)>& visit) const {
    for (RootId id = from; id < num_positive(); ++id) {
      bool ok = std::none_of(current.begin(), current.end(),
                             [&](RootId c) { return leq(c, id) || leq(id, c); });
      if (!ok) continue;
      current.push_back(id);
      visit(current);
      extend_antichain(current, id + 1, visit);
      current.pop_back();
    }
  }

  void build_inner_products() {
    const int n = rank();
    // Squared lengths (long roots = 2) and Dynkin edges, Bourbaki labels.
    std::vector<Rational> len(n, Rational(2));
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int upto) {
      for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    switch (type_.series) {
      case 'A': chain(n); break;
      case 'B':
        chain(n);
        len[n - 1] = 1;
        break;
      case 'C':
        chain(n);
        for (int i = 0; i + 1 < n; ++i) len[i] = 1;
        break;
      case 'D':
        chain(n - 1);
        edges.emplace_back(n - 3, n - 1);
        break;
      case 'E':
        edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
      case 'F':
        chain(4);
        len[2] = len[3] = 1;
        break;
      case 'G':
        edges = {{0, 1}};
        len[0] = Rational(2, 3);
        break;
    }
    inner_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inner_[i][i] = len[i];
    for (auto [i, j] : edges) {
      const Rational v = -std::max(len[i], len[j]) / Rational(2);
      inner_[i][j] = inner_[j][i] = v;
    }
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational a = Rational(2) * inner_[i][j] / inner_[i][i];
        if (a.denominator() != 1) throw std::logic_error("non-integral Cartan entry");
        cartan_[i][j] = static_cast<int>(a.numerator());
      }
  }

  void generate_roots() {
    const int n = rank();
    std::set<Coords> known;
    std::vector<Coords> level;
    for (int i = 0; i < n; ++i) {
      Coords c(n, 0);
      c[i] = 1;
      level.push_back(c);
      known.insert(c);
    }
    std::vector<Coords> all = level;
    while (!level.empty()) {
      std::set<Coords> next;
      for (const auto& beta : level) {
        for (int i = 0; i < n; ++i) {
          Coords unit(n, 0);
          unit[i] = 1;
          if (beta == unit) continue;
          // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
          int p = 0;
          Coords down = beta;
          for (;;) {
            down[i] -= 1;
            if (!known.count(down)) break;
            ++p;
          }
          int pair = 0;
          for (int j = 0; j < n; ++j) pair += beta[j] * cartan_[i][j];
          if (p - pair > 0) {
            Coords up = beta;
            up[i] += 1;
            next.insert(up);
          }
        }
      }
      level.assign(next.begin(), next.end());
      for (const auto& c : level) {
        known.insert(c);
        all.push_back(c);
      }
    }
    std::sort(all.begin(), all.end(), [](const Coords& a, const Coords& b) {
      const int ha = std::accumulate(a.begin(), a.end(), 0);
      const int hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    if (static_cast<int>(all.size()) != type_.positive_root_count())
      throw std::logic_error("root generation produced " + std::to_string(all.size()) +
                             " positive roots for " + type_.name());
    positive_ = std::move(all);
    all_ = positive_;
    for (const auto& c : positive_) {
      Coords neg = c;
      for (auto& x : neg) x = -x;
      all_.push_back(std::move(neg));
    }
    for (RootId id = 0; id < num_roots(); ++id) index_[all_[id]] = id;
    pairing_.assign(static_cast<std::size_t>(num_roots()) * n, 0);
    length2_.assign(num_roots(), Rational(0));
    for (RootId id = 0; id < num_roots(); ++id) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairing_[static_cast<std::size_t>(id) * n + i] += all_[id][j] * cartan_[i][j];
      length2_[id] = inner_roots(id, id);
    }
  }

  void build_sum_table() {
    const int total = num_roots();
    sum_.assign(static_cast<std::size_t>(total) * total, -1);
    for (RootId a = 0; a < total; ++a) {
      const Coords& ca = coords(a);
      for (RootId b = 0; b < total; ++b) {
        Coords s = coords(b);
        for (int i = 0; i < rank(); ++i) s[i] += ca[i];
        if (auto id = find(s)) sum_[static_cast<std::size_t>(a) * total + b] = *id;
      }
    }
  }

  LieType type_;
  std::vector<std::vector<Rational>> inner_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Coords> positive_;
  std::vector<Coords> all_;
  std::vector<int> pairing_;
  std::vector<Rational> length2_;
  std::map<Coords, RootId> index_;
  std::vector<int> sum_;
};

/// Human-readable root, e.g. "a1+2a2" or "-a1-a2".
inline std::string root_name(const RootSystem& rs, RootId id) {
  const Coords& c = rs.coords(id);
  std::string out;
  for (int i = 0; i < rs.rank(); ++i) {
    if (c[i] == 0) continue;
    int v = c[i];
    if (v < 0) {
      out += '-';
      v = -v;
    } else if (!out.empty()) {
      out += '+';
    }
    if (v != 1) out += std::to_string(v);
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

}  // namespace appui
