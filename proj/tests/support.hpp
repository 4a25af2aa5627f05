#pragma once

#include "appui/io.hpp"
#include "appui/rootsys.hpp"

#include <string>
#include <vector>

namespace appui::test {

/// Root id from "a1+2a2" or "0,1,2,2".
inline RootId root(const RootSystem& rs, const std::string& text) {
  return io::resolve_root(rs, io::parse_coords(rs.rank(), text));
}

inline RootSet roots(const RootSystem& rs, const std::vector<std::string>& texts) {
  RootSet out;
  for (const auto& t : texts) out.insert(root(rs, t));
  return out;
}

inline std::vector<RootId> antichain(const RootSystem& rs, const std::vector<std::string>& texts) {
  std::vector<RootId> out;
  for (const auto& t : texts) out.push_back(root(rs, t));
  return out;
}

/// 1-based simple indices to a SimpleSet.
inline SimpleSet simples(std::initializer_list<int> idx) {
  SimpleSet s;
  for (int i : idx) s.insert(i - 1);
  return s;
}

inline const std::vector<std::string>& small_types() {
  static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};
  return t;
}

}  // namespace appui::test
