// Shared helpers for the test executables.
#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "arfold/twistfold.hpp"

namespace arfold::test {

inline std::string data_file(const std::string& name) {
  std::ifstream f(std::string(ARFOLD_DATA_DIR) + "/" + name);
  if (!f) throw Error("missing data file " + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// Coordinates and arrows of q against an unlabeled fixture, up to one global
// shift of positions. Returns the shift on success.
inline std::optional<int> match_unlabeled(const ARQuiver& q, const Fixture& f) {
  if (q.denominator != f.denominator || q.vertices.size() != f.vertices.size()) return std::nullopt;
  std::set<std::pair<int, int>> mine, theirs;
  std::set<std::tuple<int, int, int, int>> ma, ta;
  int lo_q = 1 << 30, lo_f = 1 << 30;
  for (const auto& v : q.vertices) lo_q = std::min(lo_q, v.position);
  for (const auto& v : f.vertices) lo_f = std::min(lo_f, v.position);
  int sh = lo_f - lo_q;
  for (const auto& v : q.vertices) mine.insert({v.residue, v.position + sh});
  for (const auto& v : f.vertices) theirs.insert({v.residue, v.position});
  for (auto [a, b] : q.arrows) {
    const auto &x = q.vertices[a], &y = q.vertices[b];
    ma.insert({x.residue, x.position + sh, y.residue, y.position + sh});
  }
  for (const auto& a : f.arrows) ta.insert({a.r1, a.p1, a.r2, a.p2});
  if (mine != theirs || ma != ta) return std::nullopt;
  return sh;
}

}  // namespace arfold::test
