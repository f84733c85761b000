#include "arfold/twistfold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arfold {

FoldedDatum folded_datum(const RootSystem& rs, const DiagramAutomorphism& v) {
  FoldedDatum fd;
  fd.rank = v.num_orbits();
  fd.d.assign(fd.rank + 1, 0);
  for (Node k = 1; k <= fd.rank; ++k) fd.d[k] = v.orbit_size(k);
  fd.adjacent.assign(fd.rank + 1, std::vector<bool>(fd.rank + 1, false));
  for (auto [i, j] : rs.edges()) {
    Node a = v.orbit(i), b = v.orbit(j);
    if (a != b) fd.adjacent[a][b] = fd.adjacent[b][a] = true;
  }
  switch (rs.type()) {
    case DynkinType::A:
      fd.type = 'B';
      fd.dual_coxeter = 2 * fd.rank - 1;
      break;
    case DynkinType::D:
      fd.type = 'C';
      fd.dual_coxeter = fd.rank + 1;
      break;
    case DynkinType::E:
      fd.type = 'F';
      fd.dual_coxeter = 9;
      break;
  }
  return fd;
}

std::optional<ARQuiver> twisted_quiver(const CommutationClass& c, const DiagramAutomorphism& v, int min_pos) {
  auto weight = [&](Node i, Node j) { return std::min(v.orbit_size(v.orbit(i)), v.orbit_size(v.orbit(j))); };
  auto pos = potential_positions(c, weight, c.root_at(0), 0);
  if (!pos) return std::nullopt;
  int lo = *std::min_element(pos->begin(), pos->end());
  ARQuiver q = hasse_quiver(c);
  q.has_coordinates = true;
  q.denominator = c.system().type() == DynkinType::A ? 2 : 1;
  for (auto& x : q.vertices) x.position = (*pos)[x.root] - lo + min_pos;
  return q;
}

namespace {

// Insertion rules; origin[m] is the source index of letter m, or -1 if inserted.
Word insert_letters(const Word& w, int n, InsertSide side, std::vector<int>* origin) {
  auto plus = [n](Node i) { return i > n - 1 ? i + 1 : i; };
  std::vector<int> s;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] == n - 1 || w[k] == n) s.push_back(static_cast<int>(k));
  if (s.empty()) throw Error("word has no letters n-1, n");
  std::set<int> insert_after;
  for (std::size_t a = 0; a + 1 < s.size(); ++a)
    if (w[s[a]] != w[s[a + 1]]) insert_after.insert(s[a]);
  Word out;
  auto put = [&](Node x, int from) {
    out.push_back(x);
    if (origin) origin->push_back(from);
  };
  for (int k = 0; k < static_cast<int>(w.size()); ++k) {
    if (side == InsertSide::Greater && k == s.front()) put(n, -1);
    put(plus(w[k]), k);
    if (side == InsertSide::Less && k == s.back()) put(n, -1);
    if (insert_after.count(k)) put(n, -1);
  }
  return out;
}

}  // namespace

Word twist_word_A(const Word& w, int n, InsertSide side) { return insert_letters(w, n, side, nullptr); }

TwistResult twist_from_A(const RootSystem& target, const RootSystem& source, const Word& adapted,
                         InsertSide side) {
  if (target.type() != DynkinType::A || source.type() != DynkinType::A ||
      target.rank() != source.rank() + 1 || target.rank() % 2 == 0)
    throw UnsupportedType("twist_from_A needs A_{2n-2} -> A_{2n-1}");
  auto q = adapted_quiver_of(source, adapted);
  if (!q || !is_longest_word(source, adapted)) throw Error("input word is not adapted");
  int n = (target.rank() + 1) / 2;
  std::vector<int> origin;
  Word nw = insert_letters(adapted, n, side, &origin);
  if (!is_longest_word(target, nw)) throw Error("insertion produced a non-reduced word");
  CommutationClass cls(target, nw);
  auto v = DiagramAutomorphism::folding(target);
  auto ups = twisted_quiver(cls, v);
  if (!ups) throw Error("no consistent coordinates for the twisted class");

  // shift so the surviving letters keep their Gamma_Q positions
  ARQuiver g = gamma_Q(*q);
  auto old_roots = root_sequence(source, adapted);
  auto new_roots = root_sequence(target, nw);
  int shift = 0;
  bool have = false;
  for (std::size_t m = 0; m < nw.size(); ++m) {
    if (origin[m] < 0) continue;
    int want = 2 * g.vertices[old_roots[origin[m]]].position;
    int have_pos = ups->vertices[new_roots[m]].position;
    if (!have) {
      shift = want - have_pos;
      have = true;
    } else if (have_pos + shift != want) {
      throw Error("twisted coordinates disagree with Gamma_Q on an old vertex");
    }
  }
  for (auto& x : ups->vertices) x.position += shift;
  return {cls, *ups};
}

TwistResult twist_from_D(const RootSystem& target, const DynkinQuiver& q, Node first_label) {
  const RootSystem& src = q.system();
  int n = src.rank();
  if (src.type() != DynkinType::A || target.type() != DynkinType::D || target.rank() != n + 1)
    throw UnsupportedType("twist_from_D needs A_n -> D_{n+1}");
  if (first_label != n && first_label != n + 1) throw Error("first label must be n or n+1");
  ARQuiver g = gamma_Q(q);
  struct P {
    Node res;
    int pos;
  };
  std::vector<P> pts;
  for (const auto& x : g.vertices) pts.push_back({x.residue, x.position});
  for (const auto& x : g.vertices) pts.push_back({n + 1 - x.residue, x.position - (n + 1)});
  {
    std::set<std::pair<int, int>> seen;
    for (auto& p : pts)
      if (!seen.insert({p.res, p.pos}).second) throw Error("doubled quiver overlaps itself");
  }
  // relabel residue-n vertices alternately from the right
  std::vector<int> nidx;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (pts[k].res == n) nidx.push_back(static_cast<int>(k));
  std::sort(nidx.begin(), nidx.end(), [&](int a, int b) { return pts[a].pos > pts[b].pos; });
  for (std::size_t t = 0; t < nidx.size(); ++t) {
    bool first = t % 2 == 0;
    pts[nidx[t]].res = first ? first_label : (first_label == n ? n + 1 : n);
  }
  // read right to left
  std::vector<int> order(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].pos != pts[b].pos) return pts[a].pos > pts[b].pos;
    return pts[a].res < pts[b].res;
  });
  Word w;
  for (int k : order) w.push_back(pts[k].res);
  if (!is_longest_word(target, w)) throw Error("doubled quiver does not read to a reduced word of w0");
  auto roots = root_sequence(target, w);
  CommutationClass cls(target, w);
  ARQuiver u;
  u.rs = &target;
  u.denominator = 1;
  u.has_coordinates = true;
  u.vertices.resize(target.num_positive());
  std::map<std::pair<int, int>, RootId> at;
  for (std::size_t m = 0; m < order.size(); ++m) {
    const P& p = pts[order[m]];
    u.vertices[roots[m]] = {roots[m], p.res, p.pos};
    at[{p.res, p.pos}] = roots[m];
  }
  for (const auto& x : u.vertices)
    for (Node j : target.neighbors(x.residue)) {
      auto it = at.find({j, x.position + 1});
      if (it != at.end()) u.arrows.emplace_back(x.root, it->second);
    }
  std::sort(u.arrows.begin(), u.arrows.end());
  return {cls, u};
}

ARQuiver fold(const ARQuiver& ups, const DiagramAutomorphism& v) {
  ARQuiver f = ups;
  f.denominator = 1;
  std::set<std::pair<int, int>> seen;
  for (auto& x : f.vertices) {
    x.residue = v.orbit(x.residue);
    if (!seen.insert({x.residue, x.position}).second)
      throw Error("folding is not injective: two vertices at (" + std::to_string(x.residue) + "," +
                  std::to_string(x.position) + ")");
  }
  return f;
}

FoldedQuiver folded_quiver(const CommutationClass& c, const DiagramAutomorphism& v, int min_pos) {
  auto u = twisted_quiver(c, v, min_pos);
  if (!u) throw Error("class has no consistent twisted coordinates: " + format_word(c.word()));
  return {fold(*u, v), c.word()};
}

bool is_folded_sink(const FoldedQuiver& f, Node i) {
  const RootSystem& rs = *f.quiver.rs;
  RootId a = rs.simple(i);
  for (auto [x, y] : f.quiver.arrows)
    if (x == a) return false;
  return true;
}

FoldedQuiver folded_reflection(const FoldedQuiver& f, const RootSystem& rs, const DiagramAutomorphism& v,
                               Node i) {
  if (!is_folded_sink(f, i)) throw Error("alpha_" + std::to_string(i) + " is not a sink");
  FoldedDatum fd = folded_datum(rs, v);
  RootId ai = rs.simple(i);
  Node ib = v.orbit(i);
  int p_new = f.quiver.vertices[ai].position - fd.dbar * fd.dual_coxeter;

  auto relabel = [&](RootId b) { return *rs.reflect_root(i, b); };
  ARQuiver q;
  q.rs = &rs;
  q.denominator = 1;
  q.has_coordinates = true;
  q.vertices.resize(rs.num_positive());
  std::map<std::pair<int, int>, RootId> at;
  for (const auto& x : f.quiver.vertices) {
    if (x.root == ai) continue;
    RootId b = relabel(x.root);
    q.vertices[b] = {b, x.residue, x.position};
    at[{x.residue, x.position}] = b;
  }
  q.vertices[ai] = {ai, ib, p_new};
  for (auto [x, y] : f.quiver.arrows) {
    if (x == ai || y == ai) continue;  // only entering arrows exist at a sink
    q.arrows.emplace_back(relabel(x), relabel(y));
  }
  for (Node jb = 1; jb <= fd.rank; ++jb) {
    if (!fd.adjacent[ib][jb]) continue;
    auto it = at.find({jb, p_new + std::min(fd.d[ib], fd.d[jb])});
    if (it != at.end()) q.arrows.emplace_back(ai, it->second);
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  CommutationClass src(rs, f.source);
  return {q, reflect(src, i, Side::Right).word()};
}

Fixture parse_fixture(const std::string& text) {
  Fixture f;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "denominator") {
      if (!(ls >> f.denominator) || f.denominator < 1) throw Error("bad fixture line: " + line);
    } else if (kw == "vertex") {
      Fixture::V v{};
      if (!(ls >> v.residue >> v.position)) throw Error("bad fixture line: " + line);
      ls >> v.root;
      f.vertices.push_back(v);
    } else if (kw == "arrow") {
      Fixture::A a{};
      if (!(ls >> a.r1 >> a.p1 >> a.r2 >> a.p2)) throw Error("bad fixture line: " + line);
      f.arrows.push_back(a);
    } else {
      throw Error("bad fixture line: " + line);
    }
  }
  return f;
}

ARQuiver quiver_from_fixture(const Fixture& f, const RootSystem& rs) {
  ARQuiver q;
  q.rs = &rs;
  q.denominator = f.denominator;
  q.has_coordinates = true;
  q.vertices.assign(rs.num_positive(), {});
  std::map<std::pair<int, int>, RootId> at;
  for (const auto& v : f.vertices) {
    if (static_cast<int>(v.root.size()) != rs.rank()) throw Error("fixture vertex without root label");
    Coeffs c;
    for (char ch : v.root) c.push_back(ch - '0');
    RootId r = rs.id(c);
    if (q.vertices[r].root >= 0) throw Error("fixture repeats root " + v.root);
    q.vertices[r] = {r, v.residue, v.position};
    at[{v.residue, v.position}] = r;
  }
  for (const auto& v : q.vertices)
    if (v.root < 0) throw Error("fixture misses a positive root");
  for (const auto& a : f.arrows) {
    auto x = at.find({a.r1, a.p1}), y = at.find({a.r2, a.p2});
    if (x == at.end() || y == at.end()) throw Error("fixture arrow between missing vertices");
    q.arrows.emplace_back(x->second, y->second);
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

Word reading_word(const ARQuiver& q) {
  auto ids = q.display_order();
  Word w;
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) w.push_back(q.vertices[*it].residue);
  return w;
}

FoldedQuiver e6_folded_quiver(const RootSystem& e6) {
  if (e6.type() != DynkinType::E || e6.rank() != 6) throw UnsupportedType("E6 expected");
  ARQuiver unfolded = quiver_from_fixture(parse_fixture(e6_unfolded_text()), e6);
  ARQuiver folded = quiver_from_fixture(parse_fixture(e6_folded_text()), e6);
  Word w = reading_word(unfolded);
  return {folded, canonical_word(e6, w)};
}

bool same_up_to_shift(const ARQuiver& a, const ARQuiver& b) {
  if (a.size() != b.size() || a.denominator != b.denominator) return false;
  if (a.arrows != b.arrows) return false;
  int shift = 0;
  for (int r = 0; r < a.size(); ++r) {
    const auto &x = a.vertices[r], &y = b.vertices[r];
    if (x.residue != y.residue) return false;
    if (r == 0) shift = y.position - x.position;
    else if (y.position - x.position != shift) return false;
  }
  return true;
}

}  // namespace arfold
