#include "arfold/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace arfold {

DynkinQuiver::DynkinQuiver(const RootSystem& rs, std::vector<bool> toward_larger)
    : rs_(&rs), dir_(std::move(toward_larger)) {
  if (dir_.size() != rs.edges().size()) throw Error("orientation size mismatch");
}

std::vector<DynkinQuiver> DynkinQuiver::all(const RootSystem& rs) {
  std::size_t e = rs.edges().size();
  std::vector<DynkinQuiver> out;
  for (std::size_t m = 0; m < (std::size_t{1} << e); ++m) {
    std::vector<bool> d(e);
    for (std::size_t k = 0; k < e; ++k) d[k] = (m >> k) & 1u;
    out.emplace_back(rs, d);
  }
  return out;
}

DynkinQuiver DynkinQuiver::parse(const RootSystem& rs, const std::string& s) {
  // tokens: numbers separated by "->" / "<-" (chains) or commas between chains
  std::vector<int> d(rs.edges().size(), -1);
  std::size_t k = 0;
  auto read_num = [&](std::size_t& p) {
    int v = 0;
    bool any = false;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      v = v * 10 + (s[p++] - '0');
      any = true;
    }
    if (!any) throw Error("bad quiver description '" + s + "'");
    return v;
  };
  DynkinQuiver tmp(rs, std::vector<bool>(rs.edges().size(), false));
  while (k < s.size()) {
    int a = read_num(k);
    while (k < s.size() && s[k] != ',') {
      bool right;
      if (s.compare(k, 2, "->") == 0) right = true;
      else if (s.compare(k, 2, "<-") == 0) right = false;
      else throw Error("bad quiver description '" + s + "'");
      k += 2;
      int b = read_num(k);
      int e = tmp.edge_index(a, b);
      if (e < 0) throw Error("no edge between " + std::to_string(a) + " and " + std::to_string(b));
      int from = right ? a : b, to = right ? b : a;
      d[e] = from < to ? 1 : 0;
      a = b;
    }
    if (k < s.size()) ++k;
  }
  std::vector<bool> dir;
  for (int x : d) {
    if (x < 0) throw Error("quiver description leaves an edge unoriented: '" + s + "'");
    dir.push_back(x == 1);
  }
  return DynkinQuiver(rs, dir);
}

int DynkinQuiver::edge_index(Node i, Node j) const {
  auto key = std::minmax(i, j);
  const auto& e = rs_->edges();
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k].first == key.first && e[k].second == key.second) return static_cast<int>(k);
  return -1;
}

bool DynkinQuiver::arrow(Node from, Node to) const {
  int e = edge_index(from, to);
  if (e < 0) return false;
  return dir_[e] == (from < to);
}

bool DynkinQuiver::is_sink(Node i) const {
  for (Node j : rs_->neighbors(i))
    if (!arrow(j, i)) return false;
  return true;
}

DynkinQuiver DynkinQuiver::reflected(Node i) const {
  auto d = dir_;
  for (Node j : rs_->neighbors(i)) d[edge_index(i, j)] = !d[edge_index(i, j)];
  return DynkinQuiver(*rs_, d);
}

std::vector<int> DynkinQuiver::height_function() const {
  int n = rs_->rank();
  std::vector<int> xi(n + 1, 0);
  std::vector<bool> done(n + 1, false);
  std::deque<Node> q{1};
  done[1] = true;
  while (!q.empty()) {
    Node i = q.front();
    q.pop_front();
    for (Node j : rs_->neighbors(i)) {
      if (done[j]) continue;
      xi[j] = arrow(i, j) ? xi[i] + 1 : xi[i] - 1;
      done[j] = true;
      q.push_back(j);
    }
  }
  return xi;
}

std::string DynkinQuiver::describe() const {
  std::ostringstream os;
  const auto& e = rs_->edges();
  if (rs_->type() == DynkinType::A) {
    os << 1;
    for (std::size_t k = 0; k < e.size(); ++k) os << (dir_[k] ? "->" : "<-") << e[k].second;
    return os.str();
  }
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) os << ",";
    if (dir_[k]) os << e[k].first << "->" << e[k].second;
    else os << e[k].second << "->" << e[k].first;
  }
  return os.str();
}

Word coxeter_element_of(const DynkinQuiver& q) {
  const RootSystem& rs = q.system();
  DynkinQuiver cur = q;
  std::vector<bool> used(rs.rank() + 1, false);
  Word w;
  for (int step = 0; step < rs.rank(); ++step) {
    Node pick = 0;
    for (Node i = 1; i <= rs.rank() && !pick; ++i)
      if (!used[i] && cur.is_sink(i)) pick = i;
    if (!pick) throw Error("no sink found while peeling " + q.describe());
    used[pick] = true;
    w.push_back(pick);
    cur = cur.reflected(pick);
  }
  return w;
}

std::vector<RootId> coxeter_roots(const DynkinQuiver& q) {
  return root_sequence(q.system(), coxeter_element_of(q));
}

bool is_adapted(const Word& w, const DynkinQuiver& q) {
  DynkinQuiver cur = q;
  for (Node i : w) {
    if (!cur.is_sink(i)) return false;
    cur = cur.reflected(i);
  }
  return true;
}

std::optional<DynkinQuiver> adapted_quiver_of(const RootSystem& rs, const Word& w) {
  // the head of each edge must be whichever endpoint is reflected first
  std::vector<int> first(rs.rank() + 1, -1);
  for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) first[w[k]] = k;
  std::vector<bool> dir;
  for (auto [i, j] : rs.edges()) {
    if (first[i] < 0 || first[j] < 0) return std::nullopt;
    dir.push_back(first[j] < first[i]);  // i -> j when j comes first
  }
  DynkinQuiver q(rs, dir);
  if (!is_adapted(w, q)) return std::nullopt;
  return q;
}

std::vector<RootId> ARQuiver::display_order() const {
  std::vector<RootId> ids;
  for (const auto& v : vertices) ids.push_back(v.root);
  std::sort(ids.begin(), ids.end(), [&](RootId a, RootId b) {
    const auto &x = vertices[a], &y = vertices[b];
    if (x.position != y.position) return x.position < y.position;
    if (x.residue != y.residue) return x.residue < y.residue;
    return a < b;
  });
  return ids;
}

ARQuiver gamma_Q(const DynkinQuiver& q) {
  const RootSystem& rs = q.system();
  int N = rs.num_positive();
  ARQuiver g;
  g.rs = &rs;
  g.denominator = 1;
  g.has_coordinates = true;
  g.vertices.resize(N);
  std::vector<bool> placed(N, false);
  auto xi = q.height_function();
  Word phi = coxeter_element_of(q);
  auto base = root_sequence(rs, phi);
  std::deque<RootId> queue;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    RootId b = base[k];
    g.vertices[b] = {b, phi[k], xi[phi[k]]};
    placed[b] = true;
    queue.push_back(b);
  }
  while (!queue.empty()) {
    RootId b = queue.front();
    queue.pop_front();
    Coeffs v = apply_word(rs, phi, rs.root(b));
    auto r = rs.find(v);
    if (!r) continue;
    if (placed[*r]) throw Error("Gamma_Q construction revisits a root");
    g.vertices[*r] = {*r, g.vertices[b].residue, g.vertices[b].position - 2};
    placed[*r] = true;
    queue.push_back(*r);
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end())
    throw Error("Gamma_Q construction left roots unplaced");
  std::map<std::pair<Node, int>, RootId> at;
  for (const auto& v : g.vertices) at[{v.residue, v.position}] = v.root;
  for (const auto& v : g.vertices)
    for (Node j : rs.neighbors(v.residue)) {
      auto it = at.find({j, v.position + 1});
      if (it != at.end()) g.arrows.emplace_back(v.root, it->second);
    }
  std::sort(g.arrows.begin(), g.arrows.end());
  return g;
}

Word adapted_word(const DynkinQuiver& q) {
  ARQuiver g = gamma_Q(q);
  auto ids = g.display_order();
  Word w;
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) w.push_back(g.vertices[*it].residue);
  return w;
}

std::vector<std::vector<bool>> convex_order(const CommutationClass& c) {
  int N = c.size();
  std::vector<std::vector<bool>> m(N, std::vector<bool>(N, false));
  for (RootId a = 0; a < N; ++a)
    for (RootId b = 0; b < N; ++b) m[a][b] = c.precedes(a, b);
  return m;
}

std::vector<std::vector<bool>> convex_order_bruteforce(const CommutationClass& c, std::size_t cap) {
  int N = c.size();
  std::vector<std::vector<bool>> m(N, std::vector<bool>(N, true));
  for (int a = 0; a < N; ++a) m[a][a] = false;
  for (const Word& w : commutation_closure(c.system(), c.word(), cap)) {
    auto seq = root_sequence(c.system(), w);
    std::vector<int> pos(N);
    for (int k = 0; k < N; ++k) pos[seq[k]] = k;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (pos[a] >= pos[b]) m[a][b] = false;
  }
  return m;
}

std::vector<Word> read_reduced_words(const ARQuiver& q, std::size_t cap) {
  if (!cap) cap = default_cap();
  int n = q.size();
  // a vertex may be read once every arrow target out of it has been read
  std::vector<std::vector<RootId>> succ(n);
  std::vector<int> pending(n, 0);
  for (auto [x, y] : q.arrows) {
    succ[y].push_back(x);
    ++pending[x];
  }
  // acyclicity
  {
    auto p = pending;
    std::vector<RootId> st;
    for (int v = 0; v < n; ++v)
      if (!p[v]) st.push_back(v);
    int seen = 0;
    while (!st.empty()) {
      RootId v = st.back();
      st.pop_back();
      ++seen;
      for (RootId x : succ[v])
        if (--p[x] == 0) st.push_back(x);
    }
    if (seen != n) throw Error("quiver is not acyclic");
  }
  std::set<Word> out;
  Word cur;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.insert(cur);
      if (out.size() > cap) throw CapExceeded("linear extensions exceed cap");
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || pending[v]) continue;
      used[v] = true;
      cur.push_back(q.vertices[v].residue);
      for (RootId x : succ[v]) --pending[x];
      rec();
      for (RootId x : succ[v]) ++pending[x];
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
  return {out.begin(), out.end()};
}

ARQuiver hasse_quiver(const CommutationClass& c) {
  ARQuiver h;
  h.rs = &c.system();
  int N = c.size();
  h.vertices.resize(N);
  for (int k = 0; k < N; ++k) h.vertices[c.root_at(k)] = {c.root_at(k), c.word()[k], 0};
  for (int y = 0; y < N; ++y) {
    Mask below = c.below(y);
    Mask covered = below;
    for (int z = 0; z < N; ++z)
      if ((below >> z) & 1u) covered &= ~c.below(z);
    for (int x = 0; x < N; ++x)
      if ((covered >> x) & 1u) h.arrows.emplace_back(c.root_at(y), c.root_at(x));
  }
  std::sort(h.arrows.begin(), h.arrows.end());
  return h;
}

std::optional<std::vector<int>> potential_positions(const CommutationClass& c,
                                                    const std::function<int(Node, Node)>& weight,
                                                    RootId anchor, int anchor_pos) {
  ARQuiver h = hasse_quiver(c);
  int N = c.size();
  std::vector<std::vector<std::pair<RootId, int>>> adj(N);
  for (auto [x, y] : h.arrows) {
    int w = weight(h.vertices[x].residue, h.vertices[y].residue);
    adj[x].emplace_back(y, w);
    adj[y].emplace_back(x, -w);
  }
  std::vector<int> pos(N, 0);
  std::vector<bool> set(N, false);
  std::deque<RootId> q{anchor};
  pos[anchor] = anchor_pos;
  set[anchor] = true;
  while (!q.empty()) {
    RootId v = q.front();
    q.pop_front();
    for (auto [u, w] : adj[v]) {
      if (!set[u]) {
        pos[u] = pos[v] + w;
        set[u] = true;
        q.push_back(u);
      } else if (pos[u] != pos[v] + w) {
        return std::nullopt;
      }
    }
  }
  if (std::find(set.begin(), set.end(), false) != set.end()) return std::nullopt;
  return pos;
}

}  // namespace arfold
