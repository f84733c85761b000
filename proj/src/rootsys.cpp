#include "arfold/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace arfold {

DynkinType parse_type(const std::string& s) {
  if (s == "A" || s == "a") return DynkinType::A;
  if (s == "D" || s == "d") return DynkinType::D;
  if (s == "E" || s == "e") return DynkinType::E;
  throw UnsupportedType("unknown Dynkin type '" + s + "'");
}

char type_letter(DynkinType t) {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
  }
  return '?';
}

namespace {

std::vector<std::pair<Node, Node>> diagram_edges(DynkinType t, int n) {
  std::vector<std::pair<Node, Node>> e;
  switch (t) {
    case DynkinType::A:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case DynkinType::D:
      // chain 1..n-1, n hangs off n-2
      for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      break;
    case DynkinType::E:
      // 1-2-3-4-5 with 6 on the middle node
      for (int i = 1; i < 5; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(3, 6);
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

RootSystem RootSystem::build(DynkinType type, int rank) {
  bool ok = (type == DynkinType::A && rank >= 1) || (type == DynkinType::D && rank >= 4) ||
            (type == DynkinType::E && rank == 6);
  if (!ok) {
    throw UnsupportedType(std::string("unsupported root system ") + type_letter(type) +
                          std::to_string(rank));
  }
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.edges_ = diagram_edges(type, rank);
  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  rs.nbrs_.assign(rank, {});
  for (int i = 0; i < rank; ++i) rs.cartan_[i][i] = 2;
  for (auto [i, j] : rs.edges_) {
    rs.cartan_[i - 1][j - 1] = rs.cartan_[j - 1][i - 1] = -1;
    rs.nbrs_[i - 1].push_back(j);
    rs.nbrs_[j - 1].push_back(i);
  }
  for (auto& v : rs.nbrs_) std::sort(v.begin(), v.end());

  // closure of the simple roots under simple reflections
  std::set<Coeffs> seen;
  std::vector<Coeffs> frontier;
  for (int i = 1; i <= rank; ++i) {
    Coeffs c(rank, 0);
    c[i - 1] = 1;
    seen.insert(c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const auto& c : frontier) {
      for (int i = 1; i <= rank; ++i) {
        Coeffs d = rs.reflect(i, c);
        if (std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; }) && seen.insert(d).second)
          next.push_back(d);
      }
    }
    frontier = std::move(next);
  }
  rs.roots_.assign(seen.begin(), seen.end());
  std::stable_sort(rs.roots_.begin(), rs.roots_.end(), [](const Coeffs& a, const Coeffs& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 before alpha_2 at equal height
  });

  rs.simple_.resize(rank);
  for (int i = 1; i <= rank; ++i) {
    Coeffs c(rank, 0);
    c[i - 1] = 1;
    rs.simple_[i - 1] = rs.id(c);
  }
  rs.reflect_table_.assign(rank, std::vector<int>(rs.roots_.size(), -1));
  for (int i = 1; i <= rank; ++i)
    for (RootId r = 0; r < rs.num_positive(); ++r)
      if (r != rs.simple_[i - 1]) rs.reflect_table_[i - 1][r] = rs.id(rs.reflect(i, rs.roots_[r]));

  // greedy reduced word of w0: extend while w(alpha_i) > 0
  std::vector<Node> w;
  for (;;) {
    bool extended = false;
    for (int i = 1; i <= rank && !extended; ++i) {
      Coeffs a(rank, 0);
      a[i - 1] = 1;
      Coeffs b = apply_word(rs, w, a);
      if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) {
        w.push_back(i);
        extended = true;
      }
    }
    if (!extended) break;
  }
  rs.w0_ = w;
  rs.star_.assign(rank + 1, 0);
  for (int i = 1; i <= rank; ++i) {
    Coeffs a(rank, 0);
    a[i - 1] = 1;
    Coeffs b = apply_word(rs, w, a);
    for (auto& x : b) x = -x;
    for (int j = 1; j <= rank; ++j)
      if (b[j - 1] == 1) rs.star_[i] = j;
  }
  return rs;
}

std::string RootSystem::name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

int RootSystem::height(RootId r) const {
  return std::accumulate(roots_[r].begin(), roots_[r].end(), 0);
}

std::optional<RootId> RootSystem::find(const Coeffs& c) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), c, [](const Coeffs& a, const Coeffs& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (it != roots_.end() && *it == c) return static_cast<RootId>(it - roots_.begin());
  return std::nullopt;
}

RootId RootSystem::id(const Coeffs& c) const {
  auto r = find(c);
  if (!r) throw Error("not a positive root: " + format_coeffs(c));
  return *r;
}

int RootSystem::pairing(const Coeffs& a, const Coeffs& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    if (a[i])
      for (int j = 0; j < rank_; ++j) s += a[i] * cartan_[i][j] * b[j];
  return s;
}

Coeffs RootSystem::reflect(Node i, const Coeffs& v) const {
  int c = 0;
  for (int j = 0; j < rank_; ++j) c += cartan_[i - 1][j] * v[j];
  Coeffs out = v;
  out[i - 1] -= c;
  return out;
}

std::optional<RootId> RootSystem::reflect_root(Node i, RootId r) const {
  int x = reflect_table_[i - 1][r];
  if (x < 0) return std::nullopt;
  return x;
}

std::string RootSystem::format_coeffs(const Coeffs& c) const {
  std::ostringstream os;
  if (type_ == DynkinType::A) {
    // [a,b] interval notation when possible
    int a = -1, b = -1;
    bool interval = true;
    for (int i = 0; i < rank_; ++i) {
      if (c[i] == 1) {
        if (a < 0) a = i;
        if (b >= 0 && b != i - 1) interval = false;
        b = i;
      } else if (c[i] != 0) {
        interval = false;
      }
    }
    if (interval && a >= 0) {
      if (a == b) os << "[" << a + 1 << "]";
      else os << "[" << a + 1 << "," << b + 1 << "]";
      return os.str();
    }
  }
  if (type_ == DynkinType::E && rank_ == 6) {
    os << "(" << c[0] << c[1] << c[2] << "," << c[3] << c[4] << c[5] << ")";
    return os.str();
  }
  os << "(";
  for (int i = 0; i < rank_; ++i) os << c[i];
  os << ")";
  return os.str();
}

std::string RootSystem::format_root(RootId r) const { return format_coeffs(roots_[r]); }

Coeffs apply_word(const RootSystem& rs, const std::vector<Node>& w, Coeffs v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = rs.reflect(*it, v);
  return v;
}

// ---------------------------------------------------------------------------

void DiagramAutomorphism::finish() {
  int n = rank();
  order_ = 1;
  for (;;) {
    bool id = true;
    for (int i = 1; i <= n && id; ++i) {
      Node x = i;
      for (int k = 0; k < order_; ++k) x = perm_[x];
      id = (x == i);
    }
    if (id) break;
    ++order_;
  }
  num_orbits_ = 0;
  for (int i = 1; i <= n; ++i) num_orbits_ = std::max(num_orbits_, label_[i]);
}

DiagramAutomorphism DiagramAutomorphism::identity(const RootSystem& rs) {
  DiagramAutomorphism a;
  int n = rs.rank();
  a.perm_.resize(n + 1);
  a.label_.resize(n + 1);
  for (int i = 0; i <= n; ++i) a.perm_[i] = a.label_[i] = i;
  a.finish();
  return a;
}

DiagramAutomorphism DiagramAutomorphism::folding(const RootSystem& rs) {
  int r = rs.rank();
  DiagramAutomorphism a;
  a.perm_.resize(r + 1);
  a.label_.resize(r + 1);
  switch (rs.type()) {
    case DynkinType::A: {
      if (r % 2 == 0) throw UnsupportedType("no folding automorphism on " + rs.name());
      int n = (r + 1) / 2;
      for (int i = 1; i <= r; ++i) {
        a.perm_[i] = 2 * n - i;
        a.label_[i] = std::min(i, 2 * n - i);
      }
      break;
    }
    case DynkinType::D: {
      int n = r - 1;  // D_{n+1} -> C_n
      for (int i = 1; i <= r; ++i) {
        a.perm_[i] = i;
        a.label_[i] = std::min(i, n);
      }
      a.perm_[n] = n + 1;
      a.perm_[n + 1] = n;
      break;
    }
    case DynkinType::E: {
      const int p[7] = {0, 5, 4, 3, 2, 1, 6};
      const int l[7] = {0, 1, 2, 3, 2, 1, 4};
      for (int i = 1; i <= 6; ++i) {
        a.perm_[i] = p[i];
        a.label_[i] = l[i];
      }
      break;
    }
  }
  a.perm_[0] = a.label_[0] = 0;
  a.finish();
  return a;
}

DiagramAutomorphism DiagramAutomorphism::triality(const RootSystem& rs) {
  if (rs.type() != DynkinType::D || rs.rank() != 4)
    throw UnsupportedType("triality exists only on D4");
  DiagramAutomorphism a;
  a.perm_ = {0, 3, 2, 4, 1};
  a.label_ = {0, 1, 2, 1, 1};
  a.finish();
  return a;
}

int DiagramAutomorphism::orbit_size(Node k) const {
  int c = 0;
  for (int i = 1; i <= rank(); ++i) c += (label_[i] == k);
  return c;
}

std::vector<Node> DiagramAutomorphism::orbit_members(Node k) const {
  std::vector<Node> v;
  for (int i = 1; i <= rank(); ++i)
    if (label_[i] == k) v.push_back(i);
  return v;
}

bool DiagramAutomorphism::preserves(const RootSystem& rs) const {
  if (rank() != rs.rank()) return false;
  for (int i = 1; i <= rank(); ++i)
    for (int j = 1; j <= rank(); ++j)
      if (rs.cartan(i, j) != rs.cartan(perm_[i], perm_[j])) return false;
  return true;
}

}  // namespace arfold
