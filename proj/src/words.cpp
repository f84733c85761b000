#include "arfold/words.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace arfold {

static std::atomic<std::size_t> cap_override{0};

void set_default_cap(std::size_t cap) { cap_override = cap; }

std::size_t default_cap() {
  if (std::size_t c = cap_override.load()) return c;
  if (const char* env = std::getenv("ARFOLD_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

static std::size_t resolve_cap(std::size_t cap) { return cap ? cap : default_cap(); }

std::string format_word(const Word& w) {
  std::ostringstream os;
  for (Node i : w) os << 's' << i;
  return os.str();
}

std::string join_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  return os.str();
}

Word parse_word(const std::string& s) {
  // "s4s1s3", "4,1,3", "4 1 3" or bare digits "413"
  bool separated = s.find_first_of("s, _") != std::string::npos;
  Word w;
  std::size_t k = 0;
  while (k < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      int v = 0;
      if (separated) {
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) v = v * 10 + (s[k++] - '0');
      } else {
        v = s[k++] - '0';
      }
      w.push_back(v);
    } else if (s[k] == 's' || s[k] == ',' || s[k] == ' ' || s[k] == '_') {
      ++k;
    } else {
      throw Error("cannot parse word '" + s + "'");
    }
  }
  return w;
}

std::vector<RootId> root_sequence(const RootSystem& rs, const Word& w) {
  std::vector<RootId> out;
  out.reserve(w.size());
  std::vector<char> seen(rs.num_positive(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 1 || w[k] > rs.rank()) throw Error("letter out of range in " + format_word(w));
    Coeffs a(rs.rank(), 0);
    a[w[k] - 1] = 1;
    for (std::size_t j = k; j-- > 0;) a = rs.reflect(w[j], a);
    auto r = rs.find(a);
    if (!r || seen[*r]) throw NonReducedWord("not reduced: " + format_word(w));
    seen[*r] = 1;
    out.push_back(*r);
  }
  return out;
}

bool is_longest_word(const RootSystem& rs, const Word& w) {
  if (static_cast<int>(w.size()) != rs.num_positive()) return false;
  try {
    root_sequence(rs, w);
  } catch (const Error&) {
    return false;
  }
  return true;
}

namespace {

// below[l] = positions k < l forced before l by non-commuting letters
std::vector<Mask> heap_below(const RootSystem& rs, const Word& w) {
  std::vector<Mask> below(w.size(), 0);
  for (std::size_t l = 0; l < w.size(); ++l)
    for (std::size_t k = 0; k < l; ++k)
      if (w[k] == w[l] || rs.adjacent(w[k], w[l])) below[l] |= below[k] | (Mask{1} << k);
  return below;
}

// Lex-least linear extension; returns the order in which positions are taken.
std::vector<int> greedy_order(const Word& w, const std::vector<Mask>& below) {
  std::vector<int> order;
  Mask taken = 0;
  for (std::size_t step = 0; step < w.size(); ++step) {
    int best = -1;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if ((taken >> k) & 1u) continue;
      if ((below[k] & ~taken) != 0) continue;
      if (best < 0 || w[k] < w[best]) best = static_cast<int>(k);
    }
    order.push_back(best);
    taken |= Mask{1} << best;
  }
  return order;
}

}  // namespace

Word canonical_word(const RootSystem& rs, const Word& w) {
  if (w.size() > 64) throw Error("words longer than 64 letters are not supported");
  auto below = heap_below(rs, w);
  Word out;
  for (int k : greedy_order(w, below)) out.push_back(w[k]);
  return out;
}

CommutationClass::CommutationClass(const RootSystem& rs, const Word& any_member) : rs_(&rs) {
  if (static_cast<int>(any_member.size()) != rs.num_positive())
    throw NonReducedWord("word " + format_word(any_member) + " has length " +
                         std::to_string(any_member.size()) + ", expected " +
                         std::to_string(rs.num_positive()));
  if (any_member.size() > 64) throw Error("classes with more than 64 positive roots are not supported");
  word_ = canonical_word(rs, any_member);
  roots_ = root_sequence(rs, word_);
  pos_of_.assign(rs.num_positive(), -1);
  for (int k = 0; k < size(); ++k) pos_of_[roots_[k]] = k;
  below_ = heap_below(rs, word_);
  above_.assign(word_.size(), 0);
  for (int l = 0; l < size(); ++l)
    for (int k = 0; k < size(); ++k)
      if ((below_[l] >> k) & 1u) above_[k] |= Mask{1} << l;
}

bool CommutationClass::can_start_with(Node i) const {
  for (int k = 0; k < size(); ++k)
    if (word_[k] == i && below_[k] == 0) return true;
  return false;
}

bool CommutationClass::can_end_with(Node i) const {
  for (int k = 0; k < size(); ++k)
    if (word_[k] == i && above_[k] == 0) return true;
  return false;
}

bool CommutationClass::contains(const Word& w) const {
  return is_longest_word(*rs_, w) && canonical_word(*rs_, w) == word_;
}

std::vector<Word> commutation_closure(const RootSystem& rs, const Word& w, std::size_t cap) {
  cap = resolve_cap(cap);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] == cur[k + 1] || rs.adjacent(cur[k], cur[k + 1])) continue;
      Word nxt = cur;
      std::swap(nxt[k], nxt[k + 1]);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap)
          throw CapExceeded("commutation closure exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(nxt));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

CommutationClass reflect(const CommutationClass& c, Node i, Side side) {
  const RootSystem& rs = c.system();
  const Word& w = c.word();
  for (int k = 0; k < c.size(); ++k) {
    if (w[k] != i) continue;
    if (side == Side::Right && c.below(k) == 0) {
      Word nw;
      for (int j = 0; j < c.size(); ++j)
        if (j != k) nw.push_back(w[j]);
      nw.push_back(rs.star(i));
      return CommutationClass(rs, nw);
    }
    if (side == Side::Left && c.above(k) == 0) {
      Word nw{rs.star(i)};
      for (int j = 0; j < c.size(); ++j)
        if (j != k) nw.push_back(w[j]);
      return CommutationClass(rs, nw);
    }
  }
  return c;
}

ClusterPoint::ClusterPoint(std::vector<CommutationClass> classes) : classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end());
}

int ClusterPoint::index_of(const CommutationClass& c) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
  if (it != classes_.end() && *it == c) return static_cast<int>(it - classes_.begin());
  return -1;
}

bool ClusterPoint::contains(const CommutationClass& c) const { return index_of(c) >= 0; }

ClusterPoint cluster_point(const CommutationClass& seed, std::size_t cap) {
  cap = resolve_cap(cap);
  const RootSystem& rs = seed.system();
  std::set<Word> seen{seed.word()};
  std::vector<CommutationClass> out{seed};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Node i = 1; i <= rs.rank(); ++i) {
      for (Side s : {Side::Right, Side::Left}) {
        CommutationClass nc = reflect(out[head], i, s);
        if (seen.insert(nc.word()).second) {
          if (seen.size() > cap) throw CapExceeded("cluster point exceeds cap");
          out.push_back(std::move(nc));
        }
      }
    }
  }
  return ClusterPoint(std::move(out));
}

std::vector<int> coxeter_composition(const Word& w, const DiagramAutomorphism& v) {
  std::vector<int> c(v.num_orbits() + 1, 0);
  for (Node i : w) {
    if (i < 1 || i > v.rank()) throw Error("orbit map incompatible with word");
    ++c[v.orbit(i)];
  }
  return c;
}

std::vector<int> coxeter_composition(const ClusterPoint& cp, const DiagramAutomorphism& v) {
  if (cp.size() == 0) throw Error("empty cluster point");
  auto first = coxeter_composition(cp.classes().front().word(), v);
  for (const auto& c : cp.classes())
    if (coxeter_composition(c.word(), v) != first)
      throw Error("Coxeter composition differs across the cluster point");
  return first;
}

bool is_foldable(const ClusterPoint& cp, const DiagramAutomorphism& v) {
  auto c = coxeter_composition(cp, v);
  return std::adjacent_find(c.begin() + 1, c.end(), std::not_equal_to<>()) == c.end();
}

std::vector<Word> twisted_coxeter_elements(const RootSystem& rs, const DiagramAutomorphism& v) {
  // one representative per orbit, every order, deduplicated by group element
  std::vector<std::vector<Node>> orbits;
  for (Node k = 1; k <= v.num_orbits(); ++k) orbits.push_back(v.orbit_members(k));
  std::vector<std::vector<Node>> choices{{}};
  for (const auto& orb : orbits) {
    std::vector<std::vector<Node>> next;
    for (const auto& ch : choices)
      for (Node x : orb) {
        auto c = ch;
        c.push_back(x);
        next.push_back(std::move(c));
      }
    choices = std::move(next);
  }
  std::set<Word> canon;
  for (auto ch : choices) {
    std::sort(ch.begin(), ch.end());
    do {
      // words with distinct letters: group equality is commutation equivalence
      canon.insert(canonical_word(rs, ch));
    } while (std::next_permutation(ch.begin(), ch.end()));
  }
  return {canon.begin(), canon.end()};
}

Word twisted_power(const Word& w, const DiagramAutomorphism& v, int factors) {
  Word out;
  Word cur = w;
  for (int k = 0; k < factors; ++k) {
    out.insert(out.end(), cur.begin(), cur.end());
    for (auto& x : cur) x = v(x);
  }
  return out;
}

Word twisted_adapted_word(const RootSystem& rs) {
  int r = rs.rank();
  switch (rs.type()) {
    case DynkinType::A: {
      if (r % 2 == 0) throw UnsupportedType("no twisted adapted point for " + rs.name());
      int n = (r + 1) / 2;
      Word w;
      for (int i = 1; i <= n; ++i) w.push_back(i);
      return twisted_power(w, DiagramAutomorphism::folding(rs), 2 * n - 1);
    }
    case DynkinType::D: {
      int n = r - 1;
      Word w;
      for (int i = 1; i <= n; ++i) w.push_back(i);
      return twisted_power(w, DiagramAutomorphism::folding(rs), n + 1);
    }
    case DynkinType::E:
      return twisted_power({1, 2, 6, 3}, DiagramAutomorphism::folding(rs), 9);
  }
  throw UnsupportedType(rs.name());
}

ClusterPoint twisted_adapted_point(const RootSystem& rs, std::size_t cap) {
  Word w = twisted_adapted_word(rs);
  if (!is_longest_word(rs, w)) throw Error("twisted product is not a reduced word of w0");
  return cluster_point(CommutationClass(rs, w), cap);
}

}  // namespace arfold
