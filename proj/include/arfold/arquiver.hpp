// Dynkin quivers, AR quivers with coordinates, and the convex order of a class.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arfold/words.hpp"

namespace arfold {

class DynkinQuiver {
 public:
  // toward_larger[e] says edge e = rs.edges()[e] = {i<j} is oriented i -> j.
  DynkinQuiver(const RootSystem& rs, std::vector<bool> toward_larger);
  // "1<-2->3->4" style description for type A; general form "2->1,2->3,3->4".
  static DynkinQuiver parse(const RootSystem& rs, const std::string& arrows);
  static std::vector<DynkinQuiver> all(const RootSystem& rs);

  const RootSystem& system() const { return *rs_; }
  bool arrow(Node from, Node to) const;
  bool is_sink(Node i) const;
  DynkinQuiver reflected(Node i) const;  // reverse all arrows at i
  // xi with xi(j) = xi(i) + 1 for i -> j, normalized xi(1) = 0; index 1..rank
  std::vector<int> height_function() const;
  std::string describe() const;

  bool operator==(const DynkinQuiver& o) const { return dir_ == o.dir_; }

 private:
  const RootSystem* rs_;
  std::vector<bool> dir_;
  int edge_index(Node i, Node j) const;
};

// Sink-first peeling: a product of all simple reflections adapted to Q.
Word coxeter_element_of(const DynkinQuiver& q);
// Phi(phi_Q) = Phi+ cap phi_Q(Phi-) as the root sequence of the Coxeter word.
std::vector<RootId> coxeter_roots(const DynkinQuiver& q);
bool is_adapted(const Word& w, const DynkinQuiver& q);
std::optional<DynkinQuiver> adapted_quiver_of(const RootSystem& rs, const Word& w);

struct QuiverVertex {
  RootId root = -1;
  Node residue = 0;
  int position = 0;  // in units of 1/denominator
};

// Vertices are indexed by RootId. An arrow (x, y) runs from x to y and
// means y precedes x in the convex order (y sits further right).
struct ARQuiver {
  const RootSystem* rs = nullptr;
  int denominator = 1;
  bool has_coordinates = false;
  std::vector<QuiverVertex> vertices;
  std::vector<std::pair<RootId, RootId>> arrows;  // sorted

  int size() const { return static_cast<int>(vertices.size()); }
  // vertex ids sorted by (position, residue)
  std::vector<RootId> display_order() const;
  bool same_arrows(const ARQuiver& o) const { return arrows == o.arrows; }
};

ARQuiver gamma_Q(const DynkinQuiver& q);
// The word read off Gamma_Q from right to left; adapted to q.
Word adapted_word(const DynkinQuiver& q);

// Strict order matrix: out[a][b] iff a precedes b in every member word.
std::vector<std::vector<bool>> convex_order(const CommutationClass& c);
// Same order computed by brute force over the commutation closure.
std::vector<std::vector<bool>> convex_order_bruteforce(const CommutationClass& c, std::size_t cap = 0);

// All linear extensions of the arrow order, as residue words.
std::vector<Word> read_reduced_words(const ARQuiver& q, std::size_t cap = 0);

// Cover relations of the convex order; coordinates left unset.
ARQuiver hasse_quiver(const CommutationClass& c);

// Positions from a potential on the Hasse diagram: for every arrow x -> y,
// pos(y) = pos(x) + weight(res x, res y). Anchored so that `anchor` sits at
// `anchor_pos`. nullopt if the rule is inconsistent.
std::optional<std::vector<int>> potential_positions(const CommutationClass& c,
                                                    const std::function<int(Node, Node)>& weight,
                                                    RootId anchor, int anchor_pos);

}  // namespace arfold
