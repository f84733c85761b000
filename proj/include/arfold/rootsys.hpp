// Finite root systems of simply-laced type and their diagram automorphisms.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arfold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

enum class DynkinType { A, D, E };

// Nodes are labelled 1..rank throughout.
using Node = int;
// Index into RootSystem::roots(); positive roots only.
using RootId = int;
using Coeffs = std::vector<int>;

DynkinType parse_type(const std::string& s);
char type_letter(DynkinType t);

class RootSystem {
 public:
  static RootSystem build(DynkinType type, int rank);

  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  int cartan(Node i, Node j) const { return cartan_[i - 1][j - 1]; }
  bool adjacent(Node i, Node j) const { return i != j && cartan(i, j) != 0; }
  const std::vector<Node>& neighbors(Node i) const { return nbrs_[i - 1]; }
  // Edges {i,j} with i < j, in lexicographic order.
  const std::vector<std::pair<Node, Node>>& edges() const { return edges_; }

  // N = |positive roots| = length of the longest element.
  int num_positive() const { return static_cast<int>(roots_.size()); }
  const std::vector<Coeffs>& roots() const { return roots_; }
  const Coeffs& root(RootId r) const { return roots_[r]; }
  int height(RootId r) const;
  RootId simple(Node i) const { return simple_[i - 1]; }
  std::optional<RootId> find(const Coeffs& c) const;
  RootId id(const Coeffs& c) const;  // throws if not a positive root

  // (a, b) for the symmetric form; a, b arbitrary lattice vectors.
  int pairing(const Coeffs& a, const Coeffs& b) const;
  Coeffs reflect(Node i, const Coeffs& v) const;
  // s_i on a positive root; nullopt for alpha_i itself.
  std::optional<RootId> reflect_root(Node i, RootId r) const;

  // i -> i*, indexed 1..rank (entry 0 unused).
  const std::vector<Node>& star() const { return star_; }
  Node star(Node i) const { return star_[i]; }
  // a reduced word of w0 found greedily
  const std::vector<Node>& longest_word() const { return w0_; }

  std::string format_root(RootId r) const;
  std::string format_coeffs(const Coeffs& c) const;

 private:
  DynkinType type_{};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Node>> nbrs_;
  std::vector<std::pair<Node, Node>> edges_;
  std::vector<Coeffs> roots_;
  std::vector<RootId> simple_;
  std::vector<std::vector<int>> reflect_table_;  // [i-1][r] -> root or -1
  std::vector<Node> star_;
  std::vector<Node> w0_;
};

// Signed evaluation of s_{w_1} ... s_{w_k} applied to v.
Coeffs apply_word(const RootSystem& rs, const std::vector<Node>& w, Coeffs v);

class DiagramAutomorphism {
 public:
  // The automorphism used for folding: A_{2n-1} -> B_n, D_{n+1} -> C_n, E_6 -> F_4.
  static DiagramAutomorphism folding(const RootSystem& rs);
  // D_4 triality.
  static DiagramAutomorphism triality(const RootSystem& rs);
  static DiagramAutomorphism identity(const RootSystem& rs);

  int rank() const { return static_cast<int>(perm_.size()) - 1; }
  Node operator()(Node i) const { return perm_[i]; }
  int order() const { return order_; }
  // Orbit label i-bar in 1..num_orbits().
  Node orbit(Node i) const { return label_[i]; }
  int num_orbits() const { return num_orbits_; }
  // Orbit size of an orbit label.
  int orbit_size(Node k) const;
  std::vector<Node> orbit_members(Node k) const;
  bool preserves(const RootSystem& rs) const;

 private:
  std::vector<Node> perm_;   // index 0 unused
  std::vector<Node> label_;  // index 0 unused
  int order_ = 1;
  int num_orbits_ = 0;
  void finish();
};

}  // namespace arfold
