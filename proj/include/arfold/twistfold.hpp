// Twisted adapted classes, their coordinates, folding, and the E6 -> F4 data.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arfold/arquiver.hpp"

namespace arfold {

// Data of the folded (doubly laced) type attached to a folding automorphism.
struct FoldedDatum {
  char type = '?';   // 'B', 'C' or 'F'
  int rank = 0;      // number of orbits
  std::vector<int> d;  // symmetrizer per orbit, index 1..rank
  int dbar = 2;
  int dual_coxeter = 0;
  std::vector<std::vector<bool>> adjacent;  // orbit adjacency, 1-based
};
FoldedDatum folded_datum(const RootSystem& rs, const DiagramAutomorphism& v);

// Upsilon of a class in the foldable cluster point: coordinates from the arrow
// rule pos(y) = pos(x) + min(d_i, d_j), in folded units (so A_{2n-1} carries
// denominator 2). Shifted so that the smallest position is `min_pos`.
// nullopt if the rule is inconsistent.
std::optional<ARQuiver> twisted_quiver(const CommutationClass& c, const DiagramAutomorphism& v,
                                       int min_pos = 1);

struct TwistResult {
  CommutationClass cls;
  ARQuiver upsilon;
};

enum class InsertSide { Greater, Less };

// A_{2n-2} adapted word -> twisted adapted class of A_{2n-1}. `target` must be
// the A_{2n-1} system. Old vertices keep their Gamma_Q positions.
TwistResult twist_from_A(const RootSystem& target, const RootSystem& source, const Word& adapted,
                         InsertSide side);
// The bare word produced by the insertion rules.
Word twist_word_A(const Word& adapted, int n, InsertSide side);

// Q of type A_n -> twisted adapted class of D_{n+1}; first_label is n or n+1.
TwistResult twist_from_D(const RootSystem& target, const DynkinQuiver& q, Node first_label);

// Residues to orbit labels; throws if two vertices collide.
ARQuiver fold(const ARQuiver& upsilon, const DiagramAutomorphism& v);

struct FoldedQuiver {
  ARQuiver quiver;  // residues are orbit labels
  Word source;      // canonical word of the source class
};

FoldedQuiver folded_quiver(const CommutationClass& c, const DiagramAutomorphism& v, int min_pos = 1);

// Vertices in the (A1)-(A3) sense: alpha_i has no outgoing arrow.
bool is_folded_sink(const FoldedQuiver& f, Node i);
FoldedQuiver folded_reflection(const FoldedQuiver& f, const RootSystem& rs, const DiagramAutomorphism& v,
                               Node i);

// Plain-text quiver fixtures.
struct Fixture {
  struct V {
    Node residue;
    int position;
    std::string root;  // coefficient digits, may be empty
  };
  struct A {
    Node r1;
    int p1;
    Node r2;
    int p2;
  };
  int denominator = 1;
  std::vector<V> vertices;
  std::vector<A> arrows;
};
Fixture parse_fixture(const std::string& text);
// Requires every vertex to carry a root label.
ARQuiver quiver_from_fixture(const Fixture& f, const RootSystem& rs);
// Word read from coordinates: larger positions first, ties by residue.
Word reading_word(const ARQuiver& q);

// The printed E6 tables shipped with the library.
const std::string& e6_unfolded_text();
const std::string& e6_folded_text();
const std::string& e6_folded_r1_text();
FoldedQuiver e6_folded_quiver(const RootSystem& e6);

// Compare coordinates up to a global shift of positions.
bool same_up_to_shift(const ARQuiver& a, const ARQuiver& b);

}  // namespace arfold
