// Reduced words of w0, commutation classes, reflection functors and cluster points.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arfold/rootsys.hpp"

namespace arfold {

using Word = std::vector<Node>;
using Mask = std::uint64_t;  // subsets of word positions; N <= 64

class NonReducedWord : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Default enumeration cap: ARFOLD_CAP if set, else 10^7.
std::size_t default_cap();
// Overrides the environment for the rest of the process; 0 restores it.
void set_default_cap(std::size_t cap);

std::string format_word(const Word& w);  // "s4s1s3..."
std::string join_word(const Word& w);    // "4,1,3,..."
Word parse_word(const std::string& s);   // accepts both forms above

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); throws NonReducedWord.
std::vector<RootId> root_sequence(const RootSystem& rs, const Word& w);
// true iff w is a reduced word of the longest element
bool is_longest_word(const RootSystem& rs, const Word& w);

// A commutation class of reduced words of w0, held as its heap: positions of
// the canonical (lex-least) word, each carrying a positive root, and the
// order "before in every member".
class CommutationClass {
 public:
  CommutationClass(const RootSystem& rs, const Word& any_member);

  const RootSystem& system() const { return *rs_; }
  const Word& word() const { return word_; }  // canonical word
  int size() const { return static_cast<int>(word_.size()); }

  RootId root_at(int pos) const { return roots_[pos]; }
  int position_of(RootId r) const { return pos_of_[r]; }
  Node residue(RootId r) const { return word_[pos_of_[r]]; }
  const std::vector<RootId>& roots() const { return roots_; }

  // positions strictly below / above pos in the heap order
  Mask below(int pos) const { return below_[pos]; }
  Mask above(int pos) const { return above_[pos]; }
  bool precedes(RootId a, RootId b) const {
    return (below_[pos_of_[b]] >> pos_of_[a]) & 1u;
  }
  bool comparable(RootId a, RootId b) const { return precedes(a, b) || precedes(b, a); }

  // letters i whose alpha_i can start (resp. end) some member word
  bool can_start_with(Node i) const;
  bool can_end_with(Node i) const;

  bool contains(const Word& w) const;

  bool operator==(const CommutationClass& o) const { return word_ == o.word_; }
  bool operator<(const CommutationClass& o) const { return word_ < o.word_; }

 private:
  const RootSystem* rs_;
  Word word_;
  std::vector<RootId> roots_;
  std::vector<int> pos_of_;
  std::vector<Mask> below_, above_;
};

// Lex-least word of the commutation class of w (greedy over the heap).
Word canonical_word(const RootSystem& rs, const Word& w);

// Every member word, by breadth-first closure under commuting swaps.
std::vector<Word> commutation_closure(const RootSystem& rs, const Word& w, std::size_t cap = 0);

enum class Side { Left, Right };

// r_i acting on the right (word begins with s_i) or on the left (ends with s_i).
// Returns the input class when no member qualifies.
CommutationClass reflect(const CommutationClass& c, Node i, Side side);

class ClusterPoint {
 public:
  explicit ClusterPoint(std::vector<CommutationClass> classes);
  const std::vector<CommutationClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool contains(const CommutationClass& c) const;
  int index_of(const CommutationClass& c) const;  // -1 when absent

 private:
  std::vector<CommutationClass> classes_;  // sorted by canonical word
};

ClusterPoint cluster_point(const CommutationClass& seed, std::size_t cap = 0);

// Number of letters in each orbit, indexed by orbit label (entry 0 unused).
std::vector<int> coxeter_composition(const Word& w, const DiagramAutomorphism& v);
// Composition of a cluster point; throws if members disagree.
std::vector<int> coxeter_composition(const ClusterPoint& cp, const DiagramAutomorphism& v);
bool is_foldable(const ClusterPoint& cp, const DiagramAutomorphism& v);

std::vector<Word> twisted_coxeter_elements(const RootSystem& rs, const DiagramAutomorphism& v);
// w (w)^v (w)^{v^2} ... with `factors` factors
Word twisted_power(const Word& w, const DiagramAutomorphism& v, int factors);
// The seed word of the twisted adapted point: s1 s2 ... sn (E6: s1 s2 s6 s3).
Word twisted_adapted_word(const RootSystem& rs);
ClusterPoint twisted_adapted_point(const RootSystem& rs, std::size_t cap = 0);

}  // namespace arfold
