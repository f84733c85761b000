// Sequences of positive roots under the bi-lexicographic orders of a class.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arfold/twistfold.hpp"

namespace arfold {

// Multiplicities indexed by RootId.
struct SequenceVector {
  std::vector<int> mult;

  static SequenceVector zero(int n) { return {std::vector<int>(n, 0)}; }
  static SequenceVector single(int n, RootId r, int m = 1);
  static SequenceVector pair(int n, RootId a, RootId b);

  Coeffs weight(const RootSystem& rs) const;
  int total() const;
  bool is_pair() const;
  std::vector<RootId> support() const;
  std::string format(const RootSystem& rs) const;

  bool operator==(const SequenceVector& o) const { return mult == o.mult; }
  bool operator<(const SequenceVector& o) const { return mult < o.mult; }
};

// m <^b m' for sequences written as position vectors of one word.
bool bilex_less(const std::vector<int>& m, const std::vector<int>& m2);
// The same sequence as a position vector against `word`.
std::vector<int> positions_for(const RootSystem& rs, const Word& word, const SequenceVector& m);
// Class order by brute force over every member word (test oracle).
bool class_less_bruteforce(const CommutationClass& c, const SequenceVector& m, const SequenceVector& m2,
                           std::size_t cap = 0);

// The class order evaluated literally: bilex under every member word.
// Slow; used to cross-check SeqOrder.
class BruteOrder {
 public:
  explicit BruteOrder(const CommutationClass& c, std::size_t cap = 0);
  std::size_t words() const { return seqs_.size(); }
  bool less(const SequenceVector& m, const SequenceVector& m2) const;
  // every sequence with the weight of m, over all positive roots
  std::vector<SequenceVector> same_weight(const SequenceVector& m) const;
  // dist, socle and longest chains from the full same-weight poset
  int dist(const SequenceVector& m) const;
  std::optional<SequenceVector> socle(const SequenceVector& p) const;
  std::vector<std::vector<SequenceVector>> longest_chains(const SequenceVector& m) const;
  bool is_simple(const SequenceVector& m) const;

 private:
  const CommutationClass* c_;
  std::vector<std::vector<RootId>> seqs_;  // root sequence of each member
  mutable std::map<std::pair<RootId, RootId>, bool> simple_pairs_;
  std::vector<SequenceVector> below_or_equal(const SequenceVector& m) const;
};

// A comparable pair's roots ordered so that first precedes second.
struct RootPair {
  RootId first;
  RootId second;
};

enum class CoverCase { Singleton, Triple, Pair };

struct CoverRecord {
  CoverCase kind;
  SequenceVector cover;  // the maximal m below p with nothing in between
  bool conditions_hold = false;
  std::string detail;
};

// Order engine for one class. Multisets are stored by position of the
// class's canonical word.
class SeqOrder {
 public:
  explicit SeqOrder(const CommutationClass& c);

  const CommutationClass& cls() const { return *c_; }
  int size() const { return n_; }

  // m ≺^b m2 in the class (weights compared too)
  bool less(const SequenceVector& m, const SequenceVector& m2) const;
  bool is_simple_pair(RootId a, RootId b) const;
  bool is_simple(const SequenceVector& m) const;

  // all m' ≺^b m
  std::vector<SequenceVector> below(const SequenceVector& m) const;
  // all sequences of weight w supported on roots in `allowed` (by position)
  std::vector<SequenceVector> partitions(const Coeffs& w, Mask allowed) const;

  // -1 when no chain below m starts at a simple sequence
  int dist(const SequenceVector& m) const;
  int pair_dist(RootId a, RootId b) const;
  std::optional<SequenceVector> socle(const SequenceVector& p) const;
  // covers of a simple s from above: s ≺ m with nothing strictly between
  std::vector<SequenceVector> minimal_sequences(const SequenceVector& s) const;
  bool is_minimal_pair(RootId a, RootId b) const;  // of the root a+b
  CoverRecord classify_cover(const SequenceVector& p) const;

  // Maximal chains from a simple sequence up to m, each listed bottom first.
  std::vector<std::vector<SequenceVector>> longest_chains(const SequenceVector& m) const;

 private:
  using PosSeq = std::vector<std::uint8_t>;
  const CommutationClass* c_;
  const RootSystem* rs_;
  int n_;
  std::vector<Coeffs> coeff_;  // by position
  mutable std::vector<std::int8_t> simple_pair_;  // n*n cache: -1 unknown

  PosSeq to_pos(const SequenceVector& m) const;
  SequenceVector from_pos(const PosSeq& p) const;
  bool less_pos(const PosSeq& a, const PosSeq& b) const;
  bool simple_pos(const PosSeq& p) const;
  bool simple_pair_pos(int a, int b) const;
  Mask hull(Mask support) const;
  void enumerate(const Coeffs& w, Mask allowed, std::vector<PosSeq>& out, std::size_t cap) const;
  // elements strictly below m, computed with weights, and their pairwise order
  std::vector<PosSeq> below_pos(const PosSeq& m) const;
};

// Pairs at residues {k,l} with position gap t in the folded quiver.
std::vector<RootPair> phi_pairs(const CommutationClass& c, const ARQuiver& folded, Node k, Node l, int t);

// Factors (z - eps * q_s^t); stored sorted.
struct RootedPolynomial {
  std::vector<std::pair<int, int>> factors;  // (eps, t)

  void add(int eps, int t, int times = 1);
  void normalize();
  bool operator==(const RootedPolynomial& o) const;
  std::string format() const;
};

enum class SignConvention { A, D };

struct DistanceData {
  // o_t per gap, with -2 marking a gap whose pairs disagree on dist
  std::map<int, int> o;
  bool constant = true;
};

DistanceData distance_data(const SeqOrder& so, const ARQuiver& folded, Node k, Node l);
RootedPolynomial distance_polynomial(const DistanceData& d, Node k, Node l, SignConvention conv);
RootedPolynomial distance_polynomial(const SeqOrder& so, const ARQuiver& folded, Node k, Node l,
                                     SignConvention conv);

}  // namespace arfold
