#include <doctest.h>

#include <algorithm>
#include <set>

#include "arfold/arquiver.hpp"

using namespace arfold;

TEST_CASE("word formatting round trips") {
  Word w = parse_word("s4s1s3s2s4s1s3s2s4s3");
  CHECK(w == Word{4, 1, 3, 2, 4, 1, 3, 2, 4, 3});
  CHECK(parse_word(join_word(w)) == w);
  CHECK(format_word(parse_word("4,1,3")) == "s4s1s3");
  CHECK_THROWS_AS(parse_word("s4x"), Error);
}

TEST_CASE("root sequences reject non-reduced words") {
  auto a3 = RootSystem::build(DynkinType::A, 3);
  CHECK_THROWS_AS(root_sequence(a3, {1, 1}), NonReducedWord);
  CHECK_THROWS_AS(root_sequence(a3, {1, 2, 1, 2}), NonReducedWord);
  CHECK_THROWS_AS(root_sequence(a3, {4}), Error);
  auto seq = root_sequence(a3, {1, 2, 1});
  REQUIRE(seq.size() == 3);
  CHECK(a3.root(seq[0]) == Coeffs{1, 0, 0});
  CHECK(a3.root(seq[1]) == Coeffs{1, 1, 0});
  CHECK(a3.root(seq[2]) == Coeffs{0, 1, 0});
  CHECK_FALSE(is_longest_word(a3, {1, 2, 1}));
  CHECK(is_longest_word(a3, a3.longest_word()));
}

TEST_CASE("canonical word is the lex-least member of the closure") {
  auto a4 = RootSystem::build(DynkinType::A, 4);
  auto d4 = RootSystem::build(DynkinType::D, 4);
  std::vector<CommutationClass> classes = cluster_point(CommutationClass(a4, a4.longest_word())).classes();
  for (auto cp = twisted_adapted_point(d4); const auto& c : cp.classes()) classes.push_back(c);
  for (const auto& c : classes) {
    const RootSystem& rs = c.system();
    auto all = commutation_closure(rs, c.word());
    CHECK(*std::min_element(all.begin(), all.end()) == c.word());
    for (const auto& w : all) {
      CHECK(c.contains(w));
      CHECK(canonical_word(rs, w) == c.word());
    }
  }
}

TEST_CASE("heap order agrees with the closure") {
  auto rs = RootSystem::build(DynkinType::A, 5);
  for (auto cp = twisted_adapted_point(rs); const auto& c : cp.classes()) {
    CHECK(convex_order(c) == convex_order_bruteforce(c));
  }
}

TEST_CASE("closure cap is enforced") {
  auto rs = RootSystem::build(DynkinType::A, 5);
  CHECK_THROWS_AS(commutation_closure(rs, rs.longest_word(), 3), CapExceeded);
  set_default_cap(2);
  CHECK_THROWS_AS(cluster_point(CommutationClass(rs, rs.longest_word())), CapExceeded);
  set_default_cap(0);
}

TEST_CASE("reflection functors move within the cluster point") {
  auto rs = RootSystem::build(DynkinType::A, 4);
  CommutationClass c(rs, parse_word("s4s1s3s2s4s1s3s2s4s3"));
  auto cp = cluster_point(c);
  for (Node i = 1; i <= 4; ++i) {
    for (Side s : {Side::Left, Side::Right}) {
      auto r = reflect(c, i, s);
      CHECK(cp.contains(r));
    }
  }
  // s4 starts a member, so r_4 changes the class and sends 4 to the end as 4*=1
  REQUIRE(c.can_start_with(4));
  auto r = reflect(c, 4, Side::Right);
  CHECK_FALSE(r == c);
  CHECK(r.can_end_with(rs.star(4)));
}

TEST_CASE("adapted cluster points have 2^(n-1) classes") {
  for (int n : {2, 3, 4, 5}) {
    auto rs = RootSystem::build(DynkinType::A, n);
    auto quivers = DynkinQuiver::all(rs);
    CHECK(quivers.size() == (1u << (n - 1)));
    auto cp = cluster_point(CommutationClass(rs, adapted_word(quivers.front())));
    CHECK(cp.size() == (1u << (n - 1)));
    std::set<Word> seen;
    for (const auto& q : quivers) {
      CommutationClass c(rs, adapted_word(q));
      CHECK(cp.contains(c));
      seen.insert(c.word());
    }
    CHECK(seen.size() == cp.size());
  }
}

TEST_CASE("twisted adapted point sizes") {
  CHECK(twisted_adapted_point(RootSystem::build(DynkinType::A, 3)).size() == 4);
  CHECK(twisted_adapted_point(RootSystem::build(DynkinType::A, 5)).size() == 16);
  CHECK(twisted_adapted_point(RootSystem::build(DynkinType::D, 4)).size() == 8);
  CHECK(twisted_adapted_point(RootSystem::build(DynkinType::D, 5)).size() == 16);
  CHECK_THROWS_AS(twisted_adapted_point(RootSystem::build(DynkinType::A, 4)), UnsupportedType);
}

TEST_CASE("Coxeter compositions") {
  auto a5 = RootSystem::build(DynkinType::A, 5);
  auto v = DiagramAutomorphism::folding(a5);
  auto comp = coxeter_composition(parse_word("s1s2s3s5s4s3s1s2s3s5s4s3s1s2s3"), v);
  CHECK(comp == std::vector<int>{0, 5, 5, 5});
  auto cp = twisted_adapted_point(a5);
  CHECK(is_foldable(cp, v));
  CHECK(coxeter_composition(cp, v) == std::vector<int>{0, 5, 5, 5});

  auto d5 = RootSystem::build(DynkinType::D, 5);
  auto vd = DiagramAutomorphism::folding(d5);
  auto cd = coxeter_composition(twisted_adapted_point(d5), vd);
  // n+1 letters per orbit of D_{n+1}
  CHECK(cd == std::vector<int>{0, 5, 5, 5, 5});

  auto a3 = RootSystem::build(DynkinType::A, 3);
  CHECK(coxeter_composition(twisted_adapted_point(a3), DiagramAutomorphism::folding(a3)) == std::vector<int>{0, 3, 3});
}

TEST_CASE("twisted Coxeter elements power to reduced words of w0") {
  auto a5 = RootSystem::build(DynkinType::A, 5);
  auto v = DiagramAutomorphism::folding(a5);
  auto cox = twisted_coxeter_elements(a5, v);
  CHECK_FALSE(cox.empty());
  for (const auto& w : cox) {
    CHECK(w.size() == 3u);
    Word p = twisted_power(w, v, 5);
    CHECK(p.size() == 15u);
  }
  CHECK(twisted_adapted_word(a5) == twisted_power({1, 2, 3}, v, 5));
  CHECK(is_longest_word(a5, twisted_adapted_word(a5)));
}
