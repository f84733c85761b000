#include <doctest.h>

#include <algorithm>

#include "arfold/twistfold.hpp"
#include "support.hpp"

using namespace arfold;

TEST_CASE("Gamma_Q of the A4 example matches the fixture exactly") {
  auto a4 = RootSystem::build(DynkinType::A, 4);
  auto q = DynkinQuiver::parse(a4, "1<-2->3->4");
  auto g = gamma_Q(q);
  auto fx = quiver_from_fixture(parse_fixture(test::data_file("a4_gamma_q.txt")), a4);
  REQUIRE(g.size() == 10);
  for (RootId r = 0; r < 10; ++r) {
    CAPTURE(a4.format_root(r));
    CHECK(g.vertices[r].residue == fx.vertices[r].residue);
    CHECK(g.vertices[r].position == fx.vertices[r].position);
  }
  CHECK(g.arrows == fx.arrows);

  auto words = read_reduced_words(g);
  CHECK(std::find(words.begin(), words.end(), parse_word("s4s1s3s2s4s1s3s2s4s3")) != words.end());
  CommutationClass c(a4, adapted_word(q));
  for (const auto& w : words) CHECK(c.contains(w));
  CHECK(words.size() == commutation_closure(a4, c.word()).size());
}

TEST_CASE("(1,2,1) is adapted to 2 -> 1") {
  auto a2 = RootSystem::build(DynkinType::A, 2);
  auto q = DynkinQuiver::parse(a2, "1<-2");
  CHECK(is_adapted({1, 2, 1}, q));
  CHECK_FALSE(is_adapted({2, 1, 2}, q));
  auto found = adapted_quiver_of(a2, {1, 2, 1});
  REQUIRE(found);
  CHECK(*found == q);
}

TEST_CASE("quiver parsing and reflection") {
  auto a4 = RootSystem::build(DynkinType::A, 4);
  auto q = DynkinQuiver::parse(a4, "1<-2->3->4");
  CHECK(q.arrow(2, 1));
  CHECK(q.arrow(3, 4));
  CHECK(q.is_sink(1));
  CHECK(q.is_sink(4));
  CHECK_FALSE(q.is_sink(2));
  CHECK(q == DynkinQuiver::parse(a4, "2->1,2->3,3->4"));
  auto r = q.reflected(1);
  CHECK(r.arrow(1, 2));
  CHECK(r.reflected(1) == q);
  CHECK_THROWS_AS(DynkinQuiver::parse(a4, "1<-2->3"), Error);
  CHECK_THROWS_AS(DynkinQuiver::parse(a4, "1->3,2->3,3->4"), Error);
  auto xi = q.height_function();
  CHECK(xi[1] == 0);
  CHECK(xi[2] == -1);
  CHECK(xi[3] == 0);
  CHECK(xi[4] == 1);
}

TEST_CASE("Gamma_Q properties over every quiver") {
  for (auto [t, r] : {std::pair{DynkinType::A, 4}, {DynkinType::A, 5}, {DynkinType::D, 4}, {DynkinType::D, 5}}) {
    auto rs = RootSystem::build(t, r);
    for (const auto& q : DynkinQuiver::all(rs)) {
      CAPTURE(q.describe());
      auto g = gamma_Q(q);
      Word w = adapted_word(q);
      CHECK(is_longest_word(rs, w));
      CHECK(is_adapted(w, q));
      CHECK(coxeter_roots(q).size() == static_cast<std::size_t>(r));
      CommutationClass c(rs, w);
      // arrows of Gamma_Q are the covers of the convex order
      CHECK(hasse_quiver(c).arrows == g.arrows);
      // every arrow moves one step to the right
      for (auto [x, y] : g.arrows) CHECK(g.vertices[y].position == g.vertices[x].position + 1);
      // the residue of each root is its letter in the class
      for (RootId b = 0; b < rs.num_positive(); ++b) CHECK(g.vertices[b].residue == c.residue(b));
      RootId anchor = g.display_order().front();
      auto pot = potential_positions(c, [](Node, Node) { return 1; }, anchor, g.vertices[anchor].position);
      REQUIRE(pot);
      for (RootId b = 0; b < rs.num_positive(); ++b) CHECK((*pot)[b] == g.vertices[b].position);
    }
  }
}

TEST_CASE("display order sorts by position then residue") {
  auto a5 = RootSystem::build(DynkinType::A, 5);
  auto g = gamma_Q(DynkinQuiver::all(a5)[3]);
  auto ord = g.display_order();
  for (std::size_t k = 1; k < ord.size(); ++k) {
    const auto &a = g.vertices[ord[k - 1]], &b = g.vertices[ord[k]];
    CHECK(std::pair(a.position, a.residue) < std::pair(b.position, b.residue));
  }
}
