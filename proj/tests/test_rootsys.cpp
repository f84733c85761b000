#include <doctest.h>

#include <set>

#include "arfold/rootsys.hpp"

using namespace arfold;

namespace {

Coeffs neg(Coeffs c) {
  for (int& x : c) x = -x;
  return c;
}

Coeffs unit(int rank, Node i) {
  Coeffs c(rank, 0);
  c[i - 1] = 1;
  return c;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(RootSystem::build(DynkinType::A, 4).num_positive() == 10);
  CHECK(RootSystem::build(DynkinType::A, 5).num_positive() == 15);
  CHECK(RootSystem::build(DynkinType::D, 4).num_positive() == 12);
  CHECK(RootSystem::build(DynkinType::D, 5).num_positive() == 20);
  CHECK(RootSystem::build(DynkinType::E, 6).num_positive() == 36);
  for (int n = 1; n <= 8; ++n) CHECK(RootSystem::build(DynkinType::A, n).num_positive() == n * (n + 1) / 2);
}

TEST_CASE("unsupported systems are rejected") {
  CHECK_THROWS_AS(RootSystem::build(DynkinType::E, 9), UnsupportedType);
  CHECK_THROWS_AS(RootSystem::build(DynkinType::D, 2), UnsupportedType);
  CHECK_THROWS_AS(parse_type("G"), UnsupportedType);
  auto a3 = RootSystem::build(DynkinType::A, 3);
  CHECK_THROWS_AS(a3.id({1, 0, 1}), Error);
}

TEST_CASE("simple reflections permute the positive roots away from alpha_i") {
  for (auto [t, r] : {std::pair{DynkinType::A, 5}, {DynkinType::D, 5}, {DynkinType::E, 6}}) {
    auto rs = RootSystem::build(t, r);
    for (Node i = 1; i <= r; ++i) {
      std::set<RootId> image;
      for (RootId x = 0; x < rs.num_positive(); ++x) {
        auto y = rs.reflect_root(i, x);
        if (x == rs.simple(i)) {
          CHECK_FALSE(y);
          continue;
        }
        REQUIRE(y);
        CHECK(rs.pairing(rs.root(*y), rs.root(*y)) == 2);
        image.insert(*y);
      }
      CHECK(static_cast<int>(image.size()) == rs.num_positive() - 1);
      CHECK_FALSE(image.count(rs.simple(i)));
    }
  }
}

TEST_CASE("longest word sends alpha_i to -alpha_{i*}") {
  for (auto [t, r] : {std::pair{DynkinType::A, 4}, {DynkinType::D, 4}, {DynkinType::D, 5}, {DynkinType::E, 6}}) {
    auto rs = RootSystem::build(t, r);
    CHECK(static_cast<int>(rs.longest_word().size()) == rs.num_positive());
    for (Node i = 1; i <= r; ++i)
      CHECK(apply_word(rs, rs.longest_word(), unit(r, i)) == neg(unit(r, rs.star(i))));
  }
  auto a4 = RootSystem::build(DynkinType::A, 4);
  for (Node i = 1; i <= 4; ++i) CHECK(a4.star(i) == 5 - i);
  auto d4 = RootSystem::build(DynkinType::D, 4);
  for (Node i = 1; i <= 4; ++i) CHECK(d4.star(i) == i);
  auto d5 = RootSystem::build(DynkinType::D, 5);
  CHECK(d5.star(4) == 5);
  CHECK(d5.star(5) == 4);
}

TEST_CASE("folding automorphisms") {
  auto a5 = RootSystem::build(DynkinType::A, 5);
  auto v = DiagramAutomorphism::folding(a5);
  CHECK(v.preserves(a5));
  CHECK(v.order() == 2);
  CHECK(v.num_orbits() == 3);
  CHECK(v.orbit_size(3) == 1);
  CHECK(v(1) == 5);

  auto d5 = RootSystem::build(DynkinType::D, 5);
  auto vd = DiagramAutomorphism::folding(d5);
  CHECK(vd.num_orbits() == 4);
  CHECK(vd(4) == 5);
  CHECK(vd.orbit(4) == vd.orbit(5));

  auto e6 = RootSystem::build(DynkinType::E, 6);
  auto ve = DiagramAutomorphism::folding(e6);
  CHECK(ve.preserves(e6));
  CHECK(ve.num_orbits() == 4);

  auto d4 = RootSystem::build(DynkinType::D, 4);
  auto tri = DiagramAutomorphism::triality(d4);
  CHECK(tri.order() == 3);
  CHECK(tri.preserves(d4));

  CHECK_THROWS_AS(DiagramAutomorphism::folding(RootSystem::build(DynkinType::A, 4)), UnsupportedType);
  CHECK_THROWS_AS(DiagramAutomorphism::triality(d5), UnsupportedType);
}

TEST_CASE("root ids round trip through coefficients") {
  auto e6 = RootSystem::build(DynkinType::E, 6);
  for (RootId r = 0; r < e6.num_positive(); ++r) CHECK(e6.id(e6.root(r)) == r);
  CHECK(e6.height(e6.num_positive() - 1) >= 1);
  int top = 0;
  for (RootId r = 0; r < e6.num_positive(); ++r) top = std::max(top, e6.height(r));
  CHECK(top == 11);  // Coxeter number minus one
}
