#include <doctest.h>

#include <algorithm>

#include "arfold/affine.hpp"

using namespace arfold;

namespace {

RootedPolynomial poly(std::initializer_list<std::pair<int, int>> fs) {
  RootedPolynomial p;
  for (auto [e, t] : fs) p.add(e, t);
  return p;
}

}  // namespace

TEST_CASE("spectral parameters") {
  using SP = SpectralParameter;
  CHECK(SP::minus_q(3) == SP::signed_qs(-1, 6));
  CHECK(SP::minus_q(2) == SP::signed_qs(1, 4));
  CHECK(SP::minus_qs(5) == SP::signed_qs(-1, 5));
  CHECK(SP::minus_qs(-3) == SP::signed_qs(-1, -3));
  CHECK((SP::minus_qs(3) * SP::minus_qs(4)) == SP::minus_qs(7));
  CHECK((SP::minus_qs(3) / SP::minus_qs(4)) == SP::minus_qs(-1));
  CHECK(SP::signed_qs(-1, 2).sign() == -1);
  CHECK_THROWS(SP{1, 0}.sign());
  CHECK((SP{1, 0} * SP{1, 0}) == SP::signed_qs(-1, 0));
  CHECK((SP{3, 0} * SP{1, 0}) == SP::signed_qs(1, 0));
}

TEST_CASE("denominator formulas") {
  CHECK(denominator(Target::B, 2, 2, 2) == poly({{1, 2}, {1, 6}}));
  CHECK(denominator(Target::B, 2, 1, 1) == poly({{1, 4}, {1, 6}}));
  CHECK(denominator(Target::F4, 4, 4, 4) == poly({{1, 2}, {1, 8}, {1, 12}, {1, 18}}));
  // C: (z - (-q_s)^a) with a = |k-l| + 2s and 2n+2-k-l+2s
  CHECK(denominator(Target::C, 3, 1, 1) == poly({{1, 2}, {1, 8}}));
  CHECK_THROWS_AS(denominator(Target::B, 3, 0, 1), Error);
  CHECK_THROWS_AS(denominator(Target::C, 3, 1, 4), Error);
  CHECK_THROWS_AS(denominator(Target::F4, 4, 5, 1), Error);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        CHECK(denominator(Target::B, n, k, l) == denominator(Target::B, n, l, k));
        CHECK(denominator(Target::C, n, k, l) == denominator(Target::C, n, l, k));
      }
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) CHECK(denominator(Target::F4, 4, k, l) == denominator(Target::F4, 4, l, k));
  CHECK(den_dist_extra(Target::B, 3) == poly({{1, 10}}));
  CHECK(den_dist_extra(Target::C, 3) == poly({{1, 8}}));
  CHECK(den_dist_extra(Target::F4, 4) == poly({{1, 18}}));
}

TEST_CASE("V assignment from folded coordinates") {
  auto a5 = RootSystem::build(DynkinType::A, 5);
  auto v = DiagramAutomorphism::folding(a5);
  bool b34 = false;
  for (auto cp = twisted_adapted_point(a5); const auto& c : cp.classes()) {
    auto f = folded_quiver(c, v);
    for (RootId r = 0; r < a5.num_positive(); ++r) {
      const auto& x = f.quiver.vertices[r];
      auto lab = v_assign(Target::B, f.quiver, r);
      CHECK(lab.node == x.residue);
      CHECK(lab.param == SpectralParameter::signed_qs(x.residue % 2 ? -1 : 1, x.position));
      if (x.residue == 3 && x.position == 4) {
        b34 = true;
        CHECK(lab.param == SpectralParameter::signed_qs(-1, 4));
      }
    }
    CHECK_THROWS_AS(v_assign(Target::B, f.quiver, 99), Error);
  }
  CHECK(b34);

  auto d4 = RootSystem::build(DynkinType::D, 4);
  auto vd = DiagramAutomorphism::folding(d4);
  bool c25 = false;
  for (auto cp = twisted_adapted_point(d4); const auto& c : cp.classes()) {
    auto f = folded_quiver(c, vd);
    for (RootId r = 0; r < d4.num_positive(); ++r) {
      const auto& x = f.quiver.vertices[r];
      auto lab = v_assign(Target::C, f.quiver, r);
      CHECK(lab.param == SpectralParameter::minus_qs(x.position));
      if (x.residue == 2 && x.position == 5) {
        c25 = true;
        CHECK(lab.param == SpectralParameter::signed_qs(-1, 5));
      }
    }
  }
  CHECK(c25);
}

TEST_CASE("untwisted and twisted labels from Gamma_Q") {
  auto a4 = RootSystem::build(DynkinType::A, 4);
  auto q = DynkinQuiver::parse(a4, "1<-2->3->4");
  RootId b = a4.id({1, 1, 1, 1});  // at (2,-1)
  auto l1 = v_untwisted_twisted(q, b, 1);
  CHECK(l1.node == 2);
  CHECK(l1.param == SpectralParameter::minus_q(-1));
  RootId e = a4.id({0, 0, 0, 1});  // at (4,1)
  auto l2 = v_untwisted_twisted(q, e, 2);
  CHECK(l2.node == 1);
  CHECK(l2.param == SpectralParameter::minus_q(1));
  CHECK_THROWS_AS(v_untwisted_twisted(q, b, 3), Error);

  auto d5 = RootSystem::build(DynkinType::D, 5);
  for (const auto& dq : {DynkinQuiver::all(d5).front(), DynkinQuiver::all(d5).back()}) {
    auto g = gamma_Q(dq);
    for (RootId r = 0; r < d5.num_positive(); ++r) {
      Node i = g.vertices[r].residue;
      auto lab = v_untwisted_twisted(dq, r, 2);
      if (i >= 4) {
        CHECK(lab.node == 4);
        CHECK(lab.param == SpectralParameter::signed_qs(i % 2 ? -1 : 1, 0) *
                               SpectralParameter::minus_q(g.vertices[r].position));
      } else {
        CHECK(lab.node == i);
        CHECK(lab.param.phase % 2 == (5 - i) % 2);
      }
    }
  }
  auto e6 = RootSystem::build(DynkinType::E, 6);
  CHECK_THROWS_AS(v_untwisted_twisted(DynkinQuiver::all(e6).front(), 0, 2), Error);
}

TEST_CASE("Dorey triples contain the printed cases") {
  using SP = SpectralParameter;
  auto c3 = dorey_triples(Target::C, 3);
  bool lk = false;
  for (const auto& d : c3) {
    if (d.branch == "C l=k") {
      lk = true;
      CHECK(d.y_over_z == SP::minus_qs(-d.i));
      CHECK(d.x_over_z == SP::minus_qs(d.j));
    }
  }
  CHECK(lk);
  for (int n : {2, 3, 4}) {
    bool si = false;
    for (const auto& d : dorey_triples(Target::B, n)) {
      if (d.branch != "B(ii) s=i") continue;
      si = true;
      CHECK(d.y_over_z == SP::signed_qs(1, -4 * d.i - 4));
      CHECK(d.x_over_z == SP::signed_qs((d.i + n) % 2 ? -1 : 1, 2 * (n - 1 - d.i) - 1));
    }
    CHECK(si);
    for (const auto& d : dorey_triples(Target::B, n))
      if (d.branch.rfind("B(i)", 0) == 0) CHECK(d.i + d.j + d.k == 2 * std::max({d.i, d.j, d.k}));
  }
}

TEST_CASE("verification sweeps at small rank") {
  auto counts = verify_counts(2);
  CHECK_MESSAGE(counts.ok(), counts.summary());

  for (auto [t, n] : {std::pair{Target::B, 2}, {Target::B, 3}, {Target::C, 3}}) {
    auto dd = verify_den_dist(t, n, 2);
    CHECK_MESSAGE(dd.ok(), dd.summary());
    auto inv = verify_class_invariance(t, n, 2);
    CHECK_MESSAGE(inv.ok(), inv.summary());
  }

  auto dc = verify_dorey(Target::C, 3, 2);
  CHECK_MESSAGE(dc.ok(), dc.summary());
  auto mc = verify_minimal_pair_coordinates(Target::C, 3, 2);
  CHECK_MESSAGE(mc.ok(), mc.summary());

  // the shifted reading of branch (ii) is what the minimal pairs realize
  for (int n : {2, 3}) {
    auto ds = verify_dorey(Target::B, n, 2, DoreyReading::Shifted);
    CHECK_MESSAGE(ds.ok(), ds.summary());
    auto ms = verify_minimal_pair_coordinates(Target::B, n, 2, DoreyReading::Shifted);
    CHECK_MESSAGE(ms.ok(), ms.summary());
    CHECK_FALSE(verify_dorey(Target::B, n, 2, DoreyReading::Printed).ok());
  }

  auto a3 = RootSystem::build(DynkinType::A, 3);
  CHECK(verify_socle_dist(a3, true, 2).ok());
  CHECK(verify_bkm(a3, true, 2).ok());
}

TEST_CASE("sweeps do not depend on the thread count") {
  auto a = verify_den_dist(Target::C, 4, 1);
  auto b = verify_den_dist(Target::C, 4, 4);
  CHECK(a.checks == b.checks);
  CHECK(a.failures == b.failures);
  CHECK(a.notes == b.notes);
}

TEST_CASE("minimal pair coordinates name the preceding root alpha") {
  auto a5 = RootSystem::build(DynkinType::A, 5);
  auto v = DiagramAutomorphism::folding(a5);
  auto cp = twisted_adapted_point(a5);
  const auto& c = cp.classes().front();
  SeqOrder so(c);
  auto f = folded_quiver(c, v);
  for (RootId g = 0; g < a5.num_positive(); ++g) {
    auto mp = minimal_pair_coordinates(so, f.quiver, g);
    if (a5.height(g) == 1) CHECK(mp.empty());
    for (const auto& m : mp) {
      CHECK(c.precedes(m.alpha, m.beta));
      CHECK(so.is_minimal_pair(m.alpha, m.beta));
      CHECK(m.gamma == g);
      CHECK(m.p > m.r);
      CHECK(m.r > m.q);
    }
  }
}
