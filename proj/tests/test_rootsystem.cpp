#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schub/format.hpp"
#include "schub/rootsystem.hpp"
#include "schub/weyl.hpp"

using namespace schub;

namespace {
Root R(std::initializer_list<int> c) { return Root(std::vector<int>(c)); }
}

TEST_CASE("root counts") {
  CHECK(RootSystem::build(Family::A, 2).all_roots().size() == 6);
  CHECK(RootSystem::build(Family::A, 3).all_roots().size() == 12);
  CHECK(RootSystem::build(Family::B, 2).all_roots().size() == 8);
  CHECK(RootSystem::build(Family::B, 3).all_roots().size() == 18);
  CHECK(RootSystem::build(Family::C, 3).all_roots().size() == 18);
  CHECK(RootSystem::build(Family::D, 4).all_roots().size() == 24);
  CHECK(RootSystem::build(Family::G2, 2).all_roots().size() == 12);
  CHECK(RootSystem::build(Family::F4, 4).all_roots().size() == 48);
}

TEST_CASE("positive/negative split") {
  for (auto fam : {Family::A, Family::B, Family::C}) {
    RootSystem rs = RootSystem::build(fam, 3);
    CHECK(2 * rs.positive_roots().size() == rs.all_roots().size());
    for (const Root& p : rs.positive_roots()) {
      CHECK(rs.is_positive(p));
      CHECK(!rs.is_positive(-p));
      CHECK(rs.is_root(-p));
    }
  }
}

TEST_CASE("B2 form: alpha short, beta long") {
  RootSystem rs = RootSystem::build(Family::B, 2);
  Root a = R({1, 0}), b = R({0, 1});
  CHECK(rs.inner(a, a) == Rat(1));
  CHECK(rs.inner(b, b) == Rat(2));
  CHECK(rs.inner(a, b) == Rat(-1));
  CHECK(rs.is_short(a));
  CHECK(rs.is_long(b));
  CHECK(rs.is_short(R({1, 1})));        // alpha + beta
  CHECK(rs.is_long(R({2, 1})));         // 2 alpha + beta
  CHECK(rs.inner(R({1, 1}), R({2, 1})) == Rat(1));
  CHECK(rs.inner(a, R({1, 1})) == Rat(0));
}

TEST_CASE("reflections") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  CHECK(b2.reflect(R({0, 1}), R({1, 1})) == R({1, 0}));      // r_beta(a+b) = a
  CHECK(b2.reflect(R({1, 0}), R({0, 1})) == R({2, 1}));      // r_alpha(b) = 2a+b

  RootSystem g2 = RootSystem::build(Family::G2, 2);
  Root lambda = R({3, 2});
  CHECK(g2.is_root(lambda));
  CHECK(g2.is_long(lambda));
  CHECK(g2.reflect(lambda, R({0, 1})) == -R({3, 1}));        // r_lambda(b) = -(3a+b)
}

TEST_CASE("form is W-invariant") {
  for (auto spec : {std::pair{Family::B, 3}, {Family::G2, 2}, {Family::D, 4}}) {
    RootSystem rs = RootSystem::build(spec.first, spec.second);
    for (const Root& s : rs.simple_roots())
      for (const Root& a : rs.all_roots())
        for (const Root& b : rs.all_roots())
          CHECK(rs.inner(rs.reflect(s, a), rs.reflect(s, b)) == rs.inner(a, b));
  }
}

TEST_CASE("pairings are small integers") {
  RootSystem rs = RootSystem::build(Family::G2, 2);
  for (const Root& a : rs.all_roots())
    for (const Root& b : rs.all_roots()) {
      int p = rs.pairing(b, a);
      CHECK(p >= -3);
      CHECK(p <= 3);
      if (a == b) CHECK(p == 2);
    }
}

TEST_CASE("cartan matrix entries") {
  RootSystem rs = RootSystem::build(Family::B, 3);
  for (int i = 0; i < 3; ++i) CHECK(rs.cartan(i, i) == 2);
  // alpha_3 is the short simple root: <a3, a2^vee> = -1, <a2, a3^vee> = -2.
  CHECK(rs.cartan(1, 2) == -1);
  CHECK(rs.cartan(2, 1) == -2);
}

TEST_CASE("b2_subsystem in B2 itself") {
  RootSystem rs = RootSystem::build(Family::B, 2);
  Root mu = R({0, 1}), phi = R({2, 1});  // the two positive long roots
  CHECK(rs.inner(mu, phi) == Rat(0));
  auto basis = rs.b2_subsystem(mu, phi);
  REQUIRE(basis.has_value());
  CHECK(basis->short_simple == R({1, 0}));
  CHECK(basis->long_simple == R({0, 1}));
}

TEST_CASE("b2_subsystem in B3: present iff the half-sum is a short root") {
  RootSystem rs = RootSystem::build(Family::B, 3);
  int found = 0;
  const auto& pos = rs.positive_roots();
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = i + 1; j < pos.size(); ++j) {
      const Root &mu = pos[i], &phi = pos[j];
      if (!rs.is_long(mu) || !rs.is_long(phi)) continue;
      if (rs.inner(mu, phi) != Rat(0)) continue;
      Root sum = mu + phi;
      bool even = true;
      for (int c : sum.c) even = even && c % 2 == 0;
      Root half({sum.c[0] / 2, sum.c[1] / 2, sum.c[2] / 2});
      bool half_short = even && rs.is_root(half) && rs.is_short(half);
      auto basis = rs.b2_subsystem(mu, phi);
      CHECK(basis.has_value() == half_short);
      if (basis) {
        ++found;
        CHECK(rs.is_short(basis->short_simple));
        CHECK(rs.is_long(basis->long_simple));
        CHECK(rs.is_positive(basis->short_simple));
        CHECK(rs.is_positive(basis->long_simple));
      }
    }
  CHECK(found > 0);
}

TEST_CASE("no b2_subsystem in simply laced systems") {
  RootSystem rs = RootSystem::build(Family::A, 3);
  CHECK(rs.simply_laced());
  const auto& pos = rs.positive_roots();
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = i + 1; j < pos.size(); ++j)
      CHECK(!rs.b2_subsystem(pos[i], pos[j]).has_value());
}

TEST_CASE("rank guard") {
  CHECK_THROWS(RootSystem::build(Family::A, 0));
  CHECK_THROWS(RootSystem::build(Family::A, 99));
  CHECK_THROWS(RootSystem::build(Family::G2, 3));
  CHECK_THROWS(RootSystem::build(Family::E6, 7));
}
