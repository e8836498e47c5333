#include "doctest.h"
#include "salg/rootdata.hpp"

using namespace salg;

TEST_CASE("Gram matrix is symmetric and kills the null root") {
  for (int ell = 1; ell <= 4; ++ell) {
    RootSystem roots(ell);
    RootVec delta = roots.delta();
    for (int i = 0; i <= ell; ++i) {
      CHECK(roots.pairing(delta, roots.simple(i)) == 0);
      for (int j = 0; j <= ell; ++j) CHECK(roots.gram(i, j) == roots.gram(j, i));
    }
    CHECK(roots.p() == 2 * ell + 1);
  }
}

TEST_CASE("nucleus and mass") {
  RootSystem roots(1);
  auto label = roots.nucleus_mass({2, 1});
  REQUIRE(label);
  CHECK(label->nucleus == RootVec{0, 0});
  CHECK(label->mass == 1);
  CHECK(roots.nucleus_mass({1, 0}));
  CHECK_FALSE(roots.nucleus_mass({0, 1}));
  CHECK_FALSE(roots.nucleus_mass({2, 0}));
}

TEST_CASE("every nucleus word has weight rho and is recovered by i_rho") {
  for (int ell = 1; ell <= 3; ++ell) {
    RootSystem roots(ell);
    for (const auto& nu : roots.nuclei(6)) {
      auto label = roots.nucleus_mass(nu.rho);
      REQUIRE(label);
      CHECK(label->nucleus == nu.rho);
      CHECK(label->mass == 0);
      DivWord w = roots.i_rho(nu.rho, nu.applied_word);
      CHECK(roots.wt(flatten(w)) == nu.rho);
    }
  }
}

TEST_CASE("content of p-strict partitions lands in W") {
  for (int ell = 1; ell <= 2; ++ell) {
    RootSystem roots(ell);
    int p = roots.p();
    CHECK(roots.content({1}) == roots.simple(0));
    for (int n = 0; n <= 8; ++n)
      for (const auto& lambda : p_strict_partitions(n, p)) {
        auto label = roots.nucleus_mass(roots.content(lambda));
        REQUIRE(label);
        CHECK(label->nucleus == roots.content(bar_core(lambda, p)));
        CHECK(label->mass == bar_weight(lambda, p));
      }
  }
}

TEST_CASE("Gelfand-Graev words have weight m delta") {
  for (int ell = 1; ell <= 3; ++ell) {
    RootSystem roots(ell);
    for (int m = 1; m <= 3; ++m)
      for (int color = 0; color < ell; ++color) {
        DivWord w = roots.gg_word(m, color);
        RootVec want = roots.delta();
        for (auto& x : want) x *= m;
        CHECK(roots.wt(flatten(w)) == want);
        CHECK(roots.gg_factorial(m, color) == div_factorial(w));
      }
    CHECK_THROWS(roots.gg_word(1, ell));
  }
}

TEST_CASE("RoCK predicate") {
  RootSystem roots(1);
  CHECK(roots.is_rock({0, 0}));
  for (const auto& nu : roots.nuclei(8)) {
    RootVec theta = nu.rho;
    for (int i = 0; i <= 1; ++i) theta[i] += roots.delta()[i];
    bool rock = roots.copairing(nu.rho, 0) >= 2 && roots.copairing(nu.rho, 1) >= 0;
    CHECK(roots.is_rock(theta) == rock);
  }
}

TEST_CASE("coroot pairings of a root-lattice vector sum to zero against the central element") {
  for (int ell = 1; ell <= 3; ++ell) {
    RootSystem roots(ell);
    for (const auto& nu : roots.nuclei(10)) {
      int total = roots.copairing(nu.rho, 0);
      for (int i = 1; i <= ell; ++i) total += 2 * roots.copairing(nu.rho, i);
      CHECK(total == 0);
      // so the RoCK bounds cannot all hold once the mass is positive
      RootVec theta = nu.rho;
      for (int i = 0; i <= ell; ++i) theta[i] += roots.delta()[i];
      CHECK_FALSE(roots.is_rock(theta));
    }
  }
}
