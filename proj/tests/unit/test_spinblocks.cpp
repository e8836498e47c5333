#include "doctest.h"
#include "salg/spinblocks.hpp"

using namespace salg;

TEST_CASE("spin Jucys-Murphy elements") {
  Ring f3 = Ring::prime_field(3);
  BasedAlgebra t = twisted_symmetric(f3, 3);
  auto m = jm_elements(t, 3);
  REQUIRE(m.size() == 3);
  CHECK(m[0].empty());
  CHECK(m[1] == t.basis(t.at("t" + Permutation::simple(3, 1).str())));
  CHECK(t.mul(m[1], m[1]) == t.unit());
  Element a = t.mul(m[1], m[1]), b = t.mul(m[2], m[2]);
  CHECK(t.mul(a, b) == t.mul(b, a));
  for (const auto& x : m)
    if (!x.empty()) CHECK(t.bidegree_of(x)->parity == 1);
}

TEST_CASE("n = 1 is a single block") {
  SpinBlockReport r = block_decomposition(1, 3);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].theta == RootVec{1, 0});
  CHECK(r.blocks[0].rank == 1);
}

TEST_CASE("block labels are contents of p-strict partitions") {
  for (int p : {3, 5})
    for (int n = 1; n <= 5; ++n) {
      SpinBlockReport r = block_decomposition(n, p);
      INFO("n=" << n << " p=" << p);
      CHECK(r.ok());
      CHECK(r.labels_match);
      CHECK(r.total_rank == factorial(n));
      for (const auto& dims : r.eigenspace_dims) {
        std::size_t sum = 0;
        for (auto x : dims) sum += x;
        CHECK(sum == factorial(n));
      }
    }
  SpinBlockReport five = block_decomposition(5, 3);
  CHECK(five.blocks.size() == 2);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(block_decomposition(7, 3), GuardExceeded);
  CHECK_THROWS_AS(block_decomposition(3, 7), GuardExceeded);
}
