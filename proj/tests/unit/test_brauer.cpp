#include "doctest.h"
#include "salg/brauer.hpp"

using namespace salg;

TEST_CASE("Brauer tree algebra ranks") {
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(3), Ring::prime_field(5)})
    for (int ell = 1; ell <= 4; ++ell) {
      BasedAlgebra a = brauer_algebra(ring, ell);
      CHECK(a.rank() == static_cast<std::size_t>(4 * ell - 1));
      for (int j = 0; j < ell; ++j) CHECK(brauer_right_ideal_rank(a, ell, j) == (j == ell - 1 ? 3u : 4u));
    }
}

TEST_CASE("Brauer tree algebra is a graded superalgebra") {
  Ring q = Ring::rationals();
  for (int ell = 1; ell <= 4; ++ell)
    for (auto v : {BrauerVariant::Standard, BrauerVariant::Regraded}) {
      BasedAlgebra a = brauer_algebra(q, ell, v);
      CHECK(check_unit(a).empty());
      CHECK(check_bidegrees(a).empty());
      CHECK(check_associativity(a).empty());
    }
}

TEST_CASE("idempotents are orthogonal and sum to one") {
  Ring q = Ring::rationals();
  for (int ell = 1; ell <= 3; ++ell) {
    BasedAlgebra a = brauer_algebra(q, ell);
    auto es = brauer_idempotents(a, ell);
    Element sum;
    for (std::size_t i = 0; i < es.size(); ++i) {
      sum = a.add(sum, es[i]);
      for (std::size_t j = 0; j < es.size(); ++j) CHECK(a.mul(es[i], es[j]) == (i == j ? es[i] : Element{}));
    }
    CHECK(sum == a.unit());
  }
}

TEST_CASE("the loop is odd and the regraded algebra keeps the loop's bidegree") {
  Ring q = Ring::rationals();
  for (int ell = 1; ell <= 3; ++ell) {
    BrauerIndex idx(ell);
    BasedAlgebra a = brauer_algebra(q, ell);
    BasedAlgebra r = brauer_algebra(q, ell, BrauerVariant::Regraded);
    CHECK(a.parity(idx.u()) == 1);
    CHECK(r.bidegree(idx.u()) == a.bidegree(idx.u()));
    CHECK(idx.source(idx.u()) == 0);
    CHECK(idx.target(idx.u()) == 0);
  }
}

TEST_CASE("Brauer tree algebra is symmetric") {
  Ring q = Ring::rationals();
  for (int ell = 1; ell <= 4; ++ell) {
    BasedAlgebra a = brauer_algebra(q, ell);
    auto form = a.form() ? a.form() : find_symmetrizing_form(a);
    REQUIRE(form);
    CHECK(validate_symmetrizing(a, *form).ok());
  }
}

TEST_CASE("affine algebra: rewriting rank equals the monomial count") {
  Ring q = Ring::rationals();
  for (int m = 0; m <= 6; ++m) CHECK(affine_graded_rank(q, 1, 2, m, 3) == affine_monomial_count(1, 2, m));
  for (int m = 0; m <= 4; ++m) CHECK(affine_graded_rank(Ring::prime_field(3), 2, 2, m, 2) == affine_monomial_count(2, 2, m));
}

TEST_CASE("affine algebra relations") {
  Ring q = Ring::rationals();
  AffineBrauer h(q, 1, 2, 4);
  CHECK(h.mul(h.s(1), h.s(1)) == h.one());
  CHECK(h.mul(h.z(1), h.z(2)) == h.mul(h.z(2), h.z(1)));
  CHECK(h.mul(h.one(), h.z(1)) == h.z(1));
  CHECK_THROWS_AS(AffineBrauer(q, 1, 2, 1).mul(h.z(1), h.mul(h.z(1), h.z(1))), GuardExceeded);
}
