#include "doctest.h"
#include "salg/schur.hpp"

using namespace salg;

TEST_CASE("Schur ranks in small cases") {
  SchurData s121(1, 2, 1);
  CHECK(s121.rank() == 5);
  CHECK(graded_ranks(s121).at(0) == 1);
  SchurData s122(1, 2, 2);
  CHECK(graded_ranks(s122).at(0) == 3);
  CHECK(degree_zero_formula(1, 2, 2) == 3);
}

TEST_CASE("degree-zero rank matches the classical Schur algebra formula") {
  for (auto [n, d, ell] : {std::array{1, 2, 1}, {2, 2, 1}, {1, 3, 2}, {2, 2, 2}, {2, 3, 1}}) {
    SchurData data(n, d, ell);
    auto graded = graded_ranks(data);
    CHECK(graded[0] == degree_zero_formula(n, d, ell));
  }
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) CHECK(degree_zero_formula(n, d, 1) == binomial(n * n + d - 1, d));
}

TEST_CASE("three routes to the rank of S agree") {
  for (auto [n, d, ell] : {std::array{1, 2, 1}, {2, 2, 1}, {1, 3, 1}}) {
    SchurData data(n, d, ell);
    CHECK(invariant_rank(data) == data.rank());
    CHECK(endomorphism_rank(data) == data.rank());
    auto hom = hom_space_rank(data);
    REQUIRE(hom);
    CHECK(*hom == data.rank());
  }
}

TEST_CASE("orbit sums are invariant under the signed place action") {
  SchurData data(2, 2, 1);
  for (Index i = 0; i < data.rank(); ++i) {
    CHECK(data.is_invariant(data.orbit_sum(i)));
    auto coords = data.to_xi(data.orbit_sum(i));
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == std::pair<Index, long>{i, 1});
  }
}

TEST_CASE("S and T are associative unital superalgebras") {
  Ring q = Ring::rationals();
  for (auto [n, d, ell] : {std::array{1, 2, 1}, {2, 2, 1}, {1, 3, 1}}) {
    SchurData data(n, d, ell);
    BasedAlgebra s = schur_S(data, q);
    CHECK(check_unit(s).empty());
    CHECK(check_bidegrees(s).empty());
    CHECK(check_associativity(s, 100).empty());
    BasedAlgebra t = schur_T(data, Ring::p_local(3));
    CHECK(check_unit(t).empty());
  }
}

TEST_CASE("T is integral and agrees with S in low degrees") {
  for (auto [n, d, ell] : {std::array{1, 2, 1}, {2, 2, 1}, {1, 3, 1}}) {
    SchurData data(n, d, ell);
    for (std::uint32_t p : {3u, 5u}) CHECK(t_integrality(data, p).integral);
    CHECK(t_equals_s_up_to(data, 3));
  }
}

TEST_CASE("xi_lambda idempotents decompose the unit and the tensor space") {
  Ring q = Ring::rationals();
  SchurData data(2, 2, 2);
  BasedAlgebra s = schur_S(data, q);
  Element total;
  std::size_t tensor_total = 0;
  for (const auto& lambda : multicompositions(2, 2, 2)) {
    Element e = xi_lambda(data, lambda, q);
    CHECK(s.mul(e, e) == e);
    total = s.add(total, e);
    tensor_total += xi_lambda_tensor_rank(data, lambda);
  }
  CHECK(total == s.unit());
  CHECK(tensor_total == tensor_space_rank(2, 2, 2));
}

TEST_CASE("permutation module rank formula") {
  for (int ell = 1; ell <= 2; ++ell)
    for (int n = 1; n <= 2; ++n)
      for (int d = 1; d <= 3; ++d)
        for (const auto& lambda : colored_compositions(ell, n, d))
          CHECK(perm_module_rank(lambda, ell) == perm_module_formula(lambda, ell));
}

TEST_CASE("special elements: i_rs is invariant and the i_la sum identity holds") {
  for (int ell = 1; ell <= 2; ++ell) {
    SchurData data(2, 2, ell);
    for (Index x = 0; x < data.brauer().rank(); ++x) {
      CHECK(data.is_invariant(i_rs(data, 1, 1, x)));
      CHECK(data.is_invariant(i_rs(data, 1, 2, x)));
      AmbientElement sum;
      for (const auto& lambda : multicompositions(ell, 1, 1))
        for (const auto& [t, c] : i_la(data, lambda, x)) sum[t] += c;
      std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
      CHECK(sum == xi_x_one(data, {1}, x));
    }
  }
}

TEST_CASE("generation by degree zero and special elements") {
  for (int ell = 1; ell <= 2; ++ell) {
    SchurData data(2, 2, ell);
    for (const Ring& ring : {Ring::rationals(), Ring::prime_field(3)}) {
      CHECK(generated_subalgebra(data, ring, SeedKind::DegreeZeroAndI11).equal);
      CHECK(generated_subalgebra(data, ring, SeedKind::DegreeZeroAndILa).equal);
    }
    auto zero_only = generated_subalgebra(data, Ring::prime_field(3), SeedKind::DegreeZero);
    CHECK_FALSE(zero_only.equal);
    CHECK(zero_only.closure_ranks.size() == 1);
  }
}
