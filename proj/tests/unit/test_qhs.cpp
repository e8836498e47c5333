#include "doctest.h"
#include "salg/qhs.hpp"

using namespace salg;

namespace {

int poly_degree(const QHSPresentation& pres, const PolyTerm& t, int i, int j) {
  return t.u_exp * pres.y_bidegree(i).degree + t.v_exp * pres.y_bidegree(j).degree;
}

}  // namespace

TEST_CASE("Q polynomials are homogeneous of degree -2(a_i|a_j)") {
  for (int ell = 1; ell <= 3; ++ell) {
    QHSPresentation pres(ell);
    for (int i = 0; i <= ell; ++i)
      for (int j = 0; j <= ell; ++j) {
        if (i == j) {
          CHECK(pres.q_poly(i, j).empty());
          continue;
        }
        int want = -2 * pres.roots().gram(i, j);
        for (const auto& t : pres.q_poly(i, j)) CHECK(poly_degree(pres, t, i, j) == want);
      }
  }
}

TEST_CASE("B polynomials are homogeneous where nonzero") {
  for (int ell = 1; ell <= 3; ++ell) {
    QHSPresentation pres(ell);
    for (int i = 0; i <= ell; ++i)
      for (int j = 0; j <= ell; ++j) {
        if (i == j) continue;
        auto b = pres.b_poly(i, j, i);
        if (b.empty()) continue;
        // ψ_rψ_{r+1}ψ_r 1_{iji} has degree deg ψ(i,j)·2 + deg ψ(i,i)
        int want = 2 * pres.psi_bidegree(i, j).degree + pres.psi_bidegree(i, i).degree;
        for (const auto& t : b) CHECK(poly_degree(pres, t, i, i) == want);
      }
  }
}

TEST_CASE("normal form basics") {
  Ring q = Ring::rationals();
  QuiverHecke h(q, 1, {1, 1});
  for (const auto& i : h.words()) {
    auto e = h.idempotent(i);
    CHECK(h.mul(e, e) == e);
  }
  QuiverHecke::Element total;
  for (const auto& i : h.words()) total = h.add(total, h.idempotent(i));
  CHECK(total == h.one());
  // ψ_1² 1_{01} = Q_{01}(y_1, y_2) 1_{01}
  std::vector<int> w01{0, 1};
  auto sq = h.mul(h.psi(1, {1, 0}), h.psi(1, w01));
  CHECK(sq == h.poly(h.presentation().q_poly(0, 1), 1, 1, w01));
}

TEST_CASE("relation suite passes for small theta") {
  Ring q = Ring::rationals();
  for (int ell = 1; ell <= 2; ++ell) {
    RootSystem roots(ell);
    for (RootVec theta : {roots.simple(0), roots.delta()}) {
      for (const auto& tally : relation_suite(q, ell, theta, 15, 1)) {
        INFO(tally.name << " " << tally.first_failure);
        CHECK(tally.failures == 0);
      }
    }
  }
  for (const auto& tally : relation_suite(Ring::prime_field(3), 1, {2, 1}, 10, 2)) CHECK(tally.failures == 0);
}

TEST_CASE("graded dimensions agree with the rewritten spanning family") {
  for (const RootVec& theta : {RootVec{1, 1}, RootVec{2, 1}, RootVec{0, 2}}) {
    for (const auto& row : graded_dim_check(Ring::rationals(), 1, theta, -8, 8)) CHECK(row.count == row.rank);
  }
}

TEST_CASE("cyclotomic quotient is nonzero exactly on W") {
  RootSystem roots(1);
  for (int h = 0; h <= 3; ++h)
    for (int a = 0; a <= h; ++a) {
      RootVec theta{a, h - a};
      auto res = cyclotomic_close(Ring::prime_field(3), 1, theta, 20, default_window(1));
      CHECK(res.stabilized);
      CHECK((res.total_rank() > 0) == roots.nucleus_mass(theta).has_value());
    }
  auto delta = cyclotomic_close(Ring::rationals(), 1, {2, 1}, 20, default_window(1));
  CHECK(delta.total_rank() == 3);
  CHECK(delta.ranks == std::map<int, std::size_t>{{0, 1}, {2, 1}, {4, 1}});
}

TEST_CASE("nuclei give matrix blocks") {
  RootSystem roots(1);
  for (const auto& nu : roots.nuclei(3)) {
    auto r = matrix_block_check(Ring::prime_field(3), 1, nu, 20, default_window(1));
    REQUIRE(r);
    CHECK(r->ok());
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(cyclotomic_close(Ring::rationals(), 3, {1, 0, 0, 0}, 4, 2), GuardExceeded);
  CHECK_THROWS(cyclotomic_close(Ring::p_local(3), 1, {1, 0}, 4, 2));
}
