#include <random>

#include "doctest.h"
#include "salg/linalg.hpp"

using namespace salg;

namespace {

ExactMatrix random_matrix(const Ring& ring, std::size_t r, std::size_t c, std::mt19937& gen) {
  ExactMatrix m(ring, r, c);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = ring.from_int(dist(gen));
  return m;
}

Scalar leibniz_det(const ExactMatrix& m) {
  std::size_t n = m.rows();
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  Scalar total = m.ring().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = m.ring().from_int(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("prime field arithmetic wraps") {
  Ring f5 = Ring::prime_field(5);
  CHECK(f5.from_int(7) == f5.from_int(2));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK((f5.from_int(3) * f5.from_int(2)).is_one());
  CHECK(f5.from_int(2).inverse() == f5.from_int(3));
  CHECK(f5.from_int(10).is_zero());
  CHECK_THROWS(Ring::prime_field(9));
  CHECK_THROWS(Ring::prime_field(2));
}

TEST_CASE("p-local integers reject non-local denominators") {
  Ring z3 = Ring::p_local(3);
  CHECK(is_p_local(mpq_class(1, 2), 3));
  CHECK_FALSE(is_p_local(mpq_class(1, 3), 3));
  CHECK_NOTHROW(z3.from_rational(mpq_class(5, 4)));
  CHECK_THROWS(z3.from_rational(mpq_class(1, 6)));
  CHECK_FALSE(z3.from_int(3).is_unit());
  CHECK(z3.from_int(2).is_unit());
}

TEST_CASE("rationals stay exact") {
  Ring q = Ring::rationals();
  Scalar third = q.from_rational(mpq_class(1, 3));
  CHECK((third + third + third).is_one());
  CHECK(q.parse_scalar("-7/21") == q.from_rational(mpq_class(-1, 3)));
}

TEST_CASE("solve_linear trivial cases") {
  Ring q = Ring::rationals();
  ExactMatrix id = ExactMatrix::identity(q, 3);
  ExactMatrix rhs(q, 3, 1);
  rhs.at(0, 0) = q.from_int(4);
  rhs.at(1, 0) = q.from_int(-2);
  rhs.at(2, 0) = q.from_rational(mpq_class(1, 7));
  SolveResult s = solve_linear(id, rhs);
  REQUIRE(s.consistent);
  CHECK(*s.particular == rhs);
  CHECK(s.kernel.empty());

  ExactMatrix zero(q, 1, 1);
  ExactMatrix one(q, 1, 1);
  one.at(0, 0) = q.one();
  CHECK_FALSE(solve_linear(zero, one).consistent);
}

TEST_CASE("rank of a product with known inner dimension") {
  std::mt19937 gen(11);
  for (const Ring& ring : {Ring::prime_field(3), Ring::prime_field(7), Ring::rationals()}) {
    for (std::size_t inner = 0; inner <= 4; ++inner) {
      ExactMatrix a(ring, 5, inner), b(ring, inner, 6);
      // force full rank factors: identity blocks plus noise below/right of them
      for (std::size_t i = 0; i < inner; ++i) {
        a.at(i, i) = ring.one();
        b.at(i, i) = ring.one();
        for (std::size_t j = 0; j < inner; ++j)
          if (j > i) b.at(i, j) = ring.from_int(static_cast<long>(gen() % 3));
        for (std::size_t r = inner; r < 5; ++r) a.at(r, i) = ring.from_int(static_cast<long>(gen() % 5));
      }
      ExactMatrix m = inner ? a * b : ExactMatrix(ring, 5, 6);
      CHECK(rank(m) == inner);
      auto ker = kernel_basis(m);
      CHECK(ker.size() == 6 - inner);
      for (const auto& v : ker)
        for (std::size_t r = 0; r < 5; ++r) {
          Scalar acc = ring.zero();
          for (std::size_t c = 0; c < 6; ++c) acc += m.at(r, c) * v[c];
          CHECK(acc.is_zero());
        }
    }
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 gen(5);
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(5)})
    for (int trial = 0; trial < 10; ++trial) {
      ExactMatrix m = random_matrix(ring, 4, 4, gen);
      CHECK(determinant(m) == leibniz_det(m));
    }
}

TEST_CASE("p-local solve flags non-local solutions") {
  Ring z3 = Ring::p_local(3);
  ExactMatrix m(z3, 1, 1), rhs(z3, 1, 1);
  m.at(0, 0) = z3.from_int(3);
  rhs.at(0, 0) = z3.one();
  SolveResult s = solve_linear(m, rhs);
  CHECK(s.consistent);
  CHECK_FALSE(s.p_local);
  m.at(0, 0) = z3.from_int(2);
  CHECK(solve_linear(m, rhs).p_local);
}

TEST_CASE("row space reduction and coordinates") {
  Ring f3 = Ring::prime_field(3);
  RowSpace space(f3);
  SparseVec a{{0, f3.one()}, {2, f3.from_int(2)}};
  SparseVec b{{1, f3.one()}, {2, f3.one()}};
  CHECK(space.insert(a));
  CHECK(space.insert(b));
  SparseVec sum = a;
  sparse_axpy(sum, f3.from_int(2), b);
  CHECK_FALSE(space.insert(sum));
  CHECK(space.rank() == 2);
  auto basis = space.reduced_basis();
  auto coords = RowSpace::coordinates(basis, sum);
  SparseVec rebuilt;
  for (const auto& [i, c] : coords) sparse_axpy(rebuilt, c, basis[i]);
  CHECK(rebuilt == sum);
}
