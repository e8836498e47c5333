#include "doctest.h"
#include "salg/superkernel.hpp"

using namespace salg;

namespace {

void structurally_sound(const BasedAlgebra& a) {
  CHECK(check_unit(a).empty());
  CHECK(check_bidegrees(a).empty());
  CHECK(check_associativity(a, 400).empty());
}

}  // namespace

TEST_CASE("catalog algebras are unital, graded and associative") {
  Ring q = Ring::rationals();
  for (int n = 1; n <= 3; ++n) {
    structurally_sound(clifford(q, n));
    structurally_sound(twisted_symmetric(q, n));
    structurally_sound(hecke(q, n, q.from_int(2)));
    structurally_sound(olshanski(q, n, q.from_int(2)));
    structurally_sound(sergeev(q, n));
  }
  structurally_sound(twisted_symmetric(Ring::prime_field(3), 4));
}

TEST_CASE("ranks of the catalog") {
  Ring q = Ring::rationals();
  CHECK(clifford(q, 3).rank() == 8);
  CHECK(twisted_symmetric(q, 4).rank() == 24);
  CHECK(hecke(q, 3, q.from_int(2)).rank() == 6);
  CHECK(olshanski(q, 2, q.from_int(2)).rank() == 8);
  CHECK(sergeev(q, 2).rank() == 8);
}

TEST_CASE("Clifford generators square to one and anticommute") {
  Ring q = Ring::rationals();
  BasedAlgebra c = clifford(q, 3);
  std::vector<Element> gens;
  for (Index i = 0; i < c.rank(); ++i)
    if (c.label(i).size() == 2) gens.push_back(c.basis(i));
  REQUIRE(gens.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element anti = c.add(c.mul(gens[i], gens[j]), c.mul(gens[j], gens[i]));
      CHECK(anti == (i == j ? c.scalar(2) : Element{}));
    }
}

TEST_CASE("twisted generators are odd involutions satisfying the twisted braid relations") {
  Ring q = Ring::rationals();
  BasedAlgebra t = twisted_symmetric(q, 4);
  auto gen = [&](int r) { return t.basis(t.at("t" + Permutation::simple(4, r).str())); };
  for (int r = 1; r <= 3; ++r) {
    CHECK(t.mul(gen(r), gen(r)) == t.unit());
    CHECK(t.parity(t.at("t" + Permutation::simple(4, r).str())) == 1);
  }
  CHECK(t.add(t.mul(gen(1), gen(3)), t.mul(gen(3), gen(1))).empty());
  Element lhs = t.mul(t.mul(gen(1), gen(2)), gen(1));
  Element rhs = t.mul(t.mul(gen(2), gen(1)), gen(2));
  CHECK(lhs == rhs);
}

TEST_CASE("tensor, opposite and wreath constructions") {
  Ring q = Ring::rationals();
  BasedAlgebra c1 = clifford(q, 1);
  BasedAlgebra c2 = clifford(q, 2);
  BasedAlgebra t = tensor(c1, c1);
  CHECK(t.rank() == 4);
  structurally_sound(t);
  // C_1 ⊗ C_1 with the sign rule is C_2
  CHECK(find_symmetrizing_form(t).has_value());
  CHECK(trace_functionals(t).size() == trace_functionals(c2).size());
  BasedAlgebra w = wreath(c1, 3);
  CHECK(w.rank() == 8 * 6);
  structurally_sound(w);
  BasedAlgebra op = opposite(twisted_symmetric(q, 3));
  structurally_sound(op);
  WreathIndexer idx(2, 3);
  for (Index i = 0; i < 48; ++i) {
    auto [word, g] = idx.decode(i);
    CHECK(idx.encode(word, g) == i);
  }
}

TEST_CASE("symmetrizing forms on the catalog") {
  Ring q = Ring::rationals();
  for (int n = 1; n <= 3; ++n) {
    for (const BasedAlgebra& a : {clifford(q, n), twisted_symmetric(q, n), hecke(q, n, q.from_int(2))}) {
      REQUIRE(a.form());
      CHECK(validate_symmetrizing(a, *a.form()).ok());
    }
  }
  BasedAlgebra y = olshanski(q, 2, q.from_int(2));
  CHECK_FALSE(validate_symmetrizing(y, *y.form()).symmetric);
  auto solved = find_symmetrizing_form(y);
  REQUIRE(solved);
  CHECK(validate_symmetrizing(y, *solved).ok());
}

TEST_CASE("a form with a degenerate Gram matrix is rejected") {
  Ring q = Ring::rationals();
  BasedAlgebra c = clifford(q, 2);
  std::vector<Scalar> zero(c.rank(), q.zero());
  CHECK_FALSE(validate_symmetrizing(c, zero).gram_invertible);
}

TEST_CASE("endomorphisms of the regular module") {
  Ring q = Ring::rationals();
  auto a = std::make_shared<const BasedAlgebra>(twisted_symmetric(q, 3));
  BasedModule reg = BasedModule::regular(a);
  CHECK(reg.check_action().empty());
  CHECK(hom_rank(hom_space(reg, reg)) == a->rank());
  auto c = std::make_shared<const BasedAlgebra>(clifford(q, 2));
  BasedModule creg = BasedModule::regular(c);
  CHECK(hom_rank(hom_space(creg, creg)) == 4);
}

TEST_CASE("sparse kernel") {
  Ring f3 = Ring::prime_field(3);
  std::vector<SparseVec> rows{{{0, f3.one()}, {1, f3.one()}}, {{1, f3.one()}, {2, f3.one()}}};
  auto ker = sparse_kernel(f3, rows, 3);
  REQUIRE(ker.size() == 1);
  SparseVec want{{0, f3.one()}, {1, f3.from_int(-1)}, {2, f3.one()}};
  Scalar lead = ker[0].front().second;
  CHECK(sparse_scaled(ker[0], lead.inverse()) == want);
}

TEST_CASE("JSON export lists every label") {
  Ring q = Ring::rationals();
  std::string js = algebra_to_json(clifford(q, 1));
  for (const char* key : {"\"basis\"", "\"label\": \"c1\"", "\"products\""}) CHECK(js.find(key) != std::string::npos);
}
