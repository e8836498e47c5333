#include <algorithm>
#include <memory>

#include "salg/schur.hpp"

namespace salg {

namespace {

Element schur_unit(const SchurData& data, const Ring& ring) {
  Element unit;
  for (Index i = 0; i < data.rank(); ++i) {
    const auto& t = data.representative(i);
    bool diagonal_idempotent = std::all_of(t.begin(), t.end(), [&](std::uint16_t c) {
      return data.brauer().is_idempotent(data.code_b(c)) && data.code_r(c) == data.code_s(c);
    });
    if (diagonal_idempotent) unit.emplace_back(i, ring.one());
  }
  return unit;
}

std::vector<std::string> schur_labels(const SchurData& data, const std::string& head) {
  std::vector<std::string> labels;
  for (Index i = 0; i < data.rank(); ++i) labels.push_back(head + data.label(i).substr(2));
  return labels;
}

std::vector<BiDegree> schur_bidegrees(const SchurData& data) {
  std::vector<BiDegree> out;
  for (Index i = 0; i < data.rank(); ++i) out.push_back(data.bidegree(i));
  return out;
}

mpq_class eta_constant(const SchurData& data, Index i, Index j, Index k, long xi_constant) {
  mpz_class num = xi_constant;
  num *= static_cast<unsigned long>(data.c_factorial(i));
  num *= static_cast<unsigned long>(data.c_factorial(j));
  mpq_class q(num, mpz_class(static_cast<unsigned long>(data.c_factorial(k))));
  q.canonicalize();
  return q;
}

}  // namespace

BasedAlgebra schur_S(const SchurData& data, const Ring& ring) {
  auto shared = std::make_shared<SchurData>(data);
  auto rule = [shared, ring](Index i, Index j) {
    Element out;
    for (auto [k, v] : shared->xi_product(i, j)) {
      Scalar s = ring.from_int(v);
      if (!s.is_zero()) out.emplace_back(k, s);
    }
    return out;
  };
  std::size_t cache = data.rank() <= 1000 ? data.rank() : 0;
  return BasedAlgebra(ring, schur_labels(data, "xi"), schur_bidegrees(data), schur_unit(data, ring), rule, cache);
}

BasedAlgebra schur_T(const SchurData& data, const Ring& ring) {
  auto shared = std::make_shared<SchurData>(data);
  auto rule = [shared, ring](Index i, Index j) {
    Element out;
    for (auto [k, v] : shared->xi_product(i, j)) {
      Scalar s = ring.from_rational(eta_constant(*shared, i, j, k, v));
      if (!s.is_zero()) out.emplace_back(k, s);
    }
    return out;
  };
  std::size_t cache = data.rank() <= 1000 ? data.rank() : 0;
  return BasedAlgebra(ring, schur_labels(data, "eta"), schur_bidegrees(data), schur_unit(data, ring), rule, cache);
}

IntegralityReport t_integrality(const SchurData& data, std::uint32_t p) {
  IntegralityReport report;
  for (Index i = 0; i < data.rank(); ++i)
    for (Index j = 0; j < data.rank(); ++j)
      for (auto [k, v] : data.xi_product(i, j)) {
        ++report.checked;
        mpq_class q = eta_constant(data, i, j, k, v);
        if (!is_p_local(q, p) && report.integral) {
          report.integral = false;
          report.first_failure = data.label(i) + " * " + data.label(j) + " -> " + q.get_str() + " " + data.label(k);
        }
      }
  return report;
}

bool t_equals_s_up_to(const SchurData& data, int max_degree) {
  for (Index i = 0; i < data.rank(); ++i)
    if (data.bidegree(i).degree <= max_degree && data.c_factorial(i) != 1) return false;
  return true;
}

std::map<int, std::size_t> graded_ranks(const SchurData& data) {
  std::map<int, std::size_t> out;
  for (Index i = 0; i < data.rank(); ++i) ++out[data.bidegree(i).degree];
  return out;
}

std::size_t degree_zero_formula(int n, int d, int ell) {
  std::size_t total = 0;
  for (const auto& split : compositions(ell, d)) {
    std::size_t term = 1;
    for (int dj : split) term *= binomial(n * n + dj - 1, dj);
    total += term;
  }
  return total;
}

Element xi_lambda(const SchurData& data, const MultiComposition& lambda, const Ring& ring) {
  if (static_cast<int>(lambda.size()) != data.ell()) throw ShapeError("multicomposition has the wrong number of colors");
  CodeTuple t;
  for (int r = 1; r <= data.n(); ++r)
    for (int j = 0; j < data.ell(); ++j) {
      int parts = r - 1 < static_cast<int>(lambda[j].size()) ? lambda[j][r - 1] : 0;
      for (int m = 0; m < parts; ++m) t.push_back(data.code(data.brauer().e(j), r, r));
    }
  if (static_cast<int>(t.size()) != data.d()) throw ShapeError("multicomposition has the wrong size");
  auto loc = data.locate(t);
  return {{loc->first, ring.from_int(loc->second)}};
}

}  // namespace salg
