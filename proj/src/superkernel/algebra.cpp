#include <algorithm>
#include <sstream>

#include "salg/superkernel.hpp"

namespace salg {

int place_permutation_sign(const Permutation& g, const std::vector<int>& parities) {
  int e = 0;
  int d = static_cast<int>(parities.size());
  for (int x = 0; x < d; ++x) {
    if (!parities[x]) continue;
    for (int y = x + 1; y < d; ++y)
      if (parities[y] && g(x + 1) > g(y + 1)) ++e;
  }
  return sign_of(e);
}

BasedAlgebra::BasedAlgebra(Ring ring, std::vector<std::string> labels, std::vector<BiDegree> bidegrees, Element unit,
                           ProductRule rule, std::size_t cache_limit)
    : ring_(std::move(ring)),
      labels_(std::move(labels)),
      bidegrees_(std::move(bidegrees)),
      unit_(std::move(unit)),
      rule_(std::move(rule)) {
  if (labels_.size() != bidegrees_.size()) throw ShapeError("labels and bidegrees differ in length");
  for (Index i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second) throw ShapeError("duplicate basis label " + labels_[i]);
  if (rank() <= cache_limit) materialize();
}

BasedAlgebra BasedAlgebra::from_table(Ring ring, std::vector<std::string> labels, std::vector<BiDegree> bidegrees,
                                      Element unit, std::vector<Element> table) {
  std::size_t n = labels.size();
  if (table.size() != n * n) throw ShapeError("structure table has wrong size");
  auto shared = std::make_shared<std::vector<Element>>(std::move(table));
  return BasedAlgebra(std::move(ring), std::move(labels), std::move(bidegrees), std::move(unit),
                      [shared, n](Index a, Index b) { return (*shared)[a * n + b]; });
}

std::optional<Index> BasedAlgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index BasedAlgebra::at(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw std::invalid_argument("unknown basis label " + label);
  return *i;
}

void BasedAlgebra::materialize() const {
  if (cached_) return;
  std::size_t n = rank();
  table_.assign(n * n, {});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table_[a * n + b] = rule_(a, b);
  cached_ = true;
}

Element BasedAlgebra::basis_product(Index a, Index b) const {
  if (cached_) return table_[a * rank() + b];
  return rule_(a, b);
}

Element BasedAlgebra::mul(const Element& x, const Element& y) const {
  Accumulator<Index> acc;
  for (const auto& [a, s] : x)
    for (const auto& [b, t] : y) {
      Scalar st = s * t;
      const Element prod = basis_product(a, b);
      for (const auto& [c, u] : prod) acc.add(c, st * u);
    }
  return acc.take();
}

Element BasedAlgebra::scalar(long v) const { return sparse_scaled(unit_, ring_.from_int(v)); }

Element BasedAlgebra::add(const Element& x, const Element& y) const {
  Element out = x;
  sparse_axpy(out, ring_.one(), y);
  return out;
}

Element BasedAlgebra::sub(const Element& x, const Element& y) const {
  Element out = x;
  sparse_axpy(out, -ring_.one(), y);
  return out;
}

std::optional<BiDegree> BasedAlgebra::bidegree_of(const Element& x) const {
  if (x.empty()) return std::nullopt;
  BiDegree b = bidegrees_[x.front().first];
  for (const auto& [i, s] : x)
    if (!(bidegrees_[i] == b)) return std::nullopt;
  return b;
}

std::string BasedAlgebra::format(const Element& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, s] : x) {
    if (!out.empty()) out += " + ";
    out += s.is_one() ? labels_[i] : "(" + s.str() + ")" + labels_[i];
  }
  return out;
}

Scalar BasedAlgebra::apply_form(const Element& x) const {
  if (!form_) throw std::logic_error("algebra has no attached form");
  Scalar s = ring_.zero();
  for (const auto& [i, c] : x) s += c * (*form_)[i];
  return s;
}

std::vector<std::string> check_unit(const BasedAlgebra& a) {
  std::vector<std::string> fails;
  for (Index i = 0; i < a.rank(); ++i) {
    Element b = a.basis(i);
    if (a.mul(a.unit(), b) != b) fails.push_back("1*" + a.label(i) + " != " + a.label(i));
    if (a.mul(b, a.unit()) != b) fails.push_back(a.label(i) + "*1 != " + a.label(i));
  }
  return fails;
}

std::vector<std::string> check_bidegrees(const BasedAlgebra& a) {
  std::vector<std::string> fails;
  for (Index i = 0; i < a.rank(); ++i)
    for (Index j = 0; j < a.rank(); ++j) {
      BiDegree want = a.bidegree(i) + a.bidegree(j);
      for (const auto& [k, s] : a.basis_product(i, j))
        if (!(a.bidegree(k) == want)) fails.push_back(a.label(i) + "*" + a.label(j) + " leaves bidegree at " + a.label(k));
    }
  return fails;
}

std::vector<std::string> check_associativity(const BasedAlgebra& a, std::size_t max_rank) {
  std::vector<std::string> fails;
  if (a.rank() > max_rank) return {"rank above associativity limit"};
  std::size_t n = a.rank();
  std::vector<Element> prod(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Element& ij = prod[i * n + j];
      for (Index k = 0; k < n; ++k) {
        Accumulator<Index> left, right;
        for (const auto& [m, s] : ij)
          for (const auto& [c, t] : prod[m * n + k]) left.add(c, s * t);
        for (const auto& [m, s] : prod[j * n + k])
          for (const auto& [c, t] : prod[i * n + m]) right.add(c, s * t);
        if (left.take() != right.take()) {
          fails.push_back("(" + a.label(i) + a.label(j) + ")" + a.label(k));
          if (fails.size() > 20) return fails;
        }
      }
    }
  return fails;
}

SymmetrizingReport validate_symmetrizing(const BasedAlgebra& a, const std::vector<Scalar>& form) {
  SymmetrizingReport rep;
  std::size_t n = a.rank();
  if (form.size() != n) throw ShapeError("form has wrong length");
  for (Index i = 0; i < n; ++i)
    if (a.parity(i) && !form[i].is_zero()) {
      rep.vanishes_on_odd = false;
      rep.failures.push_back("nonzero on odd " + a.label(i));
    }
  auto t = [&](const Element& x) {
    Scalar s = a.ring().zero();
    for (const auto& [i, c] : x) s += c * form[i];
    return s;
  };
  ExactMatrix gram(a.ring(), n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gram.at(i, j) = t(a.basis_product(i, j));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (!(gram.at(i, j) == gram.at(j, i))) {
        rep.symmetric = false;
        if (rep.failures.size() < 20) rep.failures.push_back("t(" + a.label(i) + a.label(j) + ") != t(" + a.label(j) + a.label(i) + ")");
      }
  Scalar det = determinant(gram);
  if (!det.is_unit()) {
    rep.gram_invertible = false;
    rep.failures.push_back("Gram determinant " + det.str() + " is not a unit");
  }
  return rep;
}

std::vector<SparseVec> trace_functionals(const BasedAlgebra& a) {
  std::vector<SparseVec> rows;
  for (Index i = 0; i < a.rank(); ++i)
    if (a.parity(i)) rows.push_back({{i, a.ring().one()}});
  for (Index i = 0; i < a.rank(); ++i)
    for (Index j = i + 1; j < a.rank(); ++j) {
      Element d = a.sub(a.basis_product(i, j), a.basis_product(j, i));
      if (!d.empty()) rows.push_back(std::move(d));
    }
  return sparse_kernel(a.ring(), rows, static_cast<Index>(a.rank()));
}

std::optional<std::vector<Scalar>> find_symmetrizing_form(const BasedAlgebra& a) {
  std::vector<Scalar> form(a.rank(), a.ring().zero());
  auto basis = trace_functionals(a);
  if (basis.empty()) return std::nullopt;
  for (const auto& v : basis)
    for (const auto& [i, s] : v) form[i] += s;
  if (!validate_symmetrizing(a, form).ok()) return std::nullopt;
  return form;
}

std::vector<SparseVec> sparse_kernel(const Ring& field, const std::vector<SparseVec>& rows, Index ncols) {
  RowSpace space(field);
  for (const auto& r : rows) space.insert(r);
  std::vector<SparseVec> rref = space.reduced_basis();
  std::unordered_map<Index, std::size_t> where;
  for (std::size_t i = 0; i < rref.size(); ++i) where.emplace(rref[i].front().first, i);
  // free column -> entries of the pivot rows that mention it
  std::unordered_map<Index, std::vector<std::pair<Index, Scalar>>> by_free;
  for (const auto& v : rref)
    for (std::size_t k = 1; k < v.size(); ++k) by_free[v[k].first].emplace_back(v.front().first, -v[k].second);
  std::vector<SparseVec> basis;
  for (Index f = 0; f < ncols; ++f) {
    if (where.count(f)) continue;
    std::vector<std::pair<Index, Scalar>> entries{{f, field.one()}};
    auto it = by_free.find(f);
    if (it != by_free.end()) entries.insert(entries.end(), it->second.begin(), it->second.end());
    basis.push_back(sparse_from_unsorted(std::move(entries)));
  }
  return basis;
}

}  // namespace salg
