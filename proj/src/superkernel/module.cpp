#include <set>

#include "salg/superkernel.hpp"

namespace salg {

BasedModule::BasedModule(std::shared_ptr<const BasedAlgebra> owner, std::vector<BiDegree> bidegrees,
                         std::vector<std::vector<SparseVec>> action)
    : owner_(std::move(owner)), bidegrees_(std::move(bidegrees)), action_(std::move(action)) {
  if (action_.size() != owner_->rank()) throw ShapeError("module needs one action matrix per basis element");
  for (const auto& cols : action_)
    if (cols.size() != bidegrees_.size()) throw ShapeError("action matrix has wrong width");
}

BasedModule BasedModule::regular(std::shared_ptr<const BasedAlgebra> owner) {
  std::size_t n = owner->rank();
  std::vector<std::vector<SparseVec>> action(n, std::vector<SparseVec>(n));
  for (Index a = 0; a < n; ++a)
    for (Index v = 0; v < n; ++v) action[a][v] = owner->basis_product(a, v);
  return BasedModule(owner, owner->bidegrees(), std::move(action));
}

BasedModule BasedModule::left_ideal(std::shared_ptr<const BasedAlgebra> owner, const Element& e) {
  RowSpace space(owner->ring());
  for (Index b = 0; b < owner->rank(); ++b) space.insert(owner->mul(owner->basis(b), e));
  auto basis = space.reduced_basis();
  std::vector<BiDegree> bideg;
  for (const auto& row : basis) {
    auto b = owner->bidegree_of(row);
    if (!b) throw std::invalid_argument("left_ideal: generator is not homogeneous");
    bideg.push_back(*b);
  }
  std::vector<std::vector<SparseVec>> action(owner->rank(), std::vector<SparseVec>(basis.size()));
  for (Index a = 0; a < owner->rank(); ++a)
    for (Index v = 0; v < basis.size(); ++v)
      action[a][v] = RowSpace::coordinates(basis, owner->mul(owner->basis(a), basis[v]));
  return BasedModule(owner, std::move(bideg), std::move(action));
}

SparseVec BasedModule::act(const Element& x, const SparseVec& v) const {
  Accumulator<Index> acc;
  for (const auto& [a, s] : x)
    for (const auto& [i, t] : v)
      for (const auto& [j, u] : action_[a][i]) acc.add(j, s * t * u);
  return acc.take();
}

std::vector<std::string> BasedModule::check_action() const {
  std::vector<std::string> fails;
  const BasedAlgebra& a = *owner_;
  for (Index v = 0; v < rank(); ++v) {
    SparseVec bv{{v, a.ring().one()}};
    if (act(a.unit(), bv) != bv) fails.push_back("unit does not fix basis vector " + std::to_string(v));
    for (Index x = 0; x < a.rank(); ++x) {
      BiDegree want = a.bidegree(x) + bidegree(v);
      for (const auto& [w, s] : action_[x][v])
        if (!(bidegree(w) == want)) fails.push_back("action of " + a.label(x) + " breaks bidegree");
      SparseVec xv = action_[x][v];
      for (Index y = 0; y < a.rank(); ++y) {
        if (act(a.basis(y), xv) != act(a.basis_product(y, x), bv)) {
          fails.push_back("(" + a.label(y) + a.label(x) + ") acts incorrectly on " + std::to_string(v));
          if (fails.size() > 20) return fails;
        }
      }
    }
  }
  return fails;
}

std::vector<HomBlock> hom_space(const BasedModule& m, const BasedModule& n) {
  if (&m.owner() != &n.owner() && m.owner_ptr() != n.owner_ptr())
    if (m.owner().rank() != n.owner().rank()) throw std::invalid_argument("hom_space: modules over different algebras");
  const BasedAlgebra& a = m.owner();
  std::set<BiDegree> shifts;
  for (Index v = 0; v < m.rank(); ++v)
    for (Index w = 0; w < n.rank(); ++w) {
      BiDegree s{n.bidegree(w).degree - m.bidegree(v).degree, ((n.bidegree(w).parity - m.bidegree(v).parity) % 2 + 2) % 2};
      shifts.insert(s);
    }
  std::vector<HomBlock> out;
  for (const BiDegree& shift : shifts) {
    // unknowns F[w][v] for bidegree(w) = bidegree(v) + shift
    std::map<std::pair<Index, Index>, Index> var;
    std::vector<std::vector<Index>> targets(m.rank());
    for (Index v = 0; v < m.rank(); ++v)
      for (Index w = 0; w < n.rank(); ++w)
        if (n.bidegree(w) == m.bidegree(v) + shift) {
          var.emplace(std::make_pair(w, v), static_cast<Index>(var.size()));
          targets[v].push_back(w);
        }
    if (var.empty()) continue;
    std::map<std::tuple<Index, Index, Index>, std::vector<std::pair<Index, Scalar>>> eqs;
    for (Index x = 0; x < a.rank(); ++x) {
      Scalar sign = a.ring().from_int(sign_of(shift.parity * a.parity(x)));
      for (Index v = 0; v < m.rank(); ++v) {
        // f(x v) = Σ_u (xv)_u f(u)
        for (const auto& [u, s] : m.act(x, v))
          for (Index w : targets[u]) eqs[{x, v, w}].emplace_back(var.at({w, u}), s);
        // - sign · x f(v)
        for (Index w : targets[v])
          for (const auto& [w2, s] : n.act(x, w)) eqs[{x, v, w2}].emplace_back(var.at({w, v}), -(sign * s));
      }
    }
    std::vector<SparseVec> rows;
    for (auto& [key, entries] : eqs) {
      SparseVec r = sparse_from_unsorted(std::move(entries));
      if (!r.empty()) rows.push_back(std::move(r));
    }
    auto kernel = sparse_kernel(a.ring(), rows, static_cast<Index>(var.size()));
    if (kernel.empty()) continue;
    std::vector<std::pair<Index, Index>> by_var(var.size());
    for (const auto& [wv, i] : var) by_var[i] = wv;
    HomBlock blk{shift, {}};
    for (const auto& kv : kernel) {
      std::vector<std::vector<std::pair<Index, Scalar>>> cols(m.rank());
      for (const auto& [i, s] : kv) cols[by_var[i].second].emplace_back(by_var[i].first, s);
      std::vector<SparseVec> map;
      for (auto& c : cols) map.push_back(sparse_from_unsorted(std::move(c)));
      blk.maps.push_back(std::move(map));
    }
    out.push_back(std::move(blk));
  }
  return out;
}

std::size_t hom_rank(const std::vector<HomBlock>& blocks) {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.maps.size();
  return r;
}

}  // namespace salg
