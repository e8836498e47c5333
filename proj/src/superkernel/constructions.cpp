#include <numeric>

#include "salg/superkernel.hpp"

namespace salg {

BasedAlgebra ground_algebra(const Ring& ring) {
  return BasedAlgebra::from_table(ring, {"1"}, {{0, 0}}, {{0, ring.one()}}, {{{0, ring.one()}}});
}

BasedAlgebra tensor(const BasedAlgebra& a, const BasedAlgebra& b) {
  if (!(a.ring() == b.ring())) throw ArithmeticError("tensor of algebras over different rings");
  std::size_t nb = b.rank();
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (Index i = 0; i < a.rank(); ++i)
    for (Index j = 0; j < nb; ++j) {
      labels.push_back(a.label(i) + "⊗" + b.label(j));
      bideg.push_back(a.bidegree(i) + b.bidegree(j));
    }
  Element unit;
  {
    Accumulator<Index> acc;
    for (const auto& [i, s] : a.unit())
      for (const auto& [j, t] : b.unit()) acc.add(static_cast<Index>(i * nb + j), s * t);
    unit = acc.take();
  }
  auto pa = std::make_shared<BasedAlgebra>(a);
  auto pb = std::make_shared<BasedAlgebra>(b);
  auto rule = [pa, pb, nb](Index x, Index y) {
    Index a1 = x / nb, b1 = x % nb, a2 = y / nb, b2 = y % nb;
    int sign = sign_of(pb->parity(b1) * pa->parity(a2));
    Element left = pa->basis_product(a1, a2);
    Element right = pb->basis_product(b1, b2);
    Accumulator<Index> acc;
    Scalar sg = pa->ring().from_int(sign);
    for (const auto& [i, s] : left)
      for (const auto& [j, t] : right) acc.add(static_cast<Index>(i * nb + j), sg * s * t);
    return acc.take();
  };
  BasedAlgebra out(a.ring(), std::move(labels), std::move(bideg), std::move(unit), rule);
  if (a.form() && b.form()) {
    std::vector<Scalar> f;
    for (Index i = 0; i < a.rank(); ++i)
      for (Index j = 0; j < nb; ++j) f.push_back((*a.form())[i] * (*b.form())[j]);
    out.set_form(std::move(f));
  }
  return out;
}

BasedAlgebra opposite(const BasedAlgebra& a) {
  auto pa = std::make_shared<BasedAlgebra>(a);
  auto rule = [pa](Index x, Index y) {
    Element e = pa->basis_product(y, x);
    if (pa->parity(x) && pa->parity(y)) e = sparse_scaled(e, -pa->ring().one());
    return e;
  };
  BasedAlgebra out(a.ring(), a.labels(), a.bidegrees(), a.unit(), rule);
  if (a.form()) out.set_form(*a.form());
  return out;
}

WreathIndexer::WreathIndexer(std::size_t base_rank_, int d_) : base_rank(base_rank_), d(d_), perms(all_permutations(d_)) {
  for (std::size_t i = 0; i < perms.size(); ++i) perm_index.emplace(perms[i], i);
}

Index WreathIndexer::encode(const std::vector<Index>& word, const Permutation& w) const {
  std::size_t t = 0;
  for (Index x : word) t = t * base_rank + x;
  return static_cast<Index>(t * perms.size() + perm_index.at(w));
}

std::pair<std::vector<Index>, Permutation> WreathIndexer::decode(Index i) const {
  std::size_t t = i / perms.size();
  Permutation w = perms[i % perms.size()];
  std::vector<Index> word(d);
  for (int k = d - 1; k >= 0; --k) {
    word[k] = static_cast<Index>(t % base_rank);
    t /= base_rank;
  }
  return {word, w};
}

BasedAlgebra wreath(const BasedAlgebra& a, int d) {
  if (d < 0) throw std::invalid_argument("wreath: negative d");
  auto idx = std::make_shared<WreathIndexer>(a.rank(), d);
  auto pa = std::make_shared<BasedAlgebra>(a);
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= a.rank();
  total *= idx->perms.size();
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (Index i = 0; i < total; ++i) {
    auto [word, w] = idx->decode(i);
    std::string s;
    BiDegree b;
    for (int k = 0; k < d; ++k) {
      s += (k ? "⊗" : "") + a.label(word[k]);
      b = b + a.bidegree(word[k]);
    }
    labels.push_back(s + "|" + w.str());
    bideg.push_back(b);
  }
  // unit = 1^{⊗d} with identity permutation, expanded through the unit of A
  Element unit;
  {
    std::vector<std::pair<std::vector<Index>, Scalar>> acc{{{}, a.ring().one()}};
    for (int k = 0; k < d; ++k) {
      std::vector<std::pair<std::vector<Index>, Scalar>> next;
      for (const auto& [w, s] : acc)
        for (const auto& [i, t] : a.unit()) {
          auto x = w;
          x.push_back(i);
          next.emplace_back(std::move(x), s * t);
        }
      acc = std::move(next);
    }
    std::vector<std::pair<Index, Scalar>> entries;
    for (auto& [w, s] : acc) entries.emplace_back(idx->encode(w, Permutation::identity(d)), s);
    unit = sparse_from_unsorted(std::move(entries));
  }
  auto rule = [pa, idx, d](Index x, Index y) {
    auto [xa, g] = idx->decode(x);
    auto [ya, h] = idx->decode(y);
    // (xa g)(ya h) = xa (g·ya) g h
    std::vector<int> par(d);
    for (int k = 0; k < d; ++k) par[k] = pa->parity(ya[k]);
    int sign = place_permutation_sign(g, par);
    std::vector<Index> moved = place_permute(g, ya);
    // xa * moved in A^{⊗d}: sign from moving moved_l past xa_k for k > l
    int e = 0;
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < k; ++l) e += pa->parity(xa[k]) * pa->parity(moved[l]);
    sign *= sign_of(e);
    Permutation gh = g * h;
    std::vector<std::pair<std::vector<Index>, Scalar>> acc{{{}, pa->ring().from_int(sign)}};
    for (int k = 0; k < d && !acc.empty(); ++k) {
      Element f = pa->basis_product(xa[k], moved[k]);
      std::vector<std::pair<std::vector<Index>, Scalar>> next;
      for (const auto& [w, s] : acc)
        for (const auto& [i, t] : f) {
          auto z = w;
          z.push_back(i);
          next.emplace_back(std::move(z), s * t);
        }
      acc = std::move(next);
    }
    std::vector<std::pair<Index, Scalar>> entries;
    for (auto& [w, s] : acc) entries.emplace_back(idx->encode(w, gh), s);
    return sparse_from_unsorted(std::move(entries));
  };
  return BasedAlgebra(a.ring(), std::move(labels), std::move(bideg), std::move(unit), rule);
}

namespace {

void check_idempotent_system(const BasedAlgebra& a, const std::vector<Element>& es) {
  Element sum;
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto b = a.bidegree_of(es[i]);
    if (!b || !(*b == BiDegree{0, 0})) throw std::invalid_argument("idempotent is not of bidegree (0,0)");
    for (std::size_t j = 0; j < es.size(); ++j) {
      Element p = a.mul(es[i], es[j]);
      if (i == j && p != es[i]) throw std::invalid_argument("element is not idempotent");
      if (i != j && !p.empty()) throw std::invalid_argument("idempotents are not orthogonal");
    }
    sum = a.add(sum, es[i]);
  }
  if (sum != a.unit()) throw std::invalid_argument("idempotents do not sum to 1");
}

// Reduced homogeneous basis of span{ e b f : b in basis }.
std::vector<SparseVec> corner_basis(const BasedAlgebra& a, const Element& e, const Element& f) {
  RowSpace space(a.ring());
  for (Index b = 0; b < a.rank(); ++b) space.insert(a.mul(a.mul(e, a.basis(b)), f));
  return space.reduced_basis();
}

std::string row_label(const BasedAlgebra& a, const SparseVec& row) {
  if (row.size() == 1 && row.front().second.is_one()) return a.label(row.front().first);
  return "[" + a.format(row) + "]";
}

}  // namespace

BasedAlgebra regrade(const BasedAlgebra& a, const std::vector<Element>& idempotents, const std::vector<Shift>& shifts) {
  if (idempotents.size() != shifts.size()) throw ShapeError("regrade: one shift per idempotent");
  check_idempotent_system(a, idempotents);
  std::vector<BiDegree> bideg = a.bidegrees();
  for (Index b = 0; b < a.rank(); ++b) {
    Element x = a.basis(b);
    bool placed = false;
    for (std::size_t s = 0; s < idempotents.size() && !placed; ++s)
      for (std::size_t r = 0; r < idempotents.size() && !placed; ++r) {
        if (a.mul(a.mul(idempotents[s], x), idempotents[r]) != x) continue;
        bideg[b].degree += shifts[r].degree - shifts[s].degree;
        bideg[b].parity = ((bideg[b].parity + shifts[r].parity - shifts[s].parity) % 2 + 2) % 2;
        placed = true;
      }
    if (!placed) throw std::invalid_argument("regrade: basis element " + a.label(b) + " is not in a single corner");
  }
  auto pa = std::make_shared<BasedAlgebra>(a);
  BasedAlgebra out(a.ring(), a.labels(), bideg, a.unit(), [pa](Index x, Index y) { return pa->basis_product(x, y); });
  if (a.form()) out.set_form(*a.form());
  return out;
}

BasedAlgebra truncate(const BasedAlgebra& a, const Element& e) {
  auto b = a.bidegree_of(e);
  if (!b || !(*b == BiDegree{0, 0}) || a.mul(e, e) != e) throw std::invalid_argument("truncate: not a (0,0) idempotent");
  auto basis = std::make_shared<std::vector<SparseVec>>(corner_basis(a, e, e));
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (const auto& row : *basis) {
    labels.push_back(row_label(a, row));
    bideg.push_back(*a.bidegree_of(row));
  }
  auto pa = std::make_shared<BasedAlgebra>(a);
  Element unit = RowSpace::coordinates(*basis, e);
  return BasedAlgebra(a.ring(), std::move(labels), std::move(bideg), std::move(unit), [pa, basis](Index x, Index y) {
    return RowSpace::coordinates(*basis, pa->mul((*basis)[x], (*basis)[y]));
  });
}

BasedAlgebra end_algebra(const BasedAlgebra& a, const std::vector<Element>& idempotents) {
  std::size_t n = idempotents.size();
  for (const auto& e : idempotents) {
    auto b = a.bidegree_of(e);
    if (!b || !(*b == BiDegree{0, 0}) || a.mul(e, e) != e) throw std::invalid_argument("end_algebra: not a (0,0) idempotent");
  }
  struct Block {
    std::size_t i, j, offset;
    std::vector<SparseVec> basis;
  };
  auto blocks = std::make_shared<std::vector<Block>>();
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  auto owner = std::make_shared<std::vector<std::size_t>>();  // global index -> block
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Block blk{i, j, offset, corner_basis(a, idempotents[i], idempotents[j])};
      for (const auto& row : blk.basis) {
        labels.push_back(std::to_string(i + 1) + "," + std::to_string(j + 1) + ":" + row_label(a, row));
        bideg.push_back(*a.bidegree_of(row));
        owner->push_back(blocks->size());
      }
      offset += blk.basis.size();
      blocks->push_back(std::move(blk));
    }
  Element unit;
  for (std::size_t i = 0; i < n; ++i) {
    const Block& blk = (*blocks)[i * n + i];
    for (const auto& [k, s] : RowSpace::coordinates(blk.basis, idempotents[i]))
      unit.emplace_back(static_cast<Index>(blk.offset + k), s);
  }
  auto pa = std::make_shared<BasedAlgebra>(a);
  auto rule = [pa, blocks, owner, n](Index x, Index y) -> Element {
    const Block& bx = (*blocks)[(*owner)[x]];
    const Block& by = (*blocks)[(*owner)[y]];
    if (bx.j != by.i) return {};
    const Block& target = (*blocks)[bx.i * n + by.j];
    Element prod = pa->mul(bx.basis[x - bx.offset], by.basis[y - by.offset]);
    Element out;
    for (const auto& [k, s] : RowSpace::coordinates(target.basis, prod)) out.emplace_back(static_cast<Index>(target.offset + k), s);
    return out;
  };
  return BasedAlgebra(a.ring(), std::move(labels), std::move(bideg), std::move(unit), rule);
}

CentralizerResult supercentralizer(const BasedAlgebra& a, const std::vector<std::vector<Element>>& units) {
  CentralizerResult res;
  std::size_t m = units.size();
  // matrix-unit relations
  bool ok = true;
  Element sum;
  std::vector<std::vector<int>> par(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m && ok; ++i) {
    if (units[i].size() != m) ok = false;
    for (std::size_t j = 0; j < m && ok; ++j) {
      auto b = a.bidegree_of(units[i][j]);
      if (!b) {
        ok = false;
        break;
      }
      par[i][j] = b->parity;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Element p = a.mul(units[i][j], units[k][l]);
          Element want = j == k ? units[i][l] : Element{};
          if (p != want) ok = false;
        }
    }
    if (ok) sum = a.add(sum, units[i][i]);
  }
  if (ok && sum != a.unit()) ok = false;
  res.matrix_units_ok = ok;
  if (!ok) return res;

  std::map<BiDegree, std::vector<Index>> by_bideg;
  for (Index b = 0; b < a.rank(); ++b) by_bideg[a.bidegree(b)].push_back(b);
  RowSpace zspace(a.ring());
  for (const auto& [bd, members] : by_bideg) {
    // unknowns: coefficients on the members; one equation per (unit, result column)
    std::map<std::pair<std::size_t, Index>, std::vector<std::pair<Index, Scalar>>> eqs;
    for (std::size_t u = 0; u < members.size(); ++u) {
      Element z = a.basis(members[u]);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          Element lhs = a.mul(units[i][j], z);
          Element rhs = a.mul(z, units[i][j]);
          if (par[i][j] && bd.parity) rhs = sparse_scaled(rhs, -a.ring().one());
          Element diff = a.sub(lhs, rhs);
          for (const auto& [c, s] : diff) eqs[{i * m + j, c}].emplace_back(static_cast<Index>(u), s);
        }
    }
    std::vector<SparseVec> rows;
    for (auto& [key, entries] : eqs) rows.push_back(sparse_from_unsorted(std::move(entries)));
    for (const auto& kv : sparse_kernel(a.ring(), rows, static_cast<Index>(members.size()))) {
      Element z;
      for (const auto& [u, s] : kv) z.emplace_back(members[u], s);
      zspace.insert(sparse_from_unsorted(std::move(z)));
    }
  }
  auto basis = std::make_shared<std::vector<SparseVec>>(zspace.reduced_basis());
  res.basis_in_ambient = *basis;
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (const auto& row : *basis) {
    labels.push_back(row_label(a, row));
    bideg.push_back(*a.bidegree_of(row));
  }
  auto pa = std::make_shared<BasedAlgebra>(a);
  Element unit = RowSpace::coordinates(*basis, a.unit());
  res.centralizer.emplace(a.ring(), std::move(labels), std::move(bideg), std::move(unit), [pa, basis](Index x, Index y) {
    return RowSpace::coordinates(*basis, pa->mul((*basis)[x], (*basis)[y]));
  });
  RowSpace image(a.ring());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& z : *basis) image.insert(a.mul(units[i][j], z));
  res.image_rank = image.rank();
  res.factorization_ok = image.rank() == a.rank() && m * m * basis->size() == a.rank();
  return res;
}

}  // namespace salg
